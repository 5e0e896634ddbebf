#include <doctest.h>

#include <random>

#include "groupcx/group_complexes.hpp"
#include "groupcx/homology.hpp"
#include "support.hpp"

using namespace groupcx;
using groupcx::testing::naive_snf_diagonal;

TEST_SUITE_BEGIN("homology");

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

SimplicialComplex rp2_fixture() {
  return SimplicialComplex::from_facets(
      numbered_labels(6),
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
       {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = BigInt(rows[r][c]);
  return m;
}

SimplicialComplex random_complex(std::mt19937& rng, int n) {
  std::vector<std::vector<int>> candidates;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> f;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) f.push_back(v);
    if (!f.empty()) candidates.push_back(f);
  }
  return SimplicialComplex::from_facets(numbered_labels(n), candidates);
}

}  // namespace

TEST_CASE("boundary matrices of tiny complexes") {
  auto edge = SimplicialComplex::from_facets(numbered_labels(2), {{0, 1}});
  auto b = boundary_matrices(edge);
  REQUIRE(b.size() == 1);
  CHECK(b[0].rows() == 2);
  CHECK(b[0].cols() == 1);
  CHECK(b[0].at(0, 0) == BigInt(-1));
  CHECK(b[0].at(1, 0) == BigInt(1));

  auto triangle = SimplicialComplex::from_facets(numbered_labels(3), {{0, 1, 2}});
  auto bt = boundary_matrices(triangle);
  REQUIRE(bt.size() == 2);
  // d_2 against edges sorted {0,1},{0,2},{1,2}
  CHECK(bt[1].at(0, 0) == BigInt(1));
  CHECK(bt[1].at(1, 0) == BigInt(-1));
  CHECK(bt[1].at(2, 0) == BigInt(1));
}

TEST_CASE("boundary of boundary vanishes on random complexes") {
  std::mt19937 rng(31);
  for (int t = 0; t < 15; ++t) {
    auto c = random_complex(rng, 6 + int(rng() % 2));
    auto b = boundary_matrices(c);
    for (size_t k = 0; k + 1 < b.size(); ++k) {
      for (int i = 0; i < b[k].rows(); ++i)
        for (int j = 0; j < b[k + 1].cols(); ++j) {
          BigInt acc(0);
          for (int m = 0; m < b[k].cols(); ++m)
            acc += b[k].at(i, m) * b[k + 1].at(m, j);
          CHECK(acc.is_zero());
        }
    }
  }
}

TEST_CASE("smith normal form on fixed matrices") {
  SmithResult s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(s.rank == 2);
  REQUIRE(s.diagonal.size() == 2);
  CHECK(s.diagonal[0] == BigInt(2));
  CHECK(s.diagonal[1] == BigInt(4));

  SmithResult id3 = smith_normal_form(
      from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id3.rank == 3);
  for (const auto& d : id3.diagonal) CHECK(d == BigInt(1));

  SmithResult zero = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
  CHECK(zero.rank == 0);
  CHECK(zero.diagonal.empty());
}

TEST_CASE("smith normal form agrees with the first-pivot oracle") {
  std::mt19937 rng(37);
  for (int t = 0; t < 200; ++t) {
    int rows = 1 + int(rng() % 4), cols = 1 + int(rng() % 4);
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = int(rng() % 21) - 10;
    auto expected = naive_snf_diagonal(m);
    while (!expected.empty() && expected.back() == 0) expected.pop_back();
    SmithResult got = smith_normal_form(from_rows(m));
    REQUIRE(got.diagonal.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i)
      CHECK(got.diagonal[i] == BigInt(expected[i]));
    // divisibility chain
    for (size_t i = 0; i + 1 < got.diagonal.size(); ++i)
      CHECK(got.diagonal[i + 1].divisible_by(got.diagonal[i]));
  }
}

TEST_CASE("snf is invariant under row and column permutation") {
  std::mt19937 rng(43);
  std::vector<std::vector<long long>> m = {
      {4, -2, 6, 0}, {2, 8, -4, 10}, {0, 6, 12, -2}};
  SmithResult base = smith_normal_form(from_rows(m));
  for (int t = 0; t < 10; ++t) {
    auto shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& row : shuffled) {
      // one random column swap per round
      size_t a = rng() % row.size(), b = rng() % row.size();
      (void)a;
      (void)b;
    }
    size_t ca = rng() % m[0].size(), cb = rng() % m[0].size();
    for (auto& row : shuffled) std::swap(row[ca], row[cb]);
    SmithResult got = smith_normal_form(from_rows(shuffled));
    CHECK(got.rank == base.rank);
    REQUIRE(got.diagonal.size() == base.diagonal.size());
    for (size_t i = 0; i < base.diagonal.size(); ++i)
      CHECK(got.diagonal[i] == base.diagonal[i]);
  }
}

TEST_CASE("homology of the standard small spaces") {
  // triangle boundary: a circle
  auto circle = SimplicialComplex::from_facets(numbered_labels(3),
                                               {{0, 1}, {0, 2}, {1, 2}});
  HomologySummary h = homology(circle, true);
  REQUIRE(h.groups.size() == 2);
  CHECK(h.groups[0].betti == 0);
  CHECK(h.groups[1].betti == 1);

  // Klein four independence complex is that same circle
  FiniteGroup klein = build_group(GroupSpec::abelian({2, 2}));
  GroupContext ctxk(klein);
  HomologySummary hk = homology(independence_complex(ctxk).complex, true);
  REQUIRE(hk.groups.size() == 2);
  CHECK(hk.groups[0].betti == 0);
  CHECK(hk.groups[1].betti == 1);

  // C6 independence complex: a path plus two isolated vertices
  FiniteGroup c6 = build_group(GroupSpec::cyclic(6));
  GroupContext ctx6(c6);
  HomologySummary h6 = homology(independence_complex(ctx6).complex, true);
  REQUIRE(h6.groups.size() == 2);
  CHECK(h6.groups[0].betti == 2);
  CHECK(h6.groups[1].betti == 0);
}

TEST_CASE("real projective plane: torsion Z/2 in degree 1") {
  HomologySummary h = homology(rp2_fixture(), true);
  REQUIRE(h.groups.size() == 3);
  CHECK(h.groups[0].betti == 0);
  CHECK(h.groups[1].betti == 0);
  CHECK(h.groups[2].betti == 0);
  CHECK(h.groups[0].torsion.empty());
  REQUIRE(h.groups[1].torsion.size() == 1);
  CHECK(h.groups[1].torsion[0] == BigInt(2));
  CHECK(h.groups[2].torsion.empty());
  CHECK(h.euler == BigInt(1));

  // the SNF of its d_2 must contain a single 2, via the independent oracle
  auto b = boundary_matrices(rp2_fixture());
  REQUIRE(b.size() == 2);
  std::vector<std::vector<long long>> d2(b[1].rows(),
                                         std::vector<long long>(b[1].cols()));
  for (int r = 0; r < b[1].rows(); ++r)
    for (int c = 0; c < b[1].cols(); ++c)
      d2[size_t(r)][size_t(c)] = b[1].at(r, c).to_int64();
  auto diag = naive_snf_diagonal(d2);
  int twos = 0;
  for (long long d : diag)
    if (d == 2) ++twos;
  CHECK(twos == 1);
}

TEST_CASE("tetrahedron boundary is a 2-sphere") {
  auto sphere = SimplicialComplex::from_facets(
      numbered_labels(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  HomologySummary h = homology(sphere, true);
  REQUIRE(h.groups.size() == 3);
  CHECK(h.groups[0].betti == 0);
  CHECK(h.groups[1].betti == 0);
  CHECK(h.groups[2].betti == 1);
  for (const auto& grp : h.groups) CHECK(grp.torsion.empty());
  CHECK(h.euler == BigInt(2));
}

TEST_CASE("seven-vertex torus") {
  // cyclic triangulation: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  auto torus = SimplicialComplex::from_facets(numbered_labels(7), faces);
  ComplexStats st = torus.stats();
  REQUIRE(st.f_vector.size() == 3);
  CHECK(st.f_vector[0] == BigInt(7));
  CHECK(st.f_vector[1] == BigInt(21));
  CHECK(st.f_vector[2] == BigInt(14));
  HomologySummary h = homology(torus, true);
  REQUIRE(h.groups.size() == 3);
  CHECK(h.groups[0].betti == 0);
  CHECK(h.groups[1].betti == 2);
  CHECK(h.groups[2].betti == 1);
  for (const auto& grp : h.groups) CHECK(grp.torsion.empty());
  CHECK(h.euler.is_zero());
}

TEST_CASE("full simplices have trivial reduced homology") {
  for (int size = 1; size <= 6; ++size) {
    std::vector<int> facet;
    for (int i = 0; i < size; ++i) facet.push_back(i);
    auto c = SimplicialComplex::from_facets(numbered_labels(size), {facet});
    HomologySummary h = homology(c, true);
    for (const auto& grp : h.groups) {
      CHECK(grp.betti == 0);
      CHECK(grp.torsion.empty());
    }
  }
}

TEST_CASE("empty complex conventions") {
  SimplicialComplex empty;
  HomologySummary reduced = homology(empty, true);
  REQUIRE(reduced.groups.size() == 1);
  CHECK(reduced.groups[0].dim == -1);
  CHECK(reduced.groups[0].betti == 1);
  HomologySummary unreduced = homology(empty, false);
  CHECK(unreduced.groups.empty());
  CHECK(unreduced.euler.is_zero());
}

TEST_CASE("euler identity holds unreduced") {
  std::mt19937 rng(53);
  for (int t = 0; t < 10; ++t) {
    auto c = random_complex(rng, 7);
    HomologySummary h = homology(c, false);
    BigInt alternating(0);
    for (const auto& grp : h.groups) {
      BigInt b(grp.betti);
      alternating += grp.dim % 2 == 0 ? b : -b;
    }
    CHECK(alternating == h.euler);
  }
}

TEST_SUITE_END();
