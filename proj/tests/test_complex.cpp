#include <doctest.h>

#include <algorithm>
#include <random>

#include "groupcx/group_complexes.hpp"
#include "groupcx/simplicial_complex.hpp"
#include "groupcx/verify.hpp"

using namespace groupcx;

TEST_SUITE_BEGIN("complex-core");

namespace {

std::vector<std::vector<int>> facet_lists(const SimplicialComplex& c) {
  std::vector<std::vector<int>> out;
  for (const auto& f : c.facets()) out.push_back(f.vertices);
  return out;
}

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("from_facets deduplicates and absorbs") {
  auto c = SimplicialComplex::from_facets(numbered_labels(4),
                                          {{1, 2}, {2, 3}, {1, 2}});
  CHECK(facet_lists(c) == std::vector<std::vector<int>>{{1, 2}, {2, 3}});

  auto c2 = SimplicialComplex::from_facets(numbered_labels(3), {{1}, {1, 2}});
  CHECK(facet_lists(c2) == std::vector<std::vector<int>>{{1, 2}});

  auto c3 = SimplicialComplex::from_facets(numbered_labels(3), {{2, 0, 1}});
  CHECK(c3.dimension() == 2);

  CHECK_THROWS_AS(SimplicialComplex::from_facets(numbered_labels(2), {{0, 5}}),
                  ValidationError);
}

TEST_CASE("hereditary backtracking reproduces the C6 independence facets") {
  FiniteGroup g = build_group(GroupSpec::cyclic(6));
  GroupContext ctx(g);
  auto pred = [&](std::span<const int> set) {
    ElementSet s(6);
    for (int u : set) s.set(u + 1);
    return is_independent(ctx, s);
  };
  std::vector<std::string> labels;
  for (int x = 1; x < 6; ++x) labels.push_back(g.label(x));
  auto c = SimplicialComplex::from_hereditary_predicate(labels, pred);
  // vertices g..g^5 become 0..4: facets {g},{g^2,g^3},{g^3,g^4},{g^5}
  CHECK(facet_lists(c) ==
        std::vector<std::vector<int>>{{0}, {1, 2}, {2, 3}, {4}});

  // exhaustive all-subsets oracle sees the same maximal sets
  auto oracle = exhaustive_facet_oracle(5, [&](const std::vector<int>& set) {
    ElementSet s(6);
    for (int u : set) s.set(u + 1);
    return is_independent(ctx, s);
  });
  CHECK(oracle.hereditary);
  CHECK(oracle.facets == facet_lists(c));
}

TEST_CASE("always-true predicate gives a single facet") {
  auto c = SimplicialComplex::from_hereditary_predicate(
      numbered_labels(3), [](std::span<const int>) { return true; });
  CHECK(facet_lists(c) == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("klein four independence is the triangle boundary") {
  FiniteGroup g = build_group(GroupSpec::abelian({2, 2}));
  GroupContext ctx(g);
  GroupComplex gc = independence_complex(ctx);
  CHECK(facet_lists(gc.complex) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  ComplexStats st = gc.complex.stats();
  CHECK(st.is_pure);
  CHECK(st.dimension == 1);
}

TEST_CASE("debug mode flags a non-hereditary predicate") {
  auto pred = [](std::span<const int> s) {
    std::vector<int> v(s.begin(), s.end());
    if (v.size() <= 1) return true;
    if (v == std::vector<int>{0, 1}) return true;
    if (v == std::vector<int>{0, 1, 2}) return true;  // but {0,2} is rejected
    return false;
  };
  HereditaryOptions debug;
  debug.check_hereditary = true;
  CHECK_THROWS_AS(SimplicialComplex::from_hereditary_predicate(
                      numbered_labels(3), pred, debug),
                  ValidationError);
  CHECK_NOTHROW(
      SimplicialComplex::from_hereditary_predicate(numbered_labels(3), pred));
}

TEST_CASE("stats: purity, dimension, f-vector") {
  FiniteGroup g = build_group(GroupSpec::cyclic(6));
  GroupContext ctx(g);
  ComplexStats st = independence_complex(ctx).complex.stats();
  CHECK(!st.is_pure);
  CHECK(st.dimension == 1);
  REQUIRE(st.f_vector.size() == 2);
  CHECK(st.f_vector[0] == BigInt(5));
  CHECK(st.f_vector[1] == BigInt(2));

  auto triangle_boundary = SimplicialComplex::from_facets(
      numbered_labels(3), {{0, 1}, {0, 2}, {1, 2}});
  ComplexStats st2 = triangle_boundary.stats();
  CHECK(st2.is_pure);
  CHECK(st2.f_vector[0] == BigInt(3));
  CHECK(st2.f_vector[1] == BigInt(3));

  auto vertex = SimplicialComplex::from_facets(numbered_labels(1), {{0}});
  ComplexStats st3 = vertex.stats();
  CHECK(st3.is_pure);
  CHECK(st3.dimension == 0);
  REQUIRE(st3.f_vector.size() == 1);
  CHECK(st3.f_vector[0] == BigInt(1));

  SimplicialComplex empty;
  ComplexStats st4 = empty.stats();
  CHECK(st4.dimension == -1);
  CHECK(st4.is_pure);
  CHECK(st4.f_vector.empty());
}

TEST_CASE("f-vector of large facets goes through inclusion-exclusion") {
  std::vector<int> big;
  for (int i = 0; i < 30; ++i) big.push_back(i);
  auto c = SimplicialComplex::from_facets(numbered_labels(30), {big});
  ComplexStats st = c.stats();
  REQUIRE(st.f_vector.size() == 30);
  for (int k = 0; k < 30; ++k) CHECK(st.f_vector[k] == BigInt::binomial(30, k + 1));

  // two overlapping large facets
  std::vector<int> a, b;
  for (int i = 0; i < 25; ++i) a.push_back(i);
  for (int i = 20; i < 45; ++i) b.push_back(i);
  auto c2 = SimplicialComplex::from_facets(numbered_labels(45), {a, b});
  ComplexStats st2 = c2.stats();
  CHECK(st2.f_vector[0] == BigInt(45));
  CHECK(st2.f_vector[1] ==
        BigInt::binomial(25, 2) * BigInt(2) - BigInt::binomial(5, 2));
  CHECK(st2.f_vector[2] ==
        BigInt::binomial(25, 3) * BigInt(2) - BigInt::binomial(5, 3));
}

TEST_CASE("f-vector totals match the simplex stream on random complexes") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const int n = 6 + int(rng() % 3);
    std::vector<std::vector<int>> candidates;
    int count = 2 + int(rng() % 5);
    for (int i = 0; i < count; ++i) {
      std::vector<int> f;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) f.push_back(v);
      if (!f.empty()) candidates.push_back(f);
    }
    auto c = SimplicialComplex::from_facets(numbered_labels(n), candidates);
    ComplexStats st = c.stats();
    BigInt total(0);
    for (const auto& fk : st.f_vector) total += fk;
    CHECK(total == BigInt(static_cast<long long>(c.all_simplices().size())));
  }
}

TEST_CASE("k-skeleton") {
  auto triangle = SimplicialComplex::from_facets(numbered_labels(3), {{0, 1, 2}});
  auto skel1 = triangle.k_skeleton(1);
  CHECK(facet_lists(skel1) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  auto skel0 = triangle.k_skeleton(0);
  CHECK(facet_lists(skel0) == std::vector<std::vector<int>>{{0}, {1}, {2}});

  FiniteGroup g = build_group(GroupSpec::cyclic(6));
  GroupContext ctx(g);
  auto c6 = independence_complex(ctx).complex;
  CHECK(c6.k_skeleton(1) == c6);  // already one-dimensional

  std::mt19937 rng(17);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::vector<int>> candidates;
    for (int i = 0; i < 4; ++i) {
      std::vector<int> f;
      for (int v = 0; v < 7; ++v)
        if (rng() % 2) f.push_back(v);
      if (!f.empty()) candidates.push_back(f);
    }
    auto c = SimplicialComplex::from_facets(numbered_labels(7), candidates);
    for (int k = 0; k <= 2; ++k) {
      auto once = c.k_skeleton(k);
      CHECK(once.k_skeleton(k) == once);
    }
  }
  CHECK_THROWS_AS(triangle.k_skeleton(-1), ValidationError);
}

TEST_CASE("containment, equality, simplex stream") {
  auto boundary = SimplicialComplex::from_facets(numbered_labels(3),
                                                 {{0, 1}, {0, 2}, {1, 2}});
  CHECK(!boundary.contains(Simplex{{0, 1, 2}}));
  CHECK(boundary.contains(Simplex{{0, 2}}));
  CHECK(boundary.contains(Simplex{{1}}));
  CHECK(boundary == boundary);

  auto edge = SimplicialComplex::from_facets(numbered_labels(2), {{0, 1}});
  auto all = edge.all_simplices();
  REQUIRE(all.size() == 3);
  CHECK(all[0].vertices == std::vector<int>{0});
  CHECK(all[1].vertices == std::vector<int>{1});
  CHECK(all[2].vertices == std::vector<int>{0, 1});
}

TEST_CASE("facets always form an antichain") {
  std::mt19937 rng(61);
  for (int t = 0; t < 20; ++t) {
    const int n = 8;
    std::vector<std::vector<int>> candidates;
    for (int i = 0; i < 8; ++i) {
      std::vector<int> f;
      for (int v = 0; v < n; ++v)
        if (rng() % 2) f.push_back(v);
      if (!f.empty()) candidates.push_back(f);
    }
    auto c = SimplicialComplex::from_facets(numbered_labels(n), candidates);
    const auto& facets = c.facets();
    for (size_t i = 0; i < facets.size(); ++i)
      for (size_t j = 0; j < facets.size(); ++j) {
        if (i == j) continue;
        CHECK(!std::includes(facets[j].vertices.begin(),
                             facets[j].vertices.end(),
                             facets[i].vertices.begin(),
                             facets[i].vertices.end()));
      }
  }
}

TEST_CASE("euler characteristic is invariant under vertex relabeling") {
  std::mt19937 rng(23);
  for (int t = 0; t < 10; ++t) {
    const int n = 7;
    std::vector<std::vector<int>> candidates;
    for (int i = 0; i < 5; ++i) {
      std::vector<int> f;
      for (int v = 0; v < n; ++v)
        if (rng() % 2) f.push_back(v);
      if (!f.empty()) candidates.push_back(f);
    }
    auto euler = [](const SimplicialComplex& c) {
      BigInt chi(0);
      ComplexStats st = c.stats();
      for (size_t k = 0; k < st.f_vector.size(); ++k)
        chi += (k % 2 == 0) ? st.f_vector[k] : -st.f_vector[k];
      return chi;
    };
    auto c = SimplicialComplex::from_facets(numbered_labels(n), candidates);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> renamed = candidates;
    for (auto& f : renamed)
      for (int& v : f) v = perm[v];
    auto c2 = SimplicialComplex::from_facets(numbered_labels(n), renamed);
    CHECK(euler(c) == euler(c2));
  }
}

TEST_SUITE_END();
