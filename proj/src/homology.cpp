#include "groupcx/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace groupcx {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h = h * 1000003u + size_t(x);
    return h;
  }
};

}  // namespace

std::vector<std::vector<Simplex>> simplices_by_dimension(
    const SimplicialComplex& c) {
  std::vector<std::vector<Simplex>> levels(size_t(c.dimension() + 1));
  c.for_each_simplex([&](const Simplex& s) {
    levels[size_t(s.dimension())].push_back(s);
    return true;
  });
  return levels;  // for_each_simplex already emits each level sorted
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& c) {
  auto levels = simplices_by_dimension(c);
  std::vector<IntMatrix> out;
  if (levels.size() < 2) return out;
  for (size_t k = 1; k < levels.size(); ++k) {
    std::unordered_map<std::vector<int>, int, VecHash> row_index;
    for (size_t r = 0; r < levels[k - 1].size(); ++r)
      row_index[levels[k - 1][r].vertices] = int(r);
    IntMatrix m(int(levels[k - 1].size()), int(levels[k].size()));
    for (size_t col = 0; col < levels[k].size(); ++col) {
      const auto& verts = levels[k][col].vertices;
      std::vector<int> face(verts.size() - 1);
      for (size_t drop = 0; drop < verts.size(); ++drop) {
        size_t w = 0;
        for (size_t i = 0; i < verts.size(); ++i)
          if (i != drop) face[w++] = verts[i];
        m.at(row_index.at(face), int(col)) = BigInt(drop % 2 == 0 ? 1 : -1);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

SmithResult smith_normal_form(const IntMatrix& input) {
  const int rows = input.rows(), cols = input.cols();
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = input.at(r, c);

  SmithResult res;
  int t = 0;
  const int limit = std::min(rows, cols);
  while (t < limit) {
    // minimal |entry| pivot in the trailing submatrix
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        if (m[r][c].is_zero()) continue;
        if (pr < 0 || m[r][c].abs() < m[pr][pc].abs()) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // submatrix is zero
    std::swap(m[t], m[pr]);
    if (pc != t)
      for (int r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear the pivot column
      for (int r = t + 1; r < rows; ++r) {
        if (m[r][t].is_zero()) continue;
        BigInt q = BigInt::nearest_quotient(m[r][t], m[t][t]);
        if (!q.is_zero())
          for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (!m[r][t].is_zero()) {
          std::swap(m[t], m[r]);  // strictly smaller remainder becomes pivot
          clean = false;
        }
      }
      // clear the pivot row
      for (int c = t + 1; c < cols; ++c) {
        if (m[t][c].is_zero()) continue;
        BigInt q = BigInt::nearest_quotient(m[t][c], m[t][t]);
        if (!q.is_zero())
          for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (!m[t][c].is_zero()) {
          for (int r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix for the divisor chain
      for (int r = t + 1; r < rows && clean; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (!m[r][c].divisible_by(m[t][t])) {
            for (int cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
            clean = false;
            break;
          }
    }
    if (m[t][t].is_negative())
      for (int c = t; c < cols; ++c) m[t][c] = -m[t][c];
    ++t;
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) res.diagonal.push_back(m[i][i]);
  return res;
}

HomologySummary homology(const SimplicialComplex& c, bool reduced) {
  HomologySummary out;
  out.reduced = reduced;
  out.euler = BigInt(0);

  auto levels = simplices_by_dimension(c);
  const int dim = int(levels.size()) - 1;
  for (int k = 0; k <= dim; ++k) {
    BigInt fk(static_cast<long long>(levels[size_t(k)].size()));
    out.euler += (k % 2 == 0) ? fk : -fk;
  }

  if (dim < 0) {
    // the empty complex: reduced homology is Z in degree -1
    if (reduced) out.groups.push_back(HomologyGroup{-1, 1, {}});
    return out;
  }

  auto boundaries = boundary_matrices(c);  // boundaries[k-1] = d_k
  std::vector<int> rank(size_t(dim) + 2, 0);
  std::vector<std::vector<BigInt>> torsion_from(size_t(dim) + 2);
  for (int k = 1; k <= dim; ++k) {
    SmithResult snf = smith_normal_form(boundaries[size_t(k - 1)]);
    rank[size_t(k)] = snf.rank;
    for (const auto& d : snf.diagonal)
      if (d > BigInt(1)) torsion_from[size_t(k)].push_back(d);
  }

  // d_0: augmentation onto the empty simplex when reduced, zero map otherwise
  int rank0 = reduced && !levels[0].empty() ? 1 : 0;

  for (int k = 0; k <= dim; ++k) {
    HomologyGroup grp;
    grp.dim = k;
    long long fk = static_cast<long long>(levels[size_t(k)].size());
    long long rk = k == 0 ? rank0 : rank[size_t(k)];
    long long rk1 = k + 1 <= dim ? rank[size_t(k) + 1] : 0;
    grp.betti = fk - rk - rk1;
    grp.torsion = torsion_from[size_t(k) + 1];
    out.groups.push_back(std::move(grp));
  }
  return out;
}

}  // namespace groupcx
