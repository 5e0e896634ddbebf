#pragma once

// Test-side oracles, deliberately independent of the library's algorithms:
// closure by repeated pairwise products, subgroup enumeration from small
// generating sets, and a first-nonzero-pivot Smith normal form over int64.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "groupcx/group.hpp"

namespace groupcx::testing {

// closure by saturating pairwise products (no BFS, no generator worklist)
inline std::vector<int> brute_closure(const FiniteGroup& g,
                                      std::vector<int> seed) {
  std::set<int> members(seed.begin(), seed.end());
  members.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(members.begin(), members.end());
    for (int a : snapshot)
      for (int b : snapshot)
        if (members.insert(g.mul(a, b)).second) grew = true;
  }
  return {members.begin(), members.end()};
}

// every subgroup of a group whose subgroups are all <= 4-generated
// (sound for |G| <= 24 since d(H) <= log2 |H|)
inline std::vector<std::vector<int>> brute_all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  const int n = g.order();
  std::vector<int> gens;
  std::function<void(int, int)> rec = [&](int start, int depth) {
    found.insert(brute_closure(g, gens));
    if (depth == 4) return;
    for (int x = start; x < n; ++x) {
      gens.push_back(x);
      rec(x + 1, depth + 1);
      gens.pop_back();
    }
  };
  rec(1, 0);
  return {found.begin(), found.end()};
}

// straightforward SNF: first nonzero pivot, gcd by explicit Euclид steps,
// int64 arithmetic (fine for the small fixtures it checks)
inline std::vector<long long> naive_snf_diagonal(
    std::vector<std::vector<long long>> m) {
  const int rows = int(m.size());
  const int cols = rows ? int(m[0].size()) : 0;
  std::vector<long long> diag;
  int t = 0;
  while (t < std::min(rows, cols)) {
    int pr = -1, pc = -1;
    for (int r = t; r < rows && pr < 0; ++r)
      for (int c = t; c < cols; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);
    bool done = false;
    while (!done) {
      done = true;
      for (int r = t + 1; r < rows; ++r)
        while (m[r][t] != 0) {
          long long q = m[t][t] == 0 ? 0 : m[r][t] / m[t][t];
          for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
          if (m[r][t] != 0) {
            std::swap(m[t], m[r]);
            done = false;
          }
        }
      for (int c = t + 1; c < cols; ++c)
        while (m[t][c] != 0) {
          long long q = m[t][t] == 0 ? 0 : m[t][c] / m[t][t];
          for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
          if (m[t][c] != 0) {
            for (int r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
            done = false;
          }
        }
      if (!done) continue;
      for (int r = t + 1; r < rows && done; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (m[t][t] != 0 && m[r][c] % m[t][t] != 0) {
            for (int cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
            done = false;
            break;
          }
    }
    diag.push_back(m[t][t] < 0 ? -m[t][t] : m[t][t]);
    ++t;
  }
  return diag;
}

inline std::vector<int> find_elements(const FiniteGroup& g,
                                      const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels)
    for (int x = 0; x < g.order(); ++x)
      if (g.label(x) == l) {
        out.push_back(x);
        break;
      }
  return out;
}

}  // namespace groupcx::testing
