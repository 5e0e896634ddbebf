#include "groupcx/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "groupcx/element_set.hpp"

namespace groupcx {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h = h * 1000003u + size_t(x);
    return h;
  }
};

void combinations(const std::vector<int>& items, int k,
                  const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur;
  cur.reserve(k);
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == k) {
      emit(cur);
      return;
    }
    int need = k - int(cur.size());
    for (int i = start; i + need <= int(items.size()); ++i) {
      cur.push_back(items[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> vertex_labels,
    std::vector<std::vector<int>> candidates) {
  const int n = int(vertex_labels.size());
  std::vector<std::vector<int>> sets;
  sets.reserve(candidates.size());
  for (auto& c : candidates) {
    for (int v : c)
      if (v < 0 || v >= n)
        throw ValidationError(ValidationError::Kind::IndexOutOfRange,
                              "from_facets: vertex index out of range");
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!c.empty()) sets.push_back(std::move(c));
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  // drop candidates contained in another candidate
  std::vector<std::vector<int>> maximal;
  std::sort(sets.begin(), sets.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<ElementSet> kept_sets;
  for (auto& s : sets) {
    ElementSet bits = ElementSet::from_indices(n, s);
    bool dominated = false;
    for (const auto& k : kept_sets)
      if (k.contains_all(bits)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      kept_sets.push_back(std::move(bits));
      maximal.push_back(std::move(s));
    }
  }
  std::sort(maximal.begin(), maximal.end());

  SimplicialComplex out;
  out.vertex_labels_ = std::move(vertex_labels);
  out.facets_.reserve(maximal.size());
  for (auto& f : maximal) out.facets_.push_back(Simplex{std::move(f)});
  return out;
}

SimplicialComplex SimplicialComplex::from_hereditary_predicate(
    const std::vector<std::string>& universe_labels,
    const std::function<bool(std::span<const int>)>& pred,
    HereditaryOptions opts, std::vector<int>* kept_universe_indices) {
  const int n = int(universe_labels.size());

  auto accepted = [&](const std::vector<int>& set) {
    bool ok = pred(std::span<const int>(set.data(), set.size()));
    if (ok && opts.check_hereditary && set.size() >= 2) {
      std::vector<int> minus(set.size() - 1);
      for (size_t drop = 0; drop < set.size(); ++drop) {
        size_t w = 0;
        for (size_t i = 0; i < set.size(); ++i)
          if (i != drop) minus[w++] = set[i];
        if (!pred(std::span<const int>(minus.data(), minus.size())))
          throw ValidationError(ValidationError::Kind::PredicateNotHereditary,
                                "PredicateNotHereditary: subset of an accepted "
                                "set was rejected");
      }
    }
    return ok;
  };

  std::vector<int> verts;
  for (int v = 0; v < n; ++v) {
    std::vector<int> single{v};
    if (accepted(single)) verts.push_back(v);
  }

  std::vector<std::vector<int>> facets;
  std::vector<int> cur;
  std::vector<int> trial;
  // canonical backtracking: extend with vertices above the current maximum;
  // a set is a facet iff no single-vertex extension anywhere is accepted
  std::function<void()> rec = [&]() {
    bool extendable = false;
    size_t first_above = cur.empty()
        ? 0
        : size_t(std::upper_bound(verts.begin(), verts.end(), cur.back()) -
                 verts.begin());
    for (size_t i = first_above; i < verts.size(); ++i) {
      cur.push_back(verts[i]);
      if (accepted(cur)) {
        extendable = true;
        rec();
      }
      cur.pop_back();
    }
    if (extendable || cur.empty()) return;
    // no forward extension: try the remaining vertices below the maximum
    for (size_t i = 0; i < first_above; ++i) {
      int v = verts[i];
      if (std::binary_search(cur.begin(), cur.end(), v)) continue;
      trial.clear();
      trial.insert(trial.end(), cur.begin(), cur.end());
      trial.insert(std::lower_bound(trial.begin(), trial.end(), v), v);
      if (accepted(trial)) return;  // not maximal
    }
    facets.push_back(cur);
  };
  rec();

  if (kept_universe_indices) *kept_universe_indices = verts;

  // re-index onto the accepted singletons
  std::vector<int> compact(n, -1);
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    compact[verts[i]] = int(i);
    labels.push_back(universe_labels[verts[i]]);
  }
  for (auto& f : facets)
    for (int& v : f) v = compact[v];
  std::sort(facets.begin(), facets.end());

  SimplicialComplex out;
  out.vertex_labels_ = std::move(labels);
  out.facets_.reserve(facets.size());
  for (auto& f : facets) out.facets_.push_back(Simplex{std::move(f)});
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dimension());
  return d;
}

ComplexStats SimplicialComplex::stats() const {
  ComplexStats st;
  st.dimension = dimension();
  st.is_pure = true;
  for (const auto& f : facets_)
    if (f.size() != facets_.front().size()) {
      st.is_pure = false;
      break;
    }
  if (st.dimension < 0) return st;

  st.f_vector.assign(st.dimension + 1, BigInt(0));

  // f_0 and f_1 are cheap to count directly
  {
    ElementSet covered(vertex_count());
    std::unordered_set<long long> pairs;
    for (const auto& f : facets_) {
      for (int v : f.vertices) covered.set(v);
      for (size_t i = 0; i < f.vertices.size(); ++i)
        for (size_t j = i + 1; j < f.vertices.size(); ++j)
          pairs.insert(1LL * f.vertices[i] * vertex_count() + f.vertices[j]);
    }
    st.f_vector[0] = BigInt(covered.count());
    if (st.dimension >= 1)
      st.f_vector[1] = BigInt(static_cast<long long>(pairs.size()));
  }
  if (st.dimension < 2) return st;

  // route: enumerate when the subset volume is small, otherwise use
  // inclusion-exclusion over facet intersections (pruned once an
  // intersection can only feed f_0/f_1)
  long long volume = 0;
  for (const auto& f : facets_) {
    volume += f.size() >= 62 ? (1LL << 62) : (1LL << f.size());
    if (volume > (1LL << 22)) break;
  }
  if (volume <= (1LL << 22)) {
    std::unordered_set<std::vector<int>, VecHash> seen;
    for (int k = 3; k <= st.dimension + 1; ++k) {
      seen.clear();
      long long count = 0;
      for (const auto& f : facets_) {
        if (f.size() < k) continue;
        combinations(f.vertices, k, [&](const std::vector<int>& c) {
          if (seen.insert(c).second) ++count;
        });
      }
      st.f_vector[k - 1] = BigInt(count);
    }
    return st;
  }

  std::vector<ElementSet> facet_sets;
  facet_sets.reserve(facets_.size());
  for (const auto& f : facets_)
    facet_sets.push_back(ElementSet::from_indices(vertex_count(), f.vertices));
  std::function<void(size_t, const ElementSet&, int)> dfs =
      [&](size_t start, const ElementSet& inter, int sign) {
        for (size_t i = start; i < facet_sets.size(); ++i) {
          ElementSet next = inter & facet_sets[i];
          int size = next.count();
          if (size <= 2) continue;  // feeds only f_0/f_1, already exact
          BigInt s(sign);
          for (int k = 3; k <= std::min(size, st.dimension + 1); ++k)
            st.f_vector[k - 1] += s * BigInt::binomial(size, k);
          dfs(i + 1, next, -sign);
        }
      };
  dfs(0, ElementSet::full(vertex_count()), 1);
  return st;
}

SimplicialComplex SimplicialComplex::k_skeleton(int k) const {
  if (k < 0)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "k_skeleton: k must be nonnegative");
  std::vector<std::vector<int>> candidates;
  for (const auto& f : facets_) {
    if (f.size() <= k + 1) {
      candidates.push_back(f.vertices);
    } else {
      combinations(f.vertices, k + 1,
                   [&](const std::vector<int>& c) { candidates.push_back(c); });
    }
  }
  return from_facets(vertex_labels_, std::move(candidates));
}

bool SimplicialComplex::contains(const Simplex& s) const {
  for (const auto& f : facets_)
    if (std::includes(f.vertices.begin(), f.vertices.end(), s.vertices.begin(),
                      s.vertices.end()))
      return true;
  return false;
}

void SimplicialComplex::for_each_simplex(
    const std::function<bool(const Simplex&)>& cb) const {
  int max_size = 0;
  for (const auto& f : facets_) max_size = std::max(max_size, f.size());
  for (int k = 1; k <= max_size; ++k) {
    std::vector<std::vector<int>> level;
    for (const auto& f : facets_) {
      if (f.size() < k) continue;
      combinations(f.vertices, k,
                   [&](const std::vector<int>& c) { level.push_back(c); });
    }
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (auto& v : level)
      if (!cb(Simplex{std::move(v)})) return;
  }
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  for_each_simplex([&](const Simplex& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace groupcx
