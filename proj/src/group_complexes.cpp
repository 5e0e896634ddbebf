#include "groupcx/group_complexes.hpp"

#include <algorithm>
#include <unordered_set>

namespace groupcx {

WordSpec WordSpec::commutator() {
  return WordSpec{2, {{1, -1}, {2, -1}, {1, 1}, {2, 1}}, "commutator"};
}

WordSpec WordSpec::triple_product() {
  return WordSpec{3, {{1, 1}, {2, 1}, {3, 1}}, "triple_product"};
}

WordSpec WordSpec::double_commutator() {
  // [[x,y],z] = (y^-1 x^-1 y x) z^-1 (x^-1 y^-1 x y) z
  return WordSpec{3,
                  {{2, -1}, {1, -1}, {2, 1}, {1, 1}, {3, -1},
                   {1, -1}, {2, -1}, {1, 1}, {2, 1}, {3, 1}},
                  "double_commutator"};
}

bool is_independent(GroupContext& ctx, const ElementSet& a) {
  if (a.empty()) return true;
  std::vector<int> elems = a.indices();
  // newest (largest) elements fail first during backtracking
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
    ElementSet rest = a;
    rest.reset(*it);
    if (ctx.closure(rest).test(*it)) return false;
  }
  return true;
}

bool is_strongly_independent(GroupContext& ctx, const ElementSet& a) {
  const int m = a.count();
  if (m == 0) return true;
  const auto& lat = ctx.lattice();
  const auto& d = ctx.lattice_min_generators();
  for (int idx : ctx.lattice_by_min_generators()) {
    if (d[idx] >= m) return true;  // every later subgroup needs >= m too
    if (lat[idx].members.contains_all(a)) return false;
  }
  return true;
}

namespace {

// vertices of the independence-style complexes: every non-identity element
std::vector<std::string> non_identity_labels(const FiniteGroup& g) {
  std::vector<std::string> out;
  out.reserve(g.order() - 1);
  for (int x = 1; x < g.order(); ++x) out.push_back(g.label(x));
  return out;
}

ElementSet to_element_set(const FiniteGroup& g, std::span<const int> universe,
                          int offset) {
  ElementSet s(g.order());
  for (int u : universe) s.set(u + offset);
  return s;
}

GroupComplex hereditary_group_complex(
    GroupContext& ctx,
    const std::function<bool(const ElementSet&)>& element_pred) {
  const FiniteGroup& g = ctx.group();
  std::vector<int> kept;
  SimplicialComplex c = SimplicialComplex::from_hereditary_predicate(
      non_identity_labels(g),
      [&](std::span<const int> set) {
        return element_pred(to_element_set(g, set, 1));
      },
      {}, &kept);
  GroupComplex out;
  out.complex = std::move(c);
  out.vertex_to_element.reserve(kept.size());
  for (int u : kept) out.vertex_to_element.push_back(u + 1);
  return out;
}

}  // namespace

GroupComplex independence_complex(GroupContext& ctx) {
  return hereditary_group_complex(
      ctx, [&](const ElementSet& a) { return is_independent(ctx, a); });
}

GroupComplex strong_independence_complex(GroupContext& ctx) {
  ctx.lattice();  // raises LatticeCapExceeded up front
  return hereditary_group_complex(
      ctx, [&](const ElementSet& a) { return is_strongly_independent(ctx, a); });
}

namespace {

bool subgroup_in_class(GroupContext& ctx, const ElementSet& h, GroupClass cls) {
  switch (cls) {
    case GroupClass::Cyclic:
      return ctx.subgroup_is_cyclic(h);
    case GroupClass::Abelian:
      return ctx.subgroup_is_abelian(h);
    case GroupClass::Nilpotent:
      return ctx.subgroup_is_nilpotent(h);
    case GroupClass::Soluble:
      return ctx.subgroup_is_soluble(h);
  }
  return false;
}

GroupComplex complex_from_subgroup_families(const FiniteGroup& g,
                                            std::vector<ElementSet> facet_sets) {
  // vertex set: union of the facets, in element order
  ElementSet covered(g.order());
  for (const auto& s : facet_sets) covered |= s;
  std::vector<int> verts = covered.indices();
  std::vector<int> compact(g.order(), -1);
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    compact[verts[i]] = int(i);
    labels.push_back(g.label(verts[i]));
  }
  std::vector<std::vector<int>> candidates;
  candidates.reserve(facet_sets.size());
  for (const auto& s : facet_sets) {
    std::vector<int> f;
    s.for_each([&](int x) { f.push_back(compact[x]); });
    candidates.push_back(std::move(f));
  }
  GroupComplex out;
  out.complex = SimplicialComplex::from_facets(std::move(labels),
                                               std::move(candidates));
  out.vertex_to_element = std::move(verts);
  return out;
}

}  // namespace

GroupComplex class_complex(GroupContext& ctx, GroupClass cls) {
  const auto& lat = ctx.lattice();
  std::vector<ElementSet> members;
  for (const auto& h : lat)
    if (subgroup_in_class(ctx, h.members, cls)) members.push_back(h.members);
  // maximal class subgroups
  std::vector<ElementSet> maximal;
  for (const auto& h : members) {
    bool dominated = false;
    for (const auto& k : members)
      if (!(k == h) && k.contains_all(h)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(h);
  }
  return complex_from_subgroup_families(ctx.group(), std::move(maximal));
}

GroupComplex non_generating_complex(GroupContext& ctx) {
  const auto& lat = ctx.lattice();
  const int n = ctx.group().order();
  std::vector<ElementSet> proper;
  for (const auto& h : lat)
    if (h.size() < n) proper.push_back(h.members);
  std::vector<ElementSet> maximal;
  for (const auto& h : proper) {
    bool dominated = false;
    for (const auto& k : proper)
      if (!(k == h) && k.contains_all(h)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(h);
  }
  return complex_from_subgroup_families(ctx.group(), std::move(maximal));
}

GroupComplex filtered_independence_complex(GroupContext& ctx,
                                           IndependenceFilter filter) {
  const FiniteGroup& g = ctx.group();
  auto commuting = [&](const ElementSet& a) {
    std::vector<int> elems = a.indices();
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = i + 1; j < elems.size(); ++j)
        if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
    return true;
  };
  auto non_generating = [&](const ElementSet& a) {
    return ctx.closure(a).count() < g.order();
  };
  return hereditary_group_complex(ctx, [&, filter](const ElementSet& a) {
    if (filter == IndependenceFilter::Commuting) {
      if (!commuting(a)) return false;
    } else {
      if (!non_generating(a)) return false;
    }
    return is_independent(ctx, a);
  });
}

// ---- word complexes --------------------------------------------------------

namespace {

int eval_word(const FiniteGroup& g, const WordSpec& w, const int* assign) {
  int acc = 0;
  for (auto [var, exp] : w.letters)
    acc = g.mul(acc, exp > 0 ? assign[var - 1] : g.inv(assign[var - 1]));
  return acc;
}

bool some_ordering_satisfies(const FiniteGroup& g, const WordSpec& w,
                             std::vector<int> tuple) {
  std::sort(tuple.begin(), tuple.end());
  do {
    if (eval_word(g, w, tuple.data()) == 0) return true;
  } while (std::next_permutation(tuple.begin(), tuple.end()));
  return false;
}

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h = h * 1000003u + size_t(x);
    return h;
  }
};

}  // namespace

GroupComplex word_complex(GroupContext& ctx, const WordSpec& word) {
  if (word.arity < 1 || word.arity > 3)
    throw ValidationError(ValidationError::Kind::ArityUnsupported,
                          "ArityUnsupported: word arity must be 1..3");
  if (word.letters.empty())
    throw ValidationError(ValidationError::Kind::BadSpec, "word: empty word");
  for (auto [var, exp] : word.letters)
    if (var < 1 || var > word.arity || (exp != 1 && exp != -1))
      throw ValidationError(ValidationError::Kind::BadSpec,
                            "word: bad variable index or exponent");

  const FiniteGroup& g = ctx.group();
  const int n = g.order();
  const int k = word.arity;

  // level-k simplices: k-subsets of distinct elements satisfying the word
  // under some ordering
  std::unordered_set<std::vector<int>, VecHash> level_k;
  {
    std::vector<int> tuple(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == k) {
        if (some_ordering_satisfies(g, word, tuple)) {
          std::vector<int> key = tuple;
          level_k.insert(std::move(key));
        }
        return;
      }
      for (int v = start; v < n; ++v) {
        tuple[depth] = v;
        rec(v + 1, depth + 1);
      }
    };
    rec(0, 0);
  }

  GroupComplex out;
  if (level_k.empty()) return out;  // empty complex

  ElementSet covered(n);
  std::vector<int> count(n, 0);
  std::unordered_set<long long> pair_support;  // k == 3 only
  for (const auto& s : level_k) {
    for (int v : s) {
      covered.set(v);
      ++count[v];
    }
    if (k == 3) {
      pair_support.insert(1LL * s[0] * n + s[1]);
      pair_support.insert(1LL * s[0] * n + s[2]);
      pair_support.insert(1LL * s[1] * n + s[2]);
    }
  }
  std::vector<int> verts = covered.indices();
  const int covered_count = int(verts.size());

  // an element contained in every possible level-k set belongs to every
  // facet; peel those off before backtracking
  BigInt all_through = BigInt::binomial(covered_count - 1, k - 1);
  std::vector<int> core, rest;
  for (int v : verts) {
    if (BigInt(count[v]) == all_through)
      core.push_back(v);
    else
      rest.push_back(v);
  }

  auto has_level_set = [&](const std::vector<int>& sorted) {
    return level_k.count(sorted) > 0;
  };
  // base is sorted and already accepted; may v join it?
  auto extension_ok = [&](const std::vector<int>& base, int v) {
    const int new_size = int(base.size()) + 1;
    if (new_size == 1 || k == 1) return true;  // any covered vertex
    if (k == 2) {
      for (int b : base) {
        std::vector<int> pair{std::min(b, v), std::max(b, v)};
        if (!has_level_set(pair)) return false;
      }
      return true;
    }
    // k == 3: a pair needs a completing triple; larger sets need every
    // new triple through v to be a level set
    if (new_size == 2) {
      long long a = std::min(base[0], v), b = std::max(base[0], v);
      return pair_support.count(a * n + b) > 0;
    }
    for (size_t i = 0; i < base.size(); ++i)
      for (size_t j = i + 1; j < base.size(); ++j) {
        std::vector<int> tri{base[i], base[j], v};
        std::sort(tri.begin(), tri.end());
        if (!has_level_set(tri)) return false;
      }
    return true;
  };

  std::vector<std::vector<int>> facets;
  std::vector<int> cur = core;  // sorted: core peeled in ascending order
  std::sort(cur.begin(), cur.end());
  std::function<void(size_t)> rec = [&](size_t start) {
    bool extendable = false;
    for (size_t i = start; i < rest.size(); ++i) {
      if (extension_ok(cur, rest[i])) {
        extendable = true;
        cur.insert(std::lower_bound(cur.begin(), cur.end(), rest[i]), rest[i]);
        rec(i + 1);
        cur.erase(std::find(cur.begin(), cur.end(), rest[i]));
      }
    }
    if (extendable) return;
    for (size_t i = 0; i < start; ++i) {
      if (std::binary_search(cur.begin(), cur.end(), rest[i])) continue;
      if (extension_ok(cur, rest[i])) return;  // not maximal
    }
    if (!cur.empty()) facets.push_back(cur);
  };
  rec(0);

  std::vector<int> compact(n, -1);
  std::vector<std::string> labels;
  for (size_t i = 0; i < verts.size(); ++i) {
    compact[verts[i]] = int(i);
    labels.push_back(g.label(verts[i]));
  }
  for (auto& f : facets)
    for (int& v : f) v = compact[v];
  out.complex = SimplicialComplex::from_facets(std::move(labels), std::move(facets));
  out.vertex_to_element = std::move(verts);
  return out;
}

// ---- reports ---------------------------------------------------------------

GenerationReport generation_report(GroupContext& ctx, const GroupComplex& gc) {
  const FiniteGroup& g = ctx.group();
  GenerationReport rep;
  const auto& facets = gc.complex.facets();
  for (const auto& f : facets)
    rep.max_facet_size = std::max(rep.max_facet_size, f.size());
  for (const auto& f : facets) {
    if (f.size() != facets.front().size()) rep.is_pure = false;
    ElementSet elems(g.order());
    std::vector<int> element_list;
    for (int v : f.vertices) {
      elems.set(gc.vertex_to_element[v]);
      element_list.push_back(gc.vertex_to_element[v]);
    }
    bool generates = ctx.closure(elems).count() == g.order();
    if (!generates) {
      rep.every_facet_generates = false;
      if (rep.non_generating_facets.size() < 3)
        rep.non_generating_facets.push_back(element_list);
      if (f.size() == rep.max_facet_size) {
        rep.max_facets_generate = false;
        if (rep.non_generating_max_facets.size() < 3)
          rep.non_generating_max_facets.push_back(element_list);
      }
    }
  }
  return rep;
}

CoincidenceVerdict coincidence_check(GroupContext& ctx) {
  CoincidenceVerdict verdict;
  verdict.eppo = ctx.classify().is_eppo;
  GroupComplex ic = independence_complex(ctx);
  GroupComplex sc = strong_independence_complex(ctx);
  verdict.coincide = ic.complex == sc.complex;
  if (!verdict.coincide) {
    // strongly independent sets are independent, so the difference shows up
    // as an independent simplex that fails the strong test; the stream order
    // (size, lex) makes the first hit the canonical minimal witness
    ic.complex.for_each_simplex([&](const Simplex& s) {
      ElementSet elems(ctx.group().order());
      for (int v : s.vertices) elems.set(ic.vertex_to_element[v]);
      if (!is_strongly_independent(ctx, elems)) {
        for (int v : s.vertices)
          verdict.witness.push_back(ic.vertex_to_element[v]);
        return false;
      }
      return true;
    });
  }
  return verdict;
}

WhistonResult whiston_check(int n, const Caps& caps) {
  if (n < 1 || n > 5)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "whiston_check: n must be between 1 and 5");
  FiniteGroup g = build_group(GroupSpec::symmetric(n), caps);
  GroupContext ctx(g, caps);
  GroupComplex ic = independence_complex(ctx);
  WhistonResult res;
  res.max_size = ic.complex.dimension() + 1;
  for (const auto& f : ic.complex.facets()) {
    if (f.size() != res.max_size) continue;
    ElementSet elems(g.order());
    for (int v : f.vertices) elems.set(ic.vertex_to_element[v]);
    if (ctx.closure(elems).count() != g.order()) {
      res.equality_implies_generating = false;
      break;
    }
  }
  return res;
}

}  // namespace groupcx
