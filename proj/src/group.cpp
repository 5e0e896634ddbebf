#include "groupcx/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace groupcx {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_factors(long long n) {
  std::vector<int> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(int(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(int(n));
  return out;
}

bool is_prime_power(long long n) {
  if (n < 1) return false;
  return prime_factors(n).size() <= 1;
}

// ---- permutation helpers ---------------------------------------------------

namespace {

using Perm = std::vector<int>;  // 0-based images

Perm perm_compose(const Perm& a, const Perm& b) {
  // (a*b)(x) = a(b(x)): b acts first
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != int(i)) return false;
  return true;
}

std::string perm_cycle_label(const Perm& p) {
  if (perm_is_identity(p)) return "e";
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == int(i)) continue;
    out.push_back('(');
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out.push_back(' ');
      out += std::to_string(j + 1);
      first = false;
      j = size_t(p[j]);
    }
    out.push_back(')');
  }
  return out;
}

bool perm_is_even(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int transpositions = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = size_t(p[j]);
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = p.size();
    for (int v : p) h = h * 1000003u + size_t(v);
    return h;
  }
};

}  // namespace

// ---- FiniteGroup -----------------------------------------------------------

struct GroupBuilder {
  static FiniteGroup make(int n, std::vector<uint16_t> flat,
                          std::vector<std::string> labels) {
    return FiniteGroup::finalize(n, std::move(flat), std::move(labels));
  }
};

FiniteGroup FiniteGroup::finalize(int n, std::vector<uint16_t> flat,
                                  std::vector<std::string> labels) {
  if (n < 1 || size_t(n) * n != flat.size())
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "group table has inconsistent dimensions");
  for (uint16_t v : flat)
    if (int(v) >= n)
      throw ValidationError(ValidationError::Kind::NotClosed,
                            "NotClosed: table entry outside 0..order-1");
  // identity must sit at index 0, two-sided
  for (int a = 0; a < n; ++a) {
    if (flat[size_t(0) * n + a] != a || flat[size_t(a) * n + 0] != a)
      throw ValidationError(ValidationError::Kind::NoIdentity,
                            "NoIdentity: element 0 is not a two-sided identity");
  }
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  // two-sided inverses
  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        found = b;
        break;
      }
    }
    if (found < 0)
      throw ValidationError(ValidationError::Kind::NoInverse,
                            "NoInverse: no two-sided inverse for an element");
    g.inv_[a] = uint16_t(found);
  }
  // associativity: exhaustive up to order 200, deterministic sample above
  auto check_triple = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw ValidationError(ValidationError::Kind::NotAssociative,
                            "NotAssociative: (a*b)*c != a*(b*c)");
  };
  if (n <= 200) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 2000000; ++t)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
  // element orders
  g.orders_.assign(n, 1);
  for (int x = 0; x < n; ++x) {
    int y = x, k = 1;
    while (y != 0) {
      y = g.mul(y, x);
      ++k;
    }
    g.orders_[x] = x == 0 ? 1 : k;
  }
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
  }
  if (int(labels.size()) != n)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "label count does not match group order");
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels) {
  int n = int(table.size());
  if (n < 1 || n > 65535)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "table order out of range");
  std::vector<uint16_t> flat(size_t(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (int(table[a].size()) != n)
      throw ValidationError(ValidationError::Kind::NotClosed,
                            "NotClosed: ragged table row");
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n)
        throw ValidationError(ValidationError::Kind::NotClosed,
                              "NotClosed: table entry outside 0..order-1");
      flat[size_t(a) * n + b] = uint16_t(table[a][b]);
    }
  }
  return finalize(n, std::move(flat), std::move(labels));
}

int FiniteGroup::power(int x, long long e) const {
  int base = x;
  if (e < 0) {
    base = inv(x);
    e = -e;
  }
  int acc = 0;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<int> FiniteGroup::order_spectrum() const {
  std::vector<int> out = orders_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroup::prime_divisors() const {
  return prime_factors(n_);
}

std::vector<int> order_spectrum(const FiniteGroup& g) {
  return g.order_spectrum();
}

// ---- GroupSpec factories ---------------------------------------------------

GroupSpec GroupSpec::cyclic(int n) {
  GroupSpec s;
  s.family = Family::Cyclic;
  s.n = n;
  return s;
}
GroupSpec GroupSpec::dihedral(int n) {
  GroupSpec s;
  s.family = Family::Dihedral;
  s.n = n;
  return s;
}
GroupSpec GroupSpec::symmetric(int n) {
  GroupSpec s;
  s.family = Family::Symmetric;
  s.n = n;
  return s;
}
GroupSpec GroupSpec::alternating(int n) {
  GroupSpec s;
  s.family = Family::Alternating;
  s.n = n;
  return s;
}
GroupSpec GroupSpec::abelian(std::vector<int> factors) {
  GroupSpec s;
  s.family = Family::Abelian;
  s.factors = std::move(factors);
  return s;
}
GroupSpec GroupSpec::perm(int degree, std::vector<std::vector<int>> gens) {
  GroupSpec s;
  s.family = Family::Perm;
  s.degree = degree;
  s.generators = std::move(gens);
  return s;
}
GroupSpec GroupSpec::from_table(std::vector<std::vector<int>> table) {
  GroupSpec s;
  s.family = Family::Table;
  s.table = std::move(table);
  return s;
}
GroupSpec GroupSpec::product(GroupSpec l, GroupSpec r) {
  GroupSpec s;
  s.family = Family::Product;
  s.left = std::make_shared<GroupSpec>(std::move(l));
  s.right = std::make_shared<GroupSpec>(std::move(r));
  return s;
}
GroupSpec GroupSpec::wreath_cyclic(int m, int n) {
  GroupSpec s;
  s.family = Family::WreathCyclic;
  s.m = m;
  s.n = n;
  return s;
}

// ---- builders --------------------------------------------------------------

namespace {

void require_order_cap(long long order, const Caps& caps) {
  if (order > caps.order_cap) throw CapExceeded::order(order, caps.order_cap);
}

FiniteGroup build_cyclic(int n, const Caps& caps) {
  if (n < 1)
    throw ValidationError(ValidationError::Kind::BadSpec, "cyclic: n must be positive");
  require_order_cap(n, caps);
  std::vector<uint16_t> flat(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[size_t(a) * n + b] = uint16_t((a + b) % n);
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (int i = 1; i < n; ++i) labels[i] = i == 1 ? "g" : "g^" + std::to_string(i);
  return GroupBuilder::make(n, std::move(flat), std::move(labels));
}

FiniteGroup build_dihedral(int n, const Caps& caps) {
  if (n < 1)
    throw ValidationError(ValidationError::Kind::BadSpec, "dihedral: n must be positive");
  const int order = 2 * n;
  require_order_cap(order, caps);
  // index a + flip*n encodes r^a s^flip;  s r^b = r^(-b) s
  auto idx = [&](int rot, int flip) { return flip * n + rot; };
  std::vector<uint16_t> flat(size_t(order) * order);
  for (int f1 = 0; f1 < 2; ++f1)
    for (int a = 0; a < n; ++a)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int b = 0; b < n; ++b) {
          int rot = f1 == 0 ? (a + b) % n : ((a - b) % n + n) % n;
          int flip = (f1 + f2) % 2;
          flat[size_t(idx(a, f1)) * order + idx(b, f2)] = uint16_t(idx(rot, flip));
        }
  std::vector<std::string> labels(order);
  for (int a = 0; a < n; ++a) {
    labels[idx(a, 0)] = a == 0 ? "e" : a == 1 ? "r" : "r^" + std::to_string(a);
    labels[idx(a, 1)] = a == 0 ? "s" : a == 1 ? "r s" : "r^" + std::to_string(a) + " s";
  }
  return GroupBuilder::make(order, std::move(flat), std::move(labels));
}

FiniteGroup group_from_perms(std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  // the identity is lexicographically least, so it lands at index 0
  std::unordered_map<Perm, int, PermHash> index;
  index.reserve(elements.size() * 2);
  for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = int(i);
  const int n = int(elements.size());
  std::vector<uint16_t> flat(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[size_t(a) * n + b] = uint16_t(index.at(perm_compose(elements[a], elements[b])));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = perm_cycle_label(elements[i]);
  return GroupBuilder::make(n, std::move(flat), std::move(labels));
}

FiniteGroup build_symmetric(int n, const Caps& caps, bool even_only) {
  if (n < 1)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "symmetric/alternating: n must be positive");
  long long fact = 1;
  for (int i = 2; i <= n; ++i) {
    fact *= i;
    if (fact > 4LL * caps.order_cap) break;
  }
  long long order = even_only && n >= 2 ? fact / 2 : fact;
  require_order_cap(order, caps);
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> elements;
  do {
    if (!even_only || perm_is_even(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perms(std::move(elements));
}

FiniteGroup closure_of_generators(int degree, const std::vector<Perm>& gens,
                                  const Caps& caps) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::unordered_map<Perm, int, PermHash> seen;
  std::vector<Perm> elements;
  elements.push_back(id);
  seen[id] = 0;
  for (size_t qi = 0; qi < elements.size(); ++qi) {
    Perm cur = elements[qi];
    for (const Perm& s : gens) {
      Perm next = perm_compose(cur, s);
      if (seen.emplace(next, int(elements.size())).second) {
        elements.push_back(std::move(next));
        if (int(elements.size()) > caps.order_cap)
          throw CapExceeded::order(int(elements.size()), caps.order_cap);
      }
    }
  }
  return group_from_perms(std::move(elements));
}

FiniteGroup build_perm(int degree, const std::vector<std::vector<int>>& gens_1based,
                       const Caps& caps) {
  if (degree < 1)
    throw ValidationError(ValidationError::Kind::BadSpec, "perm: degree must be positive");
  std::vector<Perm> gens;
  for (const auto& images : gens_1based) {
    if (int(images.size()) != degree)
      throw ValidationError(ValidationError::Kind::DegreeMismatch,
                            "DegreeMismatch: generator image count != degree");
    Perm p(degree);
    std::vector<bool> hit(degree, false);
    for (int i = 0; i < degree; ++i) {
      int img = images[i];
      if (img < 1 || img > degree || hit[img - 1])
        throw ValidationError(ValidationError::Kind::DegreeMismatch,
                              "DegreeMismatch: generator is not a bijection of the degree");
      hit[img - 1] = true;
      p[i] = img - 1;
    }
    gens.push_back(std::move(p));
  }
  return closure_of_generators(degree, gens, caps);
}

FiniteGroup build_abelian(const std::vector<int>& factors, const Caps& caps) {
  if (factors.empty())
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "abelian: factor sequence must be nonempty");
  long long order = 1;
  for (int f : factors) {
    if (f < 1)
      throw ValidationError(ValidationError::Kind::BadSpec,
                            "abelian: factors must be positive");
    order *= f;
    if (order > 4LL * caps.order_cap) break;
  }
  require_order_cap(order, caps);
  const int n = int(order);
  const int r = int(factors.size());
  auto decode = [&](int idx, std::vector<int>& tuple) {
    for (int i = r - 1; i >= 0; --i) {
      tuple[i] = idx % factors[i];
      idx /= factors[i];
    }
  };
  auto encode = [&](const std::vector<int>& tuple) {
    int idx = 0;
    for (int i = 0; i < r; ++i) idx = idx * factors[i] + tuple[i];
    return idx;
  };
  std::vector<uint16_t> flat(size_t(n) * n);
  std::vector<int> ta(r), tb(r), tc(r);
  for (int a = 0; a < n; ++a) {
    decode(a, ta);
    for (int b = 0; b < n; ++b) {
      decode(b, tb);
      for (int i = 0; i < r; ++i) tc[i] = (ta[i] + tb[i]) % factors[i];
      flat[size_t(a) * n + b] = uint16_t(encode(tc));
    }
  }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    decode(a, ta);
    if (a == 0) {
      labels[a] = "e";
      continue;
    }
    std::string s = "(";
    for (int i = 0; i < r; ++i) {
      if (i) s += ",";
      s += std::to_string(ta[i]);
    }
    s += ")";
    labels[a] = s;
  }
  return GroupBuilder::make(n, std::move(flat), std::move(labels));
}

FiniteGroup build_wreath_cyclic(int m, int n, const Caps& caps) {
  if (m < 1 || n < 1)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "wreath_cyclic: parameters must be positive");
  // imprimitive action on m*n points: n blocks of size m;
  // generators are the m-cycle in block 0 and the block n-cycle
  const int degree = m * n;
  Perm base(degree), shift(degree);
  std::iota(base.begin(), base.end(), 0);
  for (int j = 0; j < m; ++j) base[j] = (j + 1) % m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) shift[i * m + j] = ((i + 1) % n) * m + j;
  return closure_of_generators(degree, {base, shift}, caps);
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const Caps& caps) {
  long long order = 1LL * g.order() * h.order();
  require_order_cap(order, caps);
  const int n = int(order), hn = h.order();
  std::vector<uint16_t> flat(size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    int a1 = a / hn, a2 = a % hn;
    for (int b = 0; b < n; ++b) {
      int b1 = b / hn, b2 = b % hn;
      flat[size_t(a) * n + b] = uint16_t(g.mul(a1, b1) * hn + h.mul(a2, b2));
    }
  }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a)
    labels[a] = "(" + g.label(a / hn) + "," + h.label(a % hn) + ")";
  return GroupBuilder::make(n, std::move(flat), std::move(labels));
}

FiniteGroup build_group(const GroupSpec& spec, const Caps& caps) {
  switch (spec.family) {
    case GroupSpec::Family::Cyclic:
      return build_cyclic(spec.n, caps);
    case GroupSpec::Family::Dihedral:
      return build_dihedral(spec.n, caps);
    case GroupSpec::Family::Symmetric:
      return build_symmetric(spec.n, caps, false);
    case GroupSpec::Family::Alternating:
      return build_symmetric(spec.n, caps, true);
    case GroupSpec::Family::Abelian:
      return build_abelian(spec.factors, caps);
    case GroupSpec::Family::Perm:
      return build_perm(spec.degree, spec.generators, caps);
    case GroupSpec::Family::Table: {
      long long order = spec.table.size();
      require_order_cap(order, caps);
      return FiniteGroup::from_table(spec.table);
    }
    case GroupSpec::Family::Product: {
      if (!spec.left || !spec.right)
        throw ValidationError(ValidationError::Kind::BadSpec,
                              "product: both sides required");
      FiniteGroup l = build_group(*spec.left, caps);
      FiniteGroup r = build_group(*spec.right, caps);
      return direct_product(l, r, caps);
    }
    case GroupSpec::Family::WreathCyclic:
      return build_wreath_cyclic(spec.m, spec.n, caps);
  }
  throw ValidationError(ValidationError::Kind::BadSpec, "unknown group family");
}

// ---- subgroup machinery ----------------------------------------------------

namespace {

ElementSet closure_set(const FiniteGroup& g, const std::vector<int>& gens) {
  ElementSet in(g.order());
  in.set(0);
  std::vector<int> queue{0};
  queue.reserve(g.order());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int t = queue[qi];
    for (int s : gens) {
      int p = g.mul(t, s);
      if (!in.test(p)) {
        in.set(p);
        queue.push_back(p);
      }
    }
  }
  return in;
}

}  // namespace

Subgroup subgroup_closure(const FiniteGroup& g, const ElementSet& seed) {
  return subgroup_closure(g, seed.indices());
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  for (int x : seed)
    if (x < 0 || x >= g.order())
      throw ValidationError(ValidationError::Kind::IndexOutOfRange,
                            "subgroup_closure: element index out of range");
  return Subgroup{closure_set(g, seed)};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.lattice_cap)
    throw CapExceeded::lattice(g.order(), caps.lattice_cap);

  struct Entry {
    ElementSet members;
    std::vector<int> gens;
  };
  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  std::vector<Entry> subs;
  auto insert = [&](ElementSet members, std::vector<int> gens) {
    if (seen.emplace(members, int(subs.size())).second)
      subs.push_back({std::move(members), std::move(gens)});
  };

  insert(ElementSet::single(g.order(), 0), {});
  // distinct cyclic subgroups, each remembered with a single generator
  std::vector<std::pair<ElementSet, int>> cyclics;
  {
    std::unordered_map<ElementSet, int, ElementSetHash> cseen;
    for (int x = 1; x < g.order(); ++x) {
      ElementSet span = closure_set(g, {x});
      if (cseen.emplace(span, x).second) {
        cyclics.emplace_back(span, x);
        insert(span, {x});
      }
    }
  }
  // join every known subgroup with every cyclic subgroup until stable
  for (size_t i = 0; i < subs.size(); ++i) {
    for (const auto& [span, cgen] : cyclics) {
      if (subs[i].members.contains_all(span)) continue;
      std::vector<int> gens = subs[i].gens;
      gens.push_back(cgen);
      ElementSet joined = closure_set(g, gens);
      insert(std::move(joined), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (auto& e : subs) out.push_back(Subgroup{std::move(e.members)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    int ca = a.members.count(), cb = b.members.count();
    if (ca != cb) return ca < cb;
    return a.members.indices() < b.members.indices();
  });
  return out;
}

int min_generators(const FiniteGroup& g, const Subgroup& h) {
  const int size = h.size();
  if (size <= 1) return 0;
  std::vector<int> members;
  for (int x : h.indices())
    if (x != 0) members.push_back(x);

  std::vector<int> gens;
  // DFS over increasing element indices; each generator must strictly
  // enlarge the running closure (sound for minimal sets: a minimal
  // generating set has strictly growing prefixes in every order)
  std::function<bool(int, const ElementSet&, int)> dfs =
      [&](int start, const ElementSet& current, int remaining) -> bool {
    if (current.count() == size) return true;
    if (remaining == 0) return false;
    for (size_t idx = start; idx < members.size(); ++idx) {
      int x = members[idx];
      if (current.test(x)) continue;  // would not enlarge
      gens.push_back(x);
      ElementSet next = closure_set(g, gens);
      bool ok = h.members.contains_all(next) && dfs(int(idx) + 1, next, remaining - 1);
      gens.pop_back();
      if (ok) return true;
    }
    return false;
  };

  ElementSet trivial = ElementSet::single(h.members.universe(), 0);
  for (int k = 1;; ++k) {
    if (dfs(0, trivial, k)) return k;
  }
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> elems = h.indices();  // ascending, so identity first
  std::unordered_map<int, int> local;
  for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = int(i);
  const int n = int(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = g.label(elems[a]);
    for (int b = 0; b < n; ++b) {
      auto it = local.find(g.mul(elems[a], elems[b]));
      if (it == local.end())
        throw ValidationError(ValidationError::Kind::NotClosed,
                              "subgroup_as_group: member set is not closed");
      table[a][b] = it->second;
    }
  }
  return FiniteGroup::from_table(table, std::move(labels));
}

// ---- GroupContext ----------------------------------------------------------

const std::vector<Subgroup>& GroupContext::lattice() {
  if (!lattice_built_) {
    lattice_ = all_subgroups(group_, caps_);
    lattice_built_ = true;
  }
  return lattice_;
}

const std::vector<int>& GroupContext::lattice_min_generators() {
  if (lattice_d_.empty()) {
    const auto& lat = lattice();
    lattice_d_.reserve(lat.size());
    for (const auto& h : lat) lattice_d_.push_back(min_generators_of(h.members));
  }
  return lattice_d_;
}

const std::vector<int>& GroupContext::lattice_by_min_generators() {
  if (lattice_by_d_.empty()) {
    const auto& d = lattice_min_generators();
    lattice_by_d_.resize(d.size());
    std::iota(lattice_by_d_.begin(), lattice_by_d_.end(), 0);
    std::stable_sort(lattice_by_d_.begin(), lattice_by_d_.end(),
                     [&](int a, int b) { return d[a] < d[b]; });
  }
  return lattice_by_d_;
}

const std::vector<ElementSet>& GroupContext::cyclic_subgroups() {
  if (!cyclics_built_) {
    cyclic_span_.reserve(group_.order());
    std::unordered_map<ElementSet, int, ElementSetHash> seen;
    for (int x = 0; x < group_.order(); ++x) {
      ElementSet span = closure_set(group_, {x});
      if (seen.emplace(span, x).second) cyclic_subgroups_.push_back(span);
      cyclic_span_.push_back(std::move(span));
    }
    cyclics_built_ = true;
  }
  return cyclic_subgroups_;
}

const ElementSet& GroupContext::cyclic_span(int x) {
  cyclic_subgroups();
  return cyclic_span_[x];
}

ElementSet GroupContext::closure(const ElementSet& seed) {
  auto it = closure_memo_.find(seed);
  if (it != closure_memo_.end()) return it->second;
  ElementSet result = closure_set(group_, seed.indices());
  if (closure_memo_.size() < (1u << 21))
    closure_memo_.emplace(seed, result);
  return result;
}

int GroupContext::min_generators_of(const ElementSet& subgroup_members) {
  auto it = mingen_memo_.find(subgroup_members);
  if (it != mingen_memo_.end()) return it->second;
  int d = min_generators(group_, Subgroup{subgroup_members});
  mingen_memo_.emplace(subgroup_members, d);
  return d;
}

bool GroupContext::subgroup_is_cyclic(const ElementSet& h) const {
  int size = h.count();
  bool found = false;
  h.for_each([&](int x) {
    if (group_.element_order(x) == size) found = true;
  });
  return found;
}

bool GroupContext::subgroup_is_abelian(const ElementSet& h) const {
  std::vector<int> elems = h.indices();
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (group_.mul(elems[i], elems[j]) != group_.mul(elems[j], elems[i]))
        return false;
  return true;
}

bool GroupContext::subgroup_is_nilpotent(const ElementSet& h) {
  const int size = h.count();
  const auto& lat = lattice();
  for (int p : prime_factors(size)) {
    int p_part = 1;
    int rest = size;
    while (rest % p == 0) {
      p_part *= p;
      rest /= p;
    }
    int count = 0;
    for (const auto& k : lat)
      if (k.size() == p_part && h.contains_all(k.members)) ++count;
    if (count != 1) return false;  // Sylow p-subgroup must be unique
  }
  return true;
}

bool GroupContext::subgroup_is_soluble(const ElementSet& h) const {
  ElementSet current = h;
  while (true) {
    if (current.count() == 1) return true;
    // commutator subgroup of current
    ElementSet comms(group_.order());
    std::vector<int> elems = current.indices();
    for (int x : elems)
      for (int y : elems)
        comms.set(group_.mul(group_.mul(group_.inv(x), group_.inv(y)),
                             group_.mul(x, y)));
    ElementSet derived = closure_set(group_, comms.indices());
    if (derived == current) return false;  // series stalls above the identity
    current = derived;
  }
}

StructureFlags GroupContext::classify() {
  if (flags_built_) return flags_;
  StructureFlags f;
  const int n = group_.order();
  f.prime_divisors = prime_factors(n);
  for (int x = 0; x < n && !f.is_cyclic; ++x)
    if (group_.element_order(x) == n) f.is_cyclic = true;
  f.is_abelian = true;
  for (int a = 0; a < n && f.is_abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (group_.mul(a, b) != group_.mul(b, a)) {
        f.is_abelian = false;
        break;
      }
  f.is_eppo = true;
  for (int x = 0; x < n; ++x)
    if (!is_prime_power(group_.element_order(x))) {
      f.is_eppo = false;
      break;
    }
  ElementSet whole = ElementSet::full(n);
  f.is_soluble = subgroup_is_soluble(whole);
  f.is_nilpotent = f.is_abelian ? true : subgroup_is_nilpotent(whole);
  flags_ = f;
  flags_built_ = true;
  return flags_;
}

StructureFlags classify(const FiniteGroup& g, const Caps& caps) {
  GroupContext ctx(g, caps);
  return ctx.classify();
}

}  // namespace groupcx
