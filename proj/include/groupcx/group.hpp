#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "groupcx/element_set.hpp"
#include "groupcx/errors.hpp"

namespace groupcx {

/// A finite group as a validated Cayley table on element indices 0..order-1.
/// The identity is always index 0. Inverses and element orders are cached at
/// construction; values are immutable afterwards.
class FiniteGroup {
 public:
  int order() const { return n_; }
  int mul(int a, int b) const { return table_[size_t(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const { return orders_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// x^e for any integer exponent (negative uses the inverse).
  int power(int x, long long e) const;

  /// Element orders sorted ascending, with multiplicity.
  std::vector<int> order_spectrum() const;

  /// Sorted distinct prime divisors of the group order.
  std::vector<int> prime_divisors() const;

  // Validates the table (closure, identity at 0, inverses, associativity)
  // and fills the caches. Associativity is checked exhaustively up to order
  // 200 and on a deterministic sample above that.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> labels = {});

 private:
  FiniteGroup() = default;
  static FiniteGroup finalize(int n, std::vector<uint16_t> flat,
                              std::vector<std::string> labels);

  int n_ = 0;
  std::vector<uint16_t> table_;  // row-major: table_[a*n+b] = a*b
  std::vector<uint16_t> inv_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;

  friend struct GroupBuilder;
};

/// Recipe for a concrete group. Product sides are shared so specs stay
/// copyable (catalog entries hold them by value).
struct GroupSpec {
  enum class Family {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Abelian,
    Perm,
    Table,
    Product,
    WreathCyclic,
  };

  Family family = Family::Cyclic;
  int n = 1;                                // cyclic/dihedral/symmetric/alternating
  int m = 1;                                // wreath_cyclic base order
  std::vector<int> factors;                 // abelian invariant factors
  int degree = 0;                           // perm
  std::vector<std::vector<int>> generators; // perm: 1-based image sequences
  std::vector<std::vector<int>> table;      // explicit Cayley table
  std::shared_ptr<const GroupSpec> left, right;  // product

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int n);
  static GroupSpec symmetric(int n);
  static GroupSpec alternating(int n);
  static GroupSpec abelian(std::vector<int> factors);
  static GroupSpec perm(int degree, std::vector<std::vector<int>> gens);
  static GroupSpec from_table(std::vector<std::vector<int>> table);
  static GroupSpec product(GroupSpec l, GroupSpec r);
  static GroupSpec wreath_cyclic(int m, int n);
};

/// An element subset of a parent group, closed under the operation.
struct Subgroup {
  ElementSet members;

  int size() const { return members.count(); }
  int parent_order() const { return members.universe(); }
  bool contains(int x) const { return members.test(x); }
  std::vector<int> indices() const { return members.indices(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members == b.members;
  }
};

struct StructureFlags {
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_soluble = false;
  bool is_eppo = false;
  std::vector<int> prime_divisors;
};

FiniteGroup build_group(const GroupSpec& spec, const Caps& caps = {});

/// Componentwise product; element (a,b) gets index a*|h|+b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const Caps& caps = {});

/// Smallest subgroup containing seed; the empty seed yields {identity}.
Subgroup subgroup_closure(const FiniteGroup& g, const ElementSet& seed);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);

/// Every subgroup exactly once, sorted by (size, members lexicographic).
/// Seeds with the cyclic subgroups and joins to a fixed point.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Caps& caps = {});

/// Smallest k such that some k-subset of h generates h; 0 for the trivial
/// subgroup. Searches by increasing k; every added generator must strictly
/// enlarge the generated subgroup.
int min_generators(const FiniteGroup& g, const Subgroup& h);

std::vector<int> order_spectrum(const FiniteGroup& g);

/// The restriction of g to a subgroup, reindexed with identity first and
/// labels inherited from the parent.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

// ---- analysis context ------------------------------------------------------

/// Per-group analysis state: subgroup lattice, memoized minimal generating
/// numbers, memoized closures, cyclic subgroups. Built lazily, then treated
/// as read-only by the complex builders.
class GroupContext {
 public:
  explicit GroupContext(const FiniteGroup& g, Caps caps = {})
      : group_(g), caps_(caps) {}

  const FiniteGroup& group() const { return group_; }
  const Caps& caps() const { return caps_; }

  const std::vector<Subgroup>& lattice();
  /// d(H) for each lattice member, aligned with lattice().
  const std::vector<int>& lattice_min_generators();
  /// Lattice indices sorted by ascending d(H).
  const std::vector<int>& lattice_by_min_generators();

  /// ⟨x⟩ for every x, deduplicated, plus per-element cyclic subgroup sets.
  const std::vector<ElementSet>& cyclic_subgroups();
  const ElementSet& cyclic_span(int x);  // element set of ⟨x⟩

  /// Memoized ⟨seed⟩ (bounded cache; falls through to a fresh computation).
  ElementSet closure(const ElementSet& seed);

  int min_generators_of(const ElementSet& subgroup_members);

  StructureFlags classify();

  bool subgroup_is_cyclic(const ElementSet& h) const;
  bool subgroup_is_abelian(const ElementSet& h) const;
  bool subgroup_is_nilpotent(const ElementSet& h);  // needs the lattice
  bool subgroup_is_soluble(const ElementSet& h) const;

 private:
  const FiniteGroup& group_;
  Caps caps_;

  bool lattice_built_ = false;
  std::vector<Subgroup> lattice_;
  std::vector<int> lattice_d_;
  std::vector<int> lattice_by_d_;

  bool cyclics_built_ = false;
  std::vector<ElementSet> cyclic_subgroups_;
  std::vector<ElementSet> cyclic_span_;  // per element

  std::unordered_map<ElementSet, ElementSet, ElementSetHash> closure_memo_;
  std::unordered_map<ElementSet, int, ElementSetHash> mingen_memo_;

  bool flags_built_ = false;
  StructureFlags flags_;
};

StructureFlags classify(const FiniteGroup& g, const Caps& caps = {});

// small shared helpers
bool is_prime(long long n);
std::vector<int> prime_factors(long long n);   // distinct, sorted
bool is_prime_power(long long n);              // true for 1 as well

}  // namespace groupcx
