#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupcx/group.hpp"
#include "groupcx/simplicial_complex.hpp"

namespace groupcx {

/// A word w(x_1..x_k) as a sequence of (variable index 1..k, exponent +-1).
struct WordSpec {
  int arity = 2;
  std::vector<std::pair<int, int>> letters;
  std::string name;  // builtin tag when applicable

  static WordSpec commutator();         // [x,y] = x^-1 y^-1 x y
  static WordSpec triple_product();     // x y z
  static WordSpec double_commutator();  // [[x,y],z]
};

/// A complex built from a group, with the vertex -> element index map that
/// the generation and witness checks need.
struct GroupComplex {
  SimplicialComplex complex;
  std::vector<int> vertex_to_element;
};

struct GenerationReport {
  bool is_pure = true;
  bool every_facet_generates = true;
  bool max_facets_generate = true;
  int max_facet_size = 0;
  // up to 3 witness facets per false verdict, as element index lists
  std::vector<std::vector<int>> non_generating_facets;
  std::vector<std::vector<int>> non_generating_max_facets;
};

struct CoincidenceVerdict {
  bool coincide = true;
  // when coincide is false: a smallest (then lexicographically least)
  // independent set that is not strongly independent, as element indices
  std::vector<int> witness;
  bool eppo = false;
};

struct WhistonResult {
  int max_size = 0;
  bool equality_implies_generating = true;
};

/// a is independent: x lies outside <a \ {x}> for every x in a.
/// Any set containing the identity is dependent; the empty set is independent.
bool is_independent(GroupContext& ctx, const ElementSet& a);

/// a is strongly independent: every subgroup containing a needs at least |a|
/// generators. Scans the lattice in ascending d(H) order and stops at the
/// first d(H) >= |a|.
bool is_strongly_independent(GroupContext& ctx, const ElementSet& a);

/// Vertices are the non-identity elements; facets are the maximal independent
/// sets found by hereditary backtracking.
GroupComplex independence_complex(GroupContext& ctx);

/// Same vertex convention, maximal strongly independent sets.
GroupComplex strong_independence_complex(GroupContext& ctx);

enum class GroupClass { Cyclic, Abelian, Nilpotent, Soluble };

/// Simplices are the subsets generating a subgroup in the class; facets are
/// the element sets of the inclusion-maximal class subgroups, taken from the
/// lattice. The identity is a vertex.
GroupComplex class_complex(GroupContext& ctx, GroupClass cls);

/// Facets are the element sets of the maximal proper subgroups; vertices are
/// the elements lying in some proper subgroup (identity included).
GroupComplex non_generating_complex(GroupContext& ctx);

enum class IndependenceFilter { Commuting, NonGenerating };

/// Independence conjoined with pairwise commutation or with not generating G.
GroupComplex filtered_independence_complex(GroupContext& ctx,
                                           IndependenceFilter filter);

/// Word complex: a k-set is a simplex iff some ordering of its (distinct)
/// members satisfies the word; larger sets need all k-subsets to be
/// simplices; smaller sets need a distinct completion to a k-simplex.
/// Arity is capped at 3.
GroupComplex word_complex(GroupContext& ctx, const WordSpec& word);

GenerationReport generation_report(GroupContext& ctx, const GroupComplex& gc);

CoincidenceVerdict coincidence_check(GroupContext& ctx);

/// Maximal independent sets of S_n: maximum cardinality, and whether every
/// maximum-cardinality independent set generates.
WhistonResult whiston_check(int n, const Caps& caps = {});

}  // namespace groupcx
