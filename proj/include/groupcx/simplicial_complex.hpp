#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "groupcx/bigint.hpp"
#include "groupcx/errors.hpp"

namespace groupcx {

/// A simplex is a strictly increasing sequence of vertex indices.
/// A simplex of cardinality k has dimension k-1.
struct Simplex {
  std::vector<int> vertices;

  int dimension() const { return int(vertices.size()) - 1; }
  int size() const { return int(vertices.size()); }

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.vertices == b.vertices;
  }
  friend bool operator<(const Simplex& a, const Simplex& b) {
    return a.vertices < b.vertices;
  }
};

struct ComplexStats {
  int dimension = -1;            // -1 for the empty complex
  bool is_pure = true;           // vacuously true when empty
  std::vector<BigInt> f_vector;  // simplex counts per dimension 0..dimension
};

struct HereditaryOptions {
  // When set, every accepted set has all its one-element-removals re-checked;
  // a violation raises PredicateNotHereditary.
  bool check_hereditary = false;
};

/// Facet-based simplicial complex. Facets are an antichain, each strictly
/// sorted, and the facet list is kept in lexicographic order. Everything else
/// (stats, skeleta, membership, simplex streams) derives from the facets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal candidate sets, deduplicated and canonically
  /// ordered. Candidate sets may arrive unsorted.
  static SimplicialComplex from_facets(std::vector<std::string> vertex_labels,
                                       std::vector<std::vector<int>> candidates);

  /// Facet enumeration for a hereditary predicate over subsets of
  /// 0..universe-1. The vertex set becomes the accepted singletons
  /// (re-indexed in order); facets are all inclusion-maximal accepted sets,
  /// found by canonical backtracking.
  /// kept_universe_indices, when given, receives the accepted singletons in
  /// ascending order (the universe index behind each complex vertex).
  static SimplicialComplex from_hereditary_predicate(
      const std::vector<std::string>& universe_labels,
      const std::function<bool(std::span<const int>)>& pred,
      HereditaryOptions opts = {},
      std::vector<int>* kept_universe_indices = nullptr);

  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  int vertex_count() const { return int(vertex_labels_.size()); }
  int dimension() const;

  ComplexStats stats() const;

  /// All simplices of dimension <= k, as a complex (k >= 0).
  SimplicialComplex k_skeleton(int k) const;

  /// s is a simplex iff it lies inside some facet.
  bool contains(const Simplex& s) const;

  /// Streams the downward closure without duplicates, ordered by
  /// (cardinality, lex). Return false from the callback to stop.
  void for_each_simplex(const std::function<bool(const Simplex&)>& cb) const;
  std::vector<Simplex> all_simplices() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_labels_ == b.vertex_labels_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<Simplex> facets_;
};

}  // namespace groupcx
