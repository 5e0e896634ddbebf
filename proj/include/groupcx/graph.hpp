#pragma once

#include <string>
#include <vector>

#include "groupcx/element_set.hpp"
#include "groupcx/group.hpp"
#include "groupcx/simplicial_complex.hpp"

namespace groupcx {

/// Undirected, loop-free graph on labeled vertices, adjacency kept as bit
/// rows. Equality is label-sensitive by design; isomorphism is out of scope.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> labels);

  int vertex_count() const { return int(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  void add_edge(int i, int j);
  bool adjacent(int i, int j) const { return rows_[i].test(j); }
  long long edge_count() const;
  /// Edges as sorted (i, j) pairs with i < j.
  std::vector<std::pair<int, int>> edges() const;

  SimpleGraph complement() const;
  SimpleGraph delete_vertex(int v) const;

  /// Deterministic DOT text: nodes then edges, both in index order.
  std::string to_dot() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> rows_;
};

/// Plain equality; differing label sequences compare unequal.
bool graph_equals(const SimpleGraph& a, const SimpleGraph& b);

/// Verification pipelines compare graphs that must share a vertex order;
/// a mismatch there is a bug, not a negative answer.
void require_labels_aligned(const SimpleGraph& a, const SimpleGraph& b);

enum class GraphKind { Power, EnhancedPower, Commuting, Generating };

/// The graph zoo on all elements of G (identity included):
///   power:     x in <y> or y in <x>
///   enhanced:  <x,y> cyclic
///   commuting: xy = yx
///   generating:<x,y> = G
SimpleGraph group_graph(GroupContext& ctx, GraphKind kind);

/// power graph == enhanced power graph; agrees with EPPO on every group.
bool power_equals_enhanced(GroupContext& ctx);

/// The 1-skeleton of a complex as a graph (vertices and labels carried over).
SimpleGraph skeleton_graph(const SimplicialComplex& c);

}  // namespace groupcx
