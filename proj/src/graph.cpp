#include "groupcx/graph.hpp"

#include <algorithm>
#include <sstream>

namespace groupcx {

SimpleGraph::SimpleGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  rows_.assign(labels_.size(), ElementSet(int(labels_.size())));
}

void SimpleGraph::add_edge(int i, int j) {
  if (i == j) return;  // no loops
  rows_[i].set(j);
  rows_[j].set(i);
}

long long SimpleGraph::edge_count() const {
  long long twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < vertex_count(); ++i)
    rows_[i].for_each([&](int j) {
      if (j > i) out.emplace_back(i, j);
    });
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph out(labels_);
  for (int i = 0; i < vertex_count(); ++i)
    for (int j = i + 1; j < vertex_count(); ++j)
      if (!adjacent(i, j)) out.add_edge(i, j);
  return out;
}

SimpleGraph SimpleGraph::delete_vertex(int v) const {
  std::vector<std::string> labels;
  labels.reserve(labels_.size() - 1);
  std::vector<int> keep;
  for (int i = 0; i < vertex_count(); ++i) {
    if (i == v) continue;
    keep.push_back(i);
    labels.push_back(labels_[i]);
  }
  SimpleGraph out(std::move(labels));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b)
      if (adjacent(keep[a], keep[b])) out.add_edge(int(a), int(b));
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string SimpleGraph::to_dot() const {
  std::ostringstream os;
  os << "graph G {\n";
  for (int i = 0; i < vertex_count(); ++i)
    os << "  v" << i << " [label=\"" << dot_escape(labels_[i]) << "\"];\n";
  for (auto [i, j] : edges()) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

bool graph_equals(const SimpleGraph& a, const SimpleGraph& b) { return a == b; }

void require_labels_aligned(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.labels() != b.labels())
    throw ValidationError(ValidationError::Kind::LabelMismatch,
                          "LabelMismatch: graphs are on different vertex label "
                          "sequences");
}

SimpleGraph group_graph(GroupContext& ctx, GraphKind kind) {
  const FiniteGroup& g = ctx.group();
  const int n = g.order();
  SimpleGraph out(g.labels());
  switch (kind) {
    case GraphKind::Power:
      for (int x = 0; x < n; ++x) {
        const ElementSet& span = ctx.cyclic_span(x);
        span.for_each([&](int y) {
          if (y != x) out.add_edge(x, y);  // y is a power of x
        });
      }
      break;
    case GraphKind::EnhancedPower:
      // <x,y> is cyclic iff both lie in a common cyclic subgroup
      for (const ElementSet& c : ctx.cyclic_subgroups()) {
        std::vector<int> elems = c.indices();
        for (size_t i = 0; i < elems.size(); ++i)
          for (size_t j = i + 1; j < elems.size(); ++j)
            out.add_edge(elems[i], elems[j]);
      }
      break;
    case GraphKind::Commuting:
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (g.mul(x, y) == g.mul(y, x)) out.add_edge(x, y);
      break;
    case GraphKind::Generating:
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          ElementSet seed(n);
          seed.set(x);
          seed.set(y);
          if (ctx.closure(seed).count() == n) out.add_edge(x, y);
        }
      break;
  }
  return out;
}

bool power_equals_enhanced(GroupContext& ctx) {
  return group_graph(ctx, GraphKind::Power) ==
         group_graph(ctx, GraphKind::EnhancedPower);
}

SimpleGraph skeleton_graph(const SimplicialComplex& c) {
  SimpleGraph out(c.vertex_labels());
  for (const auto& f : c.facets())
    for (size_t i = 0; i < f.vertices.size(); ++i)
      for (size_t j = i + 1; j < f.vertices.size(); ++j)
        out.add_edge(f.vertices[i], f.vertices[j]);
  return out;
}

}  // namespace groupcx
