#pragma once

#include "latwalk/matrix.hpp"
#include "latwalk/ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace latwalk {

// Vertex labels are integer tuples; the vertex list order is the canonical
// linear order used by products and powers.
using Label = std::vector<long long>;

std::string label_str(const Label& v);

struct Edge {
  int tail;
  int head;
  bool directed;
  Ring weight;
};

// Finite weighted multigraph.  Undirected edges are stored once and read in
// both directions; loops are always directed.  A vertex may carry a "clipped"
// mark meaning the vertex lost incident edges when an infinite lattice was
// truncated to this window; walk queries use the marks to refuse orders the
// window cannot answer exactly.
class WeightedGraph {
public:
  WeightedGraph() = default;

  int add_vertex(Label label);
  void add_edge(int tail, int head, bool directed, Ring weight);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const Label& label(int v) const { return labels_.at(static_cast<size_t>(v)); }
  const std::vector<Label>& labels() const { return labels_; }
  std::optional<int> find(const Label& label) const;
  int index_of(const Label& label) const; // throws vertex_not_found

  const std::vector<Edge>& edges() const { return edges_; }

  void mark_clipped(int v) { clipped_.at(static_cast<size_t>(v)) = true; }
  bool clipped(int v) const { return clipped_.at(static_cast<size_t>(v)); }
  bool any_clipped() const;

  // Declared two-coloring, kept through serialization; consumers recompute.
  const std::optional<std::vector<int>>& declared_bipartition() const { return bipartition_; }
  void declare_bipartition(std::vector<int> parts);

  // Outgoing arcs per vertex with undirected edges expanded to both readings.
  std::vector<std::vector<std::pair<int, Ring>>> arc_adjacency() const;

private:
  std::vector<Label> labels_;
  std::map<Label, int> index_;
  std::vector<Edge> edges_;
  std::vector<bool> clipped_;
  std::optional<std::vector<int>> bipartition_;
};

RingMatrix weight_matrix(const WeightedGraph& g);

// Two-coloring of the underlying undirected graph, or nullopt if none exists.
// The smallest-index vertex of each component gets color 0.
std::optional<std::vector<int>> compute_bipartition(const WeightedGraph& g);

// |G|: every edge undirected, loops stay directed.  Weights kept.
WeightedGraph forget_direction(const WeightedGraph& g);

// Arrow expansion: every undirected edge becomes two directed arcs.
WeightedGraph arc_expand(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

// Subgraph on the kept vertices (given by index, relative order preserved)
// with every edge whose endpoints survive.  Clipped marks carry over.
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& keep);

// Undirected BFS distances from a source; unreachable = -1.
std::vector<int> undirected_distances(const WeightedGraph& g, int source);

} // namespace latwalk
