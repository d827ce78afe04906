#include "latwalk/graph.hpp"

#include "latwalk/error.hpp"

#include <deque>
#include <sstream>

namespace latwalk {

std::string label_str(const Label& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

int WeightedGraph::add_vertex(Label label) {
  auto [it, fresh] = index_.emplace(label, vertex_count());
  if (!fresh) fail(errc::invalid_graph, "duplicate vertex label " + label_str(label));
  labels_.push_back(std::move(label));
  clipped_.push_back(false);
  return it->second;
}

void WeightedGraph::add_edge(int tail, int head, bool directed, Ring weight) {
  if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count())
    fail(errc::invalid_graph, "edge endpoint out of range");
  if (tail == head && !directed)
    fail(errc::invalid_graph, "loops must be directed (vertex " + label_str(label(tail)) + ")");
  edges_.push_back(Edge{tail, head, directed, std::move(weight)});
}

std::optional<int> WeightedGraph::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int WeightedGraph::index_of(const Label& label) const {
  auto v = find(label);
  if (!v) fail(errc::vertex_not_found, "no vertex labeled " + label_str(label));
  return *v;
}

bool WeightedGraph::any_clipped() const {
  for (bool c : clipped_)
    if (c) return true;
  return false;
}

void WeightedGraph::declare_bipartition(std::vector<int> parts) {
  if (static_cast<int>(parts.size()) != vertex_count())
    fail(errc::invalid_graph, "bipartition size does not match vertex count");
  for (int p : parts)
    if (p != 0 && p != 1) fail(errc::invalid_graph, "bipartition entries must be 0 or 1");
  for (const Edge& e : edges_)
    if (parts[static_cast<size_t>(e.tail)] == parts[static_cast<size_t>(e.head)])
      fail(errc::invalid_graph, "bipartition keeps edge " + label_str(label(e.tail)) + " -> " +
                                    label_str(label(e.head)) + " inside one class");
  bipartition_ = std::move(parts);
}

std::vector<std::vector<std::pair<int, Ring>>> WeightedGraph::arc_adjacency() const {
  std::vector<std::vector<std::pair<int, Ring>>> adj(static_cast<size_t>(vertex_count()));
  for (const Edge& e : edges_) {
    adj[static_cast<size_t>(e.tail)].emplace_back(e.head, e.weight);
    if (!e.directed) adj[static_cast<size_t>(e.head)].emplace_back(e.tail, e.weight);
  }
  return adj;
}

RingMatrix weight_matrix(const WeightedGraph& g) {
  RingMatrix m(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    m.at(e.tail, e.head) += e.weight;
    if (!e.directed) m.at(e.head, e.tail) += e.weight;
  }
  return m;
}

std::optional<std::vector<int>> compute_bipartition(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> nbrs(static_cast<size_t>(n));
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head) return std::nullopt; // a loop joins a vertex to itself
    nbrs[static_cast<size_t>(e.tail)].push_back(e.head);
    nbrs[static_cast<size_t>(e.head)].push_back(e.tail);
  }
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<size_t>(start)] != -1) continue;
    color[static_cast<size_t>(start)] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : nbrs[static_cast<size_t>(v)]) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          queue.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

WeightedGraph forget_direction(const WeightedGraph& g) {
  WeightedGraph out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.add_vertex(g.label(v));
    if (g.clipped(v)) out.mark_clipped(v);
  }
  for (const Edge& e : g.edges()) out.add_edge(e.tail, e.head, e.tail == e.head, e.weight);
  return out;
}

WeightedGraph arc_expand(const WeightedGraph& g) {
  WeightedGraph out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.add_vertex(g.label(v));
    if (g.clipped(v)) out.mark_clipped(v);
  }
  for (const Edge& e : g.edges()) {
    out.add_edge(e.tail, e.head, true, e.weight);
    if (!e.directed) out.add_edge(e.head, e.tail, true, e.weight);
  }
  return out;
}

bool is_connected(const WeightedGraph& g) {
  if (g.vertex_count() <= 1) return true;
  auto dist = undirected_distances(g, 0);
  for (int d : dist)
    if (d < 0) return false;
  return true;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& keep) {
  WeightedGraph out;
  std::vector<int> remap(static_cast<size_t>(g.vertex_count()), -1);
  for (int v : keep) {
    int nv = out.add_vertex(g.label(v));
    if (g.clipped(v)) out.mark_clipped(nv);
    remap[static_cast<size_t>(v)] = nv;
  }
  for (const Edge& e : g.edges()) {
    int t = remap[static_cast<size_t>(e.tail)];
    int h = remap[static_cast<size_t>(e.head)];
    if (t >= 0 && h >= 0) out.add_edge(t, h, e.directed, e.weight);
  }
  return out;
}

std::vector<int> undirected_distances(const WeightedGraph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) fail(errc::invalid_graph, "BFS source out of range");
  std::vector<std::vector<int>> nbrs(static_cast<size_t>(n));
  for (const Edge& e : g.edges()) {
    nbrs[static_cast<size_t>(e.tail)].push_back(e.head);
    nbrs[static_cast<size_t>(e.head)].push_back(e.tail);
  }
  std::vector<int> dist(static_cast<size_t>(n), -1);
  dist[static_cast<size_t>(source)] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : nbrs[static_cast<size_t>(v)]) {
      if (dist[static_cast<size_t>(w)] == -1) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

} // namespace latwalk
