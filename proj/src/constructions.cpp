#include "latwalk/constructions.hpp"

#include "latwalk/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace latwalk {

namespace {

Label concat(const Label& x, const Label& y) {
  Label out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

// Pair vertices in row-major order; clipped if either side is.
WeightedGraph pair_vertices(const WeightedGraph& g1, const WeightedGraph& g2) {
  WeightedGraph out;
  for (int v1 = 0; v1 < g1.vertex_count(); ++v1)
    for (int v2 = 0; v2 < g2.vertex_count(); ++v2) {
      int v = out.add_vertex(concat(g1.label(v1), g2.label(v2)));
      if (g1.clipped(v1) || g2.clipped(v2)) out.mark_clipped(v);
    }
  return out;
}

int pair_index(const WeightedGraph& g2, int v1, int v2) { return v1 * g2.vertex_count() + v2; }

std::vector<int> require_bipartition(const WeightedGraph& g, const char* which) {
  auto parts = compute_bipartition(g);
  if (!parts)
    fail(errc::not_bipartite, std::string(which) + " factor has no two-coloring");
  return *parts;
}

} // namespace

WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2) {
  WeightedGraph out = pair_vertices(g1, g2);
  for (int v1 = 0; v1 < g1.vertex_count(); ++v1)
    for (const Edge& e : g2.edges())
      out.add_edge(pair_index(g2, v1, e.tail), pair_index(g2, v1, e.head), e.directed, e.weight);
  for (const Edge& e : g1.edges())
    for (int v2 = 0; v2 < g2.vertex_count(); ++v2)
      out.add_edge(pair_index(g2, e.tail, v2), pair_index(g2, e.head, v2), e.directed, e.weight);
  return out;
}

WeightedGraph biproduct(const WeightedGraph& g1, const WeightedGraph& g2) {
  WeightedGraph out = pair_vertices(g1, g2);
  for (const Edge& e1 : g1.edges())
    for (const Edge& e2 : g2.edges()) {
      const Ring w = e1.weight * e2.weight;
      if (e1.directed && e2.directed) {
        out.add_edge(pair_index(g2, e1.tail, e2.tail), pair_index(g2, e1.head, e2.head), true, w);
      } else if (e1.directed != e2.directed) {
        // The undirected member also acts tail <- head; the directed one
        // only ever advances tail -> head.
        out.add_edge(pair_index(g2, e1.tail, e2.tail), pair_index(g2, e1.head, e2.head), true, w);
        if (e1.directed)
          out.add_edge(pair_index(g2, e1.tail, e2.head), pair_index(g2, e1.head, e2.tail), true, w);
        else
          out.add_edge(pair_index(g2, e1.head, e2.tail), pair_index(g2, e1.tail, e2.head), true, w);
      } else {
        out.add_edge(pair_index(g2, e1.tail, e2.tail), pair_index(g2, e1.head, e2.head), false, w);
        out.add_edge(pair_index(g2, e1.tail, e2.head), pair_index(g2, e1.head, e2.tail), false, w);
      }
    }
  return out;
}

WeightedGraph parity_product(const WeightedGraph& g1, const WeightedGraph& g2, int parity) {
  if (parity != 0 && parity != 1) fail(errc::invalid_argument, "parity must be 0 or 1");
  const auto p1 = require_bipartition(g1, "left");
  const auto p2 = require_bipartition(g2, "right");
  WeightedGraph full = biproduct(g1, g2);
  std::vector<int> keep;
  for (int v1 = 0; v1 < g1.vertex_count(); ++v1)
    for (int v2 = 0; v2 < g2.vertex_count(); ++v2)
      if ((p1[static_cast<size_t>(v1)] + p2[static_cast<size_t>(v2)]) % 2 == parity)
        keep.push_back(pair_index(g2, v1, v2));
  return induced_subgraph(full, keep);
}

namespace {

// Tuples over 0..count-1 in lexicographic order: nondecreasing or strictly
// increasing.  n = 0 yields the single empty tuple.
std::vector<std::vector<int>> vertex_tuples(int count, int n, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v < count; ++v) {
      cur.push_back(v);
      rec(strict ? v + 1 : v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct PowerSkeleton {
  WeightedGraph graph;
  std::vector<std::vector<int>> tuples;
  std::map<std::vector<int>, int> tuple_index;
};

PowerSkeleton power_vertices(const WeightedGraph& g, int n, bool strict) {
  if (n < 0) fail(errc::invalid_argument, "power exponent must be >= 0");
  PowerSkeleton out;
  out.tuples = vertex_tuples(g.vertex_count(), n, strict);
  for (const auto& tuple : out.tuples) {
    Label label;
    bool clip = false;
    for (int v : tuple) {
      label = concat(label, g.label(v));
      clip = clip || g.clipped(v);
    }
    int v = out.graph.add_vertex(label);
    if (clip) out.graph.mark_clipped(v);
    out.tuple_index.emplace(tuple, v);
  }
  return out;
}

} // namespace

WeightedGraph symmetric_power(const WeightedGraph& g, int n) {
  PowerSkeleton sk = power_vertices(g, n, false);
  const auto adj = g.arc_adjacency();
  for (size_t a = 0; a < sk.tuples.size(); ++a) {
    const auto& A = sk.tuples[a];
    for (size_t i = 0; i < A.size(); ++i) {
      for (const auto& [head, w] : adj[static_cast<size_t>(A[i])]) {
        std::vector<int> B = A;
        B[i] = head;
        std::sort(B.begin(), B.end());
        sk.graph.add_edge(static_cast<int>(a), sk.tuple_index.at(B), true, w);
      }
    }
  }
  return sk.graph;
}

WeightedGraph exterior_power(const WeightedGraph& g, int n) {
  PowerSkeleton sk = power_vertices(g, n, true);
  const auto adj = g.arc_adjacency();
  for (size_t a = 0; a < sk.tuples.size(); ++a) {
    const auto& A = sk.tuples[a];
    for (size_t i = 0; i < A.size(); ++i) {
      for (const auto& [head, w] : adj[static_cast<size_t>(A[i])]) {
        if (head != A[i] && std::binary_search(A.begin(), A.end(), head)) continue;
        std::vector<int> B = A;
        B[i] = head;
        std::sort(B.begin(), B.end());
        const size_t j = static_cast<size_t>(
            std::lower_bound(B.begin(), B.end(), head) - B.begin());
        const int swaps = static_cast<int>(j > i ? j - i : i - j);
        const Ring signed_w = (swaps % 2 == 0) ? w : -w;
        sk.graph.add_edge(static_cast<int>(a), sk.tuple_index.at(B), true, signed_w);
      }
    }
  }
  return sk.graph;
}

namespace {

constexpr int kBipowerMaxExponent = 3;
constexpr int kBipowerMaxArcs = 100;

void check_bipower_bounds(const WeightedGraph& arcs, int n) {
  if (n > kBipowerMaxExponent)
    fail(errc::size_bound, "bipower exponent " + std::to_string(n) + " exceeds the enumeration cap " +
                               std::to_string(kBipowerMaxExponent));
  if (static_cast<int>(arcs.edges().size()) > kBipowerMaxArcs)
    fail(errc::size_bound, "bipower on " + std::to_string(arcs.edges().size()) +
                               " arcs exceeds the enumeration cap " +
                               std::to_string(kBipowerMaxArcs));
}

// All (head, weight) tuples with one arc leaving each position of A.
void for_each_arc_tuple(const std::vector<std::vector<std::pair<int, Ring>>>& adj,
                        const std::vector<int>& A,
                        const std::function<void(const std::vector<int>&, const Ring&)>& visit) {
  std::vector<int> heads(A.size());
  std::function<void(size_t, Ring)> rec = [&](size_t pos, Ring w) {
    if (pos == A.size()) {
      visit(heads, w);
      return;
    }
    for (const auto& [head, wt] : adj[static_cast<size_t>(A[pos])]) {
      heads[pos] = head;
      rec(pos + 1, w * wt);
    }
  };
  rec(0, Ring(1));
}

} // namespace

WeightedGraph symmetric_bipower(const WeightedGraph& g, int n) {
  const WeightedGraph arcs = arc_expand(g);
  check_bipower_bounds(arcs, n);
  PowerSkeleton sk = power_vertices(arcs, n, false);
  const auto adj = arcs.arc_adjacency();
  for (size_t a = 0; a < sk.tuples.size(); ++a) {
    const auto& A = sk.tuples[a];
    if (A.empty()) continue; // empty tuple: no edges by convention
    for_each_arc_tuple(adj, A, [&](const std::vector<int>& heads, const Ring& w) {
      // One edge per arc tuple; this keeps the sorting map from the iterated
      // tensor product a left semicovering even when tuples repeat entries.
      std::vector<int> B = heads;
      std::sort(B.begin(), B.end());
      sk.graph.add_edge(static_cast<int>(a), sk.tuple_index.at(B), true, w);
    });
  }
  return sk.graph;
}

WeightedGraph exterior_bipower(const WeightedGraph& g, int n) {
  const WeightedGraph arcs = arc_expand(g);
  check_bipower_bounds(arcs, n);
  PowerSkeleton sk = power_vertices(arcs, n, true);
  const auto adj = arcs.arc_adjacency();
  for (size_t a = 0; a < sk.tuples.size(); ++a) {
    const auto& A = sk.tuples[a];
    if (A.empty()) continue;
    for_each_arc_tuple(adj, A, [&](const std::vector<int>& heads, const Ring& w) {
      std::vector<int> B = heads;
      std::sort(B.begin(), B.end());
      if (std::adjacent_find(B.begin(), B.end()) != B.end()) return; // head collision
      // Unique matching sigma: position i goes to the rank of heads[i] in B;
      // its sign is the inversion parity of the head sequence.
      int inversions = 0;
      for (size_t i = 0; i < heads.size(); ++i)
        for (size_t j = i + 1; j < heads.size(); ++j)
          if (heads[i] > heads[j]) ++inversions;
      sk.graph.add_edge(static_cast<int>(a), sk.tuple_index.at(B), true,
                        inversions % 2 == 0 ? w : -w);
    });
  }
  return sk.graph;
}

WeightedGraph power_parity_subgraph(const WeightedGraph& power, const WeightedGraph& base, int n,
                                    int parity) {
  if (parity != 0 && parity != 1) fail(errc::invalid_argument, "parity must be 0 or 1");
  if (n <= 0) fail(errc::invalid_argument, "parity subgraphs need exponent >= 1");
  const auto colors = require_bipartition(base, "base");
  const size_t arity = base.label(0).size();
  for (int v = 1; v < base.vertex_count(); ++v)
    if (base.label(v).size() != arity)
      fail(errc::invalid_graph, "base labels must share one arity to decode tuples");
  std::vector<int> keep;
  for (int v = 0; v < power.vertex_count(); ++v) {
    const Label& l = power.label(v);
    if (l.size() != arity * static_cast<size_t>(n))
      fail(errc::invalid_graph, "power vertex " + label_str(l) + " does not decode into " +
                                    std::to_string(n) + " base labels");
    int sum = 0;
    for (int part = 0; part < n; ++part) {
      Label chunk(l.begin() + static_cast<long>(arity) * part,
                  l.begin() + static_cast<long>(arity) * (part + 1));
      sum += colors[static_cast<size_t>(base.index_of(chunk))];
    }
    if (sum % 2 == parity) keep.push_back(v);
  }
  return induced_subgraph(power, keep);
}

} // namespace latwalk
