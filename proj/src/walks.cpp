#include "latwalk/walks.hpp"

#include "latwalk/error.hpp"

#include <algorithm>
#include <string>

namespace latwalk {

EgfMatrix::EgfMatrix(int rows, int cols, int order) : rows_(rows), cols_(cols), order_(order) {
  if (rows < 0 || cols < 0) fail(errc::shape_mismatch, "negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), EgfSeq(order));
}

size_t EgfMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    fail(errc::shape_mismatch, "matrix index out of range");
  return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

RingMatrix EgfMatrix::coefficients(int n) const {
  RingMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j)[n];
  return m;
}

namespace {

void check_vertex(const WeightedGraph& g, int v, const char* role) {
  if (v < 0 || v >= g.vertex_count())
    fail(errc::vertex_not_found, std::string(role) + " index " + std::to_string(v) +
                                     " out of range (graph has " +
                                     std::to_string(g.vertex_count()) + " vertices)");
}

// A window answers orders up to the source's distance from the clipped rim:
// a shorter walk can never step out of the materialized ball.
void check_window_exact(const WeightedGraph& g, int source, int order) {
  if (order < 0) fail(errc::invalid_argument, "negative walk order");
  if (!g.any_clipped()) return;
  auto dist = undirected_distances(g, source);
  int margin = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.clipped(v) || dist[static_cast<size_t>(v)] < 0) continue;
    if (margin < 0 || dist[static_cast<size_t>(v)] < margin) margin = dist[static_cast<size_t>(v)];
  }
  if (margin >= 0 && margin < order)
    fail(errc::insufficient_window,
         "window too small: order " + std::to_string(order) + " walks from " +
             label_str(g.label(source)) + " can reach the truncated rim (margin " +
             std::to_string(margin) + "); enlarge the radius");
}

// One step of walk propagation along the arc adjacency.
std::vector<Ring> propagate(const std::vector<std::vector<std::pair<int, Ring>>>& adj,
                            const std::vector<Ring>& cur) {
  std::vector<Ring> next(cur.size());
  for (size_t v = 0; v < cur.size(); ++v) {
    if (cur[v].is_zero()) continue;
    for (const auto& [w, wt] : adj[v]) next[static_cast<size_t>(w)] += cur[v] * wt;
  }
  return next;
}

} // namespace

EgfSeq count_walks(const WeightedGraph& g, int source, int target, int order) {
  check_vertex(g, source, "source");
  check_vertex(g, target, "target");
  check_window_exact(g, source, order);
  const auto adj = g.arc_adjacency();
  std::vector<Ring> cur(static_cast<size_t>(g.vertex_count()));
  cur[static_cast<size_t>(source)] = Ring(1);
  EgfSeq out(order);
  out[0] = source == target ? Ring(1) : Ring(0);
  for (int n = 1; n <= order; ++n) {
    cur = propagate(adj, cur);
    out[n] = cur[static_cast<size_t>(target)];
  }
  return out;
}

EgfSeq count_walks(const WeightedGraph& g, const Label& source, const Label& target, int order) {
  return count_walks(g, g.index_of(source), g.index_of(target), order);
}

namespace {

void check_oracle_limits(const WeightedGraph& g, int source, int order,
                         const OracleLimits& limits) {
  if (order > limits.max_order)
    fail(errc::oracle_bound, "oracle refuses order " + std::to_string(order) + " (cap " +
                                 std::to_string(limits.max_order) + ")");
  auto dist = undirected_distances(g, source);
  int ball = 0;
  for (int d : dist)
    if (d >= 0 && d <= order) ++ball;
  if (ball > limits.max_ball)
    fail(errc::oracle_bound, "oracle refuses reachable ball of " + std::to_string(ball) +
                                 " vertices (cap " + std::to_string(limits.max_ball) + ")");
}

void dfs_walks(const std::vector<std::vector<std::pair<int, Ring>>>& adj, int v, int depth,
               int order, const Ring& weight, int target, EgfSeq& acc) {
  if (v == target) acc[depth] += weight;
  if (depth == order) return;
  for (const auto& [w, wt] : adj[static_cast<size_t>(v)])
    dfs_walks(adj, w, depth + 1, order, weight * wt, target, acc);
}

} // namespace

EgfSeq count_walks_oracle(const WeightedGraph& g, int source, int target, int order,
                          const OracleLimits& limits) {
  check_vertex(g, source, "source");
  check_vertex(g, target, "target");
  check_window_exact(g, source, order);
  check_oracle_limits(g, source, order, limits);
  const auto adj = g.arc_adjacency();
  EgfSeq acc(order);
  dfs_walks(adj, source, 0, order, Ring(1), target, acc);
  return acc;
}

namespace {

void check_waypoints(const WeightedGraph& g, const std::vector<int>& waypoints) {
  if (waypoints.size() < 3)
    fail(errc::invalid_argument, "composite walks need at least three waypoints (source, one "
                                 "intermediate, target)");
  for (int v : waypoints) check_vertex(g, v, "waypoint");
}

// Progress = how many of waypoints[1..k-1] have been matched, greedily.
int advance_progress(const std::vector<int>& waypoints, int progress, int vertex) {
  const int goal = static_cast<int>(waypoints.size()) - 1;
  while (progress < goal - 1 && waypoints[static_cast<size_t>(progress) + 1] == vertex) ++progress;
  return progress;
}

} // namespace

EgfSeq count_composite_walks(const WeightedGraph& g, const std::vector<int>& waypoints,
                             int order) {
  check_waypoints(g, waypoints);
  check_window_exact(g, waypoints.front(), order);
  const int V = g.vertex_count();
  const int goal = static_cast<int>(waypoints.size()) - 1; // progress value meaning "all matched"
  const auto adj = g.arc_adjacency();
  // state[progress * V + vertex]
  std::vector<Ring> cur(static_cast<size_t>(goal) * static_cast<size_t>(V));
  int p0 = advance_progress(waypoints, 0, waypoints.front());
  cur[static_cast<size_t>(p0) * static_cast<size_t>(V) + static_cast<size_t>(waypoints.front())] =
      Ring(1);
  EgfSeq out(order);
  auto read_answer = [&](const std::vector<Ring>& state) {
    return state[static_cast<size_t>(goal - 1) * static_cast<size_t>(V) +
                 static_cast<size_t>(waypoints.back())];
  };
  out[0] = read_answer(cur);
  for (int n = 1; n <= order; ++n) {
    std::vector<Ring> next(cur.size());
    for (int p = 0; p < goal; ++p) {
      for (int v = 0; v < V; ++v) {
        const Ring& amount = cur[static_cast<size_t>(p) * static_cast<size_t>(V) +
                                 static_cast<size_t>(v)];
        if (amount.is_zero()) continue;
        for (const auto& [w, wt] : adj[static_cast<size_t>(v)]) {
          int np = advance_progress(waypoints, p, w);
          next[static_cast<size_t>(np) * static_cast<size_t>(V) + static_cast<size_t>(w)] +=
              amount * wt;
        }
      }
    }
    cur = std::move(next);
    out[n] = read_answer(cur);
  }
  return out;
}

EgfSeq count_composite_walks(const WeightedGraph& g, const std::vector<Label>& waypoints,
                             int order) {
  std::vector<int> idx;
  idx.reserve(waypoints.size());
  for (const Label& l : waypoints) idx.push_back(g.index_of(l));
  return count_composite_walks(g, idx, order);
}

namespace {

void dfs_composite(const std::vector<std::vector<std::pair<int, Ring>>>& adj,
                   const std::vector<int>& waypoints, int v, int progress, int depth, int order,
                   const Ring& weight, EgfSeq& acc) {
  const int goal = static_cast<int>(waypoints.size()) - 1;
  if (progress == goal - 1 && v == waypoints.back()) acc[depth] += weight;
  if (depth == order) return;
  for (const auto& [w, wt] : adj[static_cast<size_t>(v)])
    dfs_composite(adj, waypoints, w, advance_progress(waypoints, progress, w), depth + 1, order,
                  weight * wt, acc);
}

} // namespace

EgfSeq count_composite_walks_oracle(const WeightedGraph& g, const std::vector<int>& waypoints,
                                    int order, const OracleLimits& limits) {
  check_waypoints(g, waypoints);
  check_window_exact(g, waypoints.front(), order);
  check_oracle_limits(g, waypoints.front(), order, limits);
  const auto adj = g.arc_adjacency();
  EgfSeq acc(order);
  dfs_composite(adj, waypoints, waypoints.front(),
                advance_progress(waypoints, 0, waypoints.front()), 0, order, Ring(1), acc);
  return acc;
}

EgfMatrix egf_block(const WeightedGraph& g, const std::vector<int>& sources,
                    const std::vector<int>& targets, int order) {
  for (int v : sources) check_vertex(g, v, "source");
  for (int v : targets) check_vertex(g, v, "target");
  const auto adj = g.arc_adjacency();
  EgfMatrix out(static_cast<int>(sources.size()), static_cast<int>(targets.size()), order);
  for (size_t si = 0; si < sources.size(); ++si) {
    check_window_exact(g, sources[si], order);
    std::vector<Ring> cur(static_cast<size_t>(g.vertex_count()));
    cur[static_cast<size_t>(sources[si])] = Ring(1);
    for (int n = 0; n <= order; ++n) {
      if (n > 0) cur = propagate(adj, cur);
      for (size_t ti = 0; ti < targets.size(); ++ti)
        out.at(static_cast<int>(si), static_cast<int>(ti))[n] =
            cur[static_cast<size_t>(targets[ti])];
    }
  }
  return out;
}

EgfMatrix egf_matrix(const WeightedGraph& g, int order) {
  std::vector<int> all(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
  return egf_block(g, all, all, order);
}

} // namespace latwalk
