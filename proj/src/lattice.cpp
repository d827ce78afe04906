#include "latwalk/lattice.hpp"

#include "latwalk/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace latwalk {

std::string lattice_kind_name(LatticeKind kind) {
  switch (kind) {
  case LatticeKind::line: return "R";
  case LatticeKind::line_weighted: return "Rab";
  case LatticeKind::half_line: return "P";
  case LatticeKind::half_line_weighted: return "Pab";
  case LatticeKind::square: return "R2";
  case LatticeKind::half_plane: return "RxP";
  case LatticeKind::single_loop: return "K1";
  case LatticeKind::cycle: return "Cq";
  }
  fail(errc::invalid_argument, "unknown lattice kind");
}

LatticeKind lattice_kind_from_name(const std::string& name) {
  if (name == "R") return LatticeKind::line;
  if (name == "Rab") return LatticeKind::line_weighted;
  if (name == "P") return LatticeKind::half_line;
  if (name == "Pab") return LatticeKind::half_line_weighted;
  if (name == "R2") return LatticeKind::square;
  if (name == "RxP") return LatticeKind::half_plane;
  if (name == "K1") return LatticeKind::single_loop;
  if (name == "Cq") return LatticeKind::cycle;
  fail(errc::invalid_argument, "unknown lattice kind '" + name + "'");
}

namespace {

void require_center(const LatticeWindow& w, size_t dim) {
  if (w.center.size() != dim)
    fail(errc::invalid_argument, "lattice " + lattice_kind_name(w.kind) + " needs a " +
                                     std::to_string(dim) + "-coordinate center, got " +
                                     label_str(w.center));
}

// One-dimensional kinds: vertices lo..hi, optionally cut at zero.
WeightedGraph line_window(const LatticeWindow& w, bool half, bool weighted) {
  require_center(w, 1);
  const long long c = w.center[0];
  if (half && c < 0)
    fail(errc::invalid_argument, "half-line center must be nonnegative, got " + label_str(w.center));
  const long long lo = half ? std::max<long long>(0, c - w.radius) : c - w.radius;
  const long long hi = c + w.radius;
  WeightedGraph g;
  for (long long x = lo; x <= hi; ++x) {
    int v = g.add_vertex({x});
    if (std::llabs(x - c) == w.radius) g.mark_clipped(v);
  }
  for (long long x = lo; x < hi; ++x) {
    int u = g.index_of({x});
    int v = g.index_of({x + 1});
    if (weighted) {
      g.add_edge(u, v, true, Ring::var_a());
      g.add_edge(v, u, true, Ring::var_b());
    } else {
      g.add_edge(u, v, false, Ring(1));
    }
  }
  return g;
}

// Two-dimensional kinds: the step metric is the coordinate-sum distance.
WeightedGraph plane_window(const LatticeWindow& w, bool half) {
  require_center(w, 2);
  const long long cx = w.center[0];
  const long long cy = w.center[1];
  if (half && cy < 0)
    fail(errc::invalid_argument, "half-plane center must have second coordinate >= 0");
  WeightedGraph g;
  for (long long x = cx - w.radius; x <= cx + w.radius; ++x) {
    long long rem = w.radius - std::llabs(x - cx);
    for (long long y = cy - rem; y <= cy + rem; ++y) {
      if (half && y < 0) continue;
      int v = g.add_vertex({x, y});
      if (std::llabs(x - cx) + std::llabs(y - cy) == w.radius) g.mark_clipped(v);
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Label& p = g.label(v);
    for (const Label& q : {Label{p[0] + 1, p[1]}, Label{p[0], p[1] + 1}}) {
      if (auto u = g.find(q)) g.add_edge(v, *u, false, Ring(1));
    }
  }
  return g;
}

WeightedGraph cycle_window(const LatticeWindow& w) {
  require_center(w, 1);
  const long long q = w.cycle_length;
  if (q < 1) fail(errc::invalid_argument, "cycle length must be >= 1");
  const long long c = ((w.center[0] % q) + q) % q;
  auto dist = [&](long long x) { return std::min((x - c + q) % q, (c - x + q) % q); };
  WeightedGraph g;
  std::vector<long long> kept;
  for (long long x = 0; x < q; ++x) {
    if (dist(x) > w.radius) continue;
    int v = g.add_vertex({x});
    kept.push_back(x);
    // A proper arc of the cycle is truncated exactly like a line window.
    if (2 * w.radius + 1 < q && dist(x) == w.radius) g.mark_clipped(v);
  }
  if (q == 1) {
    g.add_edge(0, 0, true, Ring(1)); // one-step quotient: the unit loop
    return g;
  }
  for (long long x : kept) {
    long long y = (x + 1) % q;
    if (auto u = g.find({y})) g.add_edge(g.index_of({x}), *u, false, Ring(1));
  }
  return g;
}

WeightedGraph loop_window(const LatticeWindow& w) {
  require_center(w, 1);
  WeightedGraph g;
  int v = g.add_vertex(w.center);
  g.add_edge(v, v, true, w.loop_weight);
  return g;
}

} // namespace

WeightedGraph materialize_lattice(const LatticeWindow& w) {
  if (w.radius < 0) fail(errc::invalid_argument, "window radius must be >= 0");
  switch (w.kind) {
  case LatticeKind::line: return line_window(w, false, false);
  case LatticeKind::line_weighted: return line_window(w, false, true);
  case LatticeKind::half_line: return line_window(w, true, false);
  case LatticeKind::half_line_weighted: return line_window(w, true, true);
  case LatticeKind::square: return plane_window(w, false);
  case LatticeKind::half_plane: return plane_window(w, true);
  case LatticeKind::single_loop: return loop_window(w);
  case LatticeKind::cycle: return cycle_window(w);
  }
  fail(errc::invalid_argument, "unknown lattice kind");
}

} // namespace latwalk
