#pragma once

#include "latwalk/graph.hpp"
#include "latwalk/ring.hpp"

#include <string>

namespace latwalk {

// The infinite (or quotient) step graphs the engine can materialize.
enum class LatticeKind {
  line,               // all integers, unit undirected steps
  line_weighted,      // all integers, arcs +1 weight a and -1 weight b
  half_line,          // nonnegative integers, unit undirected steps
  half_line_weighted, // nonnegative integers, arcs +1 weight a and -1 weight b
  square,             // integer pairs, unit undirected steps in both axes
  half_plane,         // integer pairs with second coordinate >= 0
  single_loop,        // one vertex with a weighted directed loop
  cycle,              // integers mod q, unit undirected steps
};

std::string lattice_kind_name(LatticeKind kind);
LatticeKind lattice_kind_from_name(const std::string& name);

// A finite ball of the lattice: every vertex at graph distance <= radius from
// the center, with all induced edges.  Vertices at distance exactly radius
// lose lattice edges to the truncation and come out marked clipped.
struct LatticeWindow {
  LatticeKind kind = LatticeKind::line;
  Label center;
  int radius = 0;
  Ring loop_weight = Ring(1); // single_loop only
  long long cycle_length = 0; // cycle only, >= 1
};

WeightedGraph materialize_lattice(const LatticeWindow& window);

} // namespace latwalk
