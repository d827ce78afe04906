#include "latwalk/error.hpp"
#include "latwalk/lattice.hpp"
#include "latwalk/walks.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace latwalk;

namespace {

WeightedGraph line_window(int radius) {
  return materialize_lattice({LatticeKind::line, {0}, radius, Ring(1), 0});
}

WeightedGraph half_line_window(int radius) {
  return materialize_lattice({LatticeKind::half_line, {0}, radius, Ring(1), 0});
}

} // namespace

TEST_CASE("line walk counts: central binomials") {
  EgfSeq counts = count_walks(line_window(9), Label{0}, Label{0}, 8);
  CHECK(counts == EgfSeq({Ring(1), Ring(0), Ring(2), Ring(0), Ring(6), Ring(0), Ring(20), Ring(0),
                          Ring(70)}));
  EgfSeq shifted = count_walks(line_window(9), Label{0}, Label{1}, 8);
  CHECK(shifted == EgfSeq({Ring(0), Ring(1), Ring(0), Ring(3), Ring(0), Ring(10), Ring(0), Ring(35),
                           Ring(0)}));
}

TEST_CASE("half line walk counts: Catalan numbers") {
  EgfSeq counts = count_walks(half_line_window(9), Label{0}, Label{0}, 8);
  CHECK(counts == EgfSeq({Ring(1), Ring(0), Ring(1), Ring(0), Ring(2), Ring(0), Ring(5), Ring(0),
                          Ring(14)}));
}

TEST_CASE("index and label overloads agree") {
  WeightedGraph g = line_window(5);
  CHECK(count_walks(g, g.index_of({0}), g.index_of({2}), 4) ==
        count_walks(g, Label{0}, Label{2}, 4));
}

TEST_CASE("window too small for the requested order") {
  WeightedGraph g = line_window(2);
  CHECK_THROWS_AS(count_walks(g, Label{0}, Label{0}, 3), error);
  try {
    count_walks(g, Label{0}, Label{0}, 3);
  } catch (const error& e) {
    CHECK(e.code() == errc::insufficient_window);
  }
  // Equality of margin and order is still exact.
  CHECK(count_walks(g, Label{0}, Label{0}, 2)[2] == Ring(2));
}

TEST_CASE("exactness is invariant under window growth") {
  for (int radius = 5; radius <= 9; radius += 2) {
    EgfSeq counts = count_walks(line_window(radius), Label{0}, Label{2}, 4);
    CHECK(counts == count_walks(line_window(11), Label{0}, Label{2}, 4));
  }
}

TEST_CASE("engine equals the enumeration oracle on random graphs") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedGraph g = testing::random_graph(rng, 5, trial % 2 == 0);
    int source = rng.uniform(0, g.vertex_count() - 1);
    int target = rng.uniform(0, g.vertex_count() - 1);
    CHECK(count_walks(g, source, target, 5) == count_walks_oracle(g, source, target, 5));
  }
}

TEST_CASE("oracle refuses inputs past its limits") {
  WeightedGraph g = line_window(12);
  int zero = g.index_of({0});
  CHECK_THROWS_AS(count_walks_oracle(g, zero, zero, 9), error);
  OracleLimits tight;
  tight.max_ball = 3;
  CHECK_THROWS_AS(count_walks_oracle(g, zero, zero, 4, tight), error);
  OracleLimits raised;
  raised.max_order = 10;
  CHECK(count_walks_oracle(g, zero, zero, 10, raised)[10] == Ring(252));
}

TEST_CASE("composite walks: waypoint in the middle") {
  WeightedGraph g = line_window(9);
  EgfSeq counts = count_composite_walks(g, {Label{0}, Label{1}, Label{0}}, 4);
  CHECK(counts == EgfSeq({Ring(0), Ring(0), Ring(1), Ring(0), Ring(4)}));
}

TEST_CASE("composite walks with identical waypoints reduce to plain counts") {
  WeightedGraph g = line_window(7);
  EgfSeq plain = count_walks(g, Label{0}, Label{0}, 6);
  EgfSeq via_self = count_composite_walks(g, {Label{0}, Label{0}, Label{0}}, 6);
  CHECK(via_self == plain);
}

TEST_CASE("composite walks through a dip below zero") {
  // Length-3 walks 0 -> 1 touching -1: only 0,-1,0,1.
  WeightedGraph g = line_window(9);
  EgfSeq through = count_composite_walks(g, {Label{0}, Label{-1}, Label{1}}, 3);
  CHECK(through[3] == Ring(1));
}

TEST_CASE("composite walks need three waypoints") {
  WeightedGraph g = line_window(5);
  CHECK_THROWS_AS(count_composite_walks(g, std::vector<Label>{{0}, {1}}, 3), error);
}

TEST_CASE("composite oracle equivalence") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    WeightedGraph g = testing::random_graph(rng, 4, trial % 2 == 0);
    std::vector<int> waypoints;
    for (int i = 0; i < 3; ++i) waypoints.push_back(rng.uniform(0, g.vertex_count() - 1));
    CHECK(count_composite_walks(g, waypoints, 5) ==
          count_composite_walks_oracle(g, waypoints, 5));
  }
}

TEST_CASE("egf_block enforces exactness per source row") {
  WeightedGraph g = line_window(3);
  // Source 0 has margin 3; asking for order 3 is fine even though the target
  // column includes vertices close to the rim.
  EgfMatrix block = egf_block(g, {g.index_of({0})}, {g.index_of({1})}, 3);
  CHECK(block.at(0, 0)[3] == Ring(3));
  // A clipped-adjacent source row refuses the same order.
  CHECK_THROWS_AS(egf_block(g, {g.index_of({2})}, {g.index_of({0})}, 3), error);
}

TEST_CASE("egf_matrix returns every pairwise sequence") {
  WeightedGraph g;
  g.add_vertex({0});
  g.add_vertex({1});
  g.add_edge(0, 1, true, Ring::var_a());
  EgfMatrix m = egf_matrix(g, 2);
  CHECK(m.rows() == 2);
  CHECK(m.at(0, 1)[1] == Ring::var_a());
  CHECK(m.at(1, 0)[1].is_zero());
  CHECK(m.at(0, 0)[0] == Ring(1));
  RingMatrix c1 = m.coefficients(1);
  CHECK(c1.at(0, 1) == Ring::var_a());
}

TEST_CASE("counts on a window equal counts on the infinite-graph oracle") {
  // The window is exact: growing it does not change in-range counts, and the
  // enumeration oracle on the same window agrees.
  WeightedGraph g = half_line_window(8);
  int zero = g.index_of({0});
  int two = g.index_of({2});
  CHECK(count_walks(g, zero, two, 6) == count_walks_oracle(g, zero, two, 6));
}
