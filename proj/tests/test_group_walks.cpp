#include "latwalk/constructions.hpp"
#include "latwalk/error.hpp"
#include "latwalk/group_walks.hpp"
#include "latwalk/lattice.hpp"
#include "latwalk/walks.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace latwalk;

namespace {

CayleySpec integer_line() {
  CayleySpec spec;
  spec.group.free_rank = 1;
  spec.generators = {{Label{1}, Ring(1)}, {Label{-1}, Ring(1)}};
  return spec;
}

} // namespace

TEST_CASE("group normalization folds torsion coordinates") {
  AbelianGroup g{1, {3, 5}};
  CHECK(g.dimension() == 3);
  CHECK(g.normalize({7, 4, -1}) == Label{7, 1, 4});
  CHECK(g.normalize({-2, -3, 10}) == Label{-2, 0, 0});
}

TEST_CASE("walks on the integers match the lattice window") {
  CayleySpec spec = integer_line();
  CHECK(cayley_counts(spec, Label{0}, 8) ==
        EgfSeq({Ring(1), Ring(0), Ring(2), Ring(0), Ring(6), Ring(0), Ring(20), Ring(0),
                Ring(70)}));
  CHECK(cayley_counts(spec, Label{2}, 6) ==
        EgfSeq({Ring(0), Ring(0), Ring(1), Ring(0), Ring(4), Ring(0), Ring(15)}));
}

TEST_CASE("weighted generators carry their monomials") {
  CayleySpec spec;
  spec.group.free_rank = 1;
  spec.generators = {{Label{1}, Ring::var_a()}, {Label{-1}, Ring::var_b()}};
  EgfSeq counts = cayley_counts(spec, Label{0}, 4);
  CHECK(counts[2] == Ring(2) * Ring::var_a() * Ring::var_b());
  CHECK(counts[4] == Ring(6) * Ring::monomial(2, 2, 1));
}

TEST_CASE("cyclic group walks") {
  CayleySpec spec;
  spec.group.torsion = {3};
  spec.generators = {{Label{1}, Ring(1)}, {Label{2}, Ring(1)}};
  // Walks on the triangle from a fixed corner back to itself.
  CHECK(cayley_counts(spec, Label{0}, 3) == EgfSeq({Ring(1), Ring(0), Ring(2), Ring(2)}));
  CHECK(cayley_counts(spec, Label{1}, 3) == EgfSeq({Ring(0), Ring(1), Ring(1), Ring(3)}));
}

TEST_CASE("quotient spec folds the chosen coordinates") {
  CayleySpec spec;
  spec.group.free_rank = 2;
  spec.generators = {{Label{1, 0}, Ring(1)}, {Label{0, -1}, Ring(2)}};
  CayleySpec q = quotient_spec(spec, {4, 0});
  CHECK(q.group.free_rank == 1);
  REQUIRE(q.group.torsion.size() == 1);
  CHECK(q.group.torsion[0] == 4);
  // Torsion coordinates come after the free ones: generator (1,0) maps to
  // free part () + ... free coordinate 2 stays, coordinate 1 folds mod 4.
  for (const CayleyGenerator& gen : q.generators) CHECK(gen.element.size() == 2);
}

TEST_CASE("quotient spec validation") {
  CayleySpec spec = integer_line();
  CHECK_THROWS_AS(quotient_spec(spec, {1}), error);       // modulus 1 collapses
  CHECK_THROWS_AS(quotient_spec(spec, {-2}), error);      // negative modulus
  CHECK_THROWS_AS(quotient_spec(spec, {2, 2}), error);    // wrong arity
  CayleySpec same = quotient_spec(spec, {0});             // all zeros: identity
  CHECK(same.group.free_rank == 1);
  CHECK(same.group.torsion.empty());
}

TEST_CASE("line folded mod q sums the fibers") {
  CayleySpec spec = integer_line();
  // Mod 2 both generators land on the same element, so counts double up.
  CHECK(quotient_counts(spec, {2}, Label{0}, 6) ==
        EgfSeq({Ring(1), Ring(0), Ring(4), Ring(0), Ring(16), Ring(0), Ring(64)}));
  // Direct fiber sum cross-check: c_n(0 -> k) summed over k = t mod 3.
  for (long long t = 0; t < 3; ++t) {
    EgfSeq folded = quotient_counts(spec, {3}, Label{t}, 8);
    EgfSeq direct(8);
    for (long long k = -9; k <= 9; ++k) {
      if (((k - t) % 3 + 3) % 3 != 0) continue;
      direct = egf_add(direct, cayley_counts(spec, Label{k}, 8));
    }
    CHECK(folded == direct);
  }
}

TEST_CASE("vertex map basics") {
  VertexMap pi({0, 1, 0, 1}, 2);
  CHECK(pi(2) == 0);
  CHECK(pi.domain_size() == 4);
  auto fibers = pi.fibers();
  REQUIRE(fibers.size() == 2);
  CHECK(fibers[0] == std::vector<int>{0, 2});
  CHECK(fibers[1] == std::vector<int>{1, 3});
  CHECK_THROWS_AS(VertexMap({0, 0}, 2), error);  // 1 has empty fiber
  CHECK_THROWS_AS(VertexMap({0, 2}, 2), error);  // image out of range
}

TEST_CASE("cycle over cycle is a two-sided semicovering") {
  WeightedGraph c6 = materialize_lattice({LatticeKind::cycle, {0}, 6, Ring(1), 6});
  WeightedGraph c3 = materialize_lattice({LatticeKind::cycle, {0}, 3, Ring(1), 3});
  std::vector<int> image(6);
  for (int v = 0; v < 6; ++v) image[static_cast<size_t>(v)] = static_cast<int>(c6.label(v)[0] % 3);
  // Vertex i of each cycle window has label {i} in order, so this lines up.
  std::vector<int> by_index(6);
  for (int v = 0; v < 6; ++v) by_index[static_cast<size_t>(v)] = c3.index_of({c6.label(v)[0] % 3});
  VertexMap pi(by_index, 3);
  CHECK(verify_left_semicovering(pi, c6, c3));
  CHECK(verify_right_semicovering(pi, c6, c3));
  CHECK(verify_weak_covering(pi, c6, c3));
  auto [quotient, fiber_sum] = semicovering_transfer(pi, c6, c3, 0, 0, 7, TransferSide::left);
  CHECK(quotient == fiber_sum);
  CHECK(quotient == EgfSeq({Ring(1), Ring(0), Ring(2), Ring(2), Ring(6), Ring(10), Ring(22),
                            Ring(42)}));
}

TEST_CASE("a right semicovering that is not a left one") {
  // G1: arcs 1 -> 0 and 1 -> 1; G2: one vertex with a unit loop; everything
  // maps to the loop vertex.  Column sums into each fiber vertex are 1, so
  // the right condition holds; row sums out of vertex 1 give 2, so the left
  // condition fails.
  WeightedGraph g1;
  g1.add_vertex({0});
  g1.add_vertex({1});
  g1.add_edge(1, 0, true, Ring(1));
  g1.add_edge(1, 1, true, Ring(1));
  WeightedGraph g2;
  g2.add_vertex({0});
  g2.add_edge(0, 0, true, Ring(1));
  VertexMap pi({0, 0}, 1);
  CHECK(verify_right_semicovering(pi, g1, g2));
  CHECK(!verify_left_semicovering(pi, g1, g2));
  CHECK(!verify_weak_covering(pi, g1, g2));

  auto [quotient, fiber_sum] = semicovering_transfer(pi, g1, g2, 0, 0, 5, TransferSide::right);
  CHECK(quotient == fiber_sum);
  CHECK(quotient == EgfSeq({Ring(1), Ring(1), Ring(1), Ring(1), Ring(1), Ring(1)}));
  CHECK_THROWS_AS(semicovering_transfer(pi, g1, g2, 0, 0, 5, TransferSide::left), error);
}

TEST_CASE("sorting the coordinate pair is a left semicovering onto the bipower") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = testing::random_graph(rng, 4, trial % 2 == 0);
    WeightedGraph squared = biproduct(g, g);
    WeightedGraph sym2 = symmetric_bipower(g, 2);
    int n = g.vertex_count();
    std::vector<int> image(static_cast<size_t>(n * n));
    for (int v1 = 0; v1 < n; ++v1)
      for (int v2 = 0; v2 < n; ++v2) {
        int lo = std::min(v1, v2), hi = std::max(v1, v2);
        Label sorted = g.label(lo);
        sorted.insert(sorted.end(), g.label(hi).begin(), g.label(hi).end());
        image[static_cast<size_t>(v1 * n + v2)] = sym2.index_of(sorted);
      }
    VertexMap pi(image, sym2.vertex_count());
    CHECK(verify_left_semicovering(pi, squared, sym2));
    auto [quotient, fiber_sum] =
        semicovering_transfer(pi, squared, sym2, 0, sym2.vertex_count() - 1, 5,
                              TransferSide::left);
    CHECK(quotient == fiber_sum);
  }
}

TEST_CASE("semiregularity of lattice windows and loops") {
  WeightedGraph line = materialize_lattice({LatticeKind::line, {0}, 6, Ring(1), 0});
  auto row = check_semiregular(line, RegularitySide::left);
  REQUIRE(row.has_value());
  CHECK(*row == Ring(2));
  CHECK(check_semiregular(line, RegularitySide::weak) == Ring(2));

  WeightedGraph k1 = materialize_lattice({LatticeKind::single_loop, {0}, 0, Ring(5), 0});
  CHECK(check_semiregular(k1, RegularitySide::left) == Ring(5));
  WeightedGraph k1a = materialize_lattice({LatticeKind::single_loop, {0}, 0, Ring::var_a(), 0});
  CHECK(check_semiregular(k1a, RegularitySide::right) == Ring::var_a());

  WeightedGraph c5 = materialize_lattice({LatticeKind::cycle, {0}, 5, Ring(1), 5});
  CHECK(check_semiregular(c5, RegularitySide::weak) == Ring(2));

  // Half line is not semiregular: the wall vertex has row sum 1.
  WeightedGraph half = materialize_lattice({LatticeKind::half_line, {0}, 4, Ring(1), 0});
  CHECK(!check_semiregular(half, RegularitySide::left).has_value());
}

TEST_CASE("row sums bound the total outflow of a semiregular graph") {
  // On a left-semiregular graph with row sum m, walks from u to anywhere
  // total m^n: the all-targets sum telescopes one step at a time.
  WeightedGraph line = materialize_lattice({LatticeKind::line, {0}, 8, Ring(1), 0});
  int order = 6;
  EgfSeq total(order);
  for (int v = 0; v < line.vertex_count(); ++v)
    total = egf_add(total, count_walks(line, line.index_of({0}), v, order));
  for (int n = 0; n <= order; ++n) {
    BigInt expect = 1;
    for (int i = 0; i < n; ++i) expect *= 2;
    CHECK(total[n] == Ring(expect));
  }
}

TEST_CASE("uniform loops shift counts by the geometric series") {
  testing::Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g = testing::random_graph(rng, 5, trial % 2 == 0);
    Ring m = trial % 3 == 0 ? Ring::var_a() : Ring(trial % 5 + 1);
    WeightedGraph with_loops = add_uniform_loops(g, m);
    int u = rng.uniform(0, g.vertex_count() - 1);
    int v = rng.uniform(0, g.vertex_count() - 1);
    EgfSeq plain = count_walks(g, u, v, 6);
    EgfSeq looped = count_walks(with_loops, u, v, 6);
    CHECK(looped == egf_mul(EgfSeq::geometric(m, 6), plain));
  }
}

TEST_CASE("loops on the line, frozen") {
  WeightedGraph line = materialize_lattice({LatticeKind::line, {0}, 5, Ring(1), 0});
  WeightedGraph looped = add_uniform_loops(line, Ring(1));
  EgfSeq counts = count_walks(looped, Label{0}, Label{0}, 4);
  // c_n = sum_j C(n,j) c_j(line): 1, 1, 3, 7, 19.
  CHECK(counts == EgfSeq({Ring(1), Ring(1), Ring(3), Ring(7), Ring(19)}));
}
