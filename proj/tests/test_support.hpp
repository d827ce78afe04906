#pragma once

#include "latwalk/graph.hpp"
#include "latwalk/ring.hpp"

#include <random>
#include <vector>

namespace latwalk::testing {

// Deterministic generator: every randomized suite seeds its own Rng so a
// failure reproduces from the test name alone.
struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(gen);
  }

  bool chance(double p) {
    std::bernoulli_distribution dist(p);
    return dist(gen);
  }
};

Ring random_weight(Rng& rng, bool allow_poly);

// Random multigraph on 1..max_vertices vertices labeled {0}..{v-1}, mixing
// directed and undirected edges and (directed) loops.
WeightedGraph random_graph(Rng& rng, int max_vertices, bool allow_poly);

// Random bipartite graph: vertices split into two classes, edges only across.
WeightedGraph random_bipartite_graph(Rng& rng, int max_vertices, bool allow_poly);

// Pascal-triangle rows computed by the addition rule only; the reference the
// multiplicative binomial is checked against.
std::vector<std::vector<long long>> pascal_oracle(int max_n);

} // namespace latwalk::testing
