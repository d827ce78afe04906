#pragma once

#include "latwalk/graph.hpp"

namespace latwalk {

// Vertex pairs in row-major order (second factor fastest), labels
// concatenated.  Each edge of one factor is copied once per vertex of the
// other, so the weight matrix is the Kronecker sum of the factors'.
WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2);

// Vertex pairs as above; every pair of edges (e1, e2) contributes the edges
// of the tensor product, so the weight matrix is the Kronecker product:
// both directed -> one directed edge (t1,t2)->(h1,h2); exactly one directed ->
// two directed edges (t1,t2)->(h1,h2) and (t1,h2)->(h1,t2); both undirected ->
// the same two edges, undirected.  Walks advance both coordinates each step.
WeightedGraph biproduct(const WeightedGraph& g1, const WeightedGraph& g2);

// Induced subgraph of the biproduct on pairs whose color sum is `parity`
// (0 = even, 1 = odd), colors from compute_bipartition of each factor.
// Throws not_bipartite when either factor has no two-coloring.
WeightedGraph parity_product(const WeightedGraph& g1, const WeightedGraph& g2, int parity);

// Power graphs over n-tuples of vertices (nondecreasing for symmetric,
// strictly increasing for exterior, in the base vertex order), labels
// concatenated.  n = 0 gives the single empty-tuple vertex with no edges.
//
// symmetric: one directed edge per (position i, arc from tuple[i]); the
// target is the resorted tuple; repeats are kept.
// exterior: same generation, but an arc whose head collides with another
// tuple entry is dropped, and the weight picks up (-1)^(j-i) for the
// positions i, j of the replaced entry and of the new head.
WeightedGraph symmetric_power(const WeightedGraph& g, int n);
WeightedGraph exterior_power(const WeightedGraph& g, int n);

// Bipower graphs: one edge per arc n-tuple with arc i leaving tuple[i]; the
// target is the resorted head tuple and walks advance every coordinate at
// once (the quotient of the n-fold tensor product by the sorting map).  The
// symmetric bipower keeps every tuple (weight = product of arc weights); the
// exterior bipower needs pairwise distinct heads and signs the weight by the
// inversion parity of the head sequence.  Undirected base edges are
// arc-expanded first.  Enumeration is capped: n <= 3 and at most 100 arcs.
WeightedGraph symmetric_bipower(const WeightedGraph& g, int n);
WeightedGraph exterior_bipower(const WeightedGraph& g, int n);

// Induced subgraph of a power/bipower of `base` on tuples whose color sum is
// `parity` mod 2.  `power` must have been built from `base` with exponent n.
WeightedGraph power_parity_subgraph(const WeightedGraph& power, const WeightedGraph& base, int n,
                                    int parity);

} // namespace latwalk
