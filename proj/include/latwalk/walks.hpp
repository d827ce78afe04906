#pragma once

#include "latwalk/egf.hpp"
#include "latwalk/graph.hpp"

#include <vector>

namespace latwalk {

// Matrix of walk sequences, all truncated at the same order.
class EgfMatrix {
public:
  EgfMatrix(int rows, int cols, int order);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int order() const { return order_; }
  EgfSeq& at(int i, int j) { return data_.at(index(i, j)); }
  const EgfSeq& at(int i, int j) const { return data_.at(index(i, j)); }

  // Scalar matrix of the length-n coefficients.
  RingMatrix coefficients(int n) const;

private:
  size_t index(int i, int j) const;
  int rows_, cols_, order_;
  std::vector<EgfSeq> data_;
};

// Exact count of length-0..order walks from source to target, weights
// multiplied along each walk and summed over walks.  On a truncated window
// the source must sit at least `order` steps away from every clipped vertex,
// otherwise the window cannot answer exactly and the call throws
// insufficient_window.
EgfSeq count_walks(const WeightedGraph& g, int source, int target, int order);
EgfSeq count_walks(const WeightedGraph& g, const Label& source, const Label& target, int order);

struct OracleLimits {
  int max_order = 8;
  int max_ball = 200;
};

// Brute-force re-count by explicit walk enumeration.  Deliberately a separate
// algorithm from count_walks (depth-first over arcs instead of iterated
// vector-matrix products); refuses inputs past the limits.
EgfSeq count_walks_oracle(const WeightedGraph& g, int source, int target, int order,
                          const OracleLimits& limits = {});

// Walks from waypoints.front() to waypoints.back() that pass through the
// intermediate waypoints in order (at weakly increasing times, endpoints
// allowed).  Needs at least three waypoints.
EgfSeq count_composite_walks(const WeightedGraph& g, const std::vector<int>& waypoints, int order);
EgfSeq count_composite_walks(const WeightedGraph& g, const std::vector<Label>& waypoints,
                             int order);

// Enumerating counterpart of count_composite_walks, same limits as
// count_walks_oracle.
EgfSeq count_composite_walks_oracle(const WeightedGraph& g, const std::vector<int>& waypoints,
                                    int order, const OracleLimits& limits = {});

// Walk sequences for the chosen source/target index sets; one propagation per
// source row.  Exactness is enforced per source, so selecting interior rows
// of a window is fine even when the window has clipped vertices elsewhere.
EgfMatrix egf_block(const WeightedGraph& g, const std::vector<int>& sources,
                    const std::vector<int>& targets, int order);

// Full vertex-by-vertex matrix of walk sequences.
EgfMatrix egf_matrix(const WeightedGraph& g, int order);

} // namespace latwalk
