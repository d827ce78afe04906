#pragma once

#include "latwalk/egf.hpp"
#include "latwalk/graph.hpp"

#include <utility>
#include <vector>

namespace latwalk {

// Finitely generated abelian group: `free_rank` unconstrained integer
// coordinates followed by one coordinate per torsion order (each >= 1).
struct AbelianGroup {
  int free_rank = 0;
  std::vector<long long> torsion;

  int dimension() const { return free_rank + static_cast<int>(torsion.size()); }
  Label normalize(Label element) const; // reduces torsion coordinates into [0, q)
};

struct CayleyGenerator {
  Label element;
  Ring weight;
};

// A weighted generating multiset; the walk graph has an arc g -> g + element
// of the given weight for every generator.
struct CayleySpec {
  AbelianGroup group;
  std::vector<CayleyGenerator> generators;
};

// Walk counts from the identity to `target`: coefficient of `target` in the
// n-th convolution power of the generator sum in the group algebra.  Sparse
// convolution over the reachable set, so the infinite graph needs no window.
EgfSeq cayley_counts(const CayleySpec& spec, const Label& target, int order);

// The spec with free coordinate i reduced mod moduli[i] (0 keeps it free);
// torsion coordinates pass through.  Only this diagonal reduction is
// supported; general finite-index sublattices are out of scope.
CayleySpec quotient_spec(const CayleySpec& spec, const std::vector<long long>& moduli);

// Fiber-sum walk counts on the quotient: the counts to every original
// element that projects onto `target`.  Equals cayley_counts of
// quotient_spec at `target` when the projection identity holds.
EgfSeq quotient_counts(const CayleySpec& spec, const std::vector<long long>& moduli,
                       const Label& target, int order);

// Total surjective vertex map G1 -> G2, by G1 vertex index.
class VertexMap {
public:
  VertexMap(std::vector<int> image, int codomain_size);

  int operator()(int v) const { return image_.at(static_cast<size_t>(v)); }
  int domain_size() const { return static_cast<int>(image_.size()); }
  int codomain_size() const { return codomain_; }
  std::vector<std::vector<int>> fibers() const;

private:
  std::vector<int> image_;
  int codomain_;
};

// Row condition: for every G1 vertex u1 and G2 vertex v, the weights from u1
// into the fiber of v sum to the G2 weight from pi(u1) to v.  On truncated
// windows, rows of clipped u1 are skipped (their edge data is incomplete).
bool verify_left_semicovering(const VertexMap& pi, const WeightedGraph& g1,
                              const WeightedGraph& g2);

// Column condition, mirror image: weights from the fiber of u into v1 sum to
// the G2 weight from u to pi(v1).  Columns of clipped v1 are skipped.
bool verify_right_semicovering(const VertexMap& pi, const WeightedGraph& g1,
                               const WeightedGraph& g2);

bool verify_weak_covering(const VertexMap& pi, const WeightedGraph& g1, const WeightedGraph& g2);

enum class TransferSide { left, right };

// The two walk sequences the covering laws equate.  Left: walks pi(u1) -> v
// in G2 versus the fiber sum of walks u1 -> vj in G1.  Right: walks
// u -> pi(v1) in G2 versus the fiber sum of walks ui -> v1 in G1.  Throws
// precondition_failed unless the corresponding verification passes.
std::pair<EgfSeq, EgfSeq> semicovering_transfer(const VertexMap& pi, const WeightedGraph& g1,
                                                const WeightedGraph& g2, int g1_vertex,
                                                int g2_vertex, int order, TransferSide side);

enum class RegularitySide { left, right, weak };

// The common row sum (left), column sum (right), or both (weak) of the weight
// matrix, or nullopt if the sums disagree.  Clipped vertices contribute no
// row/column of their own; on a window only interior data counts.
std::optional<Ring> check_semiregular(const WeightedGraph& g, RegularitySide side);

// Same graph plus one directed loop of weight m at every vertex.
WeightedGraph add_uniform_loops(const WeightedGraph& g, const Ring& m);

} // namespace latwalk
