#pragma once

#include "latwalk/characters.hpp"
#include "latwalk/matrix.hpp"
#include "latwalk/walks.hpp"

namespace latwalk {

// Permutation expansions of a square matrix of walk sequences, combined with
// the binomial product (interleaving walks).  Sizes above 8 use inclusion-
// exclusion for the permanent and are refused for general immanants.
EgfSeq permanent_egf(const EgfMatrix& m);
EgfSeq determinant_egf(const EgfMatrix& m);
EgfSeq immanant_egf(const EgfMatrix& m, const Partition& lambda);

// Ryser's inclusion-exclusion over column subsets; same value as
// permanent_egf, kept callable for cross-checking.
EgfSeq permanent_egf_ryser(const EgfMatrix& m);

// The same expansions with the coefficientwise product (synchronous walks).
// Equivalently: the scalar expansion applied to each coefficient matrix.
EgfSeq hadamard_permanent(const EgfMatrix& m);
EgfSeq hadamard_determinant(const EgfMatrix& m);
EgfSeq hadamard_immanant(const EgfMatrix& m, const Partition& lambda);

// Scalar expansions over exact ring entries.
Ring permanent(const RingMatrix& m);
Ring determinant(const RingMatrix& m);
Ring immanant(const RingMatrix& m, const Partition& lambda);

} // namespace latwalk
