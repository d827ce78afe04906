#pragma once

#include "latwalk/ring.hpp"

#include <vector>

namespace latwalk {

// Walk-count sequence truncated at a fixed order: coefficient n stores the
// count of length-n walks itself (the n! denominator of the generating
// function stays implicit).  All binary operations require equal orders.
class EgfSeq {
public:
  explicit EgfSeq(int order);
  explicit EgfSeq(std::vector<Ring> coeffs);

  // (1, 0, ..., 0): identity for the binomial product.
  static EgfSeq unit(int order);
  // (1, 1, ..., 1): identity for the coefficientwise product.
  static EgfSeq ones(int order);
  // (1, m, m^2, ...): closed walks on a single vertex with loop weight m.
  static EgfSeq geometric(const Ring& m, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Ring& operator[](int n) const { return coeffs_.at(static_cast<size_t>(n)); }
  Ring& operator[](int n) { return coeffs_.at(static_cast<size_t>(n)); }
  const std::vector<Ring>& coeffs() const { return coeffs_; }

  bool operator==(const EgfSeq& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const EgfSeq& rhs) const { return !(*this == rhs); }

  std::string str() const;

private:
  std::vector<Ring> coeffs_;
};

// result[n] = sum_j C(n,j) x[j] y[n-j]: the walk sequence of a product
// structure whose steps interleave the two factors.
EgfSeq egf_mul(const EgfSeq& x, const EgfSeq& y);

// result[n] = x[n] * y[n]: the walk sequence of a structure whose steps
// advance both factors at once.
EgfSeq egf_hadamard(const EgfSeq& x, const EgfSeq& y);

EgfSeq egf_add(const EgfSeq& x, const EgfSeq& y);
EgfSeq egf_sub(const EgfSeq& x, const EgfSeq& y);
EgfSeq egf_scale(const Ring& c, const EgfSeq& x);

// C(n,k) as an exact integer, 0 outside 0 <= k <= n.  Negative n rejected.
BigInt big_binomial(long long n, long long k);
Ring binomial(long long n, long long k);

// n! / prod(parts!), 0 when the parts do not sum to n or any part is negative.
Ring multinomial(long long n, const std::vector<long long>& parts);

// Quotient with a remainder check; the callers all divide provably divisible
// quantities, so a nonzero remainder means a formula is wrong.
BigInt exact_div(const BigInt& num, const BigInt& den);

// Rows 0..n of the additive triangle, computed locally (no shared cache).
std::vector<std::vector<BigInt>> pascal_rows(int n);

} // namespace latwalk
