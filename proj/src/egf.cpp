#include "latwalk/egf.hpp"

#include "latwalk/error.hpp"

#include <sstream>

namespace latwalk {

EgfSeq::EgfSeq(int order) {
  if (order < 0) fail(errc::invalid_argument, "negative truncation order");
  coeffs_.assign(static_cast<size_t>(order) + 1, Ring());
}

EgfSeq::EgfSeq(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(errc::invalid_argument, "empty coefficient list");
}

EgfSeq EgfSeq::unit(int order) {
  EgfSeq s(order);
  s[0] = Ring(1);
  return s;
}

EgfSeq EgfSeq::ones(int order) {
  EgfSeq s(order);
  for (int n = 0; n <= order; ++n) s[n] = Ring(1);
  return s;
}

EgfSeq EgfSeq::geometric(const Ring& m, int order) {
  EgfSeq s(order);
  Ring p(1);
  for (int n = 0; n <= order; ++n) {
    s[n] = p;
    p *= m;
  }
  return s;
}

std::string EgfSeq::str() const {
  std::ostringstream out;
  out << "(";
  for (int n = 0; n <= order(); ++n) {
    if (n) out << ", ";
    out << coeffs_[static_cast<size_t>(n)].str();
  }
  out << ")";
  return out.str();
}

static void require_same_order(const EgfSeq& x, const EgfSeq& y) {
  if (x.order() != y.order())
    fail(errc::order_mismatch, "sequence orders differ: " + std::to_string(x.order()) + " vs " +
                                   std::to_string(y.order()));
}

EgfSeq egf_mul(const EgfSeq& x, const EgfSeq& y) {
  require_same_order(x, y);
  const int N = x.order();
  const auto rows = pascal_rows(N);
  EgfSeq out(N);
  for (int n = 0; n <= N; ++n) {
    Ring acc;
    for (int j = 0; j <= n; ++j) {
      Ring term = x[j] * y[n - j];
      term *= Ring(rows[static_cast<size_t>(n)][static_cast<size_t>(j)]);
      acc += term;
    }
    out[n] = acc;
  }
  return out;
}

EgfSeq egf_hadamard(const EgfSeq& x, const EgfSeq& y) {
  require_same_order(x, y);
  EgfSeq out(x.order());
  for (int n = 0; n <= x.order(); ++n) out[n] = x[n] * y[n];
  return out;
}

EgfSeq egf_add(const EgfSeq& x, const EgfSeq& y) {
  require_same_order(x, y);
  EgfSeq out(x.order());
  for (int n = 0; n <= x.order(); ++n) out[n] = x[n] + y[n];
  return out;
}

EgfSeq egf_sub(const EgfSeq& x, const EgfSeq& y) {
  require_same_order(x, y);
  EgfSeq out(x.order());
  for (int n = 0; n <= x.order(); ++n) out[n] = x[n] - y[n];
  return out;
}

EgfSeq egf_scale(const Ring& c, const EgfSeq& x) {
  EgfSeq out(x.order());
  for (int n = 0; n <= x.order(); ++n) out[n] = c * x[n];
  return out;
}

BigInt big_binomial(long long n, long long k) {
  if (n < 0) fail(errc::invalid_argument, "binomial with negative row " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; every partial product is divisible by i.
  BigInt acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

Ring binomial(long long n, long long k) { return Ring(big_binomial(n, k)); }

Ring multinomial(long long n, const std::vector<long long>& parts) {
  if (n < 0) fail(errc::invalid_argument, "multinomial with negative total");
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) return Ring(0);
    sum += p;
  }
  if (sum != n) return Ring(0);
  BigInt acc = 1;
  long long used = 0;
  for (long long p : parts) {
    used += p;
    acc *= big_binomial(used, p);
  }
  return Ring(acc);
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(errc::divisibility, "division by zero");
  if (num % den != 0)
    fail(errc::divisibility, "non-exact division: " + num.str() + " / " + den.str());
  return num / den;
}

std::vector<std::vector<BigInt>> pascal_rows(int n) {
  std::vector<std::vector<BigInt>> rows(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    auto& row = rows[static_cast<size_t>(i)];
    row.assign(static_cast<size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      row[static_cast<size_t>(j)] = rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] +
                                    rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j)];
  }
  return rows;
}

} // namespace latwalk
