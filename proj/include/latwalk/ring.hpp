#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace latwalk {

using BigInt = boost::multiprecision::cpp_int;

// Exact scalar: either a plain integer or a polynomial in the two formal edge
// weights a, b with integer coefficients.  A polynomial never stores a zero
// coefficient, and a constant polynomial is demoted to the integer form, so
// equal values always compare equal structurally.
class Ring {
public:
  using Exponents = std::pair<int, int>; // (power of a, power of b)
  using MonomialMap = std::map<Exponents, BigInt>;

  Ring() : int_(0) {}
  Ring(int v) : int_(v) {}
  Ring(long v) : int_(v) {}
  Ring(long long v) : int_(v) {}
  explicit Ring(BigInt v) : int_(std::move(v)) {}

  static Ring var_a() { return monomial(1, 0, 1); }
  static Ring var_b() { return monomial(0, 1, 1); }
  static Ring monomial(int ea, int eb, BigInt coeff);

  bool is_integer() const { return !poly_; }
  bool is_zero() const { return !poly_ && int_ == 0; }
  bool is_one() const { return !poly_ && int_ == 1; }

  // Throws for non-constant polynomials.
  const BigInt& as_integer() const;

  // The polynomial view; integers show up as a single (0,0) monomial.
  MonomialMap monomials() const;

  Ring substituted(const Ring& a_value, const Ring& b_value) const;
  Ring pow(unsigned e) const;

  Ring operator-() const;
  Ring& operator+=(const Ring& rhs);
  Ring& operator-=(const Ring& rhs);
  Ring& operator*=(const Ring& rhs);

  friend Ring operator+(Ring lhs, const Ring& rhs) { return lhs += rhs; }
  friend Ring operator-(Ring lhs, const Ring& rhs) { return lhs -= rhs; }
  friend Ring operator*(Ring lhs, const Ring& rhs) { return lhs *= rhs; }

  bool operator==(const Ring& rhs) const;
  bool operator!=(const Ring& rhs) const { return !(*this == rhs); }

  // "7", "-3", "a^2*b", "2*a - b^3".  Monomials with the highest powers of a
  // first, the usual reading order.
  std::string str() const;

private:
  bool poly_ = false;
  BigInt int_;       // value when !poly_
  MonomialMap mono_; // terms when poly_, no zero coefficients

  void normalize();
};

} // namespace latwalk
