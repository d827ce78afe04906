#include "latwalk/ring.hpp"

#include "latwalk/error.hpp"

#include <sstream>

namespace latwalk {

Ring Ring::monomial(int ea, int eb, BigInt coeff) {
  Ring r;
  if (coeff != 0) {
    r.poly_ = true;
    r.mono_[{ea, eb}] = std::move(coeff);
    r.normalize();
  }
  return r;
}

void Ring::normalize() {
  if (!poly_) return;
  for (auto it = mono_.begin(); it != mono_.end();) {
    if (it->second == 0)
      it = mono_.erase(it);
    else
      ++it;
  }
  if (mono_.empty()) {
    poly_ = false;
    int_ = 0;
  } else if (mono_.size() == 1 && mono_.begin()->first == Exponents{0, 0}) {
    int_ = mono_.begin()->second;
    poly_ = false;
    mono_.clear();
  }
}

const BigInt& Ring::as_integer() const {
  if (poly_) fail(errc::invalid_argument, "non-constant polynomial has no integer value: " + str());
  return int_;
}

Ring::MonomialMap Ring::monomials() const {
  if (poly_) return mono_;
  MonomialMap m;
  if (int_ != 0) m[{0, 0}] = int_;
  return m;
}

Ring Ring::substituted(const Ring& a_value, const Ring& b_value) const {
  if (!poly_) return *this;
  Ring acc;
  for (const auto& [exps, coeff] : mono_) {
    Ring term(coeff);
    term *= a_value.pow(static_cast<unsigned>(exps.first));
    term *= b_value.pow(static_cast<unsigned>(exps.second));
    acc += term;
  }
  return acc;
}

Ring Ring::pow(unsigned e) const {
  Ring result(1);
  Ring base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Ring Ring::operator-() const {
  Ring r = *this;
  if (!r.poly_) {
    r.int_ = -r.int_;
  } else {
    for (auto& [exps, coeff] : r.mono_) coeff = -coeff;
  }
  return r;
}

Ring& Ring::operator+=(const Ring& rhs) {
  if (!poly_ && !rhs.poly_) {
    int_ += rhs.int_;
    return *this;
  }
  MonomialMap sum = monomials();
  for (const auto& [exps, coeff] : rhs.monomials()) sum[exps] += coeff;
  poly_ = true;
  mono_ = std::move(sum);
  normalize();
  return *this;
}

Ring& Ring::operator-=(const Ring& rhs) { return *this += -rhs; }

Ring& Ring::operator*=(const Ring& rhs) {
  if (!poly_ && !rhs.poly_) {
    int_ *= rhs.int_;
    return *this;
  }
  MonomialMap prod;
  for (const auto& [le, lc] : monomials())
    for (const auto& [re, rc] : rhs.monomials())
      prod[{le.first + re.first, le.second + re.second}] += lc * rc;
  poly_ = true;
  mono_ = std::move(prod);
  int_ = 0;
  normalize();
  return *this;
}

bool Ring::operator==(const Ring& rhs) const {
  if (poly_ != rhs.poly_) return false;
  if (!poly_) return int_ == rhs.int_;
  return mono_ == rhs.mono_;
}

std::string Ring::str() const {
  if (!poly_) return int_.str();
  std::ostringstream out;
  bool first = true;
  // Highest powers of a first, the usual reading order.
  for (auto it = mono_.rbegin(); it != mono_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    BigInt c = coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool has_vars = exps.first != 0 || exps.second != 0;
    if (c != 1 || !has_vars) out << c.str();
    bool star = c != 1 || !has_vars;
    if (exps.first != 0) {
      if (star) out << "*";
      out << "a";
      if (exps.first != 1) out << "^" << exps.first;
      star = true;
    }
    if (exps.second != 0) {
      if (star) out << "*";
      out << "b";
      if (exps.second != 1) out << "^" << exps.second;
    }
  }
  return out.str();
}

} // namespace latwalk
