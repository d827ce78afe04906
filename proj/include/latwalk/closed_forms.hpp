#pragma once

#include "latwalk/egf.hpp"
#include "latwalk/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace latwalk {

// Exact per-length walk counts on the unit-step lattices.  All arguments are
// walk length n and endpoint displacements; out-of-parity or out-of-reach
// combinations return 0 rather than erroring.

// Count of length-n walks on the integer line from 0 to m.
Ring closed_R(long long n, long long m);
// Same with ascending steps weighted a and descending steps weighted b.
Ring closed_R_ab(long long n, long long m);

// Count of length-n walks on the nonnegative integers from k to l (k, l >= 0).
Ring closed_P(long long n, long long k, long long l);
Ring closed_P_ab(long long n, long long k, long long l);

// Count of length-n walks on the integer grid from (0,0) to (m1,m2).
Ring closed_R2(long long n, long long m1, long long m2);

// Count of length-n walks on the line x half-line grid from (k1,k2) to
// (l1,l2), second coordinates >= 0.
Ring closed_RxP(long long n, long long k1, long long k2, long long l1, long long l2);

// Axis start (k2 = 0): an equivalent single-product form evaluated through a
// divisibility-checked quotient instead of the two-product difference.
Ring closed_RxP_from_axis(long long n, long long k, long long l, long long m);

// Count of length-n line walks 0 -> m1 -> m1+m2 -> ... visiting the partial
// sums in order.  Depends only on sum(|m_i|) (and on sum(m_i) for weights).
Ring closed_composite_R(long long n, const std::vector<long long>& ms);
Ring closed_composite_R_ab(long long n, const std::vector<long long>& ms);

// Evaluations at concrete weights, with the degenerate one-way branches
// (a = 0 or b = 0 leaves a single forced walk, if any) split out explicitly.
Ring closed_R_ab_at(long long n, long long m, const Ring& a, const Ring& b);
Ring closed_P_ab_at(long long n, long long k, long long l, const Ring& a, const Ring& b);
Ring closed_composite_R_ab_at(long long n, const std::vector<long long>& ms, const Ring& a,
                              const Ring& b);

// Taylor coefficients (per-length counts) of the modified Bessel generating
// functions: bessel_coeffs(m) for closed walks displaced by m on the line,
// bessel_P_coeffs(m) for half-line walks 0 -> m.
EgfSeq bessel_coeffs(long long m, int order);
EgfSeq bessel_P_coeffs(long long m, int order);

struct IdentityRange {
  // -1 means the identity's default bound.
  long long n_max = -1;
  long long k_max = -1;
  long long a_max = -1;
  long long b_max = -1;
};

struct IdentityReport {
  std::string name;
  std::map<std::string, long long> range; // resolved bounds actually used
  bool pass = false;
  // First failing parameter assignment, with both side values; empty if pass.
  std::map<std::string, long long> counterexample;
  std::string lhs, rhs;
};

// Exhaustive grid check of one of the binomial identities the closed forms
// rest on, by registry name: eq38 (two-binomial product as a multinomial
// sum), eqbin (central binomial difference as a weighted single binomial),
// corp3 (telescoped weighted partial row sums), eqRP5 (two-product
// difference as a single divisibility-checked product), eqRP6 (the
// two-variable telescoped sum).
IdentityReport check_identity(const std::string& name, const IdentityRange& range = {});

std::vector<std::string> identity_names();

struct WaveCount {
  BigInt formula;     // factorial quotient, divisibility asserted
  BigInt determinant; // walk route through the 2x2 half-line block
  bool equal = false;
};

// Closed walks of length 2k of a coupled pair of half-line neighbors
// (the signed two-particle count), computed both ways.
WaveCount wave_graph_count(int k);
BigInt wave_formula(int k);
BigInt wave_determinant_route(int k);

BigInt factorial(long long n);

} // namespace latwalk
