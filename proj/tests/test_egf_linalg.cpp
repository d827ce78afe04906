#include "latwalk/egf_linalg.hpp"
#include "latwalk/error.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace latwalk;

namespace {

RingMatrix ints(int n, const std::vector<long long>& entries) {
  RingMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Ring(entries[static_cast<size_t>(i * n + j)]);
  return m;
}

EgfMatrix random_egf_matrix(testing::Rng& rng, int n, int order) {
  EgfMatrix m(n, n, order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      EgfSeq s(order);
      for (int k = 0; k <= order; ++k) s[k] = Ring(rng.uniform(-3, 3));
      m.at(i, j) = s;
    }
  return m;
}

// Immanant by the raw definition: iterate one-line permutations of 0..n-1.
template <typename Product, typename Unit>
EgfSeq immanant_reference(const EgfMatrix& m, const Partition& lambda, Product product,
                          Unit unit) {
  int n = m.rows();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  EgfSeq total(m.order());
  do {
    EgfSeq term = unit(m.order());
    for (int i = 0; i < n; ++i) term = product(term, m.at(i, perm[static_cast<size_t>(i)]));
    total = egf_add(total, egf_scale(Ring(sn_character(lambda, cycle_type(perm))), term));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

} // namespace

TEST_CASE("scalar permanent and determinant of a 2x2") {
  RingMatrix m = ints(2, {1, 2, 3, 4});
  CHECK(determinant(m) == Ring(-2));
  CHECK(permanent(m) == Ring(10));
}

TEST_CASE("scalar expansions on a polynomial matrix") {
  RingMatrix m(2, 2);
  m.at(0, 0) = Ring::var_a();
  m.at(0, 1) = Ring(1);
  m.at(1, 0) = Ring(1);
  m.at(1, 1) = Ring::var_b();
  CHECK(determinant(m).str() == "a*b - 1");
  CHECK(permanent(m).str() == "a*b + 1");
}

TEST_CASE("empty matrices give the expansion units") {
  EgfMatrix empty(0, 0, 4);
  EgfSeq unit = permanent_egf(empty);
  CHECK(unit == EgfSeq::unit(4));
  CHECK(determinant_egf(empty) == EgfSeq::unit(4));
  // The coefficientwise flavor multiplies per length, so its unit is all
  // ones.
  CHECK(hadamard_permanent(empty) == EgfSeq::ones(4));
  CHECK(permanent(RingMatrix(0, 0)) == Ring(1));
  CHECK(determinant(RingMatrix(0, 0)) == Ring(1));
}

TEST_CASE("immanants specialize to determinant and permanent") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    int n = trial % 2 == 0 ? 3 : 4;
    EgfMatrix m = random_egf_matrix(rng, n, 5);
    Partition trivial{n};
    Partition sign(static_cast<size_t>(n), 1);
    CHECK(immanant_egf(m, trivial) == permanent_egf(m));
    CHECK(immanant_egf(m, sign) == determinant_egf(m));
    CHECK(hadamard_immanant(m, trivial) == hadamard_permanent(m));
    CHECK(hadamard_immanant(m, sign) == hadamard_determinant(m));
  }
}

TEST_CASE("immanants match the permutation-sum definition") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 4; ++trial) {
    EgfMatrix m = random_egf_matrix(rng, 3, 4);
    for (const Partition& lambda : partitions_of(3)) {
      CHECK(immanant_egf(m, lambda) ==
            immanant_reference(m, lambda, &egf_mul,
                               [](int order) { return EgfSeq::unit(order); }));
      CHECK(hadamard_immanant(m, lambda) ==
            immanant_reference(m, lambda, &egf_hadamard,
                               [](int order) { return EgfSeq::ones(order); }));
    }
  }
}

TEST_CASE("inclusion-exclusion permanent agrees with the expansion") {
  testing::Rng rng(43);
  for (int n = 2; n <= 7; ++n) {
    EgfMatrix m = random_egf_matrix(rng, n, 4);
    CHECK(permanent_egf_ryser(m) == immanant_egf(m, Partition{n}));
  }
}

TEST_CASE("large permanents fall back to inclusion-exclusion") {
  testing::Rng rng(44);
  EgfMatrix m = random_egf_matrix(rng, 9, 2);
  CHECK_THROWS_AS(determinant_egf(m), error);
  CHECK_THROWS_AS(immanant_egf(m, Partition{9}), error);
  EgfSeq per = permanent_egf(m); // routed through inclusion-exclusion
  CHECK(per.order() == 2);
}

TEST_CASE("immanant shape must match the matrix size") {
  testing::Rng rng(45);
  EgfMatrix m = random_egf_matrix(rng, 3, 2);
  CHECK_THROWS_AS(immanant_egf(m, Partition{2}), error);
  CHECK_THROWS_AS(immanant_egf(m, Partition{2, 2}), error);
}

TEST_CASE("rectangular matrices are refused") {
  EgfMatrix m(2, 3, 2);
  CHECK_THROWS_AS(permanent_egf(m), error);
  CHECK_THROWS_AS(permanent_egf_ryser(m), error);
}

TEST_CASE("hadamard expansions are the scalar expansion per coefficient") {
  testing::Rng rng(46);
  EgfMatrix m = random_egf_matrix(rng, 4, 5);
  EgfSeq per = hadamard_permanent(m);
  EgfSeq det = hadamard_determinant(m);
  for (int k = 0; k <= 5; ++k) {
    RingMatrix slice = m.coefficients(k);
    CHECK(per[k] == permanent(slice));
    CHECK(det[k] == determinant(slice));
  }
}

TEST_CASE("binomial-product determinant on walk sequences") {
  // Entries x^i with egf_mul model independent interleavings; det of
  // [[1, t],[t, 1]] style sequences has a clean hand value.
  EgfMatrix m(2, 2, 3);
  EgfSeq one = EgfSeq::unit(3);
  EgfSeq t(3);
  t[1] = Ring(1);
  m.at(0, 0) = one;
  m.at(0, 1) = t;
  m.at(1, 0) = t;
  m.at(1, 1) = one;
  EgfSeq det = determinant_egf(m);
  // 1 - t*t under the binomial product: t*t = (0, 0, 2).
  CHECK(det == EgfSeq({Ring(1), Ring(0), Ring(-2), Ring(0)}));
  EgfSeq per = permanent_egf(m);
  CHECK(per == EgfSeq({Ring(1), Ring(0), Ring(2), Ring(0)}));
}
