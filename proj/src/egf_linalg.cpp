#include "latwalk/egf_linalg.hpp"

#include "latwalk/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latwalk {

namespace {

constexpr int kImmanantCap = 8;

void require_square(int rows, int cols) {
  if (rows != cols) fail(errc::shape_mismatch, "permutation expansion needs a square matrix");
}

// chi over all of S_n, looked up per cycle type.
std::vector<long long> character_by_permutation(const Partition& lambda, int n,
                                                std::vector<std::vector<int>>& perms) {
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<long long> chi;
  perms.clear();
  do {
    perms.push_back(idx);
    chi.push_back(sn_character(lambda, cycle_type(idx)));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return chi;
}

void check_immanant_args(int n, const Partition& lambda) {
  if (n > kImmanantCap)
    fail(errc::size_bound, "permutation expansion capped at size " + std::to_string(kImmanantCap) +
                               ", got " + std::to_string(n));
  if (!is_partition(lambda) || partition_size(lambda) != n)
    fail(errc::invalid_argument, "immanant shape must partition the matrix size");
}

using SeqProduct = EgfSeq (*)(const EgfSeq&, const EgfSeq&);

EgfSeq expand_immanant(const EgfMatrix& m, const Partition& lambda, SeqProduct product) {
  require_square(m.rows(), m.cols());
  const int n = m.rows();
  check_immanant_args(n, lambda);
  if (n == 0) {
    // Empty product: the unit of the chosen multiplication.
    return product == static_cast<SeqProduct>(&egf_hadamard) ? EgfSeq::ones(m.order())
                                                             : EgfSeq::unit(m.order());
  }
  std::vector<std::vector<int>> perms;
  const auto chi = character_by_permutation(lambda, n, perms);
  EgfSeq acc(m.order());
  for (size_t p = 0; p < perms.size(); ++p) {
    if (chi[p] == 0) continue;
    EgfSeq term = m.at(0, perms[p][0]);
    for (int i = 1; i < n; ++i) term = product(term, m.at(i, perms[p][static_cast<size_t>(i)]));
    acc = egf_add(acc, egf_scale(Ring(chi[p]), term));
  }
  return acc;
}

Ring expand_immanant_scalar(const RingMatrix& m, const Partition& lambda) {
  require_square(m.rows(), m.cols());
  const int n = m.rows();
  check_immanant_args(n, lambda);
  if (n == 0) return Ring(1);
  std::vector<std::vector<int>> perms;
  const auto chi = character_by_permutation(lambda, n, perms);
  Ring acc;
  for (size_t p = 0; p < perms.size(); ++p) {
    if (chi[p] == 0) continue;
    Ring term(1);
    for (int i = 0; i < n; ++i) term *= m.at(i, perms[p][static_cast<size_t>(i)]);
    acc += Ring(chi[p]) * term;
  }
  return acc;
}

Partition trivial_shape(int n) { return n == 0 ? Partition{} : Partition{n}; }
Partition sign_shape(int n) { return Partition(static_cast<size_t>(n), 1); }

} // namespace

EgfSeq permanent_egf_ryser(const EgfMatrix& m) {
  require_square(m.rows(), m.cols());
  const int n = m.rows();
  if (n == 0) return EgfSeq::unit(m.order());
  if (n > 62) fail(errc::size_bound, "inclusion-exclusion capped at size 62");
  EgfSeq acc(m.order());
  for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
    EgfSeq term = EgfSeq::unit(m.order());
    for (int i = 0; i < n; ++i) {
      EgfSeq row_sum(m.order());
      for (int j = 0; j < n; ++j)
        if (mask & (1ull << j)) row_sum = egf_add(row_sum, m.at(i, j));
      term = egf_mul(term, row_sum);
    }
    const int popcount = __builtin_popcountll(mask);
    const bool negative = (n - popcount) % 2 != 0;
    acc = negative ? egf_sub(acc, term) : egf_add(acc, term);
  }
  return acc;
}

EgfSeq permanent_egf(const EgfMatrix& m) {
  require_square(m.rows(), m.cols());
  if (m.rows() > kImmanantCap) return permanent_egf_ryser(m);
  return expand_immanant(m, trivial_shape(m.rows()), &egf_mul);
}

EgfSeq determinant_egf(const EgfMatrix& m) {
  return expand_immanant(m, sign_shape(m.rows()), &egf_mul);
}

EgfSeq immanant_egf(const EgfMatrix& m, const Partition& lambda) {
  return expand_immanant(m, lambda, &egf_mul);
}

EgfSeq hadamard_permanent(const EgfMatrix& m) {
  return expand_immanant(m, trivial_shape(m.rows()), &egf_hadamard);
}

EgfSeq hadamard_determinant(const EgfMatrix& m) {
  return expand_immanant(m, sign_shape(m.rows()), &egf_hadamard);
}

EgfSeq hadamard_immanant(const EgfMatrix& m, const Partition& lambda) {
  return expand_immanant(m, lambda, &egf_hadamard);
}

Ring permanent(const RingMatrix& m) { return expand_immanant_scalar(m, trivial_shape(m.rows())); }

Ring determinant(const RingMatrix& m) { return expand_immanant_scalar(m, sign_shape(m.rows())); }

Ring immanant(const RingMatrix& m, const Partition& lambda) {
  return expand_immanant_scalar(m, lambda);
}

} // namespace latwalk
