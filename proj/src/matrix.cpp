#include "latwalk/matrix.hpp"

#include "latwalk/error.hpp"

namespace latwalk {

RingMatrix::RingMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::shape_mismatch, "negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Ring());
}

RingMatrix RingMatrix::identity(int n) {
  RingMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Ring(1);
  return m;
}

size_t RingMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    fail(errc::shape_mismatch, "matrix index out of range");
  return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

bool RingMatrix::operator==(const RingMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RingMatrix mat_add(const RingMatrix& x, const RingMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    fail(errc::shape_mismatch, "matrix sum shape mismatch");
  RingMatrix out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) + y.at(i, j);
  return out;
}

RingMatrix mat_mul(const RingMatrix& x, const RingMatrix& y) {
  if (x.cols() != y.rows()) fail(errc::shape_mismatch, "matrix product shape mismatch");
  RingMatrix out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols(); ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

RingMatrix kron_product(const RingMatrix& x, const RingMatrix& y) {
  RingMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i1 = 0; i1 < x.rows(); ++i1)
    for (int j1 = 0; j1 < x.cols(); ++j1) {
      if (x.at(i1, j1).is_zero()) continue;
      for (int i2 = 0; i2 < y.rows(); ++i2)
        for (int j2 = 0; j2 < y.cols(); ++j2)
          out.at(i1 * y.rows() + i2, j1 * y.cols() + j2) = x.at(i1, j1) * y.at(i2, j2);
    }
  return out;
}

RingMatrix kron_sum(const RingMatrix& x, const RingMatrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols())
    fail(errc::shape_mismatch, "kronecker sum needs square inputs");
  return mat_add(kron_product(x, RingMatrix::identity(y.rows())),
                 kron_product(RingMatrix::identity(x.rows()), y));
}

} // namespace latwalk
