#pragma once

#include "latwalk/ring.hpp"

#include <vector>

namespace latwalk {

class RingMatrix {
public:
  RingMatrix(int rows, int cols);
  static RingMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Ring& at(int i, int j) { return data_[index(i, j)]; }
  const Ring& at(int i, int j) const { return data_[index(i, j)]; }

  bool operator==(const RingMatrix& rhs) const;
  bool operator!=(const RingMatrix& rhs) const { return !(*this == rhs); }

private:
  size_t index(int i, int j) const;
  int rows_, cols_;
  std::vector<Ring> data_;
};

RingMatrix mat_add(const RingMatrix& x, const RingMatrix& y);
RingMatrix mat_mul(const RingMatrix& x, const RingMatrix& y);

// Entry ((i1,i2),(j1,j2)) = x(i1,j1) * y(i2,j2), second index fastest.
RingMatrix kron_product(const RingMatrix& x, const RingMatrix& y);

// x (x) I + I (x) y, square inputs only.
RingMatrix kron_sum(const RingMatrix& x, const RingMatrix& y);

} // namespace latwalk
