#pragma once

#include <vector>

#include "penner/bigint.hpp"
#include "penner/int_poly.hpp"

namespace penner {

// Square matrix over arbitrary-precision integers.
class BigMatrix {
 public:
  BigMatrix() : n_(0) {}
  explicit BigMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, BigInt(0)) {
    if (n < 0) throw std::invalid_argument("negative matrix dimension");
  }
  static BigMatrix identity(int n);

  int dim() const { return n_; }
  BigInt& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const BigInt& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  BigMatrix operator*(const BigMatrix& o) const;
  BigMatrix operator+(const BigMatrix& o) const;
  bool operator==(const BigMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

  // row_target += k * row_source
  void row_axpy(int target, int source, const BigInt& k);

  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;

  BigInt trace() const;
  bool is_nonnegative() const;

  // Fraction-free Gaussian elimination (Bareiss).
  BigInt det() const;

  // Exact characteristic polynomial det(tI - M), monic of degree n,
  // by Faddeev-LeVerrier with exact integer divisions.
  IntPoly char_poly(int dim_limit = 256) const;

 private:
  int n_;
  std::vector<BigInt> e_;
};

}  // namespace penner
