#include "penner/big_matrix.hpp"

namespace penner {

BigMatrix BigMatrix::identity(int n) {
  BigMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  BigMatrix r(n_);
  BigInt tmp;
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const BigInt& a = at(i, k);
      if (sign_of(a) == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const BigInt& b = o.at(k, j);
        if (sign_of(b) == 0) continue;
        tmp = a * b;
        r.at(i, j) += tmp;
      }
    }
  }
  return r;
}

BigMatrix BigMatrix::operator+(const BigMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  BigMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

void BigMatrix::row_axpy(int target, int source, const BigInt& k) {
  if (target == source) throw std::invalid_argument("row_axpy on one row");
  BigInt* t = &e_[static_cast<size_t>(target) * n_];
  const BigInt* s = &e_[static_cast<size_t>(source) * n_];
  for (int j = 0; j < n_; ++j) t[j] += k * s[j];
}

std::vector<BigInt> BigMatrix::apply(const std::vector<BigInt>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("dimension mismatch");
  std::vector<BigInt> y(n_, BigInt(0));
  for (int i = 0; i < n_; ++i) {
    const BigInt* row = &e_[static_cast<size_t>(i) * n_];
    for (int j = 0; j < n_; ++j) {
      if (sign_of(row[j]) != 0) y[i] += row[j] * x[j];
    }
  }
  return y;
}

BigInt BigMatrix::trace() const {
  BigInt t(0);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool BigMatrix::is_nonnegative() const {
  for (const auto& v : e_)
    if (sign_of(v) < 0) return false;
  return true;
}

BigInt BigMatrix::det() const {
  if (n_ == 0) return BigInt(1);
  BigMatrix a = *this;
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (sign_of(a.at(k, k)) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n_; ++i) {
        if (sign_of(a.at(i, k)) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return BigInt(0);
      for (int j = 0; j < n_; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n_ - 1, n_ - 1) : -a.at(n_ - 1, n_ - 1);
}

IntPoly BigMatrix::char_poly(int dim_limit) const {
  if (n_ > dim_limit)
    throw ResourceLimitError("char_poly: dimension " + std::to_string(n_) +
                             " exceeds limit " + std::to_string(dim_limit));
  // Faddeev-LeVerrier: B_0 = I, c_0 = 1;
  // for k = 1..n: A_k = M B_{k-1}, c_k = -tr(A_k)/k, B_k = A_k + c_k I.
  std::vector<BigInt> coeffs(n_ + 1, BigInt(0));
  coeffs[n_] = 1;
  BigMatrix b = identity(n_);
  for (int k = 1; k <= n_; ++k) {
    BigMatrix a = (*this) * b;
    BigInt c = exact_div(-a.trace(), BigInt(k));
    coeffs[n_ - k] = c;
    b = a;
    for (int i = 0; i < n_; ++i) b.at(i, i) += c;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace penner
