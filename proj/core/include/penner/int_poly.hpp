#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "penner/bigint.hpp"

namespace penner {

// Dense polynomial over the integers, coefficient of x^i at index i.
// Normalized: no zero leading coefficient; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(BigInt v);
  // c * x^k
  static IntPoly monomial(BigInt coeff, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  const BigInt& operator[](int i) const;
  const std::vector<BigInt>& coefficients() const { return c_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly derivative() const;

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  // Sign of p(x) without building the rational value.
  int sign_at(const Rational& x) const;

  // gcd of coefficients, positive; 0 for the zero polynomial.
  BigInt content() const;
  IntPoly primitive_part() const;

  // Number of sign changes in the coefficient sequence (Descartes).
  int descartes_sign_variations() const;

  // Strict upper bound on the absolute value of any complex root
  // (Cauchy bound), rounded up to an integer.
  BigInt root_bound() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

// Sturm chain of p; sign-variation counts bracket distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);
  // Distinct real roots in the half-open interval (a, b], a < b,
  // assuming p(a) != 0 and p(b) != 0.
  int count_roots(const Rational& a, const Rational& b) const;
  int sign_variations_at(const Rational& x) const;
  const IntPoly& polynomial() const { return chain_.front(); }

 private:
  std::vector<IntPoly> chain_;
};

}  // namespace penner
