#pragma once

#include <map>
#include <string>

#include "penner/bigint.hpp"
#include "penner/int_poly.hpp"

namespace penner {

// Sparse Laurent polynomial in u = sqrt(t): integer coefficients indexed by
// (possibly negative) powers of u, so half-integer powers of t. Exact
// arithmetic throughout; identities are compared coefficientwise.
class HalfLaurent {
 public:
  HalfLaurent() = default;

  static HalfLaurent u_pow(int k, BigInt coeff = BigInt(1));
  // Embed an integer polynomial in t via t = u^2.
  static HalfLaurent from_t_poly(const IntPoly& p);

  bool is_zero() const { return c_.empty(); }
  const std::map<int, BigInt>& terms() const { return c_; }
  BigInt coeff(int u_exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  HalfLaurent operator-() const;
  HalfLaurent operator+(const HalfLaurent& o) const;
  HalfLaurent operator-(const HalfLaurent& o) const;
  HalfLaurent operator*(const HalfLaurent& o) const;
  HalfLaurent operator*(const BigInt& k) const;
  bool operator==(const HalfLaurent& o) const { return c_ == o.c_; }

  // p(u) -> p(1/u)
  HalfLaurent mirror() const;
  // Alexander polynomials here satisfy p(1/u) == -p(u).
  bool is_antisymmetric() const { return mirror() == -*this; }

  // Interpret as a polynomial in t (requires all exponents even and >= 0).
  IntPoly to_t_poly() const;

  std::string to_string() const;

 private:
  void add_term(int k, const BigInt& v);
  std::map<int, BigInt> c_;
};

// Alexander polynomial of the (2,2i) torus link:
// sum_{j=0}^{i-1} (-1)^j (u^(2i-1-2j) - u^-(2i-1-2j)).
HalfLaurent torus_alexander(int i);

// Alexander polynomial of the link H_d (d even):
// (u - 1/u) (Delta_{T_{2,d}} - 2 sum_{i=1}^{d/2} Delta_{T_{2,2i}}).
HalfLaurent h_alexander(int d);

// Right-hand side of the cycle skein difference:
// Delta_{d,l} - Delta_{d+2,l} = (u - 1/u)(u^(d+1) - u^-(d+1)),
// independent of l.
HalfLaurent cycle_diff_identity(int d);

}  // namespace penner
