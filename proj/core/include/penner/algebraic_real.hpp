#pragma once

#include <memory>
#include <string>

#include "penner/bigint.hpp"
#include "penner/int_poly.hpp"

namespace penner {

// Exact real number: an integer polynomial vanishing at a base root plus a
// rational interval isolating that root, refinable to any width by exact
// bisection. The represented value is base_root^power; the power form exists
// so that quantities like (largest root of x^(2k-1)-x^k-x^(k-1)-1)^(2k-1)
// stay certified without computing a defining polynomial of the power.
class AlgebraicReal {
 public:
  // Interval [lo, hi] must isolate exactly one root of p; for power > 1
  // the interval must be nonnegative.
  AlgebraicReal(IntPoly p, Rational lo, Rational hi, unsigned power = 1);

  static AlgebraicReal exact(Rational value);

  const IntPoly& poly() const { return poly_; }
  unsigned power() const { return power_; }

  Rational base_lo() const { return lo_; }
  Rational base_hi() const { return hi_; }
  // Enclosure of the represented value (base^power).
  Rational lo() const;
  Rational hi() const;
  Rational width() const { return hi() - lo(); }
  bool is_exact() const { return lo_ == hi_; }

  double approx() const;

  // One exact bisection step on the base interval.
  void refine_step();
  // Refine until the value enclosure has width <= eps.
  void refine_value_to(const Rational& eps);

  // Decimal expansion of the midpoint, for printing.
  std::string decimal(int digits) const;

 private:
  IntPoly poly_;
  Rational lo_, hi_;
  unsigned power_;
  int sign_at_lo_;
  // Fallback for roots without a sign change across the interval.
  std::shared_ptr<const SturmChain> chain_;

  void ensure_refinable();
};

// Isolate the largest real root of p and refine the enclosure to width
// <= precision. Requires a real root > 0 (domain_error otherwise, matching
// the contract for dilatation-style polynomials).
AlgebraicReal largest_real_root(const IntPoly& p, const Rational& precision);

}  // namespace penner
