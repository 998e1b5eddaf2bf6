#pragma once

#include <cmath>

#include "penner/algebraic_real.hpp"
#include "penner/int_poly.hpp"

namespace penner {

// Point of the open cone C = {(x,y) : y > 0, |x| < y}; x is the flow
// difference coordinate, y the cycle length coordinate.
struct FlowPoint {
  double x;
  double y;

  FlowPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0) || !(std::abs(x) < y)) throw std::domain_error("need y > 0 and |x| < y");
  }
};

// Largest real solution of t - t^((y+x)/2y) - t^((y-x)/2y) - 1 = 0, i.e. of
// h(t,s) = t - t^(1/2+s) - t^(1/2-s) - 1 with s = |x|/(2y). h(1,s) = -2 and
// h is strictly increasing in t past 1, so bisection on an adaptively
// doubled bracket converges; absolute error <= tol.
double dilatation_function(const FlowPoint& p, double tol);
inline double dilatation_function(double x, double y, double tol = 1e-12) {
  return dilatation_function(FlowPoint(x, y), tol);
}

// t^l - t^(l-a) - t^a - 1 with a the least positive solution of ac = 1 (mod l);
// the twist-and-click mapping class dilatation is its largest real root.
IntPoly companion_poly(int l, int c);

// Minimal Penner dilatation on the even-genus surface N_g = N_{2k}:
// (largest root of x^(2k-1) - x^k - x^(k-1) - 1)^(2k-1), as a certified
// power-form algebraic number.
AlgebraicReal even_genus_min(int g, const Rational& precision);

// 3 + 2*sqrt(2), the even-genus limit: root of x^2 - 6x + 1 in (5,6).
AlgebraicReal silver_limit();

// Largest real root of x^4 - 8x^3 + 13x^2 - 8x + 1, the conjectured
// odd-genus limit, approximately 6.071360241468951.
AlgebraicReal conjectured_odd_limit();

}  // namespace penner
