#include "penner/closed_forms.hpp"

#include <cmath>

#include "penner/orientations.hpp"

namespace penner {

double dilatation_function(const FlowPoint& p, double tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  const double s = std::abs(p.x) / (2.0 * p.y);
  auto h = [s](double t) { return t - std::pow(t, 0.5 + s) - std::pow(t, 0.5 - s) - 1.0; };
  double lo = 1.0, hi = 16.0;
  while (h(hi) <= 0) {
    hi *= 2;
    if (hi > 1e300) throw ConvergenceError("dilatation bracket blew up");
  }
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

IntPoly companion_poly(int l, int c) {
  auto [a, d] = twist_and_click_params(l, c);
  (void)d;
  std::vector<BigInt> coeffs(l + 1, BigInt(0));
  coeffs[l] = 1;
  coeffs[l - a] -= 1;
  coeffs[a] -= 1;
  coeffs[0] -= 1;
  return IntPoly(std::move(coeffs));
}

AlgebraicReal even_genus_min(int g, const Rational& precision) {
  if (g < 4 || g % 2 != 0) throw std::invalid_argument("even_genus_min needs even genus >= 4");
  const int k = g / 2;
  const int deg = 2 * k - 1;
  std::vector<BigInt> coeffs(deg + 1, BigInt(0));
  coeffs[deg] = 1;
  coeffs[k] = -1;
  coeffs[k - 1] = -1;
  coeffs[0] = -1;
  IntPoly p(std::move(coeffs));
  AlgebraicReal root = largest_real_root(p, Rational(1, 16));
  AlgebraicReal value(root.poly(), root.base_lo(), root.base_hi(), static_cast<unsigned>(deg));
  value.refine_value_to(precision);
  return value;
}

AlgebraicReal silver_limit() {
  AlgebraicReal r(IntPoly{1, -6, 1}, Rational(5), Rational(6));
  r.refine_value_to(make_rational(1, BigInt(10) * 1000000000000000L));  // 1e-16
  return r;
}

AlgebraicReal conjectured_odd_limit() {
  IntPoly p{1, -8, 13, -8, 1};
  AlgebraicReal r = largest_real_root(p, make_rational(1, BigInt(10) * 1000000000000000L));
  return r;
}

}  // namespace penner
