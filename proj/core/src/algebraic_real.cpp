#include "penner/algebraic_real.hpp"

namespace penner {

AlgebraicReal::AlgebraicReal(IntPoly p, Rational lo, Rational hi, unsigned power)
    : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)), power_(power), sign_at_lo_(0) {
  if (power_ == 0) throw std::invalid_argument("power must be >= 1");
  if (lo_ > hi_) throw std::invalid_argument("empty isolating interval");
  if (power_ > 1 && sign_of(lo_) < 0)
    throw std::invalid_argument("power form needs a nonnegative interval");
  if (lo_ == hi_) {
    if (!poly_.is_zero() && poly_.sign_at(lo_) != 0)
      throw std::invalid_argument("point interval is not a root");
    return;
  }
  sign_at_lo_ = poly_.sign_at(lo_);
  int sign_at_hi = poly_.sign_at(hi_);
  if (sign_at_lo_ == 0) {
    hi_ = lo_;
    return;
  }
  if (sign_at_hi == 0) {
    lo_ = hi_;
    return;
  }
  if (sign_at_lo_ == sign_at_hi) {
    // No sign change (even multiplicity); refine through Sturm counts.
    chain_ = std::make_shared<SturmChain>(poly_);
    if (chain_->count_roots(lo_, hi_) != 1)
      throw std::invalid_argument("interval does not isolate one root");
  }
}

AlgebraicReal AlgebraicReal::exact(Rational value) {
  AlgebraicReal r(IntPoly::zero(), value, value, 1);
  return r;
}

Rational AlgebraicReal::lo() const {
  return power_ == 1 ? lo_ : rat_pow(lo_, power_);
}

Rational AlgebraicReal::hi() const {
  return power_ == 1 ? hi_ : rat_pow(hi_, power_);
}

double AlgebraicReal::approx() const { return to_double((lo() + hi()) / 2); }

void AlgebraicReal::refine_step() {
  if (lo_ == hi_) return;
  Rational mid = (lo_ + hi_) / 2;
  int s = poly_.sign_at(mid);
  if (s == 0) {
    lo_ = mid;
    hi_ = mid;
    return;
  }
  if (chain_) {
    if (chain_->count_roots(mid, hi_) >= 1)
      lo_ = mid;
    else
      hi_ = mid;
    return;
  }
  if (s == sign_at_lo_)
    lo_ = mid;
  else
    hi_ = mid;
}

void AlgebraicReal::refine_value_to(const Rational& eps) {
  if (sign_of(eps) <= 0) throw std::invalid_argument("eps must be positive");
  while (!(hi() - lo() <= eps)) {
    if (lo_ == hi_) return;
    refine_step();
  }
}

std::string AlgebraicReal::decimal(int digits) const {
  return rational_to_decimal((lo() + hi()) / 2, digits);
}

namespace {

// Integer polynomial with the same roots as p(x)/(x - r), r a rational root.
// Synthetic division in rationals, then denominators cleared.
IntPoly deflate_rational_root(const IntPoly& p, const Rational& r) {
  int d = p.degree();
  std::vector<Rational> h(d);
  Rational acc(0);
  for (int i = d; i >= 1; --i) {
    acc = acc * r + Rational(p[i]);
    h[i - 1] = acc;
  }
  BigInt common(1);
  for (const auto& q : h) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<BigInt> out(d);
  for (int i = 0; i < d; ++i) {
    Rational scaled = h[i] * Rational(common);
    out[i] = scaled.get_num();  // denominator is 1 after scaling
  }
  return IntPoly(std::move(out)).primitive_part();
}

}  // namespace

AlgebraicReal largest_real_root(const IntPoly& p_in, const Rational& precision) {
  if (p_in.degree() < 1) throw std::invalid_argument("largest_real_root needs degree >= 1");
  IntPoly p = sign_of(p_in.leading()) > 0 ? p_in : -p_in;
  // Strip roots at zero so interval endpoints are never roots.
  while (p.degree() >= 1 && sign_of(p[0]) == 0) p = deflate_rational_root(p, Rational(0));

  Rational bound(p.root_bound());
  auto chain = std::make_unique<SturmChain>(p);
  if (p.degree() < 1 || chain->count_roots(Rational(0), bound) == 0)
    throw std::domain_error("polynomial has no real root in (0, inf)");

  // The largest real root is the largest root in (0, bound].
  Rational lo(0), hi = bound;
  Rational exact_candidate(0);
  bool have_exact = false;
  while (true) {
    Rational mid = (lo + hi) / 2;
    int s = p.sign_at(mid);
    if (s == 0) {
      // Rational root at the midpoint: deflate and keep looking above it.
      exact_candidate = mid;
      have_exact = true;
      while (p.degree() >= 1 && p.sign_at(mid) == 0) p = deflate_rational_root(p, mid);
      if (p.degree() < 1) return AlgebraicReal::exact(mid);
      chain = std::make_unique<SturmChain>(p);
      lo = mid;
      if (chain->count_roots(lo, hi) == 0) return AlgebraicReal::exact(mid);
      continue;
    }
    if (chain->count_roots(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
    int in_window = chain->count_roots(lo, hi);
    if (in_window == 0) {
      // Everything above lo was a deflated rational root.
      if (have_exact) return AlgebraicReal::exact(exact_candidate);
      throw std::logic_error("largest_real_root: lost the root window");
    }
    if (in_window == 1) {
      int sl = p.sign_at(lo), sh = p.sign_at(hi);
      // With a sign change the plain bisection in AlgebraicReal takes over;
      // otherwise keep narrowing so the Sturm-backed refinement starts tight.
      if (sl != 0 && sh != 0 && sl != sh) break;
      if (hi - lo <= precision) break;
    }
  }
  AlgebraicReal root(p, lo, hi, 1);
  root.refine_value_to(precision);
  return root;
}

}  // namespace penner
