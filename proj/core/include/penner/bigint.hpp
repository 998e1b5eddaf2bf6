#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace penner {

// Exact arithmetic substrate. All certified computations run on these;
// doubles appear only in tolerance-bounded numeric paths.
using BigInt = mpz_class;
using Rational = mpq_class;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPerronFrobeniusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sign_of(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign_of(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

inline double to_double(const BigInt& x) { return x.get_d(); }
inline double to_double(const Rational& x) { return x.get_d(); }

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sign_of(den) == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact quotient; throws if the division is not exact.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sign_of(r) != 0) throw std::logic_error("exact_div: inexact division");
  return q;
}

// Decimal expansion of a rational, truncated toward zero, with `digits`
// places after the point. Deterministic, used for CLI output.
std::string rational_to_decimal(const Rational& q, int digits);

// Parse "p/q" or "p" into a rational.
Rational rational_from_string(const std::string& s);

}  // namespace penner
