#include "penner/laurent.hpp"

#include <sstream>

namespace penner {

HalfLaurent HalfLaurent::u_pow(int k, BigInt coeff) {
  HalfLaurent p;
  if (sign_of(coeff) != 0) p.c_[k] = std::move(coeff);
  return p;
}

HalfLaurent HalfLaurent::from_t_poly(const IntPoly& p) {
  HalfLaurent r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (sign_of(p[i]) != 0) r.c_[2 * i] = p[i];
  }
  return r;
}

BigInt HalfLaurent::coeff(int u_exponent) const {
  auto it = c_.find(u_exponent);
  return it == c_.end() ? BigInt(0) : it->second;
}

int HalfLaurent::min_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return c_.begin()->first;
}

int HalfLaurent::max_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return c_.rbegin()->first;
}

void HalfLaurent::add_term(int k, const BigInt& v) {
  if (sign_of(v) == 0) return;
  auto [it, inserted] = c_.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (sign_of(it->second) == 0) c_.erase(it);
  }
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [k, v] : o.c_) r.add_term(k, v);
  return r;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [k, v] : o.c_) r.add_term(k, -v);
  return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
  HalfLaurent r;
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_) r.add_term(ka + kb, va * vb);
  return r;
}

HalfLaurent HalfLaurent::operator*(const BigInt& k) const {
  HalfLaurent r;
  if (sign_of(k) == 0) return r;
  r = *this;
  for (auto& [e, v] : r.c_) v *= k;
  return r;
}

HalfLaurent HalfLaurent::mirror() const {
  HalfLaurent r;
  for (const auto& [k, v] : c_) r.c_[-k] = v;
  return r;
}

IntPoly HalfLaurent::to_t_poly() const {
  if (is_zero()) return IntPoly();
  if (min_exponent() < 0) throw std::domain_error("negative exponents; not a polynomial in t");
  std::vector<BigInt> coeffs(max_exponent() / 2 + 1, BigInt(0));
  for (const auto& [k, v] : c_) {
    if (k % 2 != 0) throw std::domain_error("odd power of sqrt(t); not a polynomial in t");
    coeffs[k / 2] = v;
  }
  return IntPoly(std::move(coeffs));
}

std::string HalfLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [k, v] = *it;
    int s = sign_of(v);
    BigInt a = abs(v);
    if (first) {
      if (s < 0) os << "-";
      first = false;
    } else {
      os << (s < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "u";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

HalfLaurent torus_alexander(int i) {
  if (i < 0) throw std::invalid_argument("torus link index must be >= 0");
  HalfLaurent r;
  for (int j = 0; j < i; ++j) {
    BigInt sign = (j % 2 == 0) ? 1 : -1;
    int e = 2 * i - 1 - 2 * j;
    r = r + HalfLaurent::u_pow(e, sign) - HalfLaurent::u_pow(-e, sign);
  }
  return r;
}

HalfLaurent h_alexander(int d) {
  if (d < 0 || d % 2 != 0) throw std::invalid_argument("H_d needs even d >= 0");
  HalfLaurent skein_factor = HalfLaurent::u_pow(1) - HalfLaurent::u_pow(-1);
  HalfLaurent sum;
  for (int i = 1; i <= d / 2; ++i) sum = sum + torus_alexander(i);
  return skein_factor * (torus_alexander(d / 2) - sum * BigInt(2));
}

HalfLaurent cycle_diff_identity(int d) {
  if (d < 0) throw std::invalid_argument("flow difference must be >= 0");
  HalfLaurent skein_factor = HalfLaurent::u_pow(1) - HalfLaurent::u_pow(-1);
  return skein_factor * (HalfLaurent::u_pow(d + 1) - HalfLaurent::u_pow(-(d + 1)));
}

}  // namespace penner
