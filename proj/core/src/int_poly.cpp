#include "penner/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace penner {

std::string rational_to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  BigInt num = q.get_num();
  BigInt den = q.get_den();
  std::string sign = sign_of(num) < 0 ? "-" : "";
  num = abs(num);
  BigInt ipart = num / den;
  BigInt rem = num - ipart * den;
  std::string out = sign + ipart.get_str();
  if (digits == 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    BigInt d = rem / den;
    rem -= d * den;
    out += d.get_str();
  }
  return out;
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return make_rational(BigInt(s), 1);
  }
  return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::constant(BigInt v) {
  IntPoly p;
  if (sign_of(v) != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::monomial(BigInt coeff, int k) {
  IntPoly p;
  if (sign_of(coeff) != 0) {
    p.c_.assign(k + 1, BigInt(0));
    p.c_[k] = std::move(coeff);
  }
  return p;
}

void IntPoly::normalize() {
  while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
}

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

const BigInt& IntPoly::operator[](int i) const {
  static const BigInt kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.normalize();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sign_of(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.normalize();
  return r;
}

IntPoly IntPoly::operator*(const BigInt& k) const {
  if (sign_of(k) == 0) return IntPoly();
  IntPoly r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  IntPoly r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigInt(static_cast<long>(i));
  r.normalize();
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  // p(a/b) = S / b^deg with S = sum c_i a^i b^(deg-i), evaluated in integers.
  if (is_zero()) return Rational(0);
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt s(0), bp(1);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    s = s * a + *it * bp;
    if (it + 1 != c_.rend()) bp *= b;
  }
  return make_rational(s, int_pow(b, static_cast<unsigned long>(degree())));
}

int IntPoly::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt s(0), bp(1);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    s = s * a + *it * bp;
    if (it + 1 != c_.rend()) bp *= b;
  }
  return sign_of(s);  // b > 0, so b^deg does not affect the sign
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  IntPoly r = *this;
  for (auto& v : r.c_) v = exact_div(v, g);
  return r;
}

int IntPoly::descartes_sign_variations() const {
  int variations = 0, last = 0;
  for (const auto& v : c_) {
    int s = sign_of(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

BigInt IntPoly::root_bound() const {
  if (degree() < 1) return BigInt(1);
  BigInt lead = abs(leading());
  BigInt maxc(0);
  for (int i = 0; i < degree(); ++i) {
    BigInt a = abs(c_[i]);
    if (a > maxc) maxc = a;
  }
  // 1 + max|c_i| / |c_d|, rounded up.
  BigInt q, r;
  mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    int s = sign_of(c_[i]);
    if (s == 0) continue;
    BigInt a = abs(c_[i]);
    if (first) {
      if (s < 0) os << "-";
      first = false;
    } else {
      os << (s < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (!unit) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Pseudo-remainder with an effectively positive multiplier, so real-root
// sign data is preserved: m * f = q * g + r with m = |lc(g)|^(deg f - deg g + 1).
IntPoly signed_prem(const IntPoly& f, const IntPoly& g) {
  std::vector<BigInt> r(f.coefficients());
  const int dg = g.degree();
  const BigInt& lg = g.leading();
  int steps = f.degree() - dg + 1;
  bool negate = sign_of(lg) < 0 && (steps % 2 == 1);
  for (int pass = 0; pass < steps; ++pass) {
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && sign_of(r[dr]) == 0) --dr;
    if (dr < dg) {
      // Degree dropped early; keep multiplying so the total multiplier is m.
      for (auto& v : r) v *= lg;
      continue;
    }
    BigInt top = r[dr];
    for (int i = 0; i <= dr; ++i) r[i] *= lg;
    for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= top * g[i];
  }
  IntPoly out{std::vector<BigInt>(r.begin(), r.end())};
  if (negate) out = -out;
  return out;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("Sturm chain needs degree >= 1");
  chain_.push_back(p.primitive_part());
  chain_.push_back(p.derivative().primitive_part());
  while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
    IntPoly next = -signed_prem(chain_[chain_.size() - 2], chain_.back());
    if (next.is_zero()) break;
    chain_.push_back(next.primitive_part());
  }
}

int SturmChain::sign_variations_at(const Rational& x) const {
  int variations = 0, last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw std::invalid_argument("count_roots needs a < b");
  return sign_variations_at(a) - sign_variations_at(b);
}

}  // namespace penner
