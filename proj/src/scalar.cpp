#include "qlorentz/scalar.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qlorentz {

QValue::QValue(Rational p_) : p(std::move(p_)) {
  p.canonicalize();
  if (p == 0) throw std::invalid_argument("deformation parameter p must be nonzero");
}

Scalar::Scalar(const LaurentPoly& poly) {
  num_[kOne] = poly;
  normalize();
}

Scalar::Scalar(std::array<LaurentPoly, 4> num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
  if (den_.terms().size() == 1 && !den_.is_one()) {
    // monomial denominator: absorb into the numerators directly
    const auto& t = den_.terms()[0];
    const Rational inv = Rational(1) / t.coeff;
    for (auto& n : num_) n = (n * inv).shifted(-t.exp);
    den_ = LaurentPoly(1);
  }
  normalize();
}

Scalar Scalar::unit(Unit u) {
  Scalar s;
  s.num_[u] = LaurentPoly(1);
  return s;
}

Scalar Scalar::q_minus_qinv() { return Scalar(LaurentPoly::p_power(2) - LaurentPoly::p_power(-2)); }

bool Scalar::is_zero() const {
  return num_[0].is_zero() && num_[1].is_zero() && num_[2].is_zero() && num_[3].is_zero();
}

bool Scalar::is_one() const { return is_polynomial() && num_[0].is_one(); }

bool Scalar::is_real() const { return num_[1].is_zero() && num_[2].is_zero() && num_[3].is_zero(); }

bool Scalar::is_constant() const {
  if (!den_.is_one()) return false;
  for (const auto& n : num_)
    if (!n.is_constant()) return false;
  return true;
}

void Scalar::normalize() {
  if (is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_one()) return;
  const int s = den_.min_exp();
  if (s != 0) {
    den_ = den_.shifted(-s);
    for (auto& n : num_) n = n.shifted(-s);
  }
  if (den_.leading_coeff() != 1) {
    const Rational inv = Rational(1) / den_.leading_coeff();
    den_ *= inv;
    for (auto& n : num_) n *= inv;
  }
  if (den_.is_one()) return;
  LaurentPoly g = den_;
  for (const auto& n : num_) {
    if (n.is_zero()) continue;
    g = LaurentPoly::gcd(g, n);
    if (g.is_one()) return;
  }
  den_ = LaurentPoly::exact_div(den_, g);
  for (auto& n : num_) n = LaurentPoly::exact_div(n, g);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& n : out.num_) n = -n;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    for (int k = 0; k < 4; ++k) num_[k] += o.num_[k];
    if (!den_.is_one()) normalize();
    return *this;
  }
  const LaurentPoly g = LaurentPoly::gcd(den_, o.den_);
  const LaurentPoly a_co = LaurentPoly::exact_div(o.den_, g);
  const LaurentPoly b_co = LaurentPoly::exact_div(den_, g);
  for (int k = 0; k < 4; ++k) num_[k] = num_[k] * a_co + o.num_[k] * b_co;
  den_ = den_ * a_co;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

std::array<LaurentPoly, 4> Scalar::mul_num(const std::array<LaurentPoly, 4>& a, const std::array<LaurentPoly, 4>& b) {
  std::array<LaurentPoly, 4> out{};
  if (a[1].is_zero() && a[2].is_zero() && a[3].is_zero()) {
    for (int k = 0; k < 4; ++k)
      if (!b[k].is_zero()) out[k] = a[0] * b[k];
    return out;
  }
  if (b[1].is_zero() && b[2].is_zero() && b[3].is_zero()) {
    for (int k = 0; k < 4; ++k)
      if (!a[k].is_zero()) out[k] = a[k] * b[0];
    return out;
  }
  // basis 1, i, s, is with i^2 = -1, s^2 = 2
  struct Entry {
    int target;
    int factor;
  };
  static constexpr Entry table[4][4] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, 1}, {0, 2}, {1, 2}},
      {{3, 1}, {2, -1}, {1, 2}, {0, -2}},
  };
  for (int x = 0; x < 4; ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < 4; ++y) {
      if (b[y].is_zero()) continue;
      const Entry e = table[x][y];
      out[e.target] += (a[x] * b[y]) * Rational(e.factor);
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  num_ = mul_num(num_, o.num_);
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero scalar");
  if (is_real()) {
    std::array<LaurentPoly, 4> n{};
    n[0] = den_;
    return Scalar(std::move(n), num_[0]);
  }
  const auto& n0 = num_[0];
  const auto& n1 = num_[1];
  const auto& n2 = num_[2];
  const auto& n3 = num_[3];
  // (u + v sqrt2)^-1 = (u - v sqrt2) / (u^2 - 2 v^2), u, v in Q(p)[i]
  const LaurentPoly w0 = n0 * n0 - n1 * n1 - (n2 * n2 - n3 * n3) * Rational(2);
  const LaurentPoly w1 = n0 * n1 * Rational(2) - n2 * n3 * Rational(4);
  std::array<LaurentPoly, 4> conj_sqrt{n0, n1, -n2, -n3};
  std::array<LaurentPoly, 4> conj_w{w0, -w1, {}, {}};
  auto num = mul_num(conj_sqrt, conj_w);
  for (auto& c : num) c *= den_;
  return Scalar(std::move(num), w0 * w0 + w1 * w1);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  out.num_[kI] = -out.num_[kI];
  out.num_[kISqrt2] = -out.num_[kISqrt2];
  return out;
}

std::optional<Scalar> Scalar::try_at(const QValue& v) const {
  const Rational d = den_.eval(v.p);
  if (d == 0) return std::nullopt;
  std::array<LaurentPoly, 4> num{};
  for (int k = 0; k < 4; ++k)
    if (!num_[k].is_zero()) num[k] = LaurentPoly(num_[k].eval(v.p) / d);
  Scalar out;
  out.num_ = std::move(num);
  return out;
}

Scalar Scalar::at(const QValue& v) const {
  auto out = try_at(v);
  if (!out) throw DivisionByZero("scalar has a pole at p = " + v.str());
  return *out;
}

std::complex<double> Scalar::eval(double p) const {
  const double d = den_.eval(p);
  if (d == 0.0) throw DivisionByZero("scalar has a pole at p = " + std::to_string(p));
  const double r2 = std::sqrt(2.0);
  const std::complex<double> value(num_[0].eval(p) + r2 * num_[2].eval(p), num_[1].eval(p) + r2 * num_[3].eval(p));
  return value / d;
}

namespace {

std::string component_text(const LaurentPoly& poly, const char* unit) {
  if (*unit == '\0') return poly.str();
  if (poly.is_one()) return unit;
  if (poly == LaurentPoly(-1)) return std::string("-") + unit;
  if (poly.terms().size() == 1) return poly.str() + "*" + unit;
  return "(" + poly.str() + ")*" + unit;
}

}  // namespace

std::string Scalar::str() const {
  static constexpr const char* units[4] = {"", "i", "sqrt2", "i*sqrt2"};
  std::string body;
  for (int k = 0; k < 4; ++k) {
    if (num_[k].is_zero()) continue;
    std::string part = component_text(num_[k], units[k]);
    if (body.empty()) {
      body = part;
    } else if (part.front() == '-') {
      body += " - " + part.substr(1);
    } else {
      body += " + " + part;
    }
  }
  if (body.empty()) return "0";
  if (den_.is_one()) return body;
  const std::string den_text = "(" + den_.str() + ")^-1";
  if (!is_single_product()) return "(" + body + ")*" + den_text;
  if (body == "1") return den_text;
  if (body == "-1") return "-" + den_text;
  return body + "*" + den_text;
}

bool Scalar::is_single_product() const {
  int parts = 0;
  for (const auto& n : num_) {
    if (n.is_zero()) continue;
    if (++parts > 1 || n.terms().size() != 1) return false;
  }
  return parts == 1;
}

bool Scalar::is_atomic_text() const {
  int parts = 0;
  for (int k = 0; k < 4; ++k) {
    if (num_[k].is_zero()) continue;
    ++parts;
    if (num_[k].terms().size() != 1 || num_[k].terms()[0].coeff < 0) return false;
  }
  return parts == 1;
}

std::size_t Scalar::hash() const {
  std::size_t h = den_.hash();
  for (const auto& n : num_) h ^= n.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Scalar qnum(int n) { return Scalar(qnum_poly(n)); }

Rational qnum_at(int n, const QValue& v) { return qnum_poly(n).eval(v.p); }

}  // namespace qlorentz
