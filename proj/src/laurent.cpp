#include "qlorentz/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qlorentz {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
  LaurentPoly out;
  if (c != 0) out.terms_.push_back({exp, c});
  return out;
}

bool LaurentPoly::is_one() const { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1; }

Rational LaurentPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.exp == 0) return t.coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Rational& s) {
  if (o.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back({b->exp, b->coeff * s});
      ++b;
    } else {
      Rational c = a->coeff + b->coeff * s;
      if (c != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) return (a * b.terms_[0].coeff).shifted(b.terms_[0].exp);
  if (a.terms_.size() == 1) return (b * a.terms_[0].coeff).shifted(a.terms_[0].exp);
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) dense[static_cast<std::size_t>(x.exp + y.exp - lo)] += x.coeff * y.coeff;
  LaurentPoly out;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) out.terms_.push_back({static_cast<int>(k) + lo, std::move(dense[k])});
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.exp += k;
  return out;
}

Rational LaurentPoly::eval(const Rational& p) const {
  if (terms_.empty()) return 0;
  if (p == 0 && min_exp() < 0) throw std::domain_error("Laurent polynomial evaluated at p = 0");
  Rational sum = 0;
  for (const auto& t : terms_) {
    const unsigned long k = static_cast<unsigned long>(std::abs(t.exp));
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), p.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), p.get_den_mpz_t(), k);
    Rational pw = t.exp >= 0 ? Rational(n, d) : Rational(d, n);
    pw.canonicalize();
    sum += t.coeff * pw;
  }
  return sum;
}

double LaurentPoly::eval(double p) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.coeff.get_d() * std::pow(p, t.exp);
  return sum;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  LaurentPoly quot;
  LaurentPoly rem = a;
  const int db = b.max_exp();
  const Rational& lb = b.leading_coeff();
  while (!rem.is_zero() && rem.max_exp() >= db) {
    LaurentPoly t = monomial(rem.leading_coeff() / lb, rem.max_exp() - db);
    rem.add_scaled(b * t, -1);
    quot += t;
  }
  return {std::move(quot), std::move(rem)};
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return {};
  const int sa = a.min_exp();
  const int sb = b.min_exp();
  auto [quot, rem] = divmod(a.shifted(-sa), b.shifted(-sb));
  if (!rem.is_zero()) throw std::logic_error("exact_div: remainder is nonzero");
  return quot.shifted(sa - sb);
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly(1);
  LaurentPoly x = a.is_zero() ? a : a.shifted(-a.min_exp());
  LaurentPoly y = b.is_zero() ? b : b.shifted(-b.min_exp());
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    if (!r.is_zero()) r = r.shifted(-r.min_exp());
    x = std::move(y);
    y = std::move(r);
  }
  x *= Rational(1) / x.leading_coeff();
  return x;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.exp == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "p";
    if (t.exp != 1) os << "^" << t.exp;
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& t : terms_) {
    h ^= std::hash<int>{}(t.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(t.coeff.get_str()) + (h << 6) + (h >> 2);
  }
  return h;
}

LaurentPoly qnum_poly(int n) {
  if (n == 0) return {};
  const int m = std::abs(n);
  const Rational sign = n > 0 ? 1 : -1;
  LaurentPoly out;
  // q^{m-1-2k} = p^{2(m-1-2k)}, ascending order k = m-1 .. 0
  for (int k = m - 1; k >= 0; --k) out += LaurentPoly::monomial(sign, 2 * (m - 1 - 2 * k));
  return out;
}

}  // namespace qlorentz
