#pragma once

// Laurent polynomials in the formal variable p, with exact rational
// coefficients.  Throughout the library q = p^2.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlorentz {

using Rational = mpq_class;
using BigInt = mpz_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Sparse Laurent polynomial sum_k c_k p^k.  Terms are kept sorted by
/// exponent and never hold a zero coefficient.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Rational coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  static LaurentPoly monomial(const Rational& c, int exp);
  static LaurentPoly p_power(int exp) { return monomial(1, exp); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  Rational constant_term() const;
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }
  const Rational& leading_coeff() const { return terms_.back().coeff; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Multiplies by p^k.
  LaurentPoly shifted(int k) const;
  Rational eval(const Rational& p) const;
  double eval(double p) const;

  /// Polynomial division in Q[p], both operands having min_exp() >= 0.
  /// Returns (quotient, remainder).
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
  /// Exact division; the caller guarantees b | a in Q[p, 1/p].
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
  /// Monic gcd normalised to have min_exp() == 0.  gcd(0, 0) == 1.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical text, exponents ascending, e.g. "p^-2 + 1 - 3/2*p^2".
  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
  void add_scaled(const LaurentPoly& o, const Rational& s);
};

/// The q-number [n]_q = (q^n - q^-n)/(q - q^-1) as the Laurent polynomial
/// q^{n-1} + q^{n-3} + ... + q^{1-n} in p.
LaurentPoly qnum_poly(int n);

}  // namespace qlorentz
