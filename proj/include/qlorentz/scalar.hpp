#pragma once

// Exact scalars: the fraction field Q(p) extended by i and sqrt2.
//
// A Scalar is (n0 + n1*i + n2*sqrt2 + n3*i*sqrt2) / d with n_k, d Laurent
// polynomials over Q.  The denominator is real, monic and has lowest
// exponent 0, and gcd(d, n0, .., n3) = 1, so equal values have equal
// representations.

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "qlorentz/laurent.hpp"

namespace qlorentz {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation point for the deformation parameter: p, with q = p^2.
struct QValue {
  Rational p;

  explicit QValue(Rational p_);
  Rational q() const { return p * p; }
  /// True when q - 1/q vanishes, i.e. p = +-1.
  bool classical() const { return p == 1 || p == -1; }
  std::string str() const { return p.get_str(); }
};

class Scalar {
 public:
  enum Unit { kOne = 0, kI = 1, kSqrt2 = 2, kISqrt2 = 3 };

  Scalar() = default;
  Scalar(const Rational& c) : Scalar(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long c) : Scalar(Rational(c)) {}                 // NOLINT(google-explicit-constructor)
  Scalar(const LaurentPoly& poly);                        // NOLINT(google-explicit-constructor)
  Scalar(std::array<LaurentPoly, 4> num, LaurentPoly den);

  static Scalar p_power(int k) { return Scalar(LaurentPoly::p_power(k)); }
  /// q^k = p^(2k).
  static Scalar q_power(int k) { return p_power(2 * k); }
  static Scalar i() { return unit(kI); }
  static Scalar sqrt2() { return unit(kSqrt2); }
  static Scalar unit(Unit u);
  /// q - q^-1.
  static Scalar q_minus_qinv();

  const LaurentPoly& num(Unit u) const { return num_[u]; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  /// No i or sqrt2 component.
  bool is_real() const;
  /// Real with denominator 1.
  bool is_polynomial() const { return is_real() && den_.is_one(); }
  /// Independent of p (a constant in Q(i, sqrt2)).
  bool is_constant() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const { return den_ == o.den_ && num_ == o.num_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(int k) const;
  /// Complex conjugate (i -> -i); p is treated as real.
  Scalar conj() const;

  /// Specialises p to a rational value.  Throws DivisionByZero at a pole.
  Scalar at(const QValue& v) const;
  /// Like at(), but returns nullopt at a pole.
  std::optional<Scalar> try_at(const QValue& v) const;
  /// Float evaluation with the positive branch of sqrt2.
  std::complex<double> eval(double p) const;

  /// Canonical DSL text, e.g. "p^-2 + p^2", "(1 + i)", "(p^2)*(p^4 - 1)^-1".
  std::string str() const;
  /// True when str() needs no parentheses as a factor of a product.
  bool is_atomic_text() const;
  std::size_t hash() const;

 private:
  std::array<LaurentPoly, 4> num_{};
  LaurentPoly den_ = LaurentPoly(1);

  void normalize();
  bool is_single_product() const;
  static std::array<LaurentPoly, 4> mul_num(const std::array<LaurentPoly, 4>& a, const std::array<LaurentPoly, 4>& b);
};

/// q-number [n]_q as an exact (polynomial) scalar; valid at p = 1.
Scalar qnum(int n);
/// [n]_q at a rational point.
Rational qnum_at(int n, const QValue& v);

}  // namespace qlorentz
