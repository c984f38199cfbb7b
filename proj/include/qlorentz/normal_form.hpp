#pragma once

// Canonical (PBW) form of the multi-mode q-oscillator algebra.
//
// Per mode m the algebra is generated by a_m, a_m^dagger and the
// exponentials q^{c N_m} subject to
//
//   a a^dagger - q^-1 a^dagger a = q^N,    a a^dagger - q a^dagger a = q^-N,
//   a q^{cN} = q^c q^{cN} a,               a^dagger q^{cN} = q^-c q^{cN} a^dagger.
//
// Together the first two give a^dagger a = [N]_q and a a^dagger = [N+1]_q, so
// every element is a unique finite sum of monomials
//
//   coeff * prod_m q^{c_m N_m} (a_m^dagger)^{r_m} (a_m)^{s_m},   min(r_m, s_m) = 0,
//
// with distinct modes commuting.  Exponents c_m are half-integers and are
// stored as h_m = 2 c_m, the exponent of p in p^{h N}.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlorentz/scalar.hpp"

namespace qlorentz {

inline constexpr int kNumModes = 4;

/// q^{(h/2) N} (a^dagger)^r a^s for a single mode.
struct ModeFactor {
  int h = 0;
  int r = 0;
  int s = 0;

  bool is_identity() const { return h == 0 && r == 0 && s == 0; }
  bool is_diagonal() const { return r == 0 && s == 0; }
  auto operator<=>(const ModeFactor&) const = default;
};

struct Monomial {
  std::array<ModeFactor, kNumModes> modes{};

  static Monomial identity() { return {}; }
  /// mode is 1-based.
  ModeFactor& operator[](int mode) { return modes[static_cast<std::size_t>(mode - 1)]; }
  const ModeFactor& operator[](int mode) const { return modes[static_cast<std::size_t>(mode - 1)]; }

  bool is_identity() const;
  bool is_diagonal() const;
  /// Net number of quanta created in `mode` (r - s).
  int charge(int mode) const { return (*this)[mode].r - (*this)[mode].s; }
  std::string str() const;
  auto operator<=>(const Monomial&) const = default;
};

class NormalForm {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  NormalForm() = default;
  NormalForm(const Scalar& c);  // NOLINT(google-explicit-constructor)
  NormalForm(long c) : NormalForm(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static NormalForm term(const Monomial& m, const Scalar& c = Scalar(1));
  static NormalForm creator(int mode);
  static NormalForm annihilator(int mode);
  /// q^{(h/2) N_mode}.
  static NormalForm qpow(int h, int mode);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Multiple of the identity (including zero).
  bool is_scalar() const;
  std::optional<Scalar> as_scalar() const;
  Scalar coeff(const Monomial& m) const;
  /// Bitmask of modes touched (bit m-1 for mode m).
  unsigned mode_mask() const;

  void add_term(const Monomial& m, const Scalar& c);

  NormalForm operator-() const;
  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  NormalForm& operator*=(const Scalar& c);
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(NormalForm a, const Scalar& c) { return a *= c; }
  friend NormalForm operator*(const Scalar& c, NormalForm a) { return a *= c; }
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
  bool operator==(const NormalForm& o) const { return terms_ == o.terms_; }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }

  NormalForm pow(int k) const;

  /// Canonical DSL text; "0" for zero.  Terms in monomial order; within a
  /// monomial q-powers, then creators, then annihilators, modes ascending.
  std::string str() const;

 private:
  TermMap terms_;
};

/// Product of two monomials as a normal form.
NormalForm multiply(const Monomial& a, const Monomial& b);
/// Product of normal forms, OpenMP-parallel over the left operand's terms.
NormalForm multiply(const NormalForm& a, const NormalForm& b);
/// Single-threaded reference for multiply().
NormalForm multiply_serial(const NormalForm& a, const NormalForm& b);

/// x y - y x.
NormalForm commutator(const NormalForm& x, const NormalForm& y);
/// x y - w y x.
NormalForm commutator(const NormalForm& x, const NormalForm& y, const Scalar& w);

/// Product of one-mode factors x y in the one-mode algebra, as (coeff, factor) pairs.
std::vector<std::pair<Scalar, ModeFactor>> multiply_mode(const ModeFactor& x, const ModeFactor& y);

/// Text of a half-integer stored in halves, e.g. 1 -> "1/2", -2 -> "-1".
std::string half_text(int halves);

}  // namespace qlorentz
