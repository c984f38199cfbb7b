#pragma once

// Word-level rewriting for the q-oscillator algebra.
//
// An expression is expanded into a linear combination of words in the letters
// q^{(h/2)N_m}, a_m^dagger, a_m and reduced one redex at a time:
//
//   x_m y_n          -> y_n x_m                        (m > n)
//   K^h K^g          -> K^{h+g},  K^0 -> 1
//   a^dagger K^h     -> p^{-h} K^h a^dagger
//   a K^h            -> p^{h} K^h a
//   a a^dagger       -> [N+1]_q
//   a^dagger a       -> [N]_q
//
// Irreducible words are exactly the canonical monomials of normal_form.hpp.
// This path is slow but independent of the closed-form products used by
// multiply(), which makes it useful as a confluence oracle.

#include <map>
#include <vector>

#include "qlorentz/expr.hpp"
#include "qlorentz/normal_form.hpp"

namespace qlorentz {

struct Letter {
  enum class Kind { kQPow, kCreator, kAnnihilator };
  Kind kind = Kind::kQPow;
  int mode = 1;
  int h = 0;  // kQPow only

  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;
using WordSum = std::map<Word, Scalar>;

/// Expands products and commutators into words.  Symbols are looked up in env
/// and inserted as the words of their monomials.
WordSum expand_words(const Expr& e, const Environment<NormalForm>* env = nullptr);

/// Words of a normal form (one word per monomial).
WordSum to_words(const NormalForm& nf);

/// Reduces to the canonical form.  Strategy must be kLeftmost or kRightmost.
NormalForm rewrite_normal_order(WordSum words, Strategy strategy);

}  // namespace qlorentz
