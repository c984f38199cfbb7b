#pragma once

// SU_q(2) generators built from pairs of q-bosons, the dictionary between
// the Kulish, Drinfel'd-Jimbo, tau and Woronowicz bases, and the 2x2
// fundamental representations.
//
// Labels per basis:
//   Kulish, Drinfel'd-Jimbo   qJ3, qmJ3, Jp, Jm     (q^{J3}, q^{-J3}, J+, J-)
//   tau                       tau3, Tp, Tm
//   Woronowicz                T3, Tp, Tm
// J3 itself is a logarithm of q^{J3} and only exists in matrix sets.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qlorentz/expr.hpp"
#include "qlorentz/matrix.hpp"
#include "qlorentz/normal_form.hpp"
#include "qlorentz/relations.hpp"

namespace qlorentz {

enum class BasisId { kKulish, kDrinfeldJimbo, kWoronowicz, kTau };
enum class Chirality { kUnbarred, kBarred };

std::string to_string(BasisId b);
/// "kulish", "drinfeld-jimbo", "woronowicz", "tau" (also "jimbo", "dj").
BasisId basis_from_string(const std::string& s);

class UnrepresentableGenerator : public std::domain_error {
 public:
  UnrepresentableGenerator() : std::domain_error("only exponential generators are representable") {}
};

struct GeneratorSet {
  BasisId basis = BasisId::kKulish;
  Chirality chirality = Chirality::kUnbarred;
  std::map<std::string, NormalForm> elements;

  /// Throws UnrepresentableGenerator for "J3", std::out_of_range for unknown labels.
  const NormalForm& at(const std::string& label) const;
  /// Elements keyed by label + suffix.
  Environment<NormalForm> env(const std::string& suffix = "") const;
};

/// Modes (1, 2) for unbarred, (3, 4) for barred.
int first_mode(Chirality c);

/// J+ = ad a', J- = ad' a, q^{+-J3} = q^{+-(N - N')/2} on the chosen mode pair.
GeneratorSet js_generators(Chirality c = Chirality::kUnbarred);

struct TransformOptions {
  /// Use the printed direct map T3 = (1 - q^{4J3})/(q - q^-1) and the printed
  /// inverse q^{J3} = (1 - (q - q^-1)T3)^{1/4}.  The consistent choice is
  /// q^{-4J3} in both places, which agrees with the two-stage map via tau.
  bool paper_literal = false;
};

/// Map a generator set to another basis.  Woronowicz and tau sets are mapped
/// back through the fourth root of tau3, which is exact for q-boson images.
GeneratorSet basis_transform(const GeneratorSet& g, BasisId target, const TransformOptions& opt = {});
/// Drinfel'd-Jimbo to Woronowicz through tau3 = q^{-4J3} and tau3 = 1 - (q - q^-1)T3.
GeneratorSet woronowicz_via_tau(const GeneratorSet& g);

/// k-th root of a single diagonal monomial with unit coefficient.
std::optional<NormalForm> diagonal_root(const NormalForm& x, int k);

struct MatrixSet {
  BasisId basis = BasisId::kKulish;
  Environment<ExactMatrix> elements;
};

/// 2x2 fundamental representation.  The Drinfel'd-Jimbo set carries J3 as
/// well; with paper_literal its J- has the printed entry q + q^-1.
MatrixSet fundamental_rep(BasisId b, bool paper_literal = false);

/// Defining relations of a basis in the expression language.  J3 enters
/// through q^{J3}; linear_j3 adds [J3, J+-] = +-J+- for matrix sets.
RelationSet basis_relations(BasisId b, bool linear_j3 = false);
/// Classical su(2) relations in the Drinfel'd-Jimbo labels.
RelationSet classical_relations();

}  // namespace qlorentz
