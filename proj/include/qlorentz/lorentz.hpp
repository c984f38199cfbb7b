#pragma once

// q-Lorentz algebra from two commuting SU_q(2) copies on modes (1,2) and (3,4).
//
// Chiral labels: qJ3, qmJ3, Jp, Jm and the barred copy qJ3b, qmJ3b, Jpb, Jmb.
// Rotations and boosts: J1, J2, K1, K2 as normal forms; J3 and K3 are linear
// in the number operators and exist only as block matrices.  BJ3 and BK3 are
// the braces {2 J3}_q and {2 K3}_q.

#include <string>
#include <vector>

#include "qlorentz/fock.hpp"
#include "qlorentz/relations.hpp"
#include "qlorentz/suq2.hpp"

namespace qlorentz {

enum class Variant { kCorrected, kPaperLiteral };

struct LorentzGenerators {
  Variant variant = Variant::kCorrected;
  Environment<NormalForm> chiral;
  Environment<NormalForm> rotation_boost;  // J1, J2, K1, K2
  NormalForm brace_j3;
  NormalForm brace_k3;

  /// All normal-form labels, including BJ3 and BK3.
  Environment<NormalForm> env() const;
};

/// The two commuting copies; barred labels carry the suffix "b".
Environment<NormalForm> chiral_generators();

/// The printed J2 lacks the 1/i of the classical J2; kCorrected restores it.
LorentzGenerators rotation_boost_generators(Variant v = Variant::kCorrected);
/// Same construction from explicit Drinfel'd-Jimbo (or Kulish) generator sets.
LorentzGenerators rotation_boost_generators(Variant v, const GeneratorSet& unbarred, const GeneratorSet& barred);
/// Rotations and boosts written through Woronowicz generators, mapped back with
/// the fourth root of tau3 (see TransformOptions for the printed variant).
LorentzGenerators woronowicz_form(const GeneratorSet& unbarred_w, const GeneratorSet& barred_w, const TransformOptions& opt = {});

enum class BraceKind { kRotation, kBoost };
/// {2 J_k}_q or {2 K_k}_q.  Only k = 3 is diagonal; other k throw std::domain_error.
NormalForm brace(BraceKind kind, int k);

/// Linear J3 = (N1 - N2 + N3 - N4)/2 and K3 = -i(N1 - N2 - N3 + N4)/2 on a block.
ExactMatrix linear_j3(const FockBlock& block);
ExactMatrix linear_k3(const FockBlock& block);

/// Kulish relations for both copies and all cross commutators.
RelationSet chiral_relations();
/// Rows whose index k is 3: [J1,J2] = i/2 {2J3}_q and the rest, plus [J_i,K_i] = 0.
RelationSet lorentz_diagonal_relations();
/// Rows with k != 3 under the undeformed reading [2 J_k] = 2 J_k.  They involve
/// J3 or K3 linearly and are checked on blocks.
RelationSet lorentz_linear_relations();
/// Classical table [K_i,K_j] = -i e_ijk J_k, [J_i,J_j] = i e_ijk J_k, [J_i,K_j] = i e_ijk K_k.
RelationSet classical_lorentz_relations();

/// Block matrices of J1..K3 and the chiral labels, symbolic in p.
Environment<ExactMatrix> block_environment(const LorentzGenerators& g, const FockBlock& block);

/// Full verification: chiral relations, diagonal rows symbolically and on
/// blocks (n, nbar) with n, nbar <= max_n, linear rows on the same blocks.
VerificationReport verify_lorentz_relations(const LorentzGenerators& g, int max_n, const std::vector<Rational>& p_values);

/// Classical table at p = 1 on (1,0)+(0,1).
VerificationReport classical_limit_check(const LorentzGenerators& g);

/// Float experiment: k != 3 rows with [2 J_k]_q read as the q-number of the
/// matrix 2 J_k (spectral calculus).  Entries that do not close are flagged.
VerificationReport spectral_experiment(const LorentzGenerators& g, const FockBlock& block, double p);

/// 4x4 block embedding of two 2x2 fundamental representations.
Environment<ExactMatrix> fundamental_rep4();

enum class CounitVariant { kStandard, kPaperLiteral };

struct HopfMaps {
  CounitVariant counit_variant = CounitVariant::kStandard;
  /// Delta(label) = sum of left (x) right, both in the chiral labels.
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> coproduct;
  std::map<std::string, Scalar> counit;
  std::map<std::string, std::string> antipode;
};

HopfMaps hopf_maps(CounitVariant v = CounitVariant::kStandard);

/// Homomorphism (16x16), coassociativity (64x64), counit and antipode axioms
/// (4x4) on the fundamental representation.  Under the printed counit the
/// ladder counit and antipode rows are expected to fail and come out flagged.
VerificationReport hopf_axiom_check(const HopfMaps& h);

}  // namespace qlorentz
