#pragma once

// Matrix representations of the q-oscillator algebra on number-graded Fock blocks.
//
// Two conventions for the ladder operators:
//   exact_shift:      a|n> = [n]_q |n-1>,       a^dagger|n> = |n+1>
//   float_symmetric:  a|n> = sqrt([n]_q) |n-1>, a^dagger|n> = sqrt([n+1]_q) |n+1>
// Both satisfy a a^dagger - q^{-+1} a^dagger a = q^{+-N}.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlorentz/matrix.hpp"
#include "qlorentz/normal_form.hpp"
#include "qlorentz/report.hpp"
#include "qlorentz/rewrite.hpp"

namespace qlorentz {

using Occupation = std::array<int, kNumModes>;

enum class Backend { kExactShift, kFloatSymmetric };

class FockBlock {
 public:
  /// Modes (m, m+1) with n_m + n_{m+1} = n, ordered by n_m descending.
  static FockBlock pair(int n, int first_mode = 1);
  /// Product of the pair blocks n (modes 1,2) and nbar (modes 3,4).
  static FockBlock lorentz(int n, int nbar);
  /// Direct sum of blocks; bases are concatenated in order.
  static FockBlock direct_sum(const std::vector<FockBlock>& parts);
  /// All occupations 0..cutoff on the given modes.  Operators that leave the
  /// span are truncated; rows touching the cutoff are untrusted.
  static FockBlock cutoff(const std::vector<int>& modes, int cutoff);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Occupation>& basis() const { return basis_; }
  const std::vector<int>& modes() const { return modes_; }
  std::optional<std::size_t> index_of(const Occupation& occ) const;
  const std::string& label() const { return label_; }
  bool truncated() const { return cutoff_ >= 0; }
  /// Rows whose state sits on the cutoff boundary (empty for graded blocks).
  std::vector<std::size_t> untrusted_rows() const;

 private:
  std::vector<int> modes_;
  std::vector<Occupation> basis_;
  std::map<Occupation, std::size_t> index_;
  std::string label_;
  int cutoff_ = -1;

  void finish();
};

class GradingError : public std::runtime_error {
 public:
  GradingError() : std::runtime_error("operator leaves graded block") {}
};

/// Exact matrix with entries in Q(p)(i, sqrt2) (exact_shift convention).
ExactMatrix represent(const NormalForm& nf, const FockBlock& block);
/// Exact matrix at a rational p.  Coefficients with a pole at p (such as the
/// 1/(q - q^-1) of [N]_q) are handled by specializing the symbolic matrix.
ExactMatrix represent(const NormalForm& nf, const FockBlock& block, const QValue& v);
/// float_symmetric matrix at real p; throws DivisionByZero at a coefficient pole.
FloatMatrix represent_float(const NormalForm& nf, const FockBlock& block, double p);

/// Sum of words applied letter by letter to basis states (naive evaluation).
ExactMatrix represent_words(const WordSum& words, const FockBlock& block, const QValue& v);
FloatMatrix represent_words_float(const WordSum& words, const FockBlock& block, double p);
/// Serial references for the two word kernels above.
ExactMatrix represent_words_serial(const WordSum& words, const FockBlock& block, const QValue& v);
FloatMatrix represent_words_float_serial(const WordSum& words, const FockBlock& block, double p);

/// diag(f(occupation)) on the block, e.g. linear number operators.
ExactMatrix diagonal_operator(const FockBlock& block, const std::function<Scalar(const Occupation&)>& f);
ExactMatrix number_operator(int mode, const FockBlock& block);

/// q-number [n]_q at real p; exact at p = +-1.
double qnum_float(int n, double p);

/// f applied to the eigenvalues of m in its eigenbasis.  Throws std::runtime_error
/// (with the condition estimate) when the eigenvector matrix is ill-conditioned.
FloatMatrix spectral_function(const FloatMatrix& m, const std::function<std::complex<double>(std::complex<double>)>& f);

/// Block-by-block comparison of two normal forms: exact at v and float at p_float.
VerificationReport equivalence_check(const NormalForm& x, const NormalForm& y, const std::vector<FockBlock>& blocks,
                                     const QValue& v, double p_float, const std::string& name = "equivalence");

}  // namespace qlorentz
