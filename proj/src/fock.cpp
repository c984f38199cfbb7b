#include "qlorentz/fock.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

namespace qlorentz {

void FockBlock::finish() {
  index_.clear();
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

FockBlock FockBlock::pair(int n, int first_mode) {
  if (n < 0) throw std::invalid_argument("block number must be non-negative");
  if (first_mode < 1 || first_mode + 1 > kNumModes) throw std::invalid_argument("pair block needs two adjacent modes");
  FockBlock b;
  b.modes_ = {first_mode, first_mode + 1};
  for (int n1 = n; n1 >= 0; --n1) {
    Occupation occ{};
    occ[static_cast<std::size_t>(first_mode - 1)] = n1;
    occ[static_cast<std::size_t>(first_mode)] = n - n1;
    b.basis_.push_back(occ);
  }
  b.label_ = first_mode == 1 ? std::to_string(n) : "(" + std::to_string(n) + ")@" + std::to_string(first_mode);
  b.finish();
  return b;
}

FockBlock FockBlock::lorentz(int n, int nbar) {
  const FockBlock left = pair(n, 1);
  const FockBlock right = pair(nbar, 3);
  FockBlock b;
  b.modes_ = {1, 2, 3, 4};
  for (const auto& x : left.basis_)
    for (const auto& y : right.basis_) b.basis_.push_back({x[0], x[1], y[2], y[3]});
  b.label_ = "(" + std::to_string(n) + "," + std::to_string(nbar) + ")";
  b.finish();
  return b;
}

FockBlock FockBlock::direct_sum(const std::vector<FockBlock>& parts) {
  FockBlock b;
  for (const auto& part : parts) {
    if (part.truncated()) throw std::invalid_argument("direct sum of truncated blocks");
    for (int m : part.modes_)
      if (std::find(b.modes_.begin(), b.modes_.end(), m) == b.modes_.end()) b.modes_.push_back(m);
    for (const auto& occ : part.basis_) {
      if (b.index_.count(occ)) throw std::invalid_argument("direct sum of overlapping blocks");
      b.index_.emplace(occ, b.basis_.size());
      b.basis_.push_back(occ);
    }
    b.label_ += (b.label_.empty() ? "" : "+") + part.label_;
  }
  std::sort(b.modes_.begin(), b.modes_.end());
  return b;
}

FockBlock FockBlock::cutoff(const std::vector<int>& modes, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  FockBlock b;
  b.modes_ = modes;
  std::sort(b.modes_.begin(), b.modes_.end());
  b.cutoff_ = cutoff;
  std::vector<Occupation> states{Occupation{}};
  for (int m : b.modes_) {
    std::vector<Occupation> next;
    for (const auto& s : states)
      for (int k = 0; k <= cutoff; ++k) {
        Occupation t = s;
        t[static_cast<std::size_t>(m - 1)] = k;
        next.push_back(t);
      }
    states = std::move(next);
  }
  b.basis_ = std::move(states);
  b.label_ = "cutoff " + std::to_string(cutoff);
  b.finish();
  return b;
}

std::optional<std::size_t> FockBlock::index_of(const Occupation& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FockBlock::untrusted_rows() const {
  std::vector<std::size_t> out;
  if (!truncated()) return out;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (int m : modes_)
      if (basis_[k][static_cast<std::size_t>(m - 1)] == cutoff_) {
        out.push_back(k);
        break;
      }
  return out;
}

double qnum_float(int n, double p) {
  const double q = p * p;
  double sum = 0.0;
  const int m = std::abs(n);
  for (int k = 0; k < m; ++k) sum += std::pow(q, m - 1 - 2 * k);
  return n < 0 ? -sum : sum;
}

namespace {

// Letter actions and coefficient conversion for one matrix convention.
struct SymbolicField {
  using T = Scalar;
  T coeff(const Scalar& c) const { return c; }
  T lower(int n) const { return qnum(n); }
  T raise(int) const { return Scalar(1); }
  T qpow(int h, int n) const { return Scalar::p_power(h * n); }
};

struct RationalField {
  QValue v;
  using T = Scalar;
  T coeff(const Scalar& c) const { return c.at(v); }
  T lower(int n) const { return Scalar(qnum_at(n, v)); }
  T raise(int) const { return Scalar(1); }
  T qpow(int h, int n) const { return Scalar(LaurentPoly::p_power(h * n).eval(v.p)); }
};

struct FloatField {
  double p;
  using T = std::complex<double>;
  T coeff(const Scalar& c) const { return c.eval(p); }
  T lower(int n) const { return std::sqrt(qnum_float(n, p)); }
  T raise(int n) const { return std::sqrt(qnum_float(n + 1, p)); }
  T qpow(int h, int n) const { return std::pow(p, h * n); }
};

template <class Field>
void apply_column(const std::vector<std::pair<typename Field::T, const Word*>>& words, const FockBlock& block,
                  const Field& field, std::size_t j, Matrix<typename Field::T>& out) {
  using T = typename Field::T;
  for (const auto& [c, word] : words) {
    Occupation occ = block.basis()[j];
    T amp(1);
    bool vanished = false;
    for (auto it = word->rbegin(); it != word->rend(); ++it) {
      int& n = occ[static_cast<std::size_t>(it->mode - 1)];
      switch (it->kind) {
        case Letter::Kind::kQPow:
          if (n != 0) amp *= field.qpow(it->h, n);
          break;
        case Letter::Kind::kCreator:
          amp *= field.raise(n);
          ++n;
          break;
        case Letter::Kind::kAnnihilator:
          if (n == 0) {
            vanished = true;
          } else {
            amp *= field.lower(n);
            --n;
          }
          break;
      }
      if (vanished) break;
    }
    if (vanished || entry_is_zero(amp)) continue;
    auto i = block.index_of(occ);
    if (!i) {
      if (block.truncated()) continue;
      throw GradingError();
    }
    out(*i, j) += c * amp;
  }
}

template <class Field>
Matrix<typename Field::T> apply_words(const WordSum& words, const FockBlock& block, const Field& field, bool parallel) {
  using T = typename Field::T;
  std::vector<std::pair<T, const Word*>> prepared;
  prepared.reserve(words.size());
  for (const auto& [w, c] : words) prepared.emplace_back(field.coeff(c), &w);
  Matrix<T> out(block.dim(), block.dim());
  const auto dim = static_cast<std::ptrdiff_t>(block.dim());
  if (!parallel || dim < 4 || omp_in_parallel()) {
    for (std::ptrdiff_t j = 0; j < dim; ++j) apply_column(prepared, block, field, static_cast<std::size_t>(j), out);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < dim; ++j) {
    try {
      apply_column(prepared, block, field, static_cast<std::size_t>(j), out);
    } catch (...) {
#pragma omp critical(qlorentz_fock_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

bool has_pole(const WordSum& words, const QValue& v) {
  for (const auto& [w, c] : words)
    if (!c.try_at(v)) return true;
  return false;
}

ExactMatrix exact_words(const WordSum& words, const FockBlock& block, const QValue& v, bool parallel) {
  if (has_pole(words, v)) return specialize(apply_words(words, block, SymbolicField{}, parallel), v);
  return apply_words(words, block, RationalField{v}, parallel);
}

}  // namespace

ExactMatrix represent(const NormalForm& nf, const FockBlock& block) {
  return apply_words(to_words(nf), block, SymbolicField{}, true);
}

ExactMatrix represent(const NormalForm& nf, const FockBlock& block, const QValue& v) {
  return exact_words(to_words(nf), block, v, true);
}

FloatMatrix represent_float(const NormalForm& nf, const FockBlock& block, double p) {
  return apply_words(to_words(nf), block, FloatField{p}, true);
}

ExactMatrix represent_words(const WordSum& words, const FockBlock& block, const QValue& v) {
  return exact_words(words, block, v, true);
}

FloatMatrix represent_words_float(const WordSum& words, const FockBlock& block, double p) {
  return apply_words(words, block, FloatField{p}, true);
}

ExactMatrix represent_words_serial(const WordSum& words, const FockBlock& block, const QValue& v) {
  return exact_words(words, block, v, false);
}

FloatMatrix represent_words_float_serial(const WordSum& words, const FockBlock& block, double p) {
  return apply_words(words, block, FloatField{p}, false);
}

ExactMatrix diagonal_operator(const FockBlock& block, const std::function<Scalar(const Occupation&)>& f) {
  ExactMatrix out(block.dim(), block.dim());
  for (std::size_t k = 0; k < block.dim(); ++k) out(k, k) = f(block.basis()[k]);
  return out;
}

ExactMatrix number_operator(int mode, const FockBlock& block) {
  return diagonal_operator(block, [mode](const Occupation& o) { return Scalar(static_cast<long>(o[static_cast<std::size_t>(mode - 1)])); });
}

FloatMatrix spectral_function(const FloatMatrix& m, const std::function<std::complex<double>(std::complex<double>)>& f) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen-decomposition did not converge");
  const Eigen::MatrixXcd v = solver.eigenvectors();
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(v).singularValues();
  const double cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(cond < 1e10)) {
    std::ostringstream os;
    os << "eigenbasis is ill-conditioned (condition estimate " << cond << ")";
    throw std::runtime_error(os.str());
  }
  Eigen::VectorXcd fl(n);
  for (Eigen::Index k = 0; k < n; ++k) fl(k) = f(solver.eigenvalues()(k));
  const Eigen::MatrixXcd r = v * fl.asDiagonal() * v.inverse();
  FloatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
  return out;
}

VerificationReport equivalence_check(const NormalForm& x, const NormalForm& y, const std::vector<FockBlock>& blocks,
                                     const QValue& v, double p_float, const std::string& name) {
  VerificationReport report;
  const NormalForm diff = x - y;
  std::ostringstream pf;
  pf << p_float;
  for (const auto& b : blocks) {
    ReportEntry exact{name, "cross-backend oracle", "exact", b.label(), v.str(), Status::kPass, "exact zero"};
    const ExactMatrix d = represent(diff, b, v);
    if (!d.is_zero()) {
      exact.status = Status::kFail;
      exact.residual = "nonzero matrix difference";
    }
    report.add(exact);
    ReportEntry fl{name, "cross-backend oracle", "float", b.label(), pf.str(), Status::kPass, ""};
    try {
      const double r = frobenius(represent_float(x, b, p_float) - represent_float(y, b, p_float));
      std::ostringstream os;
      os << "frobenius " << r;
      fl.residual = os.str();
      if (!(r <= 1e-10)) fl.status = Status::kFail;
    } catch (const DivisionByZero& e) {
      fl.status = Status::kFail;
      fl.residual = e.what();
    }
    report.add(fl);
  }
  return report;
}

}  // namespace qlorentz
