#include "qlorentz/matrix.hpp"

#include <sstream>

namespace qlorentz {

ExactMatrix specialize(const ExactMatrix& m, const QValue& v) {
  return m.map([&v](const Scalar& s) { return s.is_zero() ? Scalar() : s.at(v); });
}

FloatMatrix to_float(const ExactMatrix& m, double p) {
  return m.map([p](const Scalar& s) { return s.is_zero() ? std::complex<double>() : s.eval(p); });
}

double frobenius(const FloatMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sum += std::norm(m(i, j));
  return std::sqrt(sum);
}

FloatMatrix adjoint(const FloatMatrix& m) {
  FloatMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

std::string to_json_text(const ExactMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << '"' << m(i, j).str() << '"';
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string to_text(const ExactMatrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = m(i, j).str();
      width = std::max(width, cells[i * m.cols() + j].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      os << (j ? "  " : " ") << std::string(width - c.size(), ' ') << c;
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace qlorentz
