#include "bertrand/fock.hpp"

#include <cfloat>
#include <cstdio>
#include <cmath>
#include <stdexcept>

namespace bertrand::fock {

namespace {

using Complex = std::complex<double>;

// Scaling-and-squaring with a Taylor core. The scaled norm never exceeds 1/2,
// so terms shrink at least geometrically and the truncation criterion below
// bounds the series tail by the last added term.
template <typename Matrix>
Matrix exp_core(const Matrix& m, double tol) {
  const int n = static_cast<int>(m.rows());
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();

  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));

  const Matrix scaled = m * std::ldexp(1.0, -squarings);
  // Squaring roughly doubles the relative error per step; tighten the series
  // target accordingly, floored at what double precision can express.
  const double series_tol = std::max(std::ldexp(tol, -squarings) / 4.0, DBL_EPSILON / 4.0);

  Matrix sum = Matrix::Identity(n, n) + scaled;
  Matrix term = scaled;
  bool converged = false;
  constexpr int kMaxTerms = 64;
  for (int k = 2; k <= kMaxTerms; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (term.norm() <= series_tol * sum.norm()) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("matrix_exp: series did not converge at requested tol");

  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

void require_dim(int n) {
  if (n < 2) throw std::invalid_argument("fock: truncation must be >= 2");
}

}  // namespace

ComplexMatrix annihilation_matrix(int n) {
  require_dim(n);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) m(k - 1, k) = std::sqrt(static_cast<double>(k));
  return m;
}

ComplexMatrix creation_matrix(int n) { return annihilation_matrix(n).adjoint(); }

ComplexMatrix quadrature_matrix(int n) {
  const ComplexMatrix a = annihilation_matrix(n);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

ComplexMatrix matrix_exp(const ComplexMatrix& m, double tol) {
  if (!m.allFinite()) throw std::invalid_argument("matrix_exp: entries must be finite");
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exp: matrix must be square");
  if (!(tol > 0.0)) throw std::invalid_argument("matrix_exp: tol must be positive");
  if (tol < 8.0 * DBL_EPSILON) {
    throw std::runtime_error("matrix_exp: requested tol below attainable precision");
  }
  if (m.imag().isZero(0.0)) {
    return exp_core<Eigen::MatrixXd>(m.real(), tol).cast<Complex>();
  }
  return exp_core<ComplexMatrix>(m, tol);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix displacement(double x, int n) {
  require_dim(n);
  if (x < 0.0 || std::isnan(x)) throw std::invalid_argument("displacement: x must be nonnegative");
  const ComplexMatrix a = annihilation_matrix(n);
  const ComplexMatrix gen = (x / std::sqrt(2.0)) * (a.adjoint() - a);
  return matrix_exp(gen);
}

ComplexMatrix entangler(double gamma, int n) {
  require_dim(n);
  if (gamma < 0.0 || std::isnan(gamma)) {
    throw std::invalid_argument("entangler: gamma must be nonnegative");
  }
  const ComplexMatrix a = annihilation_matrix(n);
  const ComplexMatrix adag = a.adjoint();
  const ComplexMatrix gen = -gamma * (kron(adag, adag) - kron(a, a));
  return matrix_exp(gen);
}

LdmSimulator::LdmSimulator(double gamma, int n)
    : gamma_(gamma), n_(n), j_(entangler(gamma, n)), j_dag_(j_.adjoint()) {}

namespace {

// Probability mass sitting on the top rung of either mode. The truncated
// generators are exactly skew-Hermitian, so the evolution never loses norm;
// truncation damage shows up as weight reflected at the cut instead, and the
// tail budget has to be enforced on this band at every stage.
double top_band_mass(const ComplexVector& psi, int n) {
  double mass = 0.0;
  for (int k = 0; k < n; ++k) {
    mass += std::norm(psi((n - 1) * n + k));
    if (k != n - 1) mass += std::norm(psi(k * n + (n - 1)));
  }
  return mass;
}

}  // namespace

TwoModeState LdmSimulator::final_state(double x1, double x2, double tail_tol) const {
  ComplexVector vac = ComplexVector::Zero(static_cast<Eigen::Index>(n_) * n_);
  vac(0) = 1.0;
  const ComplexMatrix d = kron(displacement(x1, n_), displacement(x2, n_));
  const ComplexVector squeezed = j_ * vac;
  const ComplexVector displaced = d * squeezed;
  const ComplexVector psi = j_dag_ * displaced;

  const auto short_num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return std::string(buf);
  };
  const double tail = std::max({top_band_mass(squeezed, n_), top_band_mass(displaced, n_),
                                top_band_mass(psi, n_)});
  if (tail > tail_tol) {
    throw TruncationError("final_state: " + short_num(tail) +
                          " of the state reached the truncation edge; raise n or loosen tail_tol");
  }
  const double norm = psi.norm();
  if (norm < 1.0 - tail_tol) {
    throw TruncationError("final_state: truncation leaked " + short_num(1.0 - norm) +
                          " of the norm; raise n or loosen tail_tol");
  }
  return {psi, n_};
}

TwoModeState final_state(double x1, double x2, double gamma, int n, double tail_tol) {
  return LdmSimulator(gamma, n).final_state(x1, x2, tail_tol);
}

double expect_quadrature(const TwoModeState& s, int mode) {
  if (mode != 1 && mode != 2) throw std::invalid_argument("expect_quadrature: mode must be 1 or 2");
  const int n = s.truncation;
  if (n < 2 || s.amplitudes.size() != static_cast<Eigen::Index>(n) * n) {
    throw std::invalid_argument("expect_quadrature: state size does not match truncation");
  }
  // Column-major view t(n2, n1) = amplitudes[n1 * n + n2].
  Eigen::Map<const ComplexMatrix> t(s.amplitudes.data(), n, n);
  const ComplexMatrix x = quadrature_matrix(n);

  Complex acc;
  if (mode == 1) {
    acc = t.conjugate().cwiseProduct(t * x.transpose()).sum();
  } else {
    acc = t.conjugate().cwiseProduct(x * t).sum();
  }
  if (std::abs(acc.imag()) > 1e-10) {
    throw std::runtime_error("expect_quadrature: imaginary residue exceeds 1e-10");
  }
  return acc.real();
}

}  // namespace bertrand::fock
