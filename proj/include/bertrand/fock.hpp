#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace bertrand::fock {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Thrown when a truncated state loses more norm than its declared budget.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTailTol = 1e-8;

/// n x n ladder operator: entry sqrt(k) at (k-1, k). Requires n >= 2.
ComplexMatrix annihilation_matrix(int n);
ComplexMatrix creation_matrix(int n);

/// Quadrature (a + a^dag) / sqrt(2).
ComplexMatrix quadrature_matrix(int n);

/// Dense matrix exponential by scaling-and-squaring with a Taylor core.
/// Guarantees relative accuracy `tol` or throws. Purely real inputs take a
/// real-arithmetic path (4x faster, same result).
ComplexMatrix matrix_exp(const ComplexMatrix& m, double tol = 1e-12);

/// Kronecker product with mode-1-major index convention: the left factor
/// acts on the slow index, out(i1*rows(b)+i2, j1*cols(b)+j2) = a(i1,j1)*b(i2,j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Single-mode displacement exp(x (a^dag - a) / sqrt(2)) for x >= 0.
ComplexMatrix displacement(double x, int n);

/// Two-mode squeezer exp(-gamma (a1^dag a2^dag - a1 a2)) on the n^2 space.
ComplexMatrix entangler(double gamma, int n);

/// Two-mode pure state; amplitudes[n1 * truncation + n2] is <n1 n2|psi>.
struct TwoModeState {
  ComplexVector amplitudes;
  int truncation = 0;
};

/// Caches the entangler for one (gamma, n) so many strategy profiles can be
/// pushed through J^dag (D1 x D2) J |00> cheaply.
class LdmSimulator {
 public:
  LdmSimulator(double gamma, int n);

  TwoModeState final_state(double x1, double x2, double tail_tol = kDefaultTailTol) const;

  double gamma() const { return gamma_; }
  int truncation() const { return n_; }

 private:
  double gamma_;
  int n_;
  ComplexMatrix j_;
  ComplexMatrix j_dag_;
};

/// One-shot J^dag (D1(x1) x D2(x2)) J |00>. Throws TruncationError when more
/// than tail_tol of any intermediate state's mass reaches the truncation
/// edge (or, equivalently vacuous for these unitary stages, when the final
/// norm drops below 1 - tail_tol).
TwoModeState final_state(double x1, double x2, double gamma, int n,
                         double tail_tol = kDefaultTailTol);

/// <psi| X_mode |psi| with X = (a + a^dag)/sqrt(2) on the designated mode and
/// identity on the other. Throws if the imaginary residue exceeds 1e-10.
double expect_quadrature(const TwoModeState& s, int mode);

}  // namespace bertrand::fock
