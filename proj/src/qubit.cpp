#include "bertrand/qubit.hpp"

#include <cmath>
#include <stdexcept>

#include "bertrand/game.hpp"

namespace bertrand::qubit {

namespace {
using Complex = std::complex<double>;
}

Eigen::Vector4cd qubit_state(double gamma) {
  if (!(gamma >= 0.0) || !(gamma <= kQuarterPi)) {
    throw std::invalid_argument("qubit_state: gamma must lie in [0, pi/4]");
  }
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = Complex(std::cos(gamma), 0.0);
  psi(3) = Complex(0.0, std::sin(gamma));
  return psi;
}

Eigen::Matrix2cd reduced_density(const Eigen::Vector4cd& psi, int subsystem) {
  if (subsystem != 1 && subsystem != 2) {
    throw std::invalid_argument("reduced_density: subsystem must be 1 or 2");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("reduced_density: state must be normalized");
  }
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        // Basis index q1*2 + q2; trace out the other qubit.
        if (subsystem == 1) {
          rho(i, j) += psi(2 * i + k) * std::conj(psi(2 * j + k));
        } else {
          rho(i, j) += psi(2 * k + i) * std::conj(psi(2 * k + j));
        }
      }
    }
  }
  return rho;
}

double price_from_measurement(double x1, double x2, double gamma, int player) {
  if (x1 < 0.0 || x2 < 0.0 || std::isnan(x1) || std::isnan(x2)) {
    throw std::invalid_argument("price_from_measurement: strategies must be nonnegative");
  }
  if (player != 1 && player != 2) {
    throw std::invalid_argument("price_from_measurement: player must be 1 or 2");
  }
  const Eigen::Matrix2cd rho = reduced_density(qubit_state(gamma), player);
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  if (player == 1) {
    m(0, 0) = x1;
    m(1, 1) = x2;
  } else {
    m(0, 0) = x2;
    m(1, 1) = x1;
  }
  return (m * rho).trace().real();
}

}  // namespace bertrand::qubit
