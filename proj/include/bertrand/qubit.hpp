#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bertrand::qubit {

/// cos(gamma)|00> + i sin(gamma)|11>, basis order |00>,|01>,|10>,|11>.
/// gamma in [0, pi/4].
Eigen::Vector4cd qubit_state(double gamma);

/// Partial trace over the complementary qubit; subsystem is 1 or 2.
Eigen::Matrix2cd reduced_density(const Eigen::Vector4cd& psi, int subsystem);

/// tr(M_player rho_player) with M_1 = x1|0><0| + x2|1><1| and M_2 the swap.
/// Equals the closed-form correlated price map.
double price_from_measurement(double x1, double x2, double gamma, int player);

}  // namespace bertrand::qubit
