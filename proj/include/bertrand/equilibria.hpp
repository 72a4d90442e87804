#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bertrand/best_reply.hpp"
#include "bertrand/game.hpp"

namespace bertrand {

/// One axis of a family's parameter domain. An unbounded axis runs to +inf
/// and carries a finite stand-in used when sampling.
struct ParamInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;
  bool unbounded = false;
  double sample_cap = 0.0;  // finite hi used for sampling when unbounded
};

/// A parameterized Nash-equilibrium family: one table row. dim 0 is an
/// isolated point, dim 1 a curve or segment, dim 2 a product region.
/// profile_at/payoff_at take the family parameters (unused ones ignored).
struct EquilibriumFamily {
  std::string id;
  int dim = 0;
  std::array<ParamInterval, 2> domain{};
  std::function<StrategyProfile(double, double)> profile_at;
  std::function<PayoffProfile(double, double)> payoff_at;
  std::string description;
};

/// The complete family list for the model/gamma regime: the classical point
/// (c, c) (also for gamma = 0), the 8 Ldm rows, the 8 TwoQubit rows for
/// gamma in (0, pi/4), or the 2 maximally entangled rows.
std::vector<EquilibriumFamily> equilibrium_families(const GameParams& g);

/// Mutual best-reply membership against the analytic correspondences.
bool is_nash(double x1, double x2, const GameParams& g);

/// n parameter values spanning one domain axis. Closed endpoints are
/// included; open endpoints approached at length/(10n); unbounded axes stop
/// at the sample cap (or `cap` when given).
std::vector<double> sample_axis_points(const ParamInterval& iv, int n);
std::vector<double> sample_axis_points(const ParamInterval& iv, int n, double cap);

/// n profiles spanning the family domain (n^2 lattice for dim 2), built from
/// sample_axis_points.
std::vector<StrategyProfile> sample_family(const EquilibriumFamily& f, int n);
std::vector<StrategyProfile> sample_family(const EquilibriumFamily& f, int n, double cap);

/// All grid profiles where no unilateral grid deviation gains more than
/// epsilon, in lexicographic order.
std::vector<StrategyProfile> grid_epsilon_equilibria(const GameParams& g, const ProfileGrid& grid,
                                                     double epsilon);

/// Same epsilon test for a single (possibly off-grid) profile.
bool passes_epsilon_test(double x1, double x2, const GameParams& g, const ProfileGrid& grid,
                         double epsilon);

/// Default epsilon tied to the grid: 2 * a * h.
double default_epsilon(const GameParams& g, const ProfileGrid& grid);

/// max over all profiles of u1 + u2, i.e. (a - c)^2 / 4.
double pareto_bound(const GameParams& g);

/// u1 + u2 >= pareto_bound - 1e-9 * a^2.
bool is_pareto_optimal(const PayoffProfile& u, const GameParams& g);

}  // namespace bertrand
