#include "bertrand/equilibria.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bertrand {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Finite stand-in for a ray to infinity. 3a normally; when the ray starts
// above 3a (small mixing weight pushes a/s out) keep a 2a-long window.
double ray_cap(double lo, double a) { return 3.0 * a > lo ? 3.0 * a : lo + 2.0 * a; }

ParamInterval closed_interval(double lo, double hi) { return {lo, hi, false, false, false, 0.0}; }

ParamInterval open_interval(double lo, double hi) { return {lo, hi, true, true, false, 0.0}; }

ParamInterval ray_from(double lo, double a) { return {lo, kInf, false, false, true, ray_cap(lo, a)}; }

std::vector<EquilibriumFamily> classical_families(const GameParams& g) {
  const double c = g.c;
  EquilibriumFamily point;
  point.id = "point";
  point.dim = 0;
  point.profile_at = [c](double, double) { return StrategyProfile{c, c}; };
  point.payoff_at = [](double, double) { return PayoffProfile{0.0, 0.0}; };
  point.description = "x1 = x2 = c";
  return {point};
}

// The eight table rows shared by the Ldm game (gamma > 0) and the two-qubit
// game (gamma in (0, pi/4)); they differ only in the price weights and the
// undercut threshold baked into the branch geometry.
std::vector<EquilibriumFamily> correlated_families(const GameParams& g, const std::string& self_sym,
                                                   const std::string& mix_sym,
                                                   const std::string& undercut_sym) {
  const BranchGeometry bg = branch_geometry(g);
  const double a = g.a;
  const double c = g.c;
  const double half = 0.5 * (a + c);
  const double quarter = 0.25 * (a - c) * (a - c);
  const double self = bg.self;
  const double mix = bg.mix;

  std::vector<EquilibriumFamily> fams;

  {
    EquilibriumFamily f;
    f.id = "point";
    f.dim = 0;
    const double u = bg.undercut;
    f.profile_at = [u](double, double) { return StrategyProfile{u, u}; };
    f.payoff_at = [](double, double) { return PayoffProfile{0.0, 0.0}; };
    f.description = "x1 = x2 = " + undercut_sym;
    fams.push_back(std::move(f));
  }
  {
    EquilibriumFamily f;
    f.id = "ridge-1";
    f.dim = 1;
    f.domain[0] = closed_interval(0.0, bg.undercut);
    f.profile_at = [half, self, mix](double t, double) {
      return StrategyProfile{t, (half - t * self) / mix};
    };
    f.payoff_at = [quarter](double, double) { return PayoffProfile{quarter, 0.0}; };
    f.description = "(t, ((a+c)/2 - t " + self_sym + ") / " + mix_sym + "), t in [0, " +
                    undercut_sym + "]; player 1 sells at the monopoly price";
    fams.push_back(std::move(f));
  }
  {
    EquilibriumFamily f;
    f.id = "ridge-2";
    f.dim = 1;
    f.domain[0] = closed_interval(0.0, bg.undercut);
    f.profile_at = [half, self, mix](double t, double) {
      return StrategyProfile{(half - t * self) / mix, t};
    };
    f.payoff_at = [quarter](double, double) { return PayoffProfile{0.0, quarter}; };
    f.description = "(((a+c)/2 - t " + self_sym + ") / " + mix_sym + ", t), t in [0, " +
                    undercut_sym + "]; player 2 sells at the monopoly price";
    fams.push_back(std::move(f));
  }
  {
    EquilibriumFamily f;
    f.id = "axis-1";
    f.dim = 1;
    f.domain[0] = open_interval(bg.interior_hi, bg.full_lo);
    f.profile_at = [](double t, double) { return StrategyProfile{0.0, t}; };
    f.payoff_at = [a, c, mix](double t, double) {
      return PayoffProfile{(t * mix - c) * (a - t * mix), 0.0};
    };
    f.description = "(0, t), t in ((a+c)/(2 " + mix_sym + "), a/" + mix_sym + ")";
    fams.push_back(std::move(f));
  }
  {
    EquilibriumFamily f;
    f.id = "axis-2";
    f.dim = 1;
    f.domain[0] = open_interval(bg.interior_hi, bg.full_lo);
    f.profile_at = [](double t, double) { return StrategyProfile{t, 0.0}; };
    f.payoff_at = [a, c, mix](double t, double) {
      return PayoffProfile{0.0, (t * mix - c) * (a - t * mix)};
    };
    f.description = "(t, 0), t in ((a+c)/(2 " + mix_sym + "), a/" + mix_sym + ")";
    fams.push_back(std::move(f));
  }
  {
    EquilibriumFamily f;
    f.id = "region-lo-hi";
    f.dim = 2;
    f.domain[0] = closed_interval(0.0, bg.undercut);
    f.domain[1] = ray_from(bg.full_lo, a);
    f.profile_at = [](double t1, double t2) { return StrategyProfile{t1, t2}; };
    f.payoff_at = [](double, double) { return PayoffProfile{0.0, 0.0}; };
    f.description = "x1 in [0, " + undercut_sym + "], x2 in [a/" + mix_sym + ", inf)";
    fams.push_back(std::move(f));
  }
  {
    EquilibriumFamily f;
    f.id = "region-hi-lo";
    f.dim = 2;
    f.domain[0] = ray_from(bg.full_lo, a);
    f.domain[1] = closed_interval(0.0, bg.undercut);
    f.profile_at = [](double t1, double t2) { return StrategyProfile{t1, t2}; };
    f.payoff_at = [](double, double) { return PayoffProfile{0.0, 0.0}; };
    f.description = "x1 in [a/" + mix_sym + ", inf), x2 in [0, " + undercut_sym + "]";
    fams.push_back(std::move(f));
  }
  {
    EquilibriumFamily f;
    f.id = "region-hi-hi";
    f.dim = 2;
    f.domain[0] = ray_from(bg.full_lo, a);
    f.domain[1] = ray_from(bg.full_lo, a);
    f.profile_at = [](double t1, double t2) { return StrategyProfile{t1, t2}; };
    f.payoff_at = [](double, double) { return PayoffProfile{0.0, 0.0}; };
    f.description = "x1, x2 in [a/" + mix_sym + ", inf)";
    fams.push_back(std::move(f));
  }
  return fams;
}

std::vector<EquilibriumFamily> maximally_entangled_families(const GameParams& g) {
  const double a = g.a;
  const double c = g.c;
  const double sum = a + c;
  const double eighth = 0.125 * (a - c) * (a - c);

  std::vector<EquilibriumFamily> fams;
  {
    EquilibriumFamily f;
    f.id = "zero-region";
    f.dim = 2;
    f.domain[0] = ray_from(2.0 * a, a);
    f.domain[1] = ray_from(2.0 * a, a);
    f.profile_at = [](double t1, double t2) { return StrategyProfile{t1, t2}; };
    f.payoff_at = [](double, double) { return PayoffProfile{0.0, 0.0}; };
    f.description = "x1, x2 in [2a, inf)";
    fams.push_back(std::move(f));
  }
  {
    EquilibriumFamily f;
    f.id = "pareto-segment";
    f.dim = 1;
    f.domain[0] = closed_interval(0.0, sum);
    f.profile_at = [sum](double t, double) { return StrategyProfile{t, sum - t}; };
    f.payoff_at = [eighth](double, double) { return PayoffProfile{eighth, eighth}; };
    f.description = "(t, a+c-t), t in [0, a+c]; both sell at the monopoly price";
    fams.push_back(std::move(f));
  }
  return fams;
}

// One axis of sample points. Closed endpoints included, open endpoints
// approached at length/(10n), rays truncated at the cap.
std::vector<double> sample_axis(const ParamInterval& iv, int n, std::optional<double> cap) {
  if (n < 1) throw std::invalid_argument("sample_axis_points: n must be >= 1");
  const double lo = iv.lo;
  const double hi = iv.unbounded ? cap.value_or(iv.sample_cap) : iv.hi;
  const double len = hi - lo;
  const double inset = len / (10.0 * n);
  const double lo_eff = iv.lo_open ? lo + inset : lo;
  const double hi_eff = (iv.hi_open && !iv.unbounded) ? hi - inset : hi;

  std::vector<double> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(0.5 * (lo_eff + hi_eff));
    return out;
  }
  for (int k = 0; k < n; ++k) {
    out.push_back(lo_eff + (hi_eff - lo_eff) * (static_cast<double>(k) / (n - 1)));
  }
  return out;
}

std::vector<StrategyProfile> sample_family_impl(const EquilibriumFamily& f, int n,
                                                std::optional<double> cap) {
  if (n < 1) throw std::invalid_argument("sample_family: n must be >= 1");
  std::vector<StrategyProfile> out;
  switch (f.dim) {
    case 0:
      out.assign(n, f.profile_at(0.0, 0.0));
      break;
    case 1:
      for (double t : sample_axis(f.domain[0], n, cap)) out.push_back(f.profile_at(t, 0.0));
      break;
    case 2:
      for (double t1 : sample_axis(f.domain[0], n, cap)) {
        for (double t2 : sample_axis(f.domain[1], n, cap)) {
          out.push_back(f.profile_at(t1, t2));
        }
      }
      break;
    default:
      throw std::invalid_argument("sample_family: unsupported dimension");
  }
  return out;
}

}  // namespace

std::vector<double> sample_axis_points(const ParamInterval& iv, int n) {
  return sample_axis(iv, n, std::nullopt);
}

std::vector<double> sample_axis_points(const ParamInterval& iv, int n, double cap) {
  return sample_axis(iv, n, cap);
}

std::vector<EquilibriumFamily> equilibrium_families(const GameParams& g) {
  switch (g.model) {
    case Model::Classical:
      return classical_families(g);
    case Model::Ldm:
      if (g.gamma == 0.0) return classical_families(g);
      return correlated_families(g, "cosh(gamma)", "sinh(gamma)", "c/e^gamma");
    case Model::TwoQubit:
      if (g.gamma == 0.0) return classical_families(g);
      if (g.gamma == kQuarterPi) return maximally_entangled_families(g);
      return correlated_families(g, "cos^2(gamma)", "sin^2(gamma)", "c");
  }
  return {};
}

bool is_nash(double x1, double x2, const GameParams& g) {
  const double tol = point_tolerance(g);
  return contains(best_reply(1, x2, g), x1, tol) && contains(best_reply(2, x1, g), x2, tol);
}

std::vector<StrategyProfile> sample_family(const EquilibriumFamily& f, int n) {
  return sample_family_impl(f, n, std::nullopt);
}

std::vector<StrategyProfile> sample_family(const EquilibriumFamily& f, int n, double cap) {
  return sample_family_impl(f, n, cap);
}

std::vector<StrategyProfile> grid_epsilon_equilibria(const GameParams& g, const ProfileGrid& grid,
                                                     double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("grid_epsilon_equilibria: epsilon must be > 0");
  const int m = grid.size();
  if (m <= 0) throw std::invalid_argument("grid_epsilon_equilibria: empty grid");

  // best1[j] = best payoff player 1 can get against x2 = grid[j]; mirror for 2.
  std::vector<double> best1(m, -kInf);
  std::vector<double> best2(m, -kInf);
  for (int i = 0; i < m; ++i) {
    const double x1 = grid.at(i);
    for (int j = 0; j < m; ++j) {
      const PayoffProfile u = payoffs(x1, grid.at(j), g);
      if (u.u1 > best1[j]) best1[j] = u.u1;
      if (u.u2 > best2[i]) best2[i] = u.u2;
    }
  }

  std::vector<StrategyProfile> out;
  for (int i = 0; i < m; ++i) {
    const double x1 = grid.at(i);
    for (int j = 0; j < m; ++j) {
      const double x2 = grid.at(j);
      const PayoffProfile u = payoffs(x1, x2, g);
      if (u.u1 >= best1[j] - epsilon && u.u2 >= best2[i] - epsilon) {
        out.push_back({x1, x2});
      }
    }
  }
  return out;
}

bool passes_epsilon_test(double x1, double x2, const GameParams& g, const ProfileGrid& grid,
                         double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("passes_epsilon_test: epsilon must be > 0");
  const PayoffProfile u = payoffs(x1, x2, g);
  double best1 = -kInf;
  double best2 = -kInf;
  for (int i = 0; i < grid.size(); ++i) {
    const double x = grid.at(i);
    best1 = std::max(best1, payoffs(x, x2, g).u1);
    best2 = std::max(best2, payoffs(x1, x, g).u2);
  }
  return u.u1 >= best1 - epsilon && u.u2 >= best2 - epsilon;
}

double default_epsilon(const GameParams& g, const ProfileGrid& grid) { return 2.0 * g.a * grid.h; }

double pareto_bound(const GameParams& g) { return 0.25 * (g.a - g.c) * (g.a - g.c); }

bool is_pareto_optimal(const PayoffProfile& u, const GameParams& g) {
  return u.u1 + u.u2 >= pareto_bound(g) - 1e-9 * g.a * g.a;
}

}  // namespace bertrand
