#include "bertrand/best_reply.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bertrand {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_player(int player) {
  if (player != 1 && player != 2) throw std::invalid_argument("player must be 1 or 2");
}

// Generic six-branch evaluator. The classical map is the mix = 0 case, where
// the interior reply degenerates to the constant monopoly price (a+c)/2 and
// the last two branches sit at infinity.
ReplySet reply_from_geometry(double opp, const BranchGeometry& bg, const GameParams& g) {
  if (opp < bg.undercut) return ReplySet::open_ray(opp);
  if (opp == bg.undercut) return ReplySet::closed_ray(bg.undercut);
  if (opp <= bg.empty_hi) return ReplySet::empty();
  if (opp <= bg.interior_hi) {
    // Own reply putting the winning price at (a+c)/2; exact algebra keeps it
    // nonnegative on this branch, clamp the rounding residue at the endpoint.
    const double v = (0.5 * (g.a + g.c) - opp * bg.mix) / bg.self;
    return ReplySet::point(v < 0.0 ? 0.0 : v);
  }
  if (opp < bg.full_lo) return ReplySet::point(0.0);
  return ReplySet::full();
}

BranchGeometry classical_geometry(const GameParams& g) {
  return {1.0, 0.0, g.c, 0.5 * (g.a + g.c), kInf, kInf};
}

}  // namespace

std::string to_string(ReplySet::Kind k) {
  switch (k) {
    case ReplySet::Kind::Empty: return "empty";
    case ReplySet::Kind::Point: return "point";
    case ReplySet::Kind::ClosedRay: return "closed-ray";
    case ReplySet::Kind::OpenRay: return "open-ray";
    case ReplySet::Kind::Full: return "full";
  }
  return "unknown";
}

bool contains(const ReplySet& s, double x, double point_tol) {
  if (x < 0.0 || std::isnan(x)) throw std::invalid_argument("contains: x must be nonnegative");
  switch (s.kind) {
    case ReplySet::Kind::Empty: return false;
    case ReplySet::Kind::Point: return std::abs(x - s.value) <= point_tol;
    case ReplySet::Kind::ClosedRay: return x >= s.value;
    case ReplySet::Kind::OpenRay: return x > s.value;
    case ReplySet::Kind::Full: return true;
  }
  return false;
}

double point_tolerance(const GameParams& g) { return 1e-12 * std::max(1.0, g.a); }

BranchGeometry branch_geometry(const GameParams& g) {
  const double half = 0.5 * (g.a + g.c);
  switch (g.model) {
    case Model::Classical:
      return classical_geometry(g);
    case Model::Ldm: {
      if (g.gamma == 0.0) return classical_geometry(g);
      const double eg = std::exp(g.gamma);
      const double sh = std::sinh(g.gamma);
      const double ch = std::cosh(g.gamma);
      return {ch, sh, g.c / eg, half / eg, half / sh, g.a / sh};
    }
    case Model::TwoQubit: {
      if (g.gamma == 0.0) return classical_geometry(g);
      const double cg = std::cos(g.gamma);
      const double sg = std::sin(g.gamma);
      const double c2 = cg * cg;
      const double s2 = sg * sg;
      return {c2, s2, g.c, half, half / s2, g.a / s2};
    }
  }
  return classical_geometry(g);
}

std::vector<std::pair<std::string, double>> breakpoint_table(const GameParams& g) {
  if (g.maximally_entangled()) {
    return {{"interior-hi", g.a + g.c}, {"full-lo", 2.0 * g.a}};
  }
  const BranchGeometry bg = branch_geometry(g);
  std::vector<std::pair<std::string, double>> rows = {{"undercut", bg.undercut},
                                                      {"empty-hi", bg.empty_hi}};
  if (std::isfinite(bg.interior_hi)) rows.emplace_back("interior-hi", bg.interior_hi);
  if (std::isfinite(bg.full_lo)) rows.emplace_back("full-lo", bg.full_lo);
  return rows;
}

ReplySet classical_best_reply(int player, double opp, const GameParams& g) {
  require_player(player);
  if (opp < 0.0 || std::isnan(opp)) throw std::invalid_argument("opp must be nonnegative");
  return reply_from_geometry(opp, classical_geometry(g), g);
}

ReplySet ldm_best_reply(int player, double opp, const GameParams& g) {
  require_player(player);
  if (opp < 0.0 || std::isnan(opp)) throw std::invalid_argument("opp must be nonnegative");
  if (g.gamma == 0.0) return classical_best_reply(player, opp, g);
  return reply_from_geometry(opp, branch_geometry(g), g);
}

ReplySet qubit_best_reply(int player, double opp, const GameParams& g) {
  require_player(player);
  if (opp < 0.0 || std::isnan(opp)) throw std::invalid_argument("opp must be nonnegative");
  if (!(g.gamma >= 0.0) || !(g.gamma <= kQuarterPi)) {
    throw std::invalid_argument("qubit_best_reply: gamma must lie in [0, pi/4]");
  }
  if (g.gamma == 0.0) return classical_best_reply(player, opp, g);
  if (g.gamma == kQuarterPi) {
    const double sum = g.a + g.c;
    if (opp <= sum) return ReplySet::point(sum - opp);
    if (opp < 2.0 * g.a) return ReplySet::point(0.0);
    return ReplySet::full();
  }
  return reply_from_geometry(opp, branch_geometry(g), g);
}

ReplySet best_reply(int player, double opp, const GameParams& g) {
  switch (g.model) {
    case Model::Classical: return classical_best_reply(player, opp, g);
    case Model::Ldm: return ldm_best_reply(player, opp, g);
    case Model::TwoQubit: return qubit_best_reply(player, opp, g);
  }
  return ReplySet::empty();
}

ProfileGrid::ProfileGrid(double x_max, double h) : x_max(x_max), h(h) {
  if (!(x_max > 0.0) || !std::isfinite(x_max)) {
    throw std::invalid_argument("ProfileGrid: x_max must be positive and finite");
  }
  if (!(h > 0.0) || h > x_max) {
    throw std::invalid_argument("ProfileGrid: step h must satisfy 0 < h <= x_max");
  }
  // Last point stays at or below x_max; the relative slack keeps an exactly
  // divisible x_max from losing its endpoint to rounding.
  points_ = static_cast<int>(std::floor((x_max / h) * (1.0 + 1e-12))) + 1;
}

ProfileGrid default_grid(const GameParams& g) {
  double x_max = 2.0 * g.a;
  if (g.model != Model::Classical) {
    const double s = g.model == Model::Ldm ? std::sinh(g.gamma)
                                           : std::sin(g.gamma) * std::sin(g.gamma);
    const double span = s > 0.0 ? 1.2 * g.a / s : kInf;
    x_max = std::max(2.0 * g.a, std::min(span, 50.0 * g.a));
  }
  return ProfileGrid(x_max, x_max / 2000.0);
}

std::vector<double> grid_best_reply_oracle(int player, double opp, const GameParams& g,
                                           const ProfileGrid& grid) {
  require_player(player);
  if (opp < 0.0 || std::isnan(opp)) throw std::invalid_argument("opp must be nonnegative");
  if (grid.size() <= 0) throw std::invalid_argument("grid_best_reply_oracle: empty grid");

  const auto own_payoff = [&](double x) {
    return player == 1 ? payoffs(x, opp, g).u1 : payoffs(opp, x, g).u2;
  };

  double best = -kInf;
  for (int i = 0; i < grid.size(); ++i) best = std::max(best, own_payoff(grid.at(i)));

  const double tie_tol = 1e-12 * std::max(1.0, std::abs(best));
  std::vector<double> maximizers;
  for (int i = 0; i < grid.size(); ++i) {
    const double x = grid.at(i);
    if (own_payoff(x) >= best - tie_tol) maximizers.push_back(x);
  }
  return maximizers;
}

bool oracle_agrees(const ReplySet& analytic, const std::vector<double>& maximizers, double opp,
                   const ProfileGrid& grid) {
  if (maximizers.empty()) return false;
  const double h = grid.h;
  const double snap = 1e-9 * std::max(1.0, grid.x_max);
  switch (analytic.kind) {
    case ReplySet::Kind::Point: {
      for (double m : maximizers) {
        if (std::abs(m - analytic.value) <= h + snap) return true;
      }
      return false;
    }
    case ReplySet::Kind::Empty: {
      // Largest grid point strictly below opp; undercutting drives the
      // maximizer there.
      int i = static_cast<int>(std::floor(opp / h));
      while (i >= 0 && grid.at(i) >= opp) --i;
      if (i < 0) return false;
      return std::abs(maximizers.back() - grid.at(i)) <= snap;
    }
    case ReplySet::Kind::OpenRay:
    case ReplySet::Kind::ClosedRay: {
      for (double m : maximizers) {
        if (!(m >= analytic.value - h - snap)) return false;
      }
      return true;
    }
    case ReplySet::Kind::Full:
      return static_cast<int>(maximizers.size()) == grid.size();
  }
  return false;
}

}  // namespace bertrand
