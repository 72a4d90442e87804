#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bertrand/game.hpp"

namespace bertrand {

/// Set-valued best reply. The five variants span every branch of the
/// closed-form correspondences; Empty means the supremum is approached but
/// never attained (undercutting), which is distinct from Full indifference.
struct ReplySet {
  enum class Kind { Empty, Point, ClosedRay, OpenRay, Full };

  Kind kind = Kind::Empty;
  double value = 0.0;  // Point: the reply; rays: the endpoint; unused otherwise

  static ReplySet empty() { return {Kind::Empty, 0.0}; }
  static ReplySet point(double v) { return {Kind::Point, v}; }
  static ReplySet closed_ray(double lo) { return {Kind::ClosedRay, lo}; }  // {x : x >= lo}
  static ReplySet open_ray(double lo) { return {Kind::OpenRay, lo}; }      // {x : x > lo}
  static ReplySet full() { return {Kind::Full, 0.0}; }                     // [0, inf)
};

std::string to_string(ReplySet::Kind k);

/// Membership with exact ray endpoints; Point membership uses the given
/// absolute tolerance to absorb rounding in derived breakpoints.
bool contains(const ReplySet& s, double x, double point_tol = 0.0);

/// Point tolerance used by Nash verification: 1e-12 * max(1, a).
double point_tolerance(const GameParams& g);

/// Branch boundaries of a best-reply correspondence, shared by the analytic
/// replies, the equilibrium tables and plot emission. `self` and `mix` are
/// the own/cross price weights (cosh/sinh for Ldm, cos^2/sin^2 for TwoQubit,
/// 1/0 classically). Unreachable boundaries are +inf.
struct BranchGeometry {
  double self = 1.0;
  double mix = 0.0;
  double undercut = 0.0;     // below: overbid; exactly: any x >= undercut
  double empty_hi = 0.0;     // (undercut, empty_hi]: no best reply
  double interior_hi = 0.0;  // (empty_hi, interior_hi]: interior point reply
  double full_lo = 0.0;      // [full_lo, inf): payoff identically zero
};

BranchGeometry branch_geometry(const GameParams& g);

/// Named finite breakpoints for the current model, in increasing order.
std::vector<std::pair<std::string, double>> breakpoint_table(const GameParams& g);

// Analytic correspondences. Both players' maps are symmetric, so `player`
// only selects whose reply is being asked for. Ldm and TwoQubit reduce to
// the classical map at gamma = 0; TwoQubit at gamma = pi/4 switches to the
// shared-market map Point(a+c-opp) / Point(0) / Full.
ReplySet classical_best_reply(int player, double opp, const GameParams& g);
ReplySet ldm_best_reply(int player, double opp, const GameParams& g);
ReplySet qubit_best_reply(int player, double opp, const GameParams& g);
ReplySet best_reply(int player, double opp, const GameParams& g);

/// Uniform grid {0, h, 2h, ..., ~x_max} used by the brute-force oracles.
struct ProfileGrid {
  ProfileGrid(double x_max, double h);

  double x_max = 0.0;
  double h = 0.0;

  int size() const { return points_; }
  double at(int i) const { return i * h; }

 private:
  int points_ = 0;
};

/// x_max = max(2a, min(1.2 a / s, 50 a)) with s = sinh(gamma) (Ldm) or
/// sin^2(gamma) (TwoQubit); plain 2a classically. h = x_max / 2000.
ProfileGrid default_grid(const GameParams& g);

/// All grid points maximizing `player`'s payoff against a fixed opponent
/// value, ties resolved at relative tolerance 1e-12. Independent of the
/// analytic correspondences above.
std::vector<double> grid_best_reply_oracle(int player, double opp, const GameParams& g,
                                           const ProfileGrid& grid);

/// Oracle contract between an analytic reply and the grid maximizers:
/// Point replies have a maximizer within h; Empty replies cluster at the
/// grid point immediately below opp (the supremum is approached from
/// below); ray and Full replies contain every maximizer up to one
/// boundary cell, with Full covering the whole grid.
bool oracle_agrees(const ReplySet& analytic, const std::vector<double>& maximizers, double opp,
                   const ProfileGrid& grid);

}  // namespace bertrand
