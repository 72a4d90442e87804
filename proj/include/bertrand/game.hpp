#pragma once

#include <numbers>
#include <string>

namespace bertrand {

/// Which price map drives the duopoly.
enum class Model { Classical, Ldm, TwoQubit };

std::string to_string(Model m);
Model model_from_string(const std::string& name);  // "classical" | "ldm" | "two-qubit"

inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

/// Game parameters, validated once at construction. Every free function below
/// trusts its GameParams and performs no parameter re-validation.
///
/// Requirements: a > 0, 0 <= c < a; gamma >= 0 for Ldm, gamma in [0, pi/4]
/// for TwoQubit. Classical ignores gamma.
struct GameParams {
  Model model = Model::Classical;
  double a = 1.0;      // demand intercept
  double c = 0.0;      // marginal cost
  double gamma = 0.0;  // entanglement parameter

  GameParams(Model model, double a, double c, double gamma = 0.0);

  // TwoQubit at maximal entanglement; the payoff structure changes there.
  bool maximally_entangled() const { return model == Model::TwoQubit && gamma == kQuarterPi; }
};

struct StrategyProfile {
  double x1 = 0.0;
  double x2 = 0.0;
};

struct PayoffProfile {
  double u1 = 0.0;
  double u2 = 0.0;
};

struct PricePair {
  double p1 = 0.0;
  double p2 = 0.0;
};

/// Market demand max{a - p, 0}. Rejects p < 0.
double demand(double p, const GameParams& g);

/// p1 = x1 cosh(gamma) + x2 sinh(gamma), p2 symmetric.
PricePair ldm_prices(double x1, double x2, double gamma);

/// p1 = x1 cos^2(gamma) + x2 sin^2(gamma), p2 symmetric. gamma in [0, pi/4].
PricePair qubit_prices(double x1, double x2, double gamma);

/// Model dispatch; Classical maps strategies to prices unchanged.
PricePair prices(double x1, double x2, const GameParams& g);

// Piecewise payoffs. The lower price takes the whole market, equal prices
// split it, and a price above the intercept sells nothing. Branch selection
// uses exact comparisons on the inputs; payoffs below cost stay negative.
PayoffProfile classical_payoffs(double x1, double x2, const GameParams& g);
PayoffProfile ldm_payoffs(double x1, double x2, const GameParams& g);
PayoffProfile qubit_payoffs(double x1, double x2, const GameParams& g);
PayoffProfile payoffs(double x1, double x2, const GameParams& g);

}  // namespace bertrand
