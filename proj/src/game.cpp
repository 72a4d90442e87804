#include "bertrand/game.hpp"

#include <cmath>
#include <stdexcept>

namespace bertrand {

namespace {

// Winner's margin times residual demand. All three models route through this
// so the gamma = 0 reductions agree with the classical game bit for bit.
inline double market_payoff(double p, const GameParams& g) { return (p - g.c) * (g.a - p); }

void require_nonnegative(double x1, double x2) {
  if (x1 < 0.0 || x2 < 0.0 || std::isnan(x1) || std::isnan(x2)) {
    throw std::invalid_argument("strategies must be nonnegative");
  }
}

}  // namespace

std::string to_string(Model m) {
  switch (m) {
    case Model::Classical: return "classical";
    case Model::Ldm: return "ldm";
    case Model::TwoQubit: return "two-qubit";
  }
  return "unknown";
}

Model model_from_string(const std::string& name) {
  if (name == "classical") return Model::Classical;
  if (name == "ldm") return Model::Ldm;
  if (name == "two-qubit") return Model::TwoQubit;
  throw std::invalid_argument("unknown model '" + name + "' (expected classical, ldm or two-qubit)");
}

GameParams::GameParams(Model model, double a, double c, double gamma)
    : model(model), a(a), c(c), gamma(gamma) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("GameParams: demand intercept a must be positive and finite");
  }
  if (!(c >= 0.0) || !(c < a)) {
    throw std::invalid_argument("GameParams: marginal cost must satisfy 0 <= c < a");
  }
  switch (model) {
    case Model::Classical:
      break;  // gamma unused
    case Model::Ldm:
      if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("GameParams: ldm gamma must be finite and >= 0");
      }
      break;
    case Model::TwoQubit:
      if (!(gamma >= 0.0) || !(gamma <= kQuarterPi)) {
        throw std::invalid_argument("GameParams: two-qubit gamma must lie in [0, pi/4]");
      }
      break;
  }
}

double demand(double p, const GameParams& g) {
  if (p < 0.0 || std::isnan(p)) throw std::invalid_argument("demand: price must be nonnegative");
  return std::max(g.a - p, 0.0);
}

PricePair ldm_prices(double x1, double x2, double gamma) {
  const double ch = std::cosh(gamma);
  const double sh = std::sinh(gamma);
  return {x1 * ch + x2 * sh, x2 * ch + x1 * sh};
}

PricePair qubit_prices(double x1, double x2, double gamma) {
  if (!(gamma >= 0.0) || !(gamma <= kQuarterPi)) {
    throw std::invalid_argument("qubit_prices: gamma must lie in [0, pi/4]");
  }
  const double cg = std::cos(gamma);
  const double sg = std::sin(gamma);
  const double c2 = cg * cg;
  const double s2 = sg * sg;
  return {x1 * c2 + x2 * s2, x2 * c2 + x1 * s2};
}

PricePair prices(double x1, double x2, const GameParams& g) {
  switch (g.model) {
    case Model::Classical: return {x1, x2};
    case Model::Ldm: return ldm_prices(x1, x2, g.gamma);
    case Model::TwoQubit: return qubit_prices(x1, x2, g.gamma);
  }
  return {};
}

PayoffProfile classical_payoffs(double x1, double x2, const GameParams& g) {
  require_nonnegative(x1, x2);
  PayoffProfile u;
  if (x1 < x2) {
    if (x1 <= g.a) u.u1 = market_payoff(x1, g);
  } else if (x2 < x1) {
    if (x2 <= g.a) u.u2 = market_payoff(x2, g);
  } else if (x1 <= g.a) {
    u.u1 = 0.5 * market_payoff(x1, g);
    u.u2 = 0.5 * market_payoff(x2, g);
  }
  return u;
}

PayoffProfile ldm_payoffs(double x1, double x2, const GameParams& g) {
  require_nonnegative(x1, x2);
  const PricePair p = ldm_prices(x1, x2, g.gamma);
  PayoffProfile u;
  // p1 - p2 has the sign of x1 - x2, so the branch is selected on x.
  if (x1 < x2) {
    if (p.p1 <= g.a) u.u1 = market_payoff(p.p1, g);
  } else if (x2 < x1) {
    if (p.p2 <= g.a) u.u2 = market_payoff(p.p2, g);
  } else if (x1 * std::exp(g.gamma) <= g.a) {
    u.u1 = 0.5 * market_payoff(p.p1, g);
    u.u2 = 0.5 * market_payoff(p.p2, g);
  }
  return u;
}

PayoffProfile qubit_payoffs(double x1, double x2, const GameParams& g) {
  require_nonnegative(x1, x2);
  if (!(g.gamma >= 0.0) || !(g.gamma <= kQuarterPi)) {
    throw std::invalid_argument("qubit_payoffs: gamma must lie in [0, pi/4]");
  }
  PayoffProfile u;
  if (g.gamma == kQuarterPi) {
    // Both prices collapse to the mean, so the market is always split.
    if (x1 + x2 <= 2.0 * g.a) {
      const double mean = 0.5 * (x1 + x2);
      u.u1 = 0.5 * market_payoff(mean, g);
      u.u2 = u.u1;
    }
    return u;
  }
  const PricePair p = qubit_prices(x1, x2, g.gamma);
  if (x1 < x2) {
    if (p.p1 <= g.a) u.u1 = market_payoff(p.p1, g);
  } else if (x2 < x1) {
    if (p.p2 <= g.a) u.u2 = market_payoff(p.p2, g);
  } else if (x1 <= g.a) {
    u.u1 = 0.5 * market_payoff(p.p1, g);
    u.u2 = 0.5 * market_payoff(p.p2, g);
  }
  return u;
}

PayoffProfile payoffs(double x1, double x2, const GameParams& g) {
  switch (g.model) {
    case Model::Classical: return classical_payoffs(x1, x2, g);
    case Model::Ldm: return ldm_payoffs(x1, x2, g);
    case Model::TwoQubit: return qubit_payoffs(x1, x2, g);
  }
  return {};
}

}  // namespace bertrand
