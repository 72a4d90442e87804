#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bertrand/equilibria.hpp"
#include "bertrand/game.hpp"

using namespace bertrand;

namespace {

const double kLn2 = std::numbers::ln2;
const double kPi = std::numbers::pi;

const EquilibriumFamily& family_by_id(const std::vector<EquilibriumFamily>& fams,
                                      const std::string& id) {
  for (const auto& f : fams) {
    if (f.id == id) return f;
  }
  REQUIRE_MESSAGE(false, "missing family " << id);
  return fams.front();
}

}  // namespace

TEST_CASE("family counts per regime") {
  CHECK(equilibrium_families(GameParams(Model::Classical, 10.0, 2.0)).size() == 1);
  CHECK(equilibrium_families(GameParams(Model::Ldm, 10.0, 2.0, 0.0)).size() == 1);
  CHECK(equilibrium_families(GameParams(Model::Ldm, 10.0, 2.0, kLn2)).size() == 8);
  CHECK(equilibrium_families(GameParams(Model::TwoQubit, 10.0, 2.0, 0.0)).size() == 1);
  CHECK(equilibrium_families(GameParams(Model::TwoQubit, 10.0, 2.0, kPi / 6)).size() == 8);
  CHECK(equilibrium_families(GameParams(Model::TwoQubit, 10.0, 2.0, kQuarterPi)).size() == 2);
}

TEST_CASE("classical game has the single point (c, c) with zero payoff") {
  const GameParams g(Model::Classical, 10.0, 2.0);
  const auto fams = equilibrium_families(g);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].dim == 0);
  const StrategyProfile p = fams[0].profile_at(0.0, 0.0);
  CHECK(p.x1 == 2.0);
  CHECK(p.x2 == 2.0);
  const PayoffProfile u = fams[0].payoff_at(0.0, 0.0);
  CHECK(u.u1 == 0.0);
  CHECK(u.u2 == 0.0);

  const auto copies = sample_family(fams[0], 5);
  REQUIRE(copies.size() == 5);
  for (const auto& q : copies) {
    CHECK(q.x1 == 2.0);
    CHECK(q.x2 == 2.0);
  }
}

TEST_CASE("is_nash spot checks") {
  const GameParams cl(Model::Classical, 10.0, 2.0);
  CHECK(is_nash(2.0, 2.0, cl));
  CHECK_FALSE(is_nash(5.0, 5.0, cl));
  CHECK_FALSE(is_nash(2.0, 5.0, cl));
  CHECK_FALSE(is_nash(6.0, 6.0, cl));

  const GameParams ldm(Model::Ldm, 10.0, 2.0, kLn2);
  CHECK(is_nash(0.0, 8.0, ldm));
  CHECK(is_nash(8.0, 0.0, ldm));
  CHECK_FALSE(is_nash(2.0, 2.0, ldm));  // classical equilibrium dissolves under entanglement
}

TEST_CASE("every family row is sound: nash membership and table payoffs") {
  const GameParams games[] = {GameParams(Model::Classical, 10.0, 2.0),
                              GameParams(Model::Ldm, 10.0, 2.0, kLn2),
                              GameParams(Model::Ldm, 10.0, 2.0, 0.37),
                              GameParams(Model::Ldm, 10.0, 0.0, kLn2),  // zero marginal cost
                              GameParams(Model::TwoQubit, 10.0, 2.0, kPi / 6),
                              GameParams(Model::TwoQubit, 10.0, 2.0, 0.51),
                              GameParams(Model::TwoQubit, 10.0, 2.0, kQuarterPi)};
  for (const GameParams& g : games) {
    for (const auto& fam : equilibrium_families(g)) {
      int checked = 0;
      for (const auto& p : sample_family(fam, 25)) {
        CAPTURE(to_string(g.model));
        CAPTURE(fam.id);
        CAPTURE(p.x1);
        CAPTURE(p.x2);
        CHECK(is_nash(p.x1, p.x2, g));
        ++checked;
      }
      CHECK(checked == (fam.dim == 2 ? 625 : 25));
    }
  }
}

TEST_CASE("table payoff formulas agree with direct payoff evaluation") {
  const GameParams games[] = {GameParams(Model::Ldm, 10.0, 2.0, kLn2),
                              GameParams(Model::TwoQubit, 10.0, 2.0, kPi / 6),
                              GameParams(Model::TwoQubit, 10.0, 2.0, kQuarterPi)};
  for (const GameParams& g : games) {
    const double tol = 1e-9 * g.a * g.a;
    for (const auto& fam : equilibrium_families(g)) {
      // Walk the parameter lattice explicitly so formula and profile agree.
      const int n = 25;
      std::vector<double> t1s{0.0};
      std::vector<double> t2s{0.0};
      const auto axis_points = [&](const ParamInterval& iv) {
        std::vector<double> ts;
        const double hi = iv.unbounded ? iv.sample_cap : iv.hi;
        const double inset = (hi - iv.lo) / (10.0 * n);
        const double lo = iv.lo_open ? iv.lo + inset : iv.lo;
        const double top = (iv.hi_open && !iv.unbounded) ? hi - inset : hi;
        for (int k = 0; k < n; ++k) ts.push_back(lo + (top - lo) * k / (n - 1));
        return ts;
      };
      if (fam.dim >= 1) t1s = axis_points(fam.domain[0]);
      if (fam.dim == 2) t2s = axis_points(fam.domain[1]);
      for (double t1 : t1s) {
        for (double t2 : t2s) {
          const StrategyProfile p = fam.profile_at(t1, t2);
          const PayoffProfile expect = fam.payoff_at(t1, t2);
          const PayoffProfile got = payoffs(p.x1, p.x2, g);
          CAPTURE(fam.id);
          CAPTURE(t1);
          CAPTURE(t2);
          CHECK(std::abs(got.u1 - expect.u1) <= tol);
          CHECK(std::abs(got.u2 - expect.u2) <= tol);
        }
      }
    }
  }
}

TEST_CASE("table spot values") {
  const GameParams ldm(Model::Ldm, 10.0, 2.0, kLn2);
  const auto fams = equilibrium_families(ldm);

  const auto& point = family_by_id(fams, "point");
  const StrategyProfile p0 = point.profile_at(0.0, 0.0);
  CHECK(p0.x1 == doctest::Approx(1.0).epsilon(1e-14));

  const auto& ridge1 = family_by_id(fams, "ridge-1");
  const StrategyProfile r0 = ridge1.profile_at(0.0, 0.0);
  CHECK(r0.x1 == 0.0);
  CHECK(r0.x2 == doctest::Approx(8.0).epsilon(1e-13));
  const PayoffProfile ru = payoffs(r0.x1, r0.x2, ldm);
  CHECK(ru.u1 == doctest::Approx(16.0).epsilon(1e-13));
  CHECK(ru.u2 == 0.0);

  const auto& axis2 = family_by_id(fams, "axis-2");
  const PayoffProfile au = axis2.payoff_at(10.0, 0.0);
  CHECK(au.u1 == 0.0);
  CHECK(au.u2 == doctest::Approx(13.75).epsilon(1e-13));
  CHECK(payoffs(10.0, 0.0, ldm).u2 == doctest::Approx(13.75).epsilon(1e-13));

  const GameParams qb(Model::TwoQubit, 10.0, 2.0, kPi / 6);
  const auto qfams = equilibrium_families(qb);
  const StrategyProfile q0 = family_by_id(qfams, "ridge-1").profile_at(0.0, 0.0);
  CHECK(q0.x1 == 0.0);
  CHECK(q0.x2 == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(payoffs(q0.x1, q0.x2, qb).u1 == doctest::Approx(16.0).epsilon(1e-13));

  const GameParams me(Model::TwoQubit, 10.0, 2.0, kQuarterPi);
  const auto mfams = equilibrium_families(me);
  const auto& segment = family_by_id(mfams, "pareto-segment");
  const auto pts = sample_family(segment, 3);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].x1 == 0.0);
  CHECK(pts[0].x2 == 12.0);
  CHECK(pts[1].x1 == 6.0);
  CHECK(pts[1].x2 == 6.0);
  CHECK(pts[2].x1 == 12.0);
  CHECK(pts[2].x2 == 0.0);
  const PayoffProfile su = segment.payoff_at(4.0, 0.0);
  CHECK(su.u1 == 8.0);
  CHECK(su.u2 == 8.0);
  CHECK(su.u1 + su.u2 == pareto_bound(me));
}

TEST_CASE("open interval families sample strictly inside") {
  const GameParams ldm(Model::Ldm, 10.0, 2.0, kLn2);
  const auto& axis1 = family_by_id(equilibrium_families(ldm), "axis-1");
  const auto pts = sample_family(axis1, 2);
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    CHECK(p.x1 == 0.0);
    CHECK(p.x2 > 8.0);
    CHECK(p.x2 < 40.0 / 3.0);
  }
}

TEST_CASE("pareto bound and optimality") {
  const GameParams g(Model::Classical, 10.0, 2.0);
  CHECK(pareto_bound(g) == 16.0);
  CHECK(pareto_bound(GameParams(Model::Classical, 1.0, 0.0)) == 0.25);

  CHECK(is_pareto_optimal({8.0, 8.0}, g));
  CHECK(is_pareto_optimal({16.0, 0.0}, g));
  CHECK_FALSE(is_pareto_optimal({0.0, 0.0}, g));
  CHECK_FALSE(is_pareto_optimal({7.0, 8.0}, g));
}

TEST_CASE("grid epsilon search finds the known equilibria") {
  const GameParams cl(Model::Classical, 10.0, 2.0);
  const ProfileGrid grid(20.0, 0.05);
  const auto survivors = grid_epsilon_equilibria(cl, grid, 1.0);
  REQUIRE_FALSE(survivors.empty());
  bool has_cc = false;
  for (const auto& p : survivors) {
    has_cc = has_cc || (std::abs(p.x1 - 2.0) <= 0.025 && std::abs(p.x2 - 2.0) <= 0.025);
  }
  CHECK(has_cc);

  const GameParams ldm(Model::Ldm, 10.0, 2.0, kLn2);
  const auto lsurv = grid_epsilon_equilibria(ldm, grid, 1.0);
  bool has_point = false;
  for (const auto& p : lsurv) {
    has_point = has_point || (std::abs(p.x1 - 1.0) <= 0.025 && std::abs(p.x2 - 1.0) <= 0.025);
  }
  CHECK(has_point);

  const GameParams me(Model::TwoQubit, 10.0, 2.0, kQuarterPi);
  const ProfileGrid mgrid(24.0, 0.05);
  const auto msurv = grid_epsilon_equilibria(me, mgrid, 1.0);
  REQUIRE_FALSE(msurv.empty());
  for (const auto& p : msurv) {
    if (p.x1 + p.x2 > 2.0 * me.a) continue;  // zero region
    const bool near_segment = std::abs(p.x1 + p.x2 - 12.0) <= 0.1;
    const bool flat = passes_epsilon_test(p.x1, p.x2, me, mgrid, 1.0);
    CHECK((near_segment || flat));
  }

  CHECK_THROWS_AS(grid_epsilon_equilibria(cl, grid, 0.0), std::invalid_argument);
}

TEST_CASE("classical epsilon survivors shrink toward (c, c)") {
  const GameParams cl(Model::Classical, 10.0, 2.0);
  const ProfileGrid grid(20.0, 0.05);
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {1.0, 0.5, 0.1}) {
    const auto survivors = grid_epsilon_equilibria(cl, grid, eps);
    REQUIRE_FALSE(survivors.empty());
    double worst = 0.0;
    for (const auto& p : survivors) {
      worst = std::max(worst, std::hypot(p.x1 - 2.0, p.x2 - 2.0));
    }
    CHECK(worst < prev);
    prev = worst;
  }
}

TEST_CASE("analytic family points snapped to the grid pass the epsilon test") {
  const GameParams games[] = {GameParams(Model::Ldm, 10.0, 2.0, kLn2),
                              GameParams(Model::TwoQubit, 10.0, 2.0, kQuarterPi)};
  for (const GameParams& g : games) {
    const ProfileGrid grid = default_grid(g);
    const double eps = default_epsilon(g, grid);
    const auto snap = [&grid](double x) {
      const double snapped = std::round(x / grid.h) * grid.h;
      return std::min(snapped, grid.at(grid.size() - 1));
    };
    for (const auto& fam : equilibrium_families(g)) {
      for (const auto& p : sample_family(fam, 5, grid.x_max)) {
        CAPTURE(fam.id);
        CAPTURE(p.x1);
        CAPTURE(p.x2);
        CHECK(passes_epsilon_test(snap(p.x1), snap(p.x2), g, grid, eps));
      }
    }
  }
}

TEST_CASE("lexicographic output order") {
  const GameParams cl(Model::Classical, 10.0, 2.0);
  const ProfileGrid grid(20.0, 0.25);
  const auto survivors = grid_epsilon_equilibria(cl, grid, 2.0);
  for (std::size_t i = 1; i < survivors.size(); ++i) {
    const bool ordered = survivors[i - 1].x1 < survivors[i].x1 ||
                         (survivors[i - 1].x1 == survivors[i].x1 &&
                          survivors[i - 1].x2 < survivors[i].x2);
    CHECK(ordered);
  }
}
