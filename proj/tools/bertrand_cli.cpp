// Command-line front end: payoff evaluation, best-reply queries, equilibrium
// listing/verification/search, figure data and numerical validation of the
// quantum price maps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bertrand/best_reply.hpp"
#include "bertrand/equilibria.hpp"
#include "bertrand/fock.hpp"
#include "bertrand/game.hpp"
#include "bertrand/qubit.hpp"
#include "bertrand/record.hpp"

using namespace bertrand;
using io::Record;
using io::RecordWriter;

namespace {

struct VerifyFailure {};  // raised after the report is written; maps to exit 1

struct CommonOptions {
  std::string model = "classical";
  double a = 10.0;
  double c = 0.0;
  std::string gamma = "0";
  std::optional<double> h;
  std::optional<double> x_max;
  std::optional<double> epsilon;
  std::string format = "json";
  std::string output;
};

// gamma accepts plain reals plus the exact literals "pi", "pi/<real>" and
// "ln2", so the salient transcendental values parse to the same doubles the
// library uses.
double parse_gamma(const std::string& text) {
  const auto parse_real = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse gamma value '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("cannot parse gamma value '" + s + "'");
    return v;
  };
  if (text == "ln2") return std::numbers::ln2;
  if (text == "pi") return std::numbers::pi;
  if (text.rfind("pi/", 0) == 0) {
    const double denom = parse_real(text.substr(3));
    if (denom == 0.0) throw std::invalid_argument("gamma: division by zero");
    return std::numbers::pi / denom;
  }
  return parse_real(text);
}

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
  // The grid-step flag is --h, so help keeps only its long form here.
  cmd->set_help_flag("--help", "Print this help message and exit");
  cmd->add_option("--model", opts.model, "Game model")
      ->check(CLI::IsMember({"classical", "ldm", "two-qubit"}))
      ->capture_default_str();
  cmd->add_option("-a", opts.a, "Demand intercept")->capture_default_str();
  cmd->add_option("-c", opts.c, "Marginal cost")->capture_default_str();
  cmd->add_option("--gamma", opts.gamma,
                  "Entanglement parameter (real, or 'pi', 'pi/<k>', 'ln2')")
      ->capture_default_str();
  cmd->add_option("--h", opts.h, "Grid step override");
  cmd->add_option("--x-max", opts.x_max, "Grid upper bound override");
  cmd->add_option("--epsilon", opts.epsilon, "Epsilon override for the grid search");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "Write output to this path instead of stdout");
}

GameParams make_params(const CommonOptions& opts) {
  return GameParams(model_from_string(opts.model), opts.a, opts.c, parse_gamma(opts.gamma));
}

ProfileGrid make_grid(const CommonOptions& opts, const GameParams& g) {
  const ProfileGrid def = default_grid(g);
  const double x_max = opts.x_max.value_or(def.x_max);
  const double h = opts.h.value_or(x_max / 2000.0);
  return ProfileGrid(x_max, h);
}

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output path '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Record base_record(const CommonOptions& opts, const GameParams& g) {
  Record r;
  r.add("model", to_string(g.model)).add("a", g.a).add("c", g.c).add("gamma", g.gamma);
  (void)opts;
  return r;
}

// ---------------------------------------------------------------- payoff --

void run_payoff(const CommonOptions& opts, double x1, double x2) {
  const GameParams g = make_params(opts);
  OutputTarget target(opts.output);
  RecordWriter writer(target.stream(), io::format_from_string(opts.format));

  const PricePair p = prices(x1, x2, g);
  const PayoffProfile u = payoffs(x1, x2, g);
  Record r = base_record(opts, g);
  r.add("x1", x1).add("x2", x2);
  r.add("p1", p.p1).add("p2", p.p2);
  r.add("u1", u.u1).add("u2", u.u2);
  writer.write(r);
}

// ------------------------------------------------------------ best reply --

void add_reply_fields(Record& r, const ReplySet& reply) {
  r.add("variant", to_string(reply.kind));
  switch (reply.kind) {
    case ReplySet::Kind::Empty:
      r.add_null("value");
      break;
    case ReplySet::Kind::Full:
      r.add("value", 0.0);
      break;
    default:
      r.add("value", reply.value);
  }
}

void run_best_reply(const CommonOptions& opts, int player, double opp, bool with_oracle) {
  const GameParams g = make_params(opts);
  OutputTarget target(opts.output);
  RecordWriter writer(target.stream(), io::format_from_string(opts.format));

  const ReplySet reply = best_reply(player, opp, g);
  Record r = base_record(opts, g);
  r.add("player", static_cast<double>(player)).add("opp", opp);
  add_reply_fields(r, reply);
  if (with_oracle) {
    const ProfileGrid grid = make_grid(opts, g);
    const auto maximizers = grid_best_reply_oracle(player, opp, g, grid);
    r.add("oracle_min", maximizers.front());
    r.add("oracle_max", maximizers.back());
    r.add("oracle_count", static_cast<double>(maximizers.size()));
    r.add("oracle_agrees", oracle_agrees(reply, maximizers, opp, grid));
  }
  writer.write(r);
}

// ------------------------------------------------------------ equilibria --

void add_interval_fields(Record& r, const std::string& prefix, const ParamInterval& iv,
                         bool used) {
  if (!used) {
    r.add_null(prefix + "_lo").add_null(prefix + "_lo_open");
    r.add_null(prefix + "_hi").add_null(prefix + "_hi_open");
    r.add_null(prefix + "_unbounded").add_null(prefix + "_cap");
    return;
  }
  r.add(prefix + "_lo", iv.lo).add(prefix + "_lo_open", iv.lo_open);
  if (iv.unbounded) {
    r.add_null(prefix + "_hi");
  } else {
    r.add(prefix + "_hi", iv.hi);
  }
  r.add(prefix + "_hi_open", iv.hi_open);
  r.add(prefix + "_unbounded", iv.unbounded);
  if (iv.unbounded) {
    r.add(prefix + "_cap", iv.sample_cap);
  } else {
    r.add_null(prefix + "_cap");
  }
}

void run_equilibria_list(const CommonOptions& opts) {
  const GameParams g = make_params(opts);
  OutputTarget target(opts.output);
  RecordWriter writer(target.stream(), io::format_from_string(opts.format));

  for (const auto& fam : equilibrium_families(g)) {
    Record r = base_record(opts, g);
    r.add("id", fam.id).add("dim", static_cast<double>(fam.dim));
    add_interval_fields(r, "t1", fam.domain[0], fam.dim >= 1);
    add_interval_fields(r, "t2", fam.domain[1], fam.dim == 2);

    const auto corner = [&fam](bool high) {
      const auto pick = [high](const ParamInterval& iv) {
        if (!high) return iv.lo;
        return iv.unbounded ? iv.sample_cap : iv.hi;
      };
      const double t1 = fam.dim >= 1 ? pick(fam.domain[0]) : 0.0;
      const double t2 = fam.dim == 2 ? pick(fam.domain[1]) : 0.0;
      return std::make_pair(fam.profile_at(t1, t2), fam.payoff_at(t1, t2));
    };
    const auto [plo, ulo] = corner(false);
    const auto [phi, uhi] = corner(true);
    r.add("x1_at_lo", plo.x1).add("x2_at_lo", plo.x2);
    r.add("u1_at_lo", ulo.u1).add("u2_at_lo", ulo.u2);
    r.add("x1_at_hi", phi.x1).add("x2_at_hi", phi.x2);
    r.add("u1_at_hi", uhi.u1).add("u2_at_hi", uhi.u2);
    r.add("description", fam.description);
    writer.write(r);
  }
}

void run_equilibria_verify(const CommonOptions& opts) {
  const GameParams g = make_params(opts);
  OutputTarget target(opts.output);
  RecordWriter writer(target.stream(), io::format_from_string(opts.format));

  const int n = 25;
  const double payoff_tol = 1e-9 * g.a * g.a;
  int points = 0;
  int failures = 0;
  const auto fams = equilibrium_families(g);
  for (const auto& fam : fams) {
    std::vector<double> t1s{0.0};
    std::vector<double> t2s{0.0};
    if (fam.dim >= 1) t1s = sample_axis_points(fam.domain[0], n);
    if (fam.dim == 2) t2s = sample_axis_points(fam.domain[1], n);
    if (fam.dim == 0) t1s.assign(n, 0.0);
    for (double t1 : t1s) {
      for (double t2 : t2s) {
        const StrategyProfile p = fam.profile_at(t1, t2);
        const PayoffProfile expect = fam.payoff_at(t1, t2);
        const PayoffProfile got = payoffs(p.x1, p.x2, g);
        const bool nash = is_nash(p.x1, p.x2, g);
        const bool payoff_ok = std::abs(got.u1 - expect.u1) <= payoff_tol &&
                               std::abs(got.u2 - expect.u2) <= payoff_tol;
        if (!nash || !payoff_ok) ++failures;
        ++points;

        Record r;
        r.add("kind", "point").add("id", fam.id);
        r.add("t1", t1).add("t2", t2);
        r.add("x1", p.x1).add("x2", p.x2);
        r.add("nash", nash).add("payoff_ok", payoff_ok);
        r.add("u1", got.u1).add("u2", got.u2);
        r.add("u1_formula", expect.u1).add("u2_formula", expect.u2);
        r.add_null("families").add_null("points").add_null("failures");
        writer.write(r);
      }
    }
  }
  Record summary;
  summary.add("kind", "summary").add_null("id");
  summary.add_null("t1").add_null("t2").add_null("x1").add_null("x2");
  summary.add("nash", failures == 0).add("payoff_ok", failures == 0);
  summary.add_null("u1").add_null("u2").add_null("u1_formula").add_null("u2_formula");
  summary.add("families", static_cast<double>(fams.size()));
  summary.add("points", static_cast<double>(points));
  summary.add("failures", static_cast<double>(failures));
  writer.write(summary);
  if (failures > 0) throw VerifyFailure{};
}

void run_equilibria_search(const CommonOptions& opts) {
  const GameParams g = make_params(opts);
  OutputTarget target(opts.output);
  RecordWriter writer(target.stream(), io::format_from_string(opts.format));

  const ProfileGrid grid = make_grid(opts, g);
  const double epsilon = opts.epsilon.value_or(default_epsilon(g, grid));
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  // Unbounded equilibrium regions are truncated at the grid edge; say so.
  Record meta;
  meta.add("kind", "meta").add("h", grid.h).add("epsilon", epsilon).add("x_max", grid.x_max);
  meta.add("truncated_at", grid.x_max);
  meta.add_null("x1").add_null("x2").add_null("u1").add_null("u2");
  writer.write(meta);

  for (const auto& p : grid_epsilon_equilibria(g, grid, epsilon)) {
    const PayoffProfile u = payoffs(p.x1, p.x2, g);
    Record r;
    r.add("kind", "profile").add_null("h").add_null("epsilon").add_null("x_max");
    r.add_null("truncated_at");
    r.add("x1", p.x1).add("x2", p.x2).add("u1", u.u1).add("u2", u.u2);
    writer.write(r);
  }
}

// ------------------------------------------------------------- plot data --

void run_plot_data(const CommonOptions& opts, const std::string& figure) {
  if (figure != "best-replies") {
    throw std::invalid_argument("unknown figure '" + figure + "' (expected best-replies)");
  }
  const GameParams g = make_params(opts);
  OutputTarget target(opts.output);
  RecordWriter writer(target.stream(), io::format_from_string(opts.format));

  const ProfileGrid grid = make_grid(opts, g);
  const int samples = 1000;
  for (int player : {1, 2}) {
    for (int k = 0; k < samples; ++k) {
      const double opp = grid.x_max * static_cast<double>(k) / (samples - 1);
      const ReplySet reply = best_reply(player, opp, g);
      Record r;
      r.add("kind", "sample").add("player", static_cast<double>(player)).add("opp", opp);
      add_reply_fields(r, reply);
      writer.write(r);
    }
  }
  for (const auto& [name, value] : breakpoint_table(g)) {
    Record r;
    r.add("kind", "breakpoint").add_null("player").add_null("opp");
    r.add("variant", name).add("value", value);
    writer.write(r);
  }
}

// -------------------------------------------------------- verify-quantum --

void run_verify_quantum(const CommonOptions& opts, int truncation, double tail_tol,
                        bool gamma_given) {
  const Model model = model_from_string(opts.model);
  OutputTarget target(opts.output);
  RecordWriter writer(target.stream(), io::format_from_string(opts.format));

  if (model == Model::Ldm) {
    // Desk-scale envelope: gamma <= 0.6, strategies <= 1, truncation >= 8.
    std::vector<double> gammas = {0.0, 0.25, 0.5};
    if (gamma_given) {
      const double extra = parse_gamma(opts.gamma);
      if (!(extra >= 0.0) || extra > 0.6) {
        throw fock::TruncationError("verify-quantum: gamma outside the validated envelope [0, 0.6]");
      }
      gammas.push_back(extra);
    }
    if (truncation < 8) {
      throw fock::TruncationError("verify-quantum: truncation below the validated envelope (n >= 8)");
    }

    const double tolerance = 1e-6;
    double max_error = 0.0;
    int points = 0;
    for (double gamma : gammas) {
      const fock::LdmSimulator sim(gamma, truncation);
      for (int i = 0; i <= 5; ++i) {
        for (int j = 0; j <= 5; ++j) {
          const double x1 = i / 10.0;
          const double x2 = j / 10.0;
          const fock::TwoModeState state = sim.final_state(x1, x2, tail_tol);
          const double q1 = fock::expect_quadrature(state, 1);
          const double q2 = fock::expect_quadrature(state, 2);
          const PricePair p = ldm_prices(x1, x2, gamma);
          const double err1 = std::abs(q1 - p.p1);
          const double err2 = std::abs(q2 - p.p2);
          max_error = std::max({max_error, err1, err2});
          ++points;

          Record r;
          r.add("kind", "point").add("gamma", gamma).add("x1", x1).add("x2", x2);
          r.add("q1", q1).add("p1", p.p1).add("err1", err1);
          r.add("q2", q2).add("p2", p.p2).add("err2", err2);
          r.add_null("points").add_null("truncation").add_null("max_error");
          r.add_null("tolerance").add_null("pass");
          writer.write(r);
        }
      }
    }
    Record summary;
    summary.add("kind", "summary").add_null("gamma").add_null("x1").add_null("x2");
    summary.add_null("q1").add_null("p1").add_null("err1");
    summary.add_null("q2").add_null("p2").add_null("err2");
    summary.add("points", static_cast<double>(points));
    summary.add("truncation", static_cast<double>(truncation));
    summary.add("max_error", max_error).add("tolerance", tolerance);
    summary.add("pass", max_error <= tolerance);
    writer.write(summary);
    if (max_error > tolerance) throw VerifyFailure{};
    return;
  }

  if (model == Model::TwoQubit) {
    const double tolerance = 1e-12;
    std::mt19937 rng(20240u);
    std::uniform_real_distribution<double> xdist(0.0, 20.0);
    std::uniform_real_distribution<double> gdist(0.0, kQuarterPi);
    double max_scaled_error = 0.0;
    const int draws = 200;
    for (int i = 0; i < draws; ++i) {
      const double x1 = xdist(rng);
      const double x2 = xdist(rng);
      const double gamma = gdist(rng);
      const PricePair p = qubit_prices(x1, x2, gamma);
      const double m1 = qubit::price_from_measurement(x1, x2, gamma, 1);
      const double m2 = qubit::price_from_measurement(x1, x2, gamma, 2);
      const double scale = std::max({x1, x2, 1.0});
      const double err1 = std::abs(m1 - p.p1) / scale;
      const double err2 = std::abs(m2 - p.p2) / scale;
      max_scaled_error = std::max({max_scaled_error, err1, err2});

      Record r;
      r.add("kind", "point").add("gamma", gamma).add("x1", x1).add("x2", x2);
      r.add("q1", m1).add("p1", p.p1).add("err1", err1);
      r.add("q2", m2).add("p2", p.p2).add("err2", err2);
      r.add_null("points").add_null("truncation").add_null("max_error");
      r.add_null("tolerance").add_null("pass");
      writer.write(r);
    }
    Record summary;
    summary.add("kind", "summary").add_null("gamma").add_null("x1").add_null("x2");
    summary.add_null("q1").add_null("p1").add_null("err1");
    summary.add_null("q2").add_null("p2").add_null("err2");
    summary.add("points", static_cast<double>(draws));
    summary.add_null("truncation");
    summary.add("max_error", max_scaled_error).add("tolerance", tolerance);
    summary.add("pass", max_scaled_error <= tolerance);
    writer.write(summary);
    if (max_scaled_error > tolerance) throw VerifyFailure{};
    return;
  }

  throw std::invalid_argument("verify-quantum: model must be ldm or two-qubit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and quantum Bertrand duopoly: payoffs, best replies, equilibria"};
  app.require_subcommand(1);

  CommonOptions payoff_opts;
  double x1 = 0.0;
  double x2 = 0.0;
  CLI::App* payoff_cmd = app.add_subcommand("payoff", "Prices and payoffs for one profile");
  add_common_options(payoff_cmd, payoff_opts);
  payoff_cmd->add_option("--x1", x1, "Player 1 strategy")->required();
  payoff_cmd->add_option("--x2", x2, "Player 2 strategy")->required();
  payoff_cmd->callback([&] { run_payoff(payoff_opts, x1, x2); });

  CommonOptions reply_opts;
  int player = 1;
  double opp = 0.0;
  bool with_oracle = false;
  CLI::App* reply_cmd = app.add_subcommand("best-reply", "Analytic best reply, optionally checked "
                                                         "against the grid oracle");
  add_common_options(reply_cmd, reply_opts);
  reply_cmd->add_option("--player", player, "Replying player")->check(CLI::IsMember({1, 2}));
  reply_cmd->add_option("--opp", opp, "Opponent strategy")->required();
  reply_cmd->add_flag("--oracle", with_oracle, "Also run the grid oracle and report agreement");
  reply_cmd->callback([&] { run_best_reply(reply_opts, player, opp, with_oracle); });

  CLI::App* eq_cmd = app.add_subcommand("equilibria", "Nash equilibrium families");
  eq_cmd->require_subcommand(1);
  CommonOptions list_opts;
  CLI::App* list_cmd = eq_cmd->add_subcommand("list", "List every equilibrium family");
  add_common_options(list_cmd, list_opts);
  list_cmd->callback([&] { run_equilibria_list(list_opts); });

  CommonOptions verify_opts;
  CLI::App* verify_cmd = eq_cmd->add_subcommand("verify", "Sample families and re-check them");
  add_common_options(verify_cmd, verify_opts);
  verify_cmd->callback([&] { run_equilibria_verify(verify_opts); });

  CommonOptions search_opts;
  CLI::App* search_cmd = eq_cmd->add_subcommand("search", "Grid epsilon-equilibrium search");
  add_common_options(search_cmd, search_opts);
  search_cmd->callback([&] { run_equilibria_search(search_opts); });

  CommonOptions plot_opts;
  std::string figure = "best-replies";
  CLI::App* plot_cmd = app.add_subcommand("plot-data", "Best-reply correspondence data and "
                                                       "breakpoints for plotting");
  add_common_options(plot_cmd, plot_opts);
  plot_cmd->add_option("--figure", figure, "Figure to emit")
      ->check(CLI::IsMember({"best-replies"}))
      ->capture_default_str();
  plot_cmd->callback([&] { run_plot_data(plot_opts, figure); });

  CommonOptions quantum_opts;
  int truncation = 32;
  double tail_tol = fock::kDefaultTailTol;
  CLI::App* quantum_cmd = app.add_subcommand("verify-quantum", "Validate the quantum price maps "
                                                               "from first principles");
  add_common_options(quantum_cmd, quantum_opts);
  quantum_cmd->add_option("-N,--truncation", truncation, "Fock-space truncation per mode")
      ->capture_default_str();
  quantum_cmd->add_option("--tail-tol", tail_tol, "Accepted truncation norm loss")
      ->capture_default_str();
  quantum_cmd->callback([&] {
    run_verify_quantum(quantum_opts, truncation, tail_tol,
                       quantum_cmd->count("--gamma") > 0);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const VerifyFailure&) {
    return 1;
  } catch (const fock::TruncationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
