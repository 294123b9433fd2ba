// polystab: command-line front end.
//
// Exit codes: 0 all products contract / info command succeeded,
// 1 noncontracting (or a matrix fails the invariance check),
// 2 invalid input, 3 internal consistency failure, 4 oracle budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polystab/constructions.hpp"
#include "polystab/errors.hpp"
#include "polystab/io.hpp"
#include "polystab/oracle.hpp"
#include "polystab/poset.hpp"
#include "polystab/stochastic.hpp"

namespace {

using polystab::io::Json;

enum Exit { kOk = 0, kNoncontracting = 1, kInput = 2, kInternal = 3, kBudget = 4 };

struct Options {
  std::string format = "json";
  bool timings = false;
  std::string matrices;
  std::string ball;
  bool stochastic = false;
  std::optional<std::size_t> n;
  std::optional<std::size_t> max_period;
  std::uint64_t budget = 10'000'000;
  bool first = false;
  std::string output;
};

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return polystab::io::read_file(path);
}

std::string source_name(const std::string& path) { return path.empty() || path == "-" ? "<stdin>" : path; }

polystab::MatrixSet load_matrices(const Options& opt) {
  return polystab::io::parse_matrix_set(read_source(opt.matrices), source_name(opt.matrices));
}

void require_one_source(const Options& opt) {
  if (opt.stochastic == !opt.ball.empty())
    throw polystab::InputError("give exactly one ball source: --ball FILE or --stochastic");
}

// Ball for commands that also read matrices; n comes from the matrices.
polystab::SeminormBall ball_for(const Options& opt, const polystab::MatrixSet& sigma) {
  require_one_source(opt);
  if (opt.stochastic) {
    if (opt.n && *opt.n != sigma.dim())
      throw polystab::InputError("-n " + std::to_string(*opt.n) + " does not match matrix dimension " +
                                 std::to_string(sigma.dim()));
    return polystab::consensus_ball(sigma.dim());
  }
  auto ball = polystab::io::parse_ball(polystab::io::read_file(opt.ball), opt.ball);
  if (ball.dim() != sigma.dim())
    throw polystab::InputError("ball dimension " + std::to_string(ball.dim()) + " does not match matrix dimension " +
                               std::to_string(sigma.dim()));
  return ball;
}

// Ball for commands without matrices.
polystab::SeminormBall standalone_ball(const Options& opt) {
  require_one_source(opt);
  if (opt.stochastic) {
    if (!opt.n) throw polystab::InputError("--stochastic without matrices needs -n");
    return polystab::consensus_ball(*opt.n);
  }
  return polystab::io::parse_ball(polystab::io::read_file(opt.ball), opt.ball);
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

// Human-readable rendering: one "key: value" line per field, nested
// objects indented, arrays of scalars joined by spaces.
void render_table(std::ostream& os, const Json& value, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      os << pad << key << ":\n";
      render_table(os, v, indent + 2);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      os << pad << key << ":\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          std::string line;
          for (const auto& [k, x] : item.items()) {
            std::string text = x.is_array() ? "" : scalar_text(x);
            if (x.is_array())
              for (const auto& e : x) text += (text.empty() ? "" : " ") + scalar_text(e);
            line += (line.empty() ? "" : "  ") + k + "=" + text;
          }
          os << pad << "  " << line << "\n";
        } else {
          std::string text;
          for (const auto& e : item) text += (text.empty() ? "" : " ") + scalar_text(e);
          os << pad << "  " << text << "\n";
        }
      }
    } else if (v.is_array()) {
      std::string text;
      for (const auto& e : v) text += (text.empty() ? "" : " ") + scalar_text(e);
      os << pad << key << ": " << text << "\n";
    } else {
      os << pad << key << ": " << scalar_text(v) << "\n";
    }
  }
}

void emit(std::ostream& os, const Options& opt, const Json& value) {
  if (opt.format == "table") {
    render_table(os, value);
  } else {
    os << value.dump(2) << "\n";
  }
}

int cmd_decide(const Options& opt) {
  const auto sigma = load_matrices(opt);
  const auto ball = ball_for(opt, sigma);
  if (opt.stochastic) {
    const auto decision = polystab::decide_consensus(sigma);
    emit(std::cout, opt, polystab::io::consensus_json(sigma, decision, opt.timings));
    return decision.report.verdict == polystab::Verdict::AllContracting ? kOk : kNoncontracting;
  }
  const auto report = polystab::decide(ball, sigma);
  emit(std::cout, opt, polystab::io::decision_json(ball, sigma, report, opt.timings));
  return report.verdict == polystab::Verdict::AllContracting ? kOk : kNoncontracting;
}

int cmd_bound(const Options& opt) {
  const auto ball = standalone_ball(opt);
  if (opt.stochastic) {
    emit(std::cout, opt, polystab::io::bounds_json(polystab::consensus_bounds(*opt.n)));
    return kOk;
  }
  const auto poset = polystab::build_poset(ball);
  Json out;
  out["pstar"] = polystab::width(poset.order).size;
  Json levels = Json::object();
  for (const auto& [d, c] : polystab::rank_level_sizes(poset.order)) levels[std::to_string(d)] = c;
  out["levels"] = std::move(levels);
  emit(std::cout, opt, out);
  return kOk;
}

int cmd_lattice(const Options& opt) {
  const auto ball = standalone_ball(opt);
  emit(std::cout, opt, polystab::io::lattice_json(ball, polystab::build_poset(ball)));
  return kOk;
}

int cmd_construct(const Options& opt) {
  const auto ball = standalone_ball(opt);
  const auto construction =
      opt.stochastic ? polystab::construct_stochastic(*opt.n) : polystab::construct_general(ball);
  const std::string text = polystab::io::format_matrix_set(construction.sigma);
  const Json report = polystab::io::construction_json(ball, construction);
  if (opt.output.empty()) {
    std::cout << text;
    emit(std::cerr, opt, report);
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!(out << text)) throw polystab::InputError("cannot write '" + opt.output + "'");
    emit(std::cout, opt, report);
  }
  return kOk;
}

int cmd_oracle(const Options& opt) {
  const auto sigma = load_matrices(opt);
  const auto ball = ball_for(opt, sigma);
  const std::size_t max_period =
      opt.max_period ? *opt.max_period : polystab::width(polystab::build_poset(ball).order).size;
  const polystab::OracleOptions options{.budget = opt.budget, .stop_at_first = opt.first};
  const auto report = polystab::bruteforce_decide(ball, sigma, max_period, options);
  emit(std::cout, opt, polystab::io::oracle_json(sigma, report, opt.budget));
  return report.verdict == polystab::Verdict::AllContracting ? kOk : kNoncontracting;
}

int cmd_check_invariance(const Options& opt) {
  const auto sigma = load_matrices(opt);
  const auto ball = ball_for(opt, sigma);
  Json out;
  Json rows = Json::array();
  bool all = true;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const bool ok = polystab::check_invariance(ball, sigma[k]);
    all = all && ok;
    Json row;
    row["name"] = sigma.names()[k];
    row["nonincreasing"] = ok;
    if (opt.stochastic) row["stochastic"] = polystab::is_stochastic(sigma[k]);
    if (opt.stochastic && polystab::is_stochastic(sigma[k]))
      row["ergodicity_coefficient"] = polystab::to_string(polystab::ergodicity_coefficient(sigma[k]));
    rows.push_back(std::move(row));
  }
  out["all_nonincreasing"] = all;
  out["matrices"] = std::move(rows);
  emit(std::cout, opt, out);
  return all ? kOk : kNoncontracting;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact contraction decisions for products of matrices with a polyhedral seminorm"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };
  auto add_ball = [&](CLI::App* sub) {
    sub->add_option("--ball", opt.ball, "Ball file {\"dim\", \"normals\"}");
    sub->add_flag("--stochastic", opt.stochastic, "Use the consensus seminorm (max - min)/2");
    sub->add_option("-n", opt.n, "Dimension for --stochastic")->check(CLI::PositiveNumber);
  };
  auto add_matrices = [&](CLI::App* sub) {
    sub->add_option("--matrices", opt.matrices, "Matrix-set file; '-' or omitted reads stdin");
  };

  auto* decide = app.add_subcommand("decide", "Decide contraction of all infinite products");
  add_matrices(decide);
  add_ball(decide);
  add_common(decide);
  decide->add_flag("--timings", opt.timings, "Include wall-clock timings in the report");

  auto* bound = app.add_subcommand("bound", "Closed-form bounds or lattice width");
  add_ball(bound);
  add_common(bound);

  auto* lattice = app.add_subcommand("lattice", "Double-face lattice, covers and maximum antichain");
  add_ball(lattice);
  add_common(lattice);

  auto* construct = app.add_subcommand("construct", "Matrix family attaining the period bound");
  add_ball(construct);
  add_common(construct);
  construct->add_option("--output", opt.output, "Write the matrix set here and the report to stdout");

  auto* oracle = app.add_subcommand("oracle", "Brute-force check of all periodic products");
  add_matrices(oracle);
  add_ball(oracle);
  add_common(oracle);
  oracle->add_option("--max-period", opt.max_period, "Longest period checked (default: lattice width)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--budget", opt.budget, "Cap on explicit oracle work");
  oracle->add_flag("--first", opt.first, "Stop after the shortest length with a noncontracting word");

  auto* invariance = app.add_subcommand("check-invariance", "Check that every matrix is nonincreasing");
  add_matrices(invariance);
  add_ball(invariance);
  add_common(invariance);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*decide) return cmd_decide(opt);
    if (*bound) return cmd_bound(opt);
    if (*lattice) return cmd_lattice(opt);
    if (*construct) return cmd_construct(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*invariance) return cmd_check_invariance(opt);
  } catch (const polystab::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const polystab::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const polystab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
