// Command line front end: interference runs, Sorkin terms, the component
// census and the verification suites, all with reproducible seeds and
// machine-readable output.
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "dhc/json_io.hpp"

namespace {

constexpr std::size_t kInterferenceDimCap = 8;
constexpr std::size_t kSpanDimCap = 4;

struct CommonOptions {
  std::size_t dim = 2;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  double tol = 0.0;
  std::string format = "json";
  std::string out_path;
  bool force_large = false;
};

double env_default_tol() {
  if (const char* env = std::getenv("DH_DEFAULT_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid DH_DEFAULT_TOL\n";
  }
  return 0.0;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

int run_interference(const CommonOptions& opt, std::size_t max_order,
                     bool sorkin_only, const std::string& state_path) {
  if (opt.dim > kInterferenceDimCap && !opt.force_large) {
    std::cerr << "error: dim > " << kInterferenceDimCap
              << " needs --force-large\n";
    return 2;
  }
  const std::size_t kmax = max_order == 0 ? opt.dim : max_order;
  if (kmax > opt.dim) {
    std::cerr << "error: --max-order must not exceed --dim\n";
    return 2;
  }
  const dhc::InterferenceReport rep = dhc::hierarchy_report(opt.dim, kmax);

  if (!state_path.empty()) {
    const int rc = write_output(
        dhc::dump_report(dhc::state_to_json(dhc::uniform_state(opt.dim))),
        state_path);
    if (rc != 0) return rc;
  }

  std::string text;
  if (opt.format == "csv") {
    text = dhc::interference_to_csv(rep);
  } else {
    dhc::ordered_json j = dhc::interference_to_json(rep);
    if (sorkin_only) {
      dhc::ordered_json trimmed;
      trimmed["dim"] = j["dim"];
      trimmed["max_order"] = j["max_order"];
      trimmed["sorkin"] = j["sorkin"];
      j = std::move(trimmed);
    }
    text = dhc::dump_report(j);
  }
  const int rc = write_output(text, opt.out_path);
  if (rc != 0) return rc;
  return rep.passes_invariants() ? 0 : 1;
}

int run_census(const CommonOptions& opt, std::size_t span_samples) {
  dhc::OrbitCensus census = dhc::orbit_census(opt.dim);
  if (opt.dim <= kSpanDimCap || opt.force_large) {
    const std::size_t d4 = opt.dim * opt.dim * opt.dim * opt.dim;
    const std::size_t samples =
        span_samples == 0 ? 4 * d4 : std::max(span_samples, 2 * d4);
    census.span_rank = dhc::span_rank(opt.dim, samples, opt.seed);
  }
  // Disagreement between the enumerated census, the sampled rank and the
  // closed formula is reported as data, never as a failure.
  return write_output(dhc::dump_report(dhc::census_to_json(census)),
                      opt.out_path);
}

int run_verify(const CommonOptions& opt, const std::string& suite) {
  const auto& names = dhc::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return 2;
  }
  const dhc::VerifyReport rep =
      dhc::run_suite(suite, opt.dim, opt.trials, opt.seed, opt.tol);
  const int rc =
      write_output(dhc::dump_report(dhc::verify_to_json(rep)), opt.out_path);
  if (rc != 0) return rc;
  return rep.all_pass() ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--dim", opt.dim, "System dimension")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed, "PRNG seed");
  cmd->add_option("--trials", opt.trials, "Random trials for property runs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", opt.tol, "Override comparison tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opt.out_path, "Output file (default stdout)");
  cmd->add_flag("--force-large", opt.force_large,
                "Lift the desk-scale dimension guards");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"density hypercube toolkit"};
  app.require_subcommand(1);

  CommonOptions opt;
  opt.tol = env_default_tol();

  std::size_t max_order = 0;
  std::size_t span_samples = 0;
  std::string suite = "all";
  std::string state_path;

  CLI::App* interference =
      app.add_subcommand("interference", "Multi-slit experiment report");
  add_common(interference, opt);
  interference->add_option("--max-order", max_order,
                           "Largest subset size (default: dim)");
  interference->add_option("--emit-state", state_path,
                           "Also write the initial state as JSON");

  CLI::App* sorkin = app.add_subcommand("sorkin", "Sorkin terms only");
  add_common(sorkin, opt);
  sorkin->add_option("--max-order", max_order, "Largest order (default: dim)");

  CLI::App* census =
      app.add_subcommand("census", "Component class and orbit census");
  add_common(census, opt);
  census->add_option("--span-samples", span_samples,
                     "Samples for the span rank (default: 4 d^4)");

  CLI::App* verify = app.add_subcommand("verify", "Property suites");
  add_common(verify, opt);
  verify->add_option("--suite", suite,
                     "causality|classical|quantum|idempotence|symmetry|"
                     "extension|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (interference->parsed())
      return run_interference(opt, max_order, false, state_path);
    if (sorkin->parsed()) return run_interference(opt, max_order, true, "");
    if (census->parsed()) return run_census(opt, span_samples);
    if (verify->parsed()) return run_verify(opt, suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
