// activetime: command-line front end for the nested active-time pipeline.
//
// Exit codes: 0 on success, 1 when input fails validation, 2 when an
// internal invariant breaks (e.g. a rounded opening is rejected by the
// flow check).

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "activetime/error.hpp"
#include "activetime/feasibility.hpp"
#include "activetime/generators.hpp"
#include "activetime/hardness.hpp"
#include "activetime/oracle.hpp"
#include "activetime/pipeline.hpp"

namespace at = activetime;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInvariant = 2;

// Raised for broken internal guarantees; carries exit code 2.
struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(at::ErrorCode code) {
  switch (code) {
    case at::ErrorCode::PropertyViolation:
    case at::ErrorCode::PreconditionViolated:
    case at::ErrorCode::RatioExceeded:
    case at::ErrorCode::InfeasibleInput:
    case at::ErrorCode::RangeViolation:
      return kInvariant;
    default:
      return kInvalid;
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw at::Error(at::ErrorCode::MalformedLine, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

at::Instance load_instance(const std::string& path) { return at::parse_instance(read_file(path)); }

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// Runs the pipeline and checks every guarantee the CLI promises to print.
at::PipelineResult solved(const at::Instance& instance) {
  at::PipelineResult r = at::run_pipeline(instance);
  if (!r.feasible()) {
    const auto& cut = std::get<at::CutCertificate>(r.verdict);
    throw InvariantFailure("rounded opening rejected by the flow check (cut " + std::to_string(cut.lhs) +
                           " < " + std::to_string(cut.rhs) + ")");
  }
  if (auto bad = at::schedule_error(std::get<at::Schedule>(r.verdict), instance)) {
    throw InvariantFailure("extracted schedule is invalid: " + *bad);
  }
  return r;
}

int cmd_validate(const std::string& path) {
  const at::Instance instance = load_instance(path);
  const at::LaminarTree tree = at::LaminarTree::build(instance);
  std::cout << "ok: " << instance.jobs.size() << " jobs, g=" << instance.g << ", T=" << instance.horizon()
            << ", " << tree.size() << " nodes\n"
            << tree.summary();
  return kOk;
}

int cmd_solve(const std::string& path) {
  const at::Instance instance = load_instance(path);
  const at::PipelineResult r = solved(instance);
  std::cout << "lp " << at::to_string(r.lp_solution.value) << '\n'
            << "open " << r.opening.total_open << '\n'
            << "ratio " << at::to_string(r.ratio) << '\n'
            << "x~ " << join(r.opening.x_tilde, " ") << '\n'
            << at::serialize(std::get<at::Schedule>(r.verdict), instance);
  return kOk;
}

int cmd_oracle(const std::string& path, const at::OracleLimits& limits) {
  const at::Instance instance = load_instance(path);
  const at::OracleResult r = at::optimal_active_time(instance, limits);
  std::cout << "opt " << r.opt << '\n' << "witness " << join(r.witness, " ") << '\n';
  return kOk;
}

int cmd_gap(int g, const at::OracleLimits& limits) {
  const at::Instance instance = at::gap_instance(g);
  const at::PipelineResult r = solved(instance);
  std::cout << at::serialize(instance) << "# lp " << at::to_string(r.lp_solution.value) << '\n'
            << "# alg " << r.opening.total_open << '\n';
  if (instance.horizon() <= limits.max_horizon) {
    const int opt = at::optimal_active_time(instance, limits).opt;
    std::cout << "# opt " << opt << '\n'
              << "# ratio " << at::to_string(at::Rational(opt) / r.lp_solution.value) << '\n';
  } else {
    std::cout << "# opt skipped: horizon " << instance.horizon() << " exceeds " << limits.max_horizon << '\n';
  }
  return kOk;
}

// Input errors from the hardness parsers share codes with transform bugs
// (RangeViolation), so they are tagged as validation failures here.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Parse>
auto parse_input(Parse parse, const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const at::Error& e) {
    throw InvalidInput(e.what());
  }
}

int cmd_reduce_setcover(const std::string& path, const std::string& slope) {
  const at::SetCoverInstance sc = parse_input(at::parse_setcover, path);
  const auto which = slope == "published" ? at::TransformSlope::Published : at::TransformSlope::Corrected;
  std::cout << at::serialize(at::setcover_to_psc(sc, which));
  return kOk;
}

int cmd_reduce_psc(const std::string& path) {
  const at::ReducedInstance r = at::psc_to_active_time(parse_input(at::parse_psc, path));
  std::cout << "# block width " << r.block_width << ", machines " << r.machines << '\n'
            << "# special slots " << join(r.special_slots, " ") << '\n'
            << "# baseline open " << r.baseline_open << '\n'
            << at::serialize(r.instance);
  return kOk;
}

int cmd_check_config(const std::vector<int>& empty, const std::vector<int>& lengths) {
  at::Configuration config{empty, lengths};
  std::sort(config.empty.rbegin(), config.empty.rend());
  std::sort(config.lengths.rbegin(), config.lengths.rend());
  std::cout << (at::config_fits(config) ? "feasible" : "infeasible") << '\n';
  return kOk;
}

int cmd_report(const std::string& dir, const at::OracleLimits& limits) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  int worst = kOk;
  std::cout << "file\tjobs\tg\tT\tlp\talg\topt\talg/lp\talg/opt\tstatus\n";
  for (const fs::path& file : files) {
    const std::string name = file.filename().string();
    try {
      const at::Instance instance = load_instance(file.string());
      const at::PipelineResult r = solved(instance);
      std::string opt = "-";
      std::string vs_opt = "-";
      if (instance.horizon() <= limits.max_horizon) {
        const int value = at::optimal_active_time(instance, limits).opt;
        opt = std::to_string(value);
        vs_opt = at::to_string(at::Rational(static_cast<long>(r.opening.total_open)) / value);
      }
      std::cout << name << '\t' << instance.jobs.size() << '\t' << instance.g << '\t' << instance.horizon() << '\t'
                << at::to_string(r.lp_solution.value) << '\t' << r.opening.total_open << '\t' << opt << '\t'
                << at::to_string(r.ratio) << '\t' << vs_opt << "\tok\n";
    } catch (const at::Error& e) {
      worst = std::max(worst, exit_code_for(e.code()));
      std::cout << name << "\t-\t-\t-\t-\t-\t-\t-\t-\terror " << at::to_string(e.code()) << '\n';
    } catch (const InvariantFailure& e) {
      worst = kInvariant;
      std::cout << name << "\t-\t-\t-\t-\t-\t-\t-\t-\tinvariant " << e.what() << '\n';
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested active-time scheduling: LP rounding, exact oracle, hardness reductions"};
  app.require_subcommand(1);

  at::OracleLimits limits;
  auto add_limits = [&limits](CLI::App* cmd) {
    cmd->add_option("--max-horizon", limits.max_horizon, "largest horizon the oracle enumerates")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--slot-budget", limits.slot_budget, "largest optimum the oracle will search for");
  };

  std::string path;
  auto* validate = app.add_subcommand("validate", "parse, check laminarity, print the tree");
  validate->add_option("file", path, "instance file, - for stdin")->required();

  auto* solve = app.add_subcommand("solve", "LP, push-down, rounding and flow check");
  solve->add_option("file", path, "instance file, - for stdin")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force optimum with witness");
  oracle->add_option("file", path, "instance file, - for stdin")->required();
  add_limits(oracle);

  int g = 0;
  auto* gap = app.add_subcommand("gap", "integrality-gap instance with LP, ALG and OPT");
  gap->add_option("--g", g, "machine capacity, at least 2")->required()->check(CLI::Range(2, 1000));
  add_limits(gap);

  auto* reduce = app.add_subcommand("reduce", "hardness transforms");
  reduce->require_subcommand(1);
  std::string slope = "corrected";
  auto* reduce_sc = reduce->add_subcommand("setcover", "set cover to prefix sum cover");
  reduce_sc->add_option("file", path, "set-cover file, - for stdin")->required();
  reduce_sc->add_option("--slope", slope, "corrected (default) or published")
      ->check(CLI::IsMember({"corrected", "published"}));
  auto* reduce_psc = reduce->add_subcommand("psc", "prefix sum cover to nested active time");
  reduce_psc->add_option("file", path, "prefix-sum-cover file, - for stdin")->required();

  std::vector<int> empty;
  std::vector<int> lengths;
  auto* check = app.add_subcommand("check-config", "does the job configuration fit the idle slots?");
  check->add_option("--e", empty, "idle slots per machine")->delimiter(',')->required();
  check->add_option("--l", lengths, "job lengths")->delimiter(',');

  std::string dir;
  auto* report = app.add_subcommand("report", "tab-separated table for every instance in a directory");
  report->add_option("dir", dir)->required()->check(CLI::ExistingDirectory);
  add_limits(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*solve) return cmd_solve(path);
    if (*oracle) return cmd_oracle(path, limits);
    if (*gap) return cmd_gap(g, limits);
    if (*reduce_sc) return cmd_reduce_setcover(path, slope);
    if (*reduce_psc) return cmd_reduce_psc(path);
    if (*check) return cmd_check_config(empty, lengths);
    if (*report) return cmd_report(dir, limits);
  } catch (const at::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kInvariant;
  }
  return kOk;
}
