#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <thread>

#include "commands.hpp"
#include "exit_codes.hpp"
#include "spinpair/error.hpp"

namespace spinpair::cli {

namespace {

const std::map<std::string, MethodChoice> kMethods{
    {"closed", MethodChoice::Closed}, {"oracle", MethodChoice::Oracle}, {"both", MethodChoice::Both}};

// --jobs, else SPINPAIR_JOBS, else the hardware's parallelism.
unsigned resolve_jobs(const std::optional<unsigned>& flag) {
  if (flag) {
    if (*flag == 0) throw CliError(ExitCode::InputValidation, "--jobs must be >= 1");
    return *flag;
  }
  if (const char* env = std::getenv("SPINPAIR_JOBS"); env && *env) {
    unsigned jobs = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto res = std::from_chars(env, end, jobs);
    if (res.ec != std::errc{} || res.ptr != end || jobs == 0) {
      throw CliError(ExitCode::InputValidation,
                     std::string("SPINPAIR_JOBS must be a positive integer (got '") + env + "')");
    }
    return jobs;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void add_method(CLI::App* sub, MethodChoice& target) {
  sub->add_option("--method", target, "closed, oracle or both")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form two-qubit entanglement for P-symmetric families", "spinpair"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1, 1);

  EvalArgs eval;
  auto* s_eval = app.add_subcommand("eval", "Concurrence and EoF of one state (JSON)");
  s_eval->add_option("state", eval.state_file, "BlochState JSON file")->required();
  s_eval->add_option("--set", eval.sets, "Override a parameter, key=value");
  add_method(s_eval, eval.method);
  s_eval->add_option("--out", eval.out, "Write the report here (plus manifest)");

  PathArgs path;
  auto* s_path = app.add_subcommand("path", "Entanglement along a one-parameter path (CSV)");
  s_path->add_option("state", path.state_file, "Base BlochState JSON file")->required();
  s_path->add_option("--set", path.sets, "Override a parameter, key=value");
  s_path->add_option("--axis", path.axis, "Swept parameter")->required();
  s_path->add_option("--lo", path.lo)->required();
  s_path->add_option("--hi", path.hi)->required();
  s_path->add_option("--steps", path.steps)->required();
  s_path->add_option("--tie", path.tie_target, "Parameter tied linearly to the axis");
  s_path->add_option("--tie-slope", path.tie_slope, "tie = slope * u + offset");
  s_path->add_option("--tie-offset", path.tie_offset);
  add_method(s_path, path.method);
  s_path->add_option("--out", path.out);

  ScanArgs scan;
  std::optional<unsigned> scan_jobs;
  auto* s_scan = app.add_subcommand("scan", "Two-parameter phase-diagram grid (CSV)");
  s_scan->add_option("config", scan.config_file, "ScanConfig JSON file")->required();
  s_scan->add_option("--set", scan.sets, "Override a fixed parameter, key=value");
  s_scan->add_option("--steps1", scan.steps1);
  s_scan->add_option("--steps2", scan.steps2);
  s_scan->add_option("--jobs", scan_jobs, "Worker threads (default: SPINPAIR_JOBS or all cores)");
  add_method(s_scan, scan.method);
  s_scan->add_option("--out", scan.out, "Output CSV path")->required();

  GibbsArgs gibbs;
  auto* s_gibbs = app.add_subcommand("gibbs", "Thermal-state entanglement against beta (CSV)");
  s_gibbs->add_option("hamiltonian", gibbs.hamiltonian_file, "HamiltonianSpec JSON file")
      ->required();
  s_gibbs->add_option("--set", gibbs.sets, "Override a coupling, key=value");
  s_gibbs->add_option("--beta", gibbs.beta, "Single inverse temperature");
  s_gibbs->add_option("--beta-lo", gibbs.beta_lo);
  s_gibbs->add_option("--beta-hi", gibbs.beta_hi);
  s_gibbs->add_option("--beta-steps", gibbs.beta_steps);
  s_gibbs->add_option("--out", gibbs.out);

  EvolveArgs evolve;
  auto* s_evolve = app.add_subcommand("evolve", "Entanglement under unitary evolution (CSV)");
  s_evolve->add_option("state", evolve.state_file, "Initial BlochState JSON file")->required();
  s_evolve->add_option("hamiltonian", evolve.hamiltonian_file, "HamiltonianSpec JSON file")
      ->required();
  s_evolve->add_option("--set", evolve.state_sets, "Override a state parameter, key=value");
  s_evolve->add_option("--set-h", evolve.hamiltonian_sets, "Override a coupling, key=value");
  s_evolve->add_option("--t-lo", evolve.t_lo);
  s_evolve->add_option("--t-hi", evolve.t_hi)->required();
  s_evolve->add_option("--t-steps", evolve.t_steps)->required();
  s_evolve->add_option("--out", evolve.out);

  VerifyArgs verify;
  std::optional<unsigned> verify_jobs;
  auto* s_verify = app.add_subcommand("verify", "Closed form against the Wootters oracle");
  s_verify->add_option("--families", verify.families, "Subset of families (default: all)")
      ->delimiter(',');
  s_verify->add_option("--count", verify.count, "States per family")->required();
  s_verify->add_option("--seed", verify.seed)->required();
  s_verify->add_option("--jobs", verify_jobs,
                       "Worker threads (default: SPINPAIR_JOBS or all cores)");
  s_verify->add_option("--out", verify.out);

  ClassifyArgs cls;
  auto* s_cls = app.add_subcommand("classify", "Symmetry tags of a 4x4 density matrix");
  s_cls->add_option("matrix", cls.matrix_file, "JSON with 'real' and 'imag' 4x4 arrays")
      ->required();
  s_cls->add_option("--out", cls.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "spinpair: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InputValidation);
  }

  if (s_eval->parsed()) return cmd_eval(eval, out, err);
  if (s_path->parsed()) return cmd_path(path, out, err);
  if (s_scan->parsed()) {
    scan.jobs = resolve_jobs(scan_jobs);
    return cmd_scan(scan, out, err);
  }
  if (s_gibbs->parsed()) return cmd_gibbs(gibbs, out, err);
  if (s_evolve->parsed()) return cmd_evolve(evolve, out, err);
  if (s_verify->parsed()) {
    verify.jobs = resolve_jobs(verify_jobs);
    return cmd_verify(verify, out, err);
  }
  return cmd_classify(cls, out, err);
}

int fail(std::ostream& err, ExitCode code, const std::string& msg) {
  err << "spinpair: " << msg << "\n";
  return static_cast<int>(code);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const CliError& e) {
    return fail(err, e.code(), e.what());
  } catch (const InvalidArgument& e) {
    return fail(err, ExitCode::InputValidation, e.what());
  } catch (const SymmetryViolation& e) {
    // The input does not belong to the family it was declared with.
    return fail(err, ExitCode::InputValidation, e.what());
  } catch (const InvalidState& e) {
    return fail(err, ExitCode::InvalidState, e.what());
  } catch (const NotHermitian& e) {
    return fail(err, ExitCode::InvalidState, e.what());
  } catch (const NotPositive& e) {
    return fail(err, ExitCode::InvalidState, e.what());
  } catch (const EmptyResult& e) {
    return fail(err, ExitCode::EmptyResult, e.what());
  } catch (const std::exception& e) {
    return fail(err, ExitCode::VerificationFailure, e.what());
  }
}

}  // namespace spinpair::cli
