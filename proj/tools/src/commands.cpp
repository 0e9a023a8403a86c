#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "exit_codes.hpp"
#include "format.hpp"
#include "json_io.hpp"
#include "manifest.hpp"
#include "spinpair/entanglement.hpp"
#include "spinpair/error.hpp"
#include "spinpair/hamiltonians.hpp"
#include "spinpair/separability.hpp"
#include "verify.hpp"

#ifndef SPINPAIR_VERSION
#define SPINPAIR_VERSION "0.0.0"
#endif

namespace spinpair::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string method_name(MethodChoice m) {
  switch (m) {
    case MethodChoice::Closed: return "closed";
    case MethodChoice::Oracle: return "oracle";
    case MethodChoice::Both: return "both";
  }
  return "closed";
}

// Result goes to --out (with manifest) or stdout.
void emit(const std::string& content, const std::optional<std::string>& path,
          RunManifest manifest, Clock::time_point start, std::ostream& out) {
  if (!path) {
    out << content;
    return;
  }
  manifest.version = SPINPAIR_VERSION;
  manifest.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  write_with_manifest(*path, content, manifest);
}

RunManifest manifest_for(const std::string& command, const Json& inputs,
                         std::optional<std::uint64_t> seed = std::nullopt) {
  return {command, input_digest(inputs), seed, SPINPAIR_VERSION, 0.0};
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string row;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) row += ',';
    row += f;
    first = false;
  }
  row += '\n';
  return row;
}

[[noreturn]] void invalid(const std::string& msg) { throw CliError(ExitCode::InputValidation, msg); }

std::string violation_message(const BlochState& b, const ValidityReport& v) {
  std::ostringstream msg;
  msg << "state " << to_json(b).dump() << " is outside the physical domain";
  const auto bad = v.violated_minors();
  if (bad.empty()) {
    msg << ": min eigenvalue " << format_real(v.min_eigenvalue);
  } else {
    msg << "; violated minors:";
    for (const auto& m : bad) msg << "\n  " << m.label << " = " << format_real(m.value);
  }
  return msg.str();
}

double max_lambda_gap(const std::array<double, 4>& x, const std::array<double, 4>& y) {
  double gap = 0.0;
  for (std::size_t k = 0; k < 4; ++k) gap = std::max(gap, std::abs(x[k] - y[k]));
  return gap;
}

// The routes agree when either every eigenvalue of R or the concurrence
// matches to kAgreementTol. Each is well conditioned where the other is not:
// near rank-deficient R the square roots amplify eigenvalue rounding in C,
// and near-degenerate cubic roots are only sqrt(eps)-accurate in lambda while
// C is insensitive to how a degenerate pair splits.
bool routes_agree(const std::array<double, 4>& l1, double c1, const std::array<double, 4>& l2,
                  double c2) {
  return max_lambda_gap(l1, l2) <= kAgreementTol || std::abs(c1 - c2) <= kAgreementTol;
}

// Concurrence and EoF by the requested route; under Both the closed form is
// reported after checking it against the oracle.
EntanglementReport entanglement_by(const BlochState& b, MethodChoice method) {
  if (method == MethodChoice::Oracle) return wootters_oracle(to_matrix(b));
  EntanglementReport closed = closed_form(b);
  if (method == MethodChoice::Both) {
    const EntanglementReport oracle = wootters_oracle(to_matrix(b));
    if (!routes_agree(closed.lambdas, closed.concurrence, oracle.lambdas, oracle.concurrence)) {
      throw CliError(ExitCode::VerificationFailure,
                     "closed form and oracle disagree at " + to_json(b).dump() +
                         ": concurrence " + format_real(closed.concurrence) + " vs " +
                         format_real(oracle.concurrence));
    }
  }
  return closed;
}

double grid_point(double lo, double hi, int steps, int i) {
  if (steps == 1) return lo;
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<FamilyTag> parse_families(const std::vector<std::string>& names) {
  if (names.empty()) return {kAllFamilies.begin(), kAllFamilies.end()};
  std::vector<FamilyTag> out;
  for (const auto& n : names) {
    const auto tag = parse_family(n);
    if (!tag) invalid("unknown family '" + n + "' (expected P23, P14, P2bar3bar or P1bar4bar)");
    if (std::find(out.begin(), out.end(), *tag) == out.end()) out.push_back(*tag);
  }
  return out;
}

}  // namespace

const char* version() noexcept { return SPINPAIR_VERSION; }

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream&) {
  const auto start = Clock::now();
  BlochState b = state_from_json(load_json_file(a.state_file));
  apply_overrides(b, a.sets);
  const ValidityReport v = validity(b);
  if (!v.valid) throw CliError(ExitCode::InvalidState, violation_message(b, v));

  Json j;
  j["state"] = to_json(b);
  j["validity"] = to_json(v);
  std::optional<EntanglementReport> closed, oracle;
  if (a.method != MethodChoice::Oracle) closed = closed_form(b);
  if (a.method != MethodChoice::Closed) oracle = wootters_oracle(to_matrix(b));
  if (closed) j["closed_form"] = to_json(*closed);
  if (oracle) j["oracle"] = to_json(*oracle);
  if (closed && oracle) {
    double dl = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
      dl = std::max(dl, std::abs(closed->lambdas[k] - oracle->lambdas[k]));
    j["max_abs_delta_lambda"] = dl;
    j["abs_delta_concurrence"] = std::abs(closed->concurrence - oracle->concurrence);
  }
  const EntanglementReport& main = closed ? *closed : *oracle;
  j["concurrence"] = main.concurrence;
  j["eof"] = main.eof;

  Json inputs{{"state", to_json(b)}, {"method", method_name(a.method)}};
  emit(j.dump(2) + "\n", a.out, manifest_for("eval", inputs), start, out);
  return 0;
}

int cmd_path(const PathArgs& a, std::ostream& out, std::ostream&) {
  const auto start = Clock::now();
  BlochState base = state_from_json(load_json_file(a.state_file));
  apply_overrides(base, a.sets);
  if (a.steps < 2) invalid("path: steps must be >= 2");
  if (!(a.lo < a.hi)) invalid("path: need lo < hi");
  if (a.lo < -1.0 || a.hi > 1.0) invalid("path: range must lie within [-1, 1]");
  const auto axis = bloch_field_index(a.axis, base.family);
  if (!axis) invalid("path: unknown axis '" + a.axis + "'");
  std::optional<std::size_t> tie;
  if (a.tie_target) {
    tie = bloch_field_index(*a.tie_target, base.family);
    if (!tie) invalid("path: unknown tie target '" + *a.tie_target + "'");
    if (*tie == *axis) invalid("path: tie target must differ from the axis");
  }

  std::string csv = std::string(kPathHeader) + "\n";
  bool any = false;
  for (int i = 0; i < a.steps; ++i) {
    const double u = grid_point(a.lo, a.hi, a.steps, i);
    auto p = base.params();
    p[*axis] = u;
    if (tie) p[*tie] = a.tie_slope * u + a.tie_offset;
    const BlochState b = BlochState::from_params(base.family, p);
    if (!validity(b).valid) {
      csv += csv_row({format_real(u), "0", "", "", ""});
      continue;
    }
    any = true;
    const EntanglementReport r = entanglement_by(b, a.method);
    csv += csv_row({format_real(u), "1", format_real(r.concurrence), format_real(r.eof),
                    format_real(ppt_min_eig(to_matrix(b)))});
  }
  if (!any) throw CliError(ExitCode::EmptyResult, "path: every point lies outside the domain");

  Json inputs{{"state", to_json(base)}, {"axis", a.axis},       {"lo", a.lo},
              {"hi", a.hi},             {"steps", a.steps},     {"method", method_name(a.method)}};
  if (a.tie_target) {
    inputs["tie"] = {{"target", *a.tie_target}, {"slope", a.tie_slope}, {"offset", a.tie_offset}};
  }
  emit(csv, a.out, manifest_for("path", inputs), start, out);
  return 0;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream&) {
  const auto start = Clock::now();
  ScanConfig cfg = scan_config_from_json(load_json_file(a.config_file));
  apply_overrides(cfg.fixed, a.sets);
  if (a.steps1) cfg.range1.steps = *a.steps1;
  if (a.steps2) cfg.range2.steps = *a.steps2;
  validate(cfg);

  const ScanMethod primary =
      a.method == MethodChoice::Oracle ? ScanMethod::Oracle : ScanMethod::ClosedForm;
  const ScanGrid grid = scan_grid(cfg, a.jobs, primary);
  if (a.method == MethodChoice::Both) {
    const ScanGrid check = scan_grid(cfg, a.jobs, ScanMethod::Oracle);
    for (std::size_t k = 0; k < grid.cells.size(); ++k) {
      const auto& c = grid.cells[k];
      if (!c.in_domain) continue;
      const ScanCell& o = check.cells[k];
      if (!routes_agree(c.lambdas, c.concurrence, o.lambdas, o.concurrence)) {
        throw CliError(ExitCode::VerificationFailure,
                       "scan: closed form and oracle disagree at (" + format_real(c.u1) + ", " +
                           format_real(c.u2) + ")");
      }
    }
  }

  std::string csv = std::string(kScanHeader) + "\n";
  for (const auto& c : grid.cells) {
    csv += csv_row({format_real(c.u1), format_real(c.u2), c.in_domain ? "1" : "0",
                    format_real(c.concurrence), format_real(c.ppt_min_eig)});
  }
  Json inputs{{"config", to_json(cfg)}, {"method", method_name(a.method)}};
  emit(csv, a.out, manifest_for("scan", inputs), start, out);
  return 0;
}

int cmd_gibbs(const GibbsArgs& a, std::ostream& out, std::ostream&) {
  const auto start = Clock::now();
  HamiltonianInput in = hamiltonian_from_json(load_json_file(a.hamiltonian_file));
  apply_overrides(in.spec, a.sets);

  std::vector<double> betas;
  const bool ranged = a.beta_lo || a.beta_hi || a.beta_steps;
  if (ranged) {
    if (a.beta) invalid("gibbs: give either --beta or a --beta-lo/--beta-hi/--beta-steps range");
    if (!a.beta_lo || !a.beta_hi || !a.beta_steps) {
      invalid("gibbs: a beta range needs --beta-lo, --beta-hi and --beta-steps");
    }
    if (*a.beta_steps < 1) invalid("gibbs: beta steps must be >= 1");
    if (*a.beta_steps > 1 && !(*a.beta_lo < *a.beta_hi)) invalid("gibbs: need beta lo < hi");
    for (int i = 0; i < *a.beta_steps; ++i)
      betas.push_back(grid_point(*a.beta_lo, *a.beta_hi, *a.beta_steps, i));
  } else if (a.beta || in.beta) {
    betas.push_back(a.beta ? *a.beta : *in.beta);
  } else {
    invalid("gibbs: no inverse temperature given (--beta, a range, or 'beta' in the file)");
  }
  for (double beta : betas)
    if (!(beta >= 0.0) || !std::isfinite(beta)) invalid("gibbs: beta must be finite and >= 0");

  const ComplexMatrix h = build(in.spec);
  std::string csv = std::string(kGibbsHeader) + "\n";
  for (double beta : betas) {
    const BlochState b = from_matrix(gibbs(h, beta), in.spec.family);
    const EntanglementReport r = closed_form(b);
    csv += csv_row({format_real(beta), format_real(r.concurrence), format_real(r.eof)});
  }
  Json inputs{{"hamiltonian", to_json(in.spec)}, {"betas", betas}};
  emit(csv, a.out, manifest_for("gibbs", inputs), start, out);
  return 0;
}

int cmd_evolve(const EvolveArgs& a, std::ostream& out, std::ostream&) {
  const auto start = Clock::now();
  BlochState b0 = state_from_json(load_json_file(a.state_file));
  apply_overrides(b0, a.state_sets);
  HamiltonianInput in = hamiltonian_from_json(load_json_file(a.hamiltonian_file));
  apply_overrides(in.spec, a.hamiltonian_sets);
  if (a.t_steps < 1) invalid("evolve: t steps must be >= 1");
  if (a.t_steps > 1 && !(a.t_lo < a.t_hi)) invalid("evolve: need t lo < hi");
  const ValidityReport v = validity(b0);
  if (!v.valid) throw CliError(ExitCode::InvalidState, violation_message(b0, v));

  const DensityMatrix rho0 = to_matrix(b0);
  std::string csv = std::string(kEvolveHeader) + "\n";
  for (int i = 0; i < a.t_steps; ++i) {
    const double t = grid_point(a.t_lo, a.t_hi, a.t_steps, i);
    const DensityMatrix rho = evolve(rho0, in.spec, t);
    const EntanglementReport r = closed_form(from_matrix(rho, in.spec.family));
    csv += csv_row({format_real(t), format_real(r.concurrence), format_real(r.eof),
                    format_real(ppt_min_eig(rho))});
  }
  Json inputs{{"state", to_json(b0)},  {"hamiltonian", to_json(in.spec)},
              {"t_lo", a.t_lo},        {"t_hi", a.t_hi},
              {"t_steps", a.t_steps}};
  emit(csv, a.out, manifest_for("evolve", inputs), start, out);
  return 0;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  if (a.count < 1) invalid("verify: count must be >= 1");
  VerifyOptions opts;
  opts.families = parse_families(a.families);
  opts.count = a.count;
  opts.seed = a.seed;
  opts.jobs = a.jobs;
  const VerifySummary summary = run_verify(opts);
  Json families = Json::array();
  for (FamilyTag f : opts.families) families.push_back(std::string(to_string(f)));
  Json inputs{{"families", families}, {"count", a.count}, {"seed", a.seed}};
  emit(to_json(summary).dump(2) + "\n", a.out, manifest_for("verify", inputs, a.seed), start,
       out);
  if (!summary.pass) {
    err << "verify: closed form and oracle disagree beyond " << format_real(opts.tolerance)
        << "; see 'offending' in the summary\n";
    return static_cast<int>(ExitCode::VerificationFailure);
  }
  return 0;
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream&) {
  constexpr double tol = 1e-8;
  const auto start = Clock::now();
  const ComplexMatrix m = matrix_from_json(load_json_file(a.matrix_file));
  const double asym = hermitian_asymmetry(m);
  if (asym > tol) {
    throw CliError(ExitCode::InvalidState,
                   "classify: matrix is not Hermitian (max |M - M^dagger| = " +
                       format_real(asym) + ")");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw CliError(ExitCode::InvalidState,
                   "classify: trace is " + format_real(tr) + ", not 1");
  }
  const double min_eig = hermitian_eigenvalues(m, tol).min();
  if (min_eig < -tol) {
    throw CliError(ExitCode::InvalidState,
                   "classify: matrix is not positive semidefinite (min eigenvalue " +
                       format_real(min_eig) + ")");
  }

  const auto tags = classify(m, tol);
  Json j;
  Json names = Json::array();
  for (FamilyTag t : tags) names.push_back(std::string(to_string(t)));
  j["tags"] = std::move(names);
  Json norms;
  for (FamilyTag t : kAllFamilies) norms[std::string(to_string(t))] = symmetry_defect(m, t);
  j["commutator_norms"] = std::move(norms);
  if (!tags.empty()) j["state"] = to_json(from_matrix({m}, tags.front(), tol));

  Json real = Json::array(), imag = Json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    Json rr = Json::array(), ii = Json::array();
    for (std::size_t c = 0; c < 4; ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    real.push_back(std::move(rr));
    imag.push_back(std::move(ii));
  }
  Json inputs{{"real", real}, {"imag", imag}};
  emit(j.dump(2) + "\n", a.out, manifest_for("classify", inputs), start, out);
  return 0;
}

}  // namespace spinpair::cli
