#pragma once

// One function per subcommand. Each returns a process exit code, writes its
// result to `out` (or the --out file plus manifest) and diagnostics to `err`.
// Failures are raised as exceptions and mapped to exit codes by run().

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spinpair::cli {

enum class MethodChoice { Closed, Oracle, Both };

struct EvalArgs {
  std::string state_file;
  std::vector<std::string> sets;
  MethodChoice method = MethodChoice::Both;
  std::optional<std::string> out;
};

struct PathArgs {
  std::string state_file;
  std::vector<std::string> sets;
  std::string axis;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
  /// Optional linear tie: tie_target = tie_slope * u + tie_offset.
  std::optional<std::string> tie_target;
  double tie_slope = 1.0;
  double tie_offset = 0.0;
  MethodChoice method = MethodChoice::Closed;
  std::optional<std::string> out;
};

struct ScanArgs {
  std::string config_file;
  std::vector<std::string> sets;
  std::optional<int> steps1;
  std::optional<int> steps2;
  MethodChoice method = MethodChoice::Closed;
  unsigned jobs = 1;
  std::string out;
};

struct GibbsArgs {
  std::string hamiltonian_file;
  std::vector<std::string> sets;
  std::optional<double> beta;
  std::optional<double> beta_lo;
  std::optional<double> beta_hi;
  std::optional<int> beta_steps;
  std::optional<std::string> out;
};

struct EvolveArgs {
  std::string state_file;
  std::vector<std::string> state_sets;
  std::string hamiltonian_file;
  std::vector<std::string> hamiltonian_sets;
  double t_lo = 0.0;
  double t_hi = 0.0;
  int t_steps = 0;
  std::optional<std::string> out;
};

struct VerifyArgs {
  std::vector<std::string> families;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::optional<std::string> out;
};

struct ClassifyArgs {
  std::string matrix_file;
  std::optional<std::string> out;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err);
int cmd_path(const PathArgs& a, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err);
int cmd_gibbs(const GibbsArgs& a, std::ostream& out, std::ostream& err);
int cmd_evolve(const EvolveArgs& a, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err);
int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err);

/// Closed-form vs oracle agreement under --method both: every eigenvalue of R
/// or the concurrence within this.
inline constexpr double kAgreementTol = 1e-9;

/// Header rows of the CSV outputs.
inline constexpr const char* kPathHeader = "u,in_domain,concurrence,eof,ppt_min_eig";
inline constexpr const char* kScanHeader = "axis1,axis2,in_domain,concurrence,ppt_min_eig";
inline constexpr const char* kGibbsHeader = "beta,concurrence,eof";
inline constexpr const char* kEvolveHeader = "t,concurrence,eof,ppt_min_eig";

const char* version() noexcept;

}  // namespace spinpair::cli
