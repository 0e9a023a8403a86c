#pragma once

// The oracle-equivalence sweep behind `spinpair verify`.

#include <cstdint>
#include <optional>
#include <vector>

#include "json_io.hpp"
#include "spinpair/states.hpp"

namespace spinpair::cli {

struct StateCheck {
  /// max_k |lambda_k(closed form) - lambda_k(oracle)|
  double delta_lambda = 0.0;
  double delta_concurrence = 0.0;
  /// |det R - (det rho)^2|
  double det_drift = 0.0;
};

StateCheck check_state(const BlochState& b);

struct VerifyOptions {
  std::vector<FamilyTag> families;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  double tolerance = 1e-9;
};

struct FamilyVerdict {
  FamilyTag family = FamilyTag::P23;
  std::size_t states = 0;
  std::uint64_t attempts = 0;
  StateCheck worst;
  /// First sample (in index order) exceeding the tolerance.
  std::optional<std::size_t> offender;
  BlochState offender_state;
  StateCheck offender_check;
};

struct VerifySummary {
  VerifyOptions options;
  std::vector<FamilyVerdict> families;
  StateCheck worst;
  bool pass = true;
};

/// States are drawn in fixed shards of kShardSize, each from its own seed
/// derived from (seed, family, shard). Shards are spread over the workers, so
/// the sampled states and the summary do not depend on `jobs`.
inline constexpr std::size_t kShardSize = 256;

std::uint64_t shard_seed(std::uint64_t seed, FamilyTag family, std::size_t shard);

/// Sharded, seed-reproducible samples; same result for every `jobs`.
std::vector<BlochState> sample_sharded(FamilyTag family, std::uint64_t seed, std::size_t count,
                                       unsigned jobs, std::uint64_t* attempts = nullptr);

VerifySummary run_verify(const VerifyOptions& opts);

Json to_json(const VerifySummary& s);

}  // namespace spinpair::cli
