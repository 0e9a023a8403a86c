#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spinpair/entanglement.hpp"
#include "spinpair/error.hpp"
#include "spinpair/parallel.hpp"

namespace spinpair::cli {

namespace {

void absorb(StateCheck& worst, const StateCheck& c) {
  worst.delta_lambda = std::max(worst.delta_lambda, c.delta_lambda);
  worst.delta_concurrence = std::max(worst.delta_concurrence, c.delta_concurrence);
  worst.det_drift = std::max(worst.det_drift, c.det_drift);
}

bool exceeds(const StateCheck& c, double tol) {
  return !(c.delta_lambda <= tol && c.delta_concurrence <= tol && c.det_drift <= tol);
}

Json to_json(const StateCheck& c) {
  Json j;
  j["max_abs_delta_lambda"] = c.delta_lambda;
  j["max_abs_delta_concurrence"] = c.delta_concurrence;
  j["max_det_drift"] = c.det_drift;
  return j;
}

struct Shard {
  std::vector<BlochState> states;
  std::uint64_t attempts = 0;
};

Shard draw_shard(FamilyTag family, std::uint64_t seed, std::size_t shard, std::size_t size) {
  DomainSampler sampler(family, shard_seed(seed, family, shard));
  Shard out;
  out.states.reserve(size);
  for (std::size_t k = 0; k < size; ++k) out.states.push_back(sampler.next());
  out.attempts = sampler.attempts();
  return out;
}

}  // namespace

StateCheck check_state(const BlochState& b) {
  const EntanglementReport closed = closed_form(b);
  const DensityMatrix rho = to_matrix(b);
  const EntanglementReport oracle = wootters_oracle(rho);
  StateCheck c;
  for (std::size_t k = 0; k < 4; ++k)
    c.delta_lambda = std::max(c.delta_lambda, std::abs(closed.lambdas[k] - oracle.lambdas[k]));
  c.delta_concurrence = std::abs(closed.concurrence - oracle.concurrence);
  const cplx det_rho = determinant(rho.m);
  const cplx det_r = determinant(rho.m * spin_flip(rho).m);
  c.det_drift = std::abs(det_r - det_rho * det_rho);
  return c;
}

std::uint64_t shard_seed(std::uint64_t seed, FamilyTag family, std::size_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(family), static_cast<std::uint32_t>(shard),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(shard) >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<BlochState> sample_sharded(FamilyTag family, std::uint64_t seed, std::size_t count,
                                       unsigned jobs, std::uint64_t* attempts) {
  if (count < 1) throw InvalidArgument("sample: count must be >= 1");
  const std::size_t shards = (count + kShardSize - 1) / kShardSize;
  std::vector<Shard> parts(shards);
  parallel_for(shards, jobs, [&](std::size_t s) {
    parts[s] = draw_shard(family, seed, s, std::min(kShardSize, count - s * kShardSize));
  });
  std::vector<BlochState> out;
  out.reserve(count);
  std::uint64_t total = 0;
  for (auto& p : parts) {
    out.insert(out.end(), p.states.begin(), p.states.end());
    total += p.attempts;
  }
  if (attempts) *attempts = total;
  return out;
}

VerifySummary run_verify(const VerifyOptions& opts) {
  if (opts.count < 1) throw InvalidArgument("verify: count must be >= 1");
  if (opts.families.empty()) throw InvalidArgument("verify: no families selected");
  VerifySummary summary;
  summary.options = opts;
  for (FamilyTag family : opts.families) {
    FamilyVerdict v;
    v.family = family;
    const auto states = sample_sharded(family, opts.seed, opts.count, opts.jobs, &v.attempts);
    v.states = states.size();
    std::vector<StateCheck> checks(states.size());
    parallel_for(states.size(), opts.jobs,
                 [&](std::size_t i) { checks[i] = check_state(states[i]); });
    for (std::size_t i = 0; i < checks.size(); ++i) {
      absorb(v.worst, checks[i]);
      if (!v.offender && exceeds(checks[i], opts.tolerance)) {
        v.offender = i;
        v.offender_state = states[i];
        v.offender_check = checks[i];
      }
    }
    absorb(summary.worst, v.worst);
    summary.pass = summary.pass && !v.offender;
    summary.families.push_back(v);
  }
  return summary;
}

Json to_json(const VerifySummary& s) {
  Json fams = Json::array();
  Json offenders = Json::array();
  for (const auto& v : s.families) {
    Json f;
    f["family"] = std::string(to_string(v.family));
    f["states"] = v.states;
    f["attempts"] = v.attempts;
    f.update(to_json(v.worst));
    fams.push_back(std::move(f));
    if (v.offender) {
      Json o;
      o["family"] = std::string(to_string(v.family));
      o["index"] = *v.offender;
      o["state"] = cli::to_json(v.offender_state);
      o.update(to_json(v.offender_check));
      offenders.push_back(std::move(o));
    }
  }
  Json j;
  j["command"] = "verify";
  j["seed"] = s.options.seed;
  j["count"] = s.options.count;
  j["tolerance"] = s.options.tolerance;
  j["families"] = std::move(fams);
  j.update(to_json(s.worst));
  j["pass"] = s.pass;
  if (!offenders.empty()) j["offending"] = std::move(offenders);
  return j;
}

}  // namespace spinpair::cli
