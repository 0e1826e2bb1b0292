#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surfpack/geometry.hpp"
#include "surfpack/policy.hpp"

namespace surfpack {

// ---- instance and solution files -------------------------------------------
//
// Instance: {"id": "...", "items": [{"l": 2, "w": 3, "h": 4}, ...]}
// A file holds either one instance object or an array of them.

std::string instances_to_json(std::span<const Instance> instances);
/// Accepts a single object or an array. Throws BadInput on malformed JSON or
/// a schema violation, EmptyInstance / BadInput from validate_instance.
std::vector<Instance> instances_from_json(std::string_view text);

// Solution: {"instance_id", "sequence", "placements": [{"item", "x", "y", "z",
// "orientation", "dims": [l, w, h]}], "extents": {"L", "W", "H"},
// "half_area", "surface_area", "validation": {"verdict", "violations"}}
// "dims" and "half_area" are derived and ignored when reading back.

std::string solution_to_json(const Instance& instance,
                             const PackingSolution& solution,
                             const ValidationReport& report,
                             std::string_view method = {});
PackingSolution solution_from_json(std::string_view text);

// ---- checkpoints -------------------------------------------------------------

inline constexpr std::string_view kCheckpointFormat = "surfpack-checkpoint";
inline constexpr int kCheckpointVersion = 1;

// {"format", "version", "config": {...}, "dim", "params": [...],
//  "adam": {"step", "m", "v"}, "baselines": {"alpha", "values"},
//  "rng_state": "..."}
struct Checkpoint {
  TrainerConfig config;
  PolicyParams params;
  AdamState adam;
  BaselineStore baselines;
  std::string rng_state;

  bool operator==(const Checkpoint&) const = default;
};

Checkpoint checkpoint_of(const TrainingResult& result);
std::string checkpoint_to_json(const Checkpoint& ckpt);
/// Throws BadInput on a wrong format tag, version or size mismatch.
Checkpoint checkpoint_from_json(std::string_view text);

/// Trainer config keys: steps, batch_size, lr, lr_decay, lr_decay_every,
/// beta1, beta2, epsilon, clip_norm, alpha, beam_width, embed_dim,
/// init_scale, seed. Missing keys keep their defaults; unknown keys are
/// rejected.
TrainerConfig trainer_config_from_json(std::string_view text);
std::string trainer_config_to_json(const TrainerConfig& config);

/// `step,mean_reward,mean_baseline,lr` with round-trippable doubles.
std::string training_log_csv(std::span<const TrainingLogRow> log);

// ---- synthetic instances -----------------------------------------------------

/// `count` instances of `n` items with sides drawn uniformly from [lo, hi].
/// Ids are "syn-s<seed>-<index, 6 digits>". Throws BadRange for lo > hi or
/// lo < 1, BadInput for count or n of zero.
std::vector<Instance> generate_instances(std::size_t count, std::size_t n,
                                         Length lo, Length hi,
                                         std::uint64_t seed);

// ---- benchmark ---------------------------------------------------------------

enum class Method { Random, Heuristic, PolicySampling, PolicyBeam, Oracle };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

struct BenchmarkConfig {
  std::vector<Method> methods;
  std::size_t random_draws = 1;    // random: mean over this many permutations
  std::size_t policy_samples = 1;  // policy-sampling: best of this many
  std::size_t beam_width = 3;
  std::size_t oracle_limit = 8;
  std::uint64_t seed = 1;
  std::optional<PolicyParams> policy;
  bool timing = true;  // false writes runtime 0 so reports are byte-stable
};

struct BenchmarkRow {
  std::string instance_id;
  Method method = Method::Heuristic;
  double half_area = 0.0;
  double runtime_ms = 0.0;
};

struct MethodSummary {
  Method method = Method::Heuristic;
  double asa = 0.0;  // mean half-area over evaluated instances
  std::size_t instances = 0;
};

struct BenchmarkReport {
  std::uint64_t seed = 0;
  std::vector<BenchmarkRow> rows;  // sorted by instance id, then method
  std::vector<MethodSummary> summary;
  std::vector<std::string> warnings;

  std::optional<double> asa(Method m) const;
};

/// Evaluates every method on every instance in parallel. Each instance and
/// method draws from its own generator seeded by (seed, method, instance id).
/// Throws BadInput when no method is given or a policy method lacks params.
BenchmarkReport run_benchmark(std::span<const Instance> instances,
                              const BenchmarkConfig& config);

/// Per-instance rows, a blank line, then `method,asa,instances`.
std::string benchmark_csv(const BenchmarkReport& report);
std::string benchmark_table(const BenchmarkReport& report);

}  // namespace surfpack
