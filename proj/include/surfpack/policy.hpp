#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "surfpack/geometry.hpp"

namespace surfpack {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);
/// Uniform integer in [0, n) by rejection; n > 0.
std::size_t uniform_index(Rng& rng, std::size_t n);

/// Weights of the pointer policy, stored as one flat vector.
///
/// With embedding width d, the blocks are laid out back to back (matrices
/// row-major, rows = output units):
///
///   embed_w   d x 3   item features -> embedding
///   embed_b   d
///   context_w d x d   mean embedding of selected items -> query
///   global_w  d x d   mean embedding of all items -> query
///   ref_w     d x d   candidate embedding -> attention
///   score_b   d
///   score_v   d       attention -> scalar score
///
/// Item features are (l, w, h) divided by the instance's longest side.
/// For candidate i at a step where S is the selected set,
///
///   e_i  = tanh(embed_w f_i + embed_b)
///   q    = context_w mean_{j in S} e_j + global_w mean_j e_j   (first term 0 if S empty)
///   u_i  = score_v . tanh(ref_w e_i + q + score_b)
///
/// and the pointer distribution is the softmax of u over unselected items.
class PolicyParams {
 public:
  PolicyParams() = default;
  explicit PolicyParams(std::size_t dim);  // all zeros
  PolicyParams(std::size_t dim, std::vector<double> flat);

  static std::size_t parameter_count(std::size_t dim);
  static PolicyParams random(std::size_t dim, double scale, Rng& rng);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return flat_.size(); }
  std::span<double> flat() { return flat_; }
  std::span<const double> flat() const { return flat_; }

  std::span<const double> embed_w() const { return block(0, 3 * dim_); }
  std::span<const double> embed_b() const { return block(3 * dim_, dim_); }
  std::span<const double> context_w() const { return block(4 * dim_, dim_ * dim_); }
  std::span<const double> global_w() const {
    return block(4 * dim_ + dim_ * dim_, dim_ * dim_);
  }
  std::span<const double> ref_w() const {
    return block(4 * dim_ + 2 * dim_ * dim_, dim_ * dim_);
  }
  std::span<const double> score_b() const {
    return block(4 * dim_ + 3 * dim_ * dim_, dim_);
  }
  std::span<const double> score_v() const {
    return block(5 * dim_ + 3 * dim_ * dim_, dim_);
  }

  bool operator==(const PolicyParams&) const = default;

 private:
  std::span<const double> block(std::size_t offset, std::size_t len) const {
    return std::span<const double>(flat_).subspan(offset, len);
  }

  std::size_t dim_ = 0;
  std::vector<double> flat_;
};

/// Pointer distribution over items given which are already selected
/// (`selected[i]` true). Selected items get probability exactly 0.
/// Throws NothingToSelect when every item is selected.
std::vector<double> policy_forward(const PolicyParams& params,
                                   const Instance& instance,
                                   const std::vector<bool>& selected);

struct DecodeStep {
  std::size_t t = 0;
  std::vector<bool> selected;
  std::vector<double> probs;
};

/// Step-by-step distributions along a fixed sequence.
std::vector<DecodeStep> replay(const PolicyParams& params,
                               const Instance& instance,
                               std::span<const std::size_t> sequence);

/// log p(sequence | instance).
double log_probability(const PolicyParams& params, const Instance& instance,
                       std::span<const std::size_t> sequence);

/// Gradient of log p(sequence | instance) with respect to the flat params.
std::vector<double> log_probability_gradient(
    const PolicyParams& params, const Instance& instance,
    std::span<const std::size_t> sequence);

struct EpisodeRecord {
  std::size_t sample_id = 0;
  std::vector<std::size_t> sequence;
  double log_prob = 0.0;
  double reward = 0.0;  // half-area of pack_sequence(sequence)

  bool operator==(const EpisodeRecord&) const = default;
};

/// Half-area of packing `sequence` with the least-surface-area rule.
double sequence_reward(const Instance& instance,
                       std::span<const std::size_t> sequence);

EpisodeRecord sample_sequence(const PolicyParams& params,
                              const Instance& instance, Rng& rng,
                              std::size_t sample_id = 0);

/// Most probable item at every step; ties go to the smaller index.
EpisodeRecord greedy_decode(const PolicyParams& params,
                            const Instance& instance);

/// Width-k beam over cumulative log-probability. The k finished beams plus
/// the greedy rollout are packed, and the lowest half-area wins (ties: higher
/// log-prob, then lexicographically smaller sequence).
EpisodeRecord beam_search(const PolicyParams& params, const Instance& instance,
                          std::size_t k);

/// Per-training-sample reward baseline with exponential smoothing.
class BaselineStore {
 public:
  BaselineStore() = default;
  BaselineStore(std::vector<double> values, double alpha)
      : values_(std::move(values)), alpha_(alpha) {}

  /// Baselines initialised to the heuristic half-area of each sample.
  static BaselineStore from_heuristic(std::span<const Instance> samples,
                                      double alpha);

  double value(std::size_t id) const;
  /// b <- b + alpha (observed - b). Throws NoBaseline for unknown ids.
  void update(std::size_t id, double observed);

  double alpha() const { return alpha_; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const BaselineStore&) const = default;

 private:
  std::vector<double> values_;
  double alpha_ = 0.7;
};

/// (1/M) sum_i (reward_i - b(sample_i)) grad log p(seq_i | sample_i).
/// `samples` is indexed by EpisodeRecord::sample_id.
std::vector<double> reinforce_gradient(const PolicyParams& params,
                                       std::span<const Instance> samples,
                                       std::span<const EpisodeRecord> batch,
                                       const BaselineStore& baselines);

/// Staircase decay: initial * decay^floor(step / decay_every).
struct LrSchedule {
  double initial = 1e-3;
  double decay = 0.96;
  std::size_t decay_every = 5000;

  double at(std::size_t step) const;
  bool operator==(const LrSchedule&) const = default;
};

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double clip_norm = 1.0;

  bool operator==(const AdamConfig&) const = default;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::size_t step = 0;  // completed updates

  bool operator==(const AdamState&) const = default;
};

struct AdamStepInfo {
  double lr = 0.0;
  double grad_norm = 0.0;     // before clipping
  double applied_norm = 0.0;  // after clipping
};

/// One Adam update with bias correction after clipping the gradient's global
/// L2 norm to `config.clip_norm`. Throws NumericalFault on non-finite input.
AdamStepInfo adam_step(AdamState& state, std::span<double> params,
                       std::span<const double> gradient,
                       const LrSchedule& schedule, const AdamConfig& config);

struct TrainerConfig {
  std::size_t steps = 2000;
  std::size_t batch_size = 32;
  LrSchedule schedule;
  AdamConfig adam;
  double alpha = 0.7;
  std::size_t beam_width = 3;
  std::size_t embed_dim = 16;
  double init_scale = 0.08;
  std::uint64_t seed = 7;

  bool operator==(const TrainerConfig&) const = default;
};

struct TrainingLogRow {
  std::size_t step = 0;
  double mean_reward = 0.0;
  double mean_baseline = 0.0;  // batch baselines used in the gradient
  double lr = 0.0;

  bool operator==(const TrainingLogRow&) const = default;
};

struct TrainingResult {
  TrainerConfig config;
  PolicyParams params;
  AdamState adam;
  BaselineStore baselines;
  std::string rng_state;  // batch-selection generator after the last step
  std::vector<TrainingLogRow> log;
};

/// REINFORCE with per-sample baselines: each step draws a batch, samples one
/// sequence per instance, applies one Adam update and then refreshes the
/// batch baselines. Deterministic for a given config and sample set.
TrainingResult train(const TrainerConfig& config,
                     std::span<const Instance> samples);

}  // namespace surfpack
