#include "surfpack/policy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include <fmt/format.h>

#include "surfpack/error.hpp"
#include "surfpack/packer.hpp"
#include "surfpack/parallel.hpp"

namespace surfpack {

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % bound);
}

// ---------------------------------------------------------------- params

std::size_t PolicyParams::parameter_count(std::size_t d) {
  return 3 * d * d + 6 * d;
}

PolicyParams::PolicyParams(std::size_t dim)
    : dim_(dim), flat_(parameter_count(dim), 0.0) {}

PolicyParams::PolicyParams(std::size_t dim, std::vector<double> flat)
    : dim_(dim), flat_(std::move(flat)) {
  if (flat_.size() != parameter_count(dim)) {
    throw Error(ErrorCode::BadInput,
                fmt::format("{} parameters given, width {} needs {}",
                            flat_.size(), dim, parameter_count(dim)));
  }
}

PolicyParams PolicyParams::random(std::size_t dim, double scale, Rng& rng) {
  PolicyParams p(dim);
  for (double& x : p.flat_) x = scale * (2.0 * uniform01(rng) - 1.0);
  return p;
}

// ---------------------------------------------------------------- forward

namespace {

// Offsets into the flat vector, mirroring the PolicyParams accessors.
struct Layout {
  std::size_t d;
  std::size_t embed_w() const { return 0; }
  std::size_t embed_b() const { return 3 * d; }
  std::size_t context_w() const { return 4 * d; }
  std::size_t global_w() const { return 4 * d + d * d; }
  std::size_t ref_w() const { return 4 * d + 2 * d * d; }
  std::size_t score_b() const { return 4 * d + 3 * d * d; }
  std::size_t score_v() const { return 5 * d + 3 * d * d; }
};

// Quantities that do not depend on the decoding step.
struct Encoded {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<double> features;  // n x 3
  std::vector<double> emb;       // n x d
  std::vector<double> mean_emb;  // d
  std::vector<double> ref;       // n x d : ref_w e_i + score_b
  std::vector<double> global_q;  // d     : global_w mean_emb
};

void matvec(std::span<const double> m, std::size_t rows, std::size_t cols,
            const double* x, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < cols; ++c) acc += m[r * cols + c] * x[c];
    out[r] = acc;
  }
}

Encoded encode(const PolicyParams& p, const Instance& inst) {
  validate_instance(inst);
  Encoded e;
  e.n = inst.size();
  e.d = p.dim();
  const std::size_t n = e.n, d = e.d;

  Length longest = 0;
  for (const auto& it : inst.items) longest = std::max(longest, it.max_side());
  const double scale = 1.0 / static_cast<double>(longest);

  e.features.resize(n * 3);
  e.emb.resize(n * d);
  e.mean_emb.assign(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& it = inst.items[i];
    double* f = &e.features[i * 3];
    f[0] = static_cast<double>(it.l) * scale;
    f[1] = static_cast<double>(it.w) * scale;
    f[2] = static_cast<double>(it.h) * scale;
    double* ei = &e.emb[i * d];
    matvec(p.embed_w(), d, 3, f, ei);
    for (std::size_t k = 0; k < d; ++k) {
      ei[k] = std::tanh(ei[k] + p.embed_b()[k]);
      e.mean_emb[k] += ei[k] / static_cast<double>(n);
    }
  }

  e.ref.resize(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    double* r = &e.ref[i * d];
    matvec(p.ref_w(), d, d, &e.emb[i * d], r);
    for (std::size_t k = 0; k < d; ++k) r[k] += p.score_b()[k];
  }
  e.global_q.resize(d);
  matvec(p.global_w(), d, d, e.mean_emb.data(), e.global_q.data());
  return e;
}

// Decoding state: which items are taken and the running sum of their
// embeddings.
struct Cursor {
  std::vector<bool> selected;
  std::vector<double> emb_sum;
  std::size_t count = 0;

  Cursor(std::size_t n, std::size_t d) : selected(n, false), emb_sum(d, 0.0) {}

  void take(const Encoded& e, std::size_t i) {
    selected[i] = true;
    ++count;
    for (std::size_t k = 0; k < e.d; ++k) emb_sum[k] += e.emb[i * e.d + k];
  }
};

struct StepOutput {
  std::vector<double> context_mean;  // d
  std::vector<double> act;           // n x d, tanh activations (unselected)
  std::vector<double> log_probs;     // n, -inf for selected
};

StepOutput step(const PolicyParams& p, const Encoded& e,
                const std::vector<bool>& selected,
                std::span<const double> emb_sum, std::size_t count) {
  const std::size_t n = e.n, d = e.d;
  StepOutput out;
  out.context_mean.assign(d, 0.0);
  if (count > 0) {
    for (std::size_t k = 0; k < d; ++k)
      out.context_mean[k] = emb_sum[k] / static_cast<double>(count);
  }
  std::vector<double> q(d);
  matvec(p.context_w(), d, d, out.context_mean.data(), q.data());
  for (std::size_t k = 0; k < d; ++k) q[k] += e.global_q[k];

  out.act.assign(n * d, 0.0);
  std::vector<double> score(n, 0.0);
  double top = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (selected[i]) continue;
    any = true;
    double u = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double a = std::tanh(e.ref[i * d + k] + q[k]);
      out.act[i * d + k] = a;
      u += p.score_v()[k] * a;
    }
    score[i] = u;
    top = std::max(top, u);
  }
  if (!any) throw Error(ErrorCode::NothingToSelect, "every item is selected");

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!selected[i]) total += std::exp(score[i] - top);
  }
  const double lse = top + std::log(total);
  out.log_probs.assign(n, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    if (!selected[i]) out.log_probs[i] = score[i] - lse;
  }
  return out;
}

std::vector<double> to_probs(const std::vector<double>& log_probs,
                             const std::vector<bool>& selected) {
  std::vector<double> p(log_probs.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!selected[i]) p[i] = std::exp(log_probs[i]);
  }
  return p;
}

void check_sequence(std::span<const std::size_t> seq, std::size_t n) {
  std::vector<bool> seen(n, false);
  if (seq.size() != n) {
    throw Error(ErrorCode::BadSequence,
                fmt::format("sequence has {} entries for {} items", seq.size(),
                            n));
  }
  for (std::size_t i : seq) {
    if (i >= n || seen[i]) {
      throw Error(ErrorCode::BadSequence,
                  fmt::format("entry {} is out of range or repeated", i));
    }
    seen[i] = true;
  }
}

}  // namespace

std::vector<double> policy_forward(const PolicyParams& params,
                                   const Instance& instance,
                                   const std::vector<bool>& selected) {
  const Encoded e = encode(params, instance);
  if (selected.size() != e.n) {
    throw Error(ErrorCode::InstanceMismatch, "mask size differs from n");
  }
  std::vector<double> sum(e.d, 0.0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < e.n; ++i) {
    if (!selected[i]) continue;
    ++count;
    for (std::size_t k = 0; k < e.d; ++k) sum[k] += e.emb[i * e.d + k];
  }
  return to_probs(step(params, e, selected, sum, count).log_probs, selected);
}

std::vector<DecodeStep> replay(const PolicyParams& params,
                               const Instance& instance,
                               std::span<const std::size_t> sequence) {
  const Encoded e = encode(params, instance);
  check_sequence(sequence, e.n);
  Cursor cur(e.n, e.d);
  std::vector<DecodeStep> steps;
  for (std::size_t t = 0; t < e.n; ++t) {
    const StepOutput s = step(params, e, cur.selected, cur.emb_sum, cur.count);
    steps.push_back({t, cur.selected, to_probs(s.log_probs, cur.selected)});
    cur.take(e, sequence[t]);
  }
  return steps;
}

double log_probability(const PolicyParams& params, const Instance& instance,
                       std::span<const std::size_t> sequence) {
  const Encoded e = encode(params, instance);
  check_sequence(sequence, e.n);
  Cursor cur(e.n, e.d);
  double lp = 0.0;
  for (std::size_t t = 0; t < e.n; ++t) {
    lp += step(params, e, cur.selected, cur.emb_sum, cur.count)
              .log_probs[sequence[t]];
    cur.take(e, sequence[t]);
  }
  return lp;
}

// ---------------------------------------------------------------- backward

std::vector<double> log_probability_gradient(
    const PolicyParams& params, const Instance& instance,
    std::span<const std::size_t> sequence) {
  const Encoded e = encode(params, instance);
  check_sequence(sequence, e.n);
  const std::size_t n = e.n, d = e.d;
  const Layout at{d};
  std::vector<double> grad(params.size(), 0.0);
  const auto context_w = params.context_w();
  const auto score_v = params.score_v();

  std::vector<double> d_emb(n * d, 0.0);
  std::vector<double> d_ref(n * d, 0.0);
  std::vector<double> d_query_total(d, 0.0);
  std::vector<double> d_query(d);
  std::vector<double> d_mean(d);

  Cursor cur(n, d);
  for (std::size_t t = 0; t < n; ++t) {
    const StepOutput s = step(params, e, cur.selected, cur.emb_sum, cur.count);
    const std::size_t chosen = sequence[t];
    std::fill(d_query.begin(), d_query.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (cur.selected[i]) continue;
      // d log softmax / d score_i
      const double delta =
          (i == chosen ? 1.0 : 0.0) - std::exp(s.log_probs[i]);
      if (delta == 0.0) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const double a = s.act[i * d + k];
        grad[at.score_v() + k] += delta * a;
        const double dz = delta * score_v[k] * (1.0 - a * a);
        d_ref[i * d + k] += dz;
        d_query[k] += dz;
      }
    }
    if (cur.count > 0) {
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          grad[at.context_w() + r * d + c] += d_query[r] * s.context_mean[c];
      for (std::size_t c = 0; c < d; ++c) {
        double acc = 0.0;
        for (std::size_t r = 0; r < d; ++r) acc += context_w[r * d + c] * d_query[r];
        d_mean[c] = acc / static_cast<double>(cur.count);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!cur.selected[j]) continue;
        for (std::size_t k = 0; k < d; ++k) d_emb[j * d + k] += d_mean[k];
      }
    }
    for (std::size_t k = 0; k < d; ++k) d_query_total[k] += d_query[k];
    cur.take(e, chosen);
  }

  // global_w term: q += global_w mean_emb.
  const auto global_w = params.global_w();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      grad[at.global_w() + r * d + c] += d_query_total[r] * e.mean_emb[c];
  for (std::size_t c = 0; c < d; ++c) {
    double acc = 0.0;
    for (std::size_t r = 0; r < d; ++r) acc += global_w[r * d + c] * d_query_total[r];
    acc /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) d_emb[i * d + c] += acc;
  }

  // ref = ref_w e_i + score_b.
  const auto ref_w = params.ref_w();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < d; ++r) {
      const double g = d_ref[i * d + r];
      if (g == 0.0) continue;
      grad[at.score_b() + r] += g;
      for (std::size_t c = 0; c < d; ++c) {
        grad[at.ref_w() + r * d + c] += g * e.emb[i * d + c];
        d_emb[i * d + c] += ref_w[r * d + c] * g;
      }
    }
  }

  // e_i = tanh(embed_w f_i + embed_b).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < d; ++r) {
      const double ei = e.emb[i * d + r];
      const double g = d_emb[i * d + r] * (1.0 - ei * ei);
      grad[at.embed_b() + r] += g;
      for (std::size_t c = 0; c < 3; ++c)
        grad[at.embed_w() + r * 3 + c] += g * e.features[i * 3 + c];
    }
  }
  return grad;
}

// ---------------------------------------------------------------- decoding

double sequence_reward(const Instance& instance,
                       std::span<const std::size_t> sequence) {
  return static_cast<double>(pack_sequence(instance, sequence).half_area());
}

EpisodeRecord sample_sequence(const PolicyParams& params,
                              const Instance& instance, Rng& rng,
                              std::size_t sample_id) {
  const Encoded e = encode(params, instance);
  Cursor cur(e.n, e.d);
  EpisodeRecord rec;
  rec.sample_id = sample_id;
  for (std::size_t t = 0; t < e.n; ++t) {
    const StepOutput s = step(params, e, cur.selected, cur.emb_sum, cur.count);
    const double u = uniform01(rng);
    double cum = 0.0;
    std::size_t pick = e.n;
    for (std::size_t i = 0; i < e.n; ++i) {
      if (cur.selected[i]) continue;
      pick = i;  // falls through to the last unselected item on round-off
      cum += std::exp(s.log_probs[i]);
      if (u < cum) break;
    }
    rec.sequence.push_back(pick);
    rec.log_prob += s.log_probs[pick];
    cur.take(e, pick);
  }
  rec.reward = sequence_reward(instance, rec.sequence);
  return rec;
}

EpisodeRecord greedy_decode(const PolicyParams& params,
                            const Instance& instance) {
  const Encoded e = encode(params, instance);
  Cursor cur(e.n, e.d);
  EpisodeRecord rec;
  for (std::size_t t = 0; t < e.n; ++t) {
    const StepOutput s = step(params, e, cur.selected, cur.emb_sum, cur.count);
    std::size_t best = e.n;
    for (std::size_t i = 0; i < e.n; ++i) {
      if (cur.selected[i]) continue;
      if (best == e.n || s.log_probs[i] > s.log_probs[best]) best = i;
    }
    rec.sequence.push_back(best);
    rec.log_prob += s.log_probs[best];
    cur.take(e, best);
  }
  rec.reward = sequence_reward(instance, rec.sequence);
  return rec;
}

namespace {

struct Beam {
  std::vector<std::size_t> sequence;
  double log_prob = 0.0;
  double last_step = 0.0;  // log-prob of the most recent pick
  std::size_t parent = 0;
};

// Higher cumulative log-prob first; exact ties fall back to the last step's
// log-prob and then to the sequence itself, so width 1 reproduces greedy.
bool beam_before(const Beam& a, const Beam& b) {
  if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
  if (a.last_step != b.last_step) return a.last_step > b.last_step;
  return a.sequence < b.sequence;
}

}  // namespace

EpisodeRecord beam_search(const PolicyParams& params, const Instance& instance,
                          std::size_t k) {
  if (k == 0) throw Error(ErrorCode::BadInput, "beam width must be positive");
  const Encoded e = encode(params, instance);

  std::vector<Beam> beams(1);
  std::vector<Cursor> cursors{Cursor(e.n, e.d)};
  for (std::size_t t = 0; t < e.n; ++t) {
    std::vector<Beam> grown;
    for (std::size_t b = 0; b < beams.size(); ++b) {
      const Cursor& cur = cursors[b];
      const StepOutput s =
          step(params, e, cur.selected, cur.emb_sum, cur.count);
      for (std::size_t i = 0; i < e.n; ++i) {
        if (cur.selected[i]) continue;
        Beam nb;
        nb.sequence = beams[b].sequence;
        nb.sequence.push_back(i);
        nb.log_prob = beams[b].log_prob + s.log_probs[i];
        nb.last_step = s.log_probs[i];
        nb.parent = b;
        grown.push_back(std::move(nb));
      }
    }
    std::sort(grown.begin(), grown.end(), beam_before);
    if (grown.size() > k) grown.resize(k);

    std::vector<Cursor> next_cursors;
    next_cursors.reserve(grown.size());
    for (const Beam& b : grown) {
      Cursor c = cursors[b.parent];
      c.take(e, b.sequence.back());
      next_cursors.push_back(std::move(c));
    }
    beams = std::move(grown);
    cursors = std::move(next_cursors);
  }

  std::vector<EpisodeRecord> finals;
  for (const Beam& b : beams) {
    finals.push_back({0, b.sequence, b.log_prob,
                      sequence_reward(instance, b.sequence)});
  }
  EpisodeRecord greedy = greedy_decode(params, instance);
  const bool have_greedy =
      std::any_of(finals.begin(), finals.end(), [&](const EpisodeRecord& r) {
        return r.sequence == greedy.sequence;
      });
  if (!have_greedy) finals.push_back(std::move(greedy));

  return *std::min_element(
      finals.begin(), finals.end(),
      [](const EpisodeRecord& a, const EpisodeRecord& b) {
        if (a.reward != b.reward) return a.reward < b.reward;
        if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
        return a.sequence < b.sequence;
      });
}

// ---------------------------------------------------------------- training

BaselineStore BaselineStore::from_heuristic(std::span<const Instance> samples,
                                            double alpha) {
  std::vector<double> values(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    values[i] = static_cast<double>(pack_heuristic(samples[i]).half_area());
  });
  return BaselineStore(std::move(values), alpha);
}

double BaselineStore::value(std::size_t id) const {
  if (id >= values_.size()) {
    throw Error(ErrorCode::NoBaseline, fmt::format("no baseline for {}", id));
  }
  return values_[id];
}

void BaselineStore::update(std::size_t id, double observed) {
  if (id >= values_.size()) {
    throw Error(ErrorCode::NoBaseline, fmt::format("no baseline for {}", id));
  }
  values_[id] += alpha_ * (observed - values_[id]);
}

std::vector<double> reinforce_gradient(const PolicyParams& params,
                                       std::span<const Instance> samples,
                                       std::span<const EpisodeRecord> batch,
                                       const BaselineStore& baselines) {
  if (batch.empty()) throw Error(ErrorCode::BadInput, "empty batch");
  std::vector<double> advantage(batch.size());
  for (std::size_t b = 0; b < batch.size(); ++b) {
    if (batch[b].sample_id >= samples.size()) {
      throw Error(ErrorCode::InstanceMismatch,
                  fmt::format("unknown sample {}", batch[b].sample_id));
    }
    advantage[b] = batch[b].reward - baselines.value(batch[b].sample_id);
  }

  std::vector<std::vector<double>> parts(batch.size());
  parallel_for(batch.size(), [&](std::size_t b) {
    if (advantage[b] == 0.0) return;
    parts[b] = log_probability_gradient(params, samples[batch[b].sample_id],
                                        batch[b].sequence);
  });

  // Ordered reduction keeps the sum independent of scheduling.
  std::vector<double> grad(params.size(), 0.0);
  const double inv_m = 1.0 / static_cast<double>(batch.size());
  for (std::size_t b = 0; b < batch.size(); ++b) {
    if (parts[b].empty()) continue;
    for (std::size_t k = 0; k < grad.size(); ++k)
      grad[k] += advantage[b] * parts[b][k];
  }
  for (double& g : grad) g *= inv_m;
  return grad;
}

double LrSchedule::at(std::size_t step) const {
  const std::size_t stairs = decay_every == 0 ? 0 : step / decay_every;
  return initial * std::pow(decay, static_cast<double>(stairs));
}

AdamStepInfo adam_step(AdamState& state, std::span<double> params,
                       std::span<const double> gradient,
                       const LrSchedule& schedule, const AdamConfig& config) {
  if (gradient.size() != params.size()) {
    throw Error(ErrorCode::BadInput, "gradient and parameter sizes differ");
  }
  double sq = 0.0;
  for (double g : gradient) {
    if (!std::isfinite(g)) {
      throw Error(ErrorCode::NumericalFault, "non-finite gradient entry");
    }
    sq += g * g;
  }
  if (state.m.size() != params.size()) {
    state.m.assign(params.size(), 0.0);
    state.v.assign(params.size(), 0.0);
  }

  AdamStepInfo info;
  info.lr = schedule.at(state.step);
  info.grad_norm = std::sqrt(sq);
  const double scale = (config.clip_norm > 0.0 && info.grad_norm > config.clip_norm)
                           ? config.clip_norm / info.grad_norm
                           : 1.0;
  info.applied_norm = info.grad_norm * scale;

  ++state.step;
  const double t = static_cast<double>(state.step);
  const double c1 = 1.0 - std::pow(config.beta1, t);
  const double c2 = 1.0 - std::pow(config.beta2, t);
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double g = gradient[k] * scale;
    state.m[k] = config.beta1 * state.m[k] + (1.0 - config.beta1) * g;
    state.v[k] = config.beta2 * state.v[k] + (1.0 - config.beta2) * g * g;
    const double m_hat = state.m[k] / c1;
    const double v_hat = state.v[k] / c2;
    params[k] -= info.lr * m_hat / (std::sqrt(v_hat) + config.epsilon);
  }
  return info;
}

TrainingResult train(const TrainerConfig& config,
                     std::span<const Instance> samples) {
  if (samples.empty()) throw Error(ErrorCode::BadInput, "no training samples");
  if (config.batch_size == 0 || config.embed_dim == 0) {
    throw Error(ErrorCode::BadInput, "batch size and width must be positive");
  }

  TrainingResult res;
  res.config = config;
  Rng rng(config.seed);
  res.params = PolicyParams::random(config.embed_dim, config.init_scale, rng);
  res.baselines = BaselineStore::from_heuristic(samples, config.alpha);

  // Batches walk a reshuffled pass over the training set.
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::size_t cursor = order.size();
  auto next_id = [&] {
    if (cursor == order.size()) {
      for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[uniform_index(rng, i)]);
      cursor = 0;
    }
    return order[cursor++];
  };

  const auto seed_lo = static_cast<std::uint32_t>(config.seed);
  const auto seed_hi = static_cast<std::uint32_t>(config.seed >> 32);
  std::vector<std::size_t> ids(config.batch_size);
  std::vector<EpisodeRecord> batch(config.batch_size);
  for (std::size_t t = 1; t <= config.steps; ++t) {
    for (auto& id : ids) id = next_id();

    parallel_for(ids.size(), [&](std::size_t b) {
      std::seed_seq sq{seed_lo, seed_hi, static_cast<std::uint32_t>(t),
                       static_cast<std::uint32_t>(b)};
      Rng episode_rng(sq);
      batch[b] = sample_sequence(res.params, samples[ids[b]], episode_rng, ids[b]);
    });

    TrainingLogRow row;
    row.step = t;
    for (const auto& rec : batch) {
      row.mean_reward += rec.reward;
      row.mean_baseline += res.baselines.value(rec.sample_id);
    }
    row.mean_reward /= static_cast<double>(batch.size());
    row.mean_baseline /= static_cast<double>(batch.size());

    const auto grad = reinforce_gradient(res.params, samples, batch, res.baselines);
    row.lr = adam_step(res.adam, res.params.flat(), grad, config.schedule,
                       config.adam)
                 .lr;
    for (const auto& rec : batch) res.baselines.update(rec.sample_id, rec.reward);
    res.log.push_back(row);
  }

  std::ostringstream os;
  os << rng;
  res.rng_state = os.str();
  return res;
}

}  // namespace surfpack
