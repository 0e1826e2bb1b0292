#include "surfpack/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "surfpack/error.hpp"
#include "surfpack/packer.hpp"
#include "surfpack/parallel.hpp"

namespace surfpack {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, fmt::format("{}: {}", what, e.what()));
  }
}

// Runs a schema read and turns nlohmann type/key errors into BadInput.
template <typename F>
auto schema(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, fmt::format("{}: {}", what, e.what()));
  }
}

Length get_length(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw Error(ErrorCode::BadInput, fmt::format("'{}' must be an integer", key));
  return v.get<Length>();
}

json instance_obj(const Instance& inst) {
  json items = json::array();
  for (const auto& it : inst.items) items.push_back({{"l", it.l}, {"w", it.w}, {"h", it.h}});
  return {{"id", inst.id}, {"items", std::move(items)}};
}

Instance instance_from_obj(const json& j) {
  Instance inst;
  inst.id = j.at("id").get<std::string>();
  for (const auto& it : j.at("items"))
    inst.items.push_back({get_length(it, "l"), get_length(it, "w"), get_length(it, "h")});
  return inst;
}

constexpr std::string_view kViolationNames[] = {
    "MissingItem", "DuplicateItem", "BadSequence", "NegativeCoordinate",
    "OutsideBin",  "Overlap",       "ObjectiveMismatch",
};

}  // namespace

std::string instances_to_json(std::span<const Instance> instances) {
  json arr = json::array();
  for (const auto& inst : instances) arr.push_back(instance_obj(inst));
  return arr.dump(2) + "\n";
}

std::vector<Instance> instances_from_json(std::string_view text) {
  const json j = parse_json(text, "instance file");
  std::vector<Instance> out = schema("instance file", [&] {
    std::vector<Instance> v;
    if (j.is_array()) {
      for (const auto& e : j) v.push_back(instance_from_obj(e));
    } else {
      v.push_back(instance_from_obj(j));
    }
    return v;
  });
  for (const auto& inst : out) validate_instance(inst);
  return out;
}

std::string solution_to_json(const Instance& instance,
                             const PackingSolution& solution,
                             const ValidationReport& report,
                             std::string_view method) {
  json placements = json::array();
  for (const auto& p : solution.placements) {
    json pj = {{"item", p.item},
               {"x", p.origin.x},
               {"y", p.origin.y},
               {"z", p.origin.z},
               {"orientation", std::string(to_string(p.orientation))}};
    if (p.item < instance.size()) {
      const OrientedDims d = orient(instance.items[p.item], p.orientation);
      pj["dims"] = {d.l, d.w, d.h};
    }
    placements.push_back(std::move(pj));
  }
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"kind", std::string(kViolationNames[static_cast<int>(v.kind)])},
                          {"first", v.first},
                          {"second", v.second},
                          {"message", v.message}});
  json j = {{"instance_id", solution.instance_id}};
  if (!method.empty()) j["method"] = std::string(method);
  j["sequence"] = solution.sequence;
  j["placements"] = std::move(placements);
  j["extents"] = {{"L", solution.extents.L}, {"W", solution.extents.W}, {"H", solution.extents.H}};
  j["half_area"] = solution.half_area();
  j["surface_area"] = solution.surface_area;
  j["validation"] = {{"verdict", report.pass() ? "PASS" : "FAIL"},
                     {"violations", std::move(violations)}};
  return j.dump(2) + "\n";
}

PackingSolution solution_from_json(std::string_view text) {
  const json j = parse_json(text, "solution file");
  return schema("solution file", [&] {
    PackingSolution s;
    s.instance_id = j.at("instance_id").get<std::string>();
    s.sequence = j.at("sequence").get<std::vector<std::size_t>>();
    for (const auto& pj : j.at("placements")) {
      Placement p;
      p.item = pj.at("item").get<std::size_t>();
      p.origin = {get_length(pj, "x"), get_length(pj, "y"), get_length(pj, "z")};
      const auto label = pj.at("orientation").get<std::string>();
      const auto o = parse_orientation(label);
      if (!o) throw Error(ErrorCode::BadInput, fmt::format("unknown orientation '{}'", label));
      p.orientation = *o;
      s.placements.push_back(p);
    }
    const json& e = j.at("extents");
    s.extents = {get_length(e, "L"), get_length(e, "W"), get_length(e, "H")};
    s.surface_area = get_length(j, "surface_area");
    return s;
  });
}

namespace {

json config_obj(const TrainerConfig& c) {
  return {{"steps", c.steps},
          {"batch_size", c.batch_size},
          {"lr", c.schedule.initial},
          {"lr_decay", c.schedule.decay},
          {"lr_decay_every", c.schedule.decay_every},
          {"beta1", c.adam.beta1},
          {"beta2", c.adam.beta2},
          {"epsilon", c.adam.epsilon},
          {"clip_norm", c.adam.clip_norm},
          {"alpha", c.alpha},
          {"beam_width", c.beam_width},
          {"embed_dim", c.embed_dim},
          {"init_scale", c.init_scale},
          {"seed", c.seed}};
}

TrainerConfig config_from_obj(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadInput, "trainer config must be an object");
  TrainerConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "steps") c.steps = v.get<std::size_t>();
    else if (key == "batch_size") c.batch_size = v.get<std::size_t>();
    else if (key == "lr") c.schedule.initial = v.get<double>();
    else if (key == "lr_decay") c.schedule.decay = v.get<double>();
    else if (key == "lr_decay_every") c.schedule.decay_every = v.get<std::size_t>();
    else if (key == "beta1") c.adam.beta1 = v.get<double>();
    else if (key == "beta2") c.adam.beta2 = v.get<double>();
    else if (key == "epsilon") c.adam.epsilon = v.get<double>();
    else if (key == "clip_norm") c.adam.clip_norm = v.get<double>();
    else if (key == "alpha") c.alpha = v.get<double>();
    else if (key == "beam_width") c.beam_width = v.get<std::size_t>();
    else if (key == "embed_dim") c.embed_dim = v.get<std::size_t>();
    else if (key == "init_scale") c.init_scale = v.get<double>();
    else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else throw Error(ErrorCode::BadInput, fmt::format("unknown config key '{}'", key));
  }
  return c;
}

}  // namespace

TrainerConfig trainer_config_from_json(std::string_view text) {
  const json j = parse_json(text, "trainer config");
  return schema("trainer config", [&] { return config_from_obj(j); });
}

std::string trainer_config_to_json(const TrainerConfig& config) {
  return config_obj(config).dump(2) + "\n";
}

Checkpoint checkpoint_of(const TrainingResult& r) {
  return {r.config, r.params, r.adam, r.baselines, r.rng_state};
}

std::string checkpoint_to_json(const Checkpoint& c) {
  const auto flat = c.params.flat();
  json j = {{"format", std::string(kCheckpointFormat)},
            {"version", kCheckpointVersion},
            {"config", config_obj(c.config)},
            {"dim", c.params.dim()},
            {"params", std::vector<double>(flat.begin(), flat.end())},
            {"adam", {{"step", c.adam.step}, {"m", c.adam.m}, {"v", c.adam.v}}},
            {"baselines",
             {{"alpha", c.baselines.alpha()}, {"values", c.baselines.values()}}},
            {"rng_state", c.rng_state}};
  return j.dump(1) + "\n";
}

Checkpoint checkpoint_from_json(std::string_view text) {
  const json j = parse_json(text, "checkpoint");
  return schema("checkpoint", [&] {
    if (j.at("format").get<std::string>() != kCheckpointFormat)
      throw Error(ErrorCode::BadInput, "not a surfpack checkpoint");
    const int version = j.at("version").get<int>();
    if (version != kCheckpointVersion)
      throw Error(ErrorCode::BadInput, fmt::format("unsupported checkpoint version {}", version));
    Checkpoint c;
    c.config = config_from_obj(j.at("config"));
    c.params = PolicyParams(j.at("dim").get<std::size_t>(),
                            j.at("params").get<std::vector<double>>());
    const json& a = j.at("adam");
    c.adam.step = a.at("step").get<std::size_t>();
    c.adam.m = a.at("m").get<std::vector<double>>();
    c.adam.v = a.at("v").get<std::vector<double>>();
    if (c.adam.m.size() != c.adam.v.size() ||
        (!c.adam.m.empty() && c.adam.m.size() != c.params.size()))
      throw Error(ErrorCode::BadInput, "adam moments do not match the parameters");
    const json& b = j.at("baselines");
    c.baselines = BaselineStore(b.at("values").get<std::vector<double>>(),
                                b.at("alpha").get<double>());
    c.rng_state = j.at("rng_state").get<std::string>();
    return c;
  });
}

std::string training_log_csv(std::span<const TrainingLogRow> log) {
  std::string out = "step,mean_reward,mean_baseline,lr\n";
  for (const auto& r : log)
    out += fmt::format("{},{},{},{}\n", r.step, r.mean_reward, r.mean_baseline, r.lr);
  return out;
}

std::vector<Instance> generate_instances(std::size_t count, std::size_t n, Length lo,
                                         Length hi, std::uint64_t seed) {
  if (lo < 1 || lo > hi)
    throw Error(ErrorCode::BadRange, fmt::format("side range [{}, {}] is empty or non-positive", lo, hi));
  if (count == 0 || n == 0)
    throw Error(ErrorCode::BadInput, "count and n must be positive");
  Rng rng(seed);
  const auto span = static_cast<std::size_t>(hi - lo + 1);
  auto draw = [&] { return lo + static_cast<Length>(uniform_index(rng, span)); };
  std::vector<Instance> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k].id = fmt::format("syn-s{}-{:06}", seed, k);
    out[k].items.resize(n);
    for (auto& it : out[k].items) {
      it.l = draw();
      it.w = draw();
      it.h = draw();
    }
  }
  return out;
}

namespace {

constexpr std::string_view kMethodNames[] = {"random", "heuristic", "policy-sampling",
                                             "policy-beam", "oracle"};

Rng method_rng(std::uint64_t seed, Method m, const std::string& id) {
  std::vector<std::uint32_t> words = {static_cast<std::uint32_t>(seed),
                                      static_cast<std::uint32_t>(seed >> 32),
                                      static_cast<std::uint32_t>(m)};
  for (unsigned char c : id) words.push_back(c);
  std::seed_seq sq(words.begin(), words.end());
  return Rng(sq);
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniform_index(rng, i)]);
  return p;
}

}  // namespace

std::string_view to_string(Method m) { return kMethodNames[static_cast<int>(m)]; }

std::optional<Method> parse_method(std::string_view name) {
  for (int k = 0; k < 5; ++k)
    if (kMethodNames[k] == name) return static_cast<Method>(k);
  return std::nullopt;
}

std::optional<double> BenchmarkReport::asa(Method m) const {
  for (const auto& s : summary)
    if (s.method == m && s.instances > 0) return s.asa;
  return std::nullopt;
}

BenchmarkReport run_benchmark(std::span<const Instance> instances,
                              const BenchmarkConfig& config) {
  if (config.methods.empty()) throw Error(ErrorCode::BadInput, "no benchmark methods");
  for (Method m : config.methods)
    if ((m == Method::PolicySampling || m == Method::PolicyBeam) && !config.policy)
      throw Error(ErrorCode::BadInput,
                  fmt::format("method {} needs a policy checkpoint", to_string(m)));
  if (config.random_draws == 0 || config.policy_samples == 0 || config.beam_width == 0)
    throw Error(ErrorCode::BadInput, "draw, sample and beam counts must be positive");
  for (const auto& inst : instances) validate_instance(inst);

  const std::size_t nm = config.methods.size();
  // One slot per (instance, method); empty when the oracle is skipped.
  std::vector<std::optional<BenchmarkRow>> slots(instances.size() * nm);

  parallel_for(slots.size(), [&](std::size_t k) {
    const Instance& inst = instances[k / nm];
    const Method m = config.methods[k % nm];
    if (m == Method::Oracle && inst.size() > config.oracle_limit) return;

    const auto t0 = std::chrono::steady_clock::now();
    Rng rng = method_rng(config.seed, m, inst.id);
    double value = 0.0;
    switch (m) {
      case Method::Random: {
        double sum = 0.0;
        for (std::size_t r = 0; r < config.random_draws; ++r) {
          const auto seq = random_permutation(inst.size(), rng);
          sum += static_cast<double>(pack_sequence(inst, seq).half_area());
        }
        value = sum / static_cast<double>(config.random_draws);
        break;
      }
      case Method::Heuristic:
        value = static_cast<double>(pack_heuristic(inst).half_area());
        break;
      case Method::PolicySampling: {
        for (std::size_t s = 0; s < config.policy_samples; ++s) {
          const double r = sample_sequence(*config.policy, inst, rng).reward;
          value = s == 0 ? r : std::min(value, r);
        }
        break;
      }
      case Method::PolicyBeam:
        value = beam_search(*config.policy, inst, config.beam_width).reward;
        break;
      case Method::Oracle:
        value = static_cast<double>(
            exhaustive_optimal_sequence(inst, config.oracle_limit).solution.half_area());
        break;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        config.timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
    slots[k] = BenchmarkRow{inst.id, m, value, ms};
  });

  BenchmarkReport rep;
  rep.seed = config.seed;
  std::size_t skipped = 0;
  for (auto& s : slots) {
    if (s) rep.rows.push_back(std::move(*s));
    else ++skipped;
  }
  if (skipped > 0)
    rep.warnings.push_back(fmt::format(
        "oracle skipped on {} instance(s) with more than {} items", skipped,
        config.oracle_limit));
  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const auto& a, const auto& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return a.method < b.method;
  });

  for (Method m : config.methods) {
    MethodSummary s{m, 0.0, 0};
    for (const auto& r : rep.rows)
      if (r.method == m) {
        s.asa += r.half_area;
        ++s.instances;
      }
    if (s.instances > 0) s.asa /= static_cast<double>(s.instances);
    rep.summary.push_back(s);
  }
  return rep;
}

std::string benchmark_csv(const BenchmarkReport& report) {
  std::string out = "instance_id,method,half_area,runtime_ms\n";
  for (const auto& r : report.rows)
    out += fmt::format("{},{},{},{:.3f}\n", r.instance_id, to_string(r.method), r.half_area,
                       r.runtime_ms);
  out += "\nmethod,asa,instances\n";
  for (const auto& s : report.summary)
    out += fmt::format("{},{:.6f},{}\n", to_string(s.method), s.asa, s.instances);
  return out;
}

std::string benchmark_table(const BenchmarkReport& report) {
  std::string out = fmt::format("{:<16} {:>12} {:>10} {:>14}\n", "method", "ASA",
                                "instances", "vs heuristic");
  const auto base = report.asa(Method::Heuristic);
  for (const auto& s : report.summary) {
    std::string rel = "-";
    if (base && s.instances > 0 && *base > 0)
      rel = fmt::format("{:+.2f}%", 100.0 * (s.asa - *base) / *base);
    out += fmt::format("{:<16} {:>12.4f} {:>10} {:>14}\n", to_string(s.method), s.asa,
                       s.instances, rel);
  }
  for (const auto& w : report.warnings) out += fmt::format("warning: {}\n", w);
  return out;
}

}  // namespace surfpack
