#include "surfpack/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "surfpack/error.hpp"
#include "surfpack/harness.hpp"
#include "surfpack/milp.hpp"
#include "surfpack/packer.hpp"

namespace surfpack {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadInput, fmt::format("cannot read '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::BadInput, fmt::format("cannot write '{}'", path));
  f << text;
  if (!f) throw Error(ErrorCode::BadInput, fmt::format("write to '{}' failed", path));
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadInput, fmt::format("bad index '{}' in sequence", tok));
    }
  }
  return out;
}

BinExtents parse_extents(const std::string& s) {
  const auto v = parse_index_list(s);
  if (v.size() != 3) throw Error(ErrorCode::BadInput, "extents must be L,W,H");
  return {static_cast<Length>(v[0]), static_cast<Length>(v[1]), static_cast<Length>(v[2])};
}

// Joins per-solution documents into one array when a file held several
// instances.
std::string join_solutions(const std::vector<std::string>& docs) {
  if (docs.size() == 1) return docs.front();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& d : docs) arr.push_back(nlohmann::ordered_json::parse(d));
  return arr.dump(2) + "\n";
}

const Instance& pick(const std::vector<Instance>& all, std::size_t index) {
  if (index >= all.size())
    throw Error(ErrorCode::BadInput,
                fmt::format("instance index {} out of range ({} in file)", index, all.size()));
  return all[index];
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"surfpack: surface-area-minimising 3D packing toolkit", "surfpack"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate synthetic instances");
  std::size_t gen_count = 0, gen_n = 0;
  Length gen_lo = 1, gen_hi = 10;
  std::uint64_t gen_seed = 42;
  std::string gen_out = "-";
  gen->add_option("--count", gen_count, "Number of instances")->required();
  gen->add_option("--n", gen_n, "Items per instance")->required();
  gen->add_option("--lo", gen_lo, "Smallest side")->capture_default_str();
  gen->add_option("--hi", gen_hi, "Largest side")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file, - for stdout")->capture_default_str();

  // pack
  auto* pack = app.add_subcommand("pack", "Pack instances with the heuristic or a given order");
  std::string pack_in, pack_out = "-", pack_seq;
  pack->add_option("--in", pack_in, "Instance JSON")->required();
  pack->add_option("--out", pack_out, "Solution JSON, - for stdout")->capture_default_str();
  pack->add_option("--sequence", pack_seq, "Comma-separated packing order (single instance)");

  // train
  auto* train_cmd = app.add_subcommand("train", "Train the pointer policy with REINFORCE");
  std::string tr_config, tr_instances, tr_out, tr_log;
  std::optional<std::uint64_t> tr_seed;
  std::optional<std::size_t> tr_steps;
  std::size_t tr_count = 1024, tr_n = 6;
  Length tr_lo = 1, tr_hi = 10;
  std::uint64_t tr_data_seed = 1;
  train_cmd->add_option("--config", tr_config, "Trainer config JSON");
  train_cmd->add_option("--instances", tr_instances, "Training instances JSON");
  train_cmd->add_option("--count", tr_count, "Generated training set size")->capture_default_str();
  train_cmd->add_option("--n", tr_n, "Items per generated instance")->capture_default_str();
  train_cmd->add_option("--lo", tr_lo, "Smallest generated side")->capture_default_str();
  train_cmd->add_option("--hi", tr_hi, "Largest generated side")->capture_default_str();
  train_cmd->add_option("--data-seed", tr_data_seed, "Training set seed")->capture_default_str();
  train_cmd->add_option("--seed", tr_seed, "Overrides the config seed");
  train_cmd->add_option("--steps", tr_steps, "Overrides the config step count");
  train_cmd->add_option("--out", tr_out, "Checkpoint JSON")->required();
  train_cmd->add_option("--log", tr_log, "Training log CSV");

  // eval
  auto* eval = app.add_subcommand("eval", "Benchmark methods on an instance set");
  std::string ev_in, ev_methods = "random,heuristic", ev_ckpt, ev_csv;
  BenchmarkConfig ev_cfg;
  bool ev_no_timing = false;
  eval->add_option("--in", ev_in, "Instance JSON")->required();
  eval->add_option("--methods", ev_methods,
                   "Comma list of random, heuristic, policy-sampling, policy-beam, oracle")
      ->capture_default_str();
  eval->add_option("--checkpoint", ev_ckpt, "Policy checkpoint for policy methods");
  eval->add_option("--seed", ev_cfg.seed, "Benchmark seed")->capture_default_str();
  eval->add_option("--draws", ev_cfg.random_draws, "Random permutations per instance")
      ->capture_default_str();
  eval->add_option("--samples", ev_cfg.policy_samples, "Policy samples per instance")
      ->capture_default_str();
  eval->add_option("--beam", ev_cfg.beam_width, "Beam width")->capture_default_str();
  eval->add_option("--oracle-limit", ev_cfg.oracle_limit, "Largest n for the oracle")
      ->capture_default_str();
  eval->add_option("--csv", ev_csv, "Benchmark CSV output");
  eval->add_flag("--no-timing", ev_no_timing, "Write runtime 0 for byte-stable CSVs");

  // export-milp
  auto* milp = app.add_subcommand("export-milp", "Write the mixed-integer model as LP text");
  std::string mx_in, mx_out = "-", mx_pairs = "ordered", mx_objective = "quadratic", mx_extents,
                     mx_bigm;
  std::size_t mx_index = 0;
  bool mx_check = false;
  milp->add_option("--in", mx_in, "Instance JSON")->required();
  milp->add_option("--index", mx_index, "Instance index within the file")->capture_default_str();
  milp->add_option("--out", mx_out, "LP file, - for stdout")->capture_default_str();
  milp->add_option("--pairs", mx_pairs, "Pair encoding")
      ->check(CLI::IsMember({"ordered", "literal"}))
      ->capture_default_str();
  milp->add_option("--objective", mx_objective, "Objective mode")
      ->check(CLI::IsMember({"quadratic", "fixed-extents"}))
      ->capture_default_str();
  milp->add_option("--extents", mx_extents, "L,W,H for fixed-extents mode");
  milp->add_option("--big-m", mx_bigm, "L,W,H big-M sides (default: working bin)");
  milp->add_flag("--check", mx_check, "Print the per-group count check to stderr");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive best packing order");
  std::string or_in, or_out = "-";
  std::size_t or_limit = kDefaultOracleLimit, or_index = 0;
  oracle->add_option("--in", or_in, "Instance JSON")->required();
  oracle->add_option("--index", or_index, "Instance index within the file")->capture_default_str();
  oracle->add_option("--limit", or_limit, "Largest n accepted")->capture_default_str();
  oracle->add_option("--out", or_out, "Solution JSON, - for stdout")->capture_default_str();

  // validate
  auto* check = app.add_subcommand("validate", "Check a solution file against its instance");
  std::string va_in, va_sol;
  std::size_t va_index = 0;
  check->add_option("--in", va_in, "Instance JSON")->required();
  check->add_option("--index", va_index, "Instance index within the file")->capture_default_str();
  check->add_option("--solution", va_sol, "Solution JSON")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      const auto insts = generate_instances(gen_count, gen_n, gen_lo, gen_hi, gen_seed);
      write_text(gen_out, instances_to_json(insts), out);
      return 0;
    }

    if (pack->parsed()) {
      const auto insts = instances_from_json(read_text(pack_in));
      if (!pack_seq.empty() && insts.size() != 1)
        throw Error(ErrorCode::BadInput, "--sequence needs a single-instance file");
      std::vector<std::string> docs;
      bool all_pass = true;
      for (const auto& inst : insts) {
        const PackingSolution sol =
            pack_seq.empty() ? pack_heuristic(inst) : pack_sequence(inst, parse_index_list(pack_seq));
        const ValidationReport rep = validate_solution(inst, sol);
        all_pass = all_pass && rep.pass();
        docs.push_back(solution_to_json(inst, sol, rep, pack_seq.empty() ? "heuristic" : "sequence"));
      }
      write_text(pack_out, join_solutions(docs), out);
      if (!all_pass) {
        err << "error: packing failed validation\n";
        return 2;
      }
      return 0;
    }

    if (train_cmd->parsed()) {
      TrainerConfig cfg;
      if (!tr_config.empty()) cfg = trainer_config_from_json(read_text(tr_config));
      if (tr_seed) cfg.seed = *tr_seed;
      if (tr_steps) cfg.steps = *tr_steps;
      const auto samples = tr_instances.empty()
                               ? generate_instances(tr_count, tr_n, tr_lo, tr_hi, tr_data_seed)
                               : instances_from_json(read_text(tr_instances));
      const TrainingResult res = train(cfg, samples);
      write_text(tr_out, checkpoint_to_json(checkpoint_of(res)), out);
      if (!tr_log.empty()) write_text(tr_log, training_log_csv(res.log), out);
      if (!res.log.empty()) {
        out << fmt::format("trained {} steps on {} instances; last mean half-area {:.4f}\n",
                           res.log.size(), samples.size(), res.log.back().mean_reward);
      }
      return 0;
    }

    if (eval->parsed()) {
      const auto insts = instances_from_json(read_text(ev_in));
      std::stringstream names(ev_methods);
      std::string name;
      while (std::getline(names, name, ',')) {
        const auto m = parse_method(name);
        if (!m) {
          err << fmt::format("unknown method '{}'\n{}", name, eval->help());
          return 1;
        }
        ev_cfg.methods.push_back(*m);
      }
      if (!ev_ckpt.empty()) ev_cfg.policy = checkpoint_from_json(read_text(ev_ckpt)).params;
      ev_cfg.timing = !ev_no_timing;
      const BenchmarkReport rep = run_benchmark(insts, ev_cfg);
      if (!ev_csv.empty()) write_text(ev_csv, benchmark_csv(rep), out);
      for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
      out << benchmark_table(rep);
      return 0;
    }

    if (milp->parsed()) {
      const auto insts = instances_from_json(read_text(mx_in));
      ExportOptions opt;
      opt.pairs = mx_pairs == "literal" ? PairEncoding::Literal : PairEncoding::Ordered;
      opt.objective =
          mx_objective == "fixed-extents" ? ObjectiveMode::FixedExtents : ObjectiveMode::Quadratic;
      if (!mx_extents.empty()) opt.fixed_extents = parse_extents(mx_extents);
      if (!mx_bigm.empty()) opt.big_m = parse_extents(mx_bigm);
      const Instance& inst = pick(insts, mx_index);
      const MilpModel model = build_milp(inst, opt);
      write_text(mx_out, render_lp(model), out);
      if (mx_check) {
        const CountReport rep = check_model_counts(model, inst.size(), opt.pairs);
        for (const auto& g : rep.groups)
          err << fmt::format("{:<20} expected {:>5} found {:>5} {}\n", g.group, g.expected,
                             g.found, g.ok() ? "ok" : "MISMATCH");
        err << fmt::format("counts {} ({} decision variables)\n", rep.pass() ? "PASS" : "FAIL",
                           rep.decision_variables());
        if (!rep.pass()) return 2;
      }
      return 0;
    }

    if (check->parsed()) {
      const auto insts = instances_from_json(read_text(va_in));
      const Instance& inst = pick(insts, va_index);
      const ValidationReport rep = validate_solution(inst, solution_from_json(read_text(va_sol)));
      out << (rep.pass() ? "PASS" : "FAIL") << "\n";
      for (const auto& v : rep.violations) out << "  " << v.message << "\n";
      return rep.pass() ? 0 : 2;
    }

    if (oracle->parsed()) {
      const auto insts = instances_from_json(read_text(or_in));
      const Instance& inst = pick(insts, or_index);
      const OracleResult res = exhaustive_optimal_sequence(inst, or_limit);
      const ValidationReport rep = validate_solution(inst, res.solution);
      write_text(or_out, solution_to_json(inst, res.solution, rep, "oracle"), out);
      return rep.pass() ? 0 : 2;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace surfpack
