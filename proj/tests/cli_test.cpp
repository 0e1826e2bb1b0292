#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "surfpack/cli.hpp"
#include "surfpack/harness.hpp"
#include "surfpack/milp.hpp"
#include "surfpack/packer.hpp"

using namespace surfpack;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("surfpack-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"gen", "--count", "1"}).code == 1);  // --n missing
  CHECK(run({"gen", "--count", "1", "--n", "2", "--bogus"}).code == 1);
  CHECK(run({"export-milp", "--in", "x.json", "--pairs", "both"}).code == 1);
  const Run help = run({"pack", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("--sequence") != std::string::npos);
}

TEST_CASE("cli gen is byte reproducible") {
  TempDir dir;
  REQUIRE(run({"gen", "--count", "2", "--n", "8", "--seed", "42", "--out", dir / "a.json"}).code == 0);
  REQUIRE(run({"gen", "--count", "2", "--n", "8", "--seed", "42", "--out", dir / "b.json"}).code == 0);
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  CHECK(instances_from_json(slurp(dir / "a.json")) == generate_instances(2, 8, 1, 10, 42));
  CHECK(run({"gen", "--count", "2", "--n", "8", "--lo", "5", "--hi", "4"}).code == 2);
}

TEST_CASE("cli pack writes a validated solution") {
  TempDir dir;
  const Instance inst{"p", {{2, 3, 4}, {1, 1, 1}, {3, 3, 1}}};
  spit(dir / "i.json", instances_to_json(std::span(&inst, 1)));

  const Run r = run({"pack", "--in", dir / "i.json", "--out", dir / "s.json"});
  CHECK(r.code == 0);
  const std::string text = slurp(dir / "s.json");
  CHECK(text.find("\"verdict\": \"PASS\"") != std::string::npos);
  CHECK(solution_from_json(text) == pack_heuristic(inst));
  CHECK(run({"validate", "--in", dir / "i.json", "--solution", dir / "s.json"}).code == 0);

  const Run seq = run({"pack", "--in", dir / "i.json", "--sequence", "2,0,1"});
  CHECK(seq.code == 0);
  const std::vector<std::size_t> order{2, 0, 1};
  CHECK(solution_from_json(seq.out) == pack_sequence(inst, order));

  CHECK(run({"pack", "--in", dir / "i.json", "--sequence", "0,0,1"}).code == 2);
  CHECK(run({"pack", "--in", dir / "missing.json"}).code == 2);
}

TEST_CASE("cli validate exits 2 on a failing solution") {
  TempDir dir;
  const Instance inst{"v", {{2, 2, 2}, {1, 1, 1}}};
  spit(dir / "i.json", instances_to_json(std::span(&inst, 1)));
  PackingSolution sol = pack_heuristic(inst);
  sol.placements[1].origin = sol.placements[0].origin;  // overlap
  spit(dir / "s.json", solution_to_json(inst, sol, validate_solution(inst, sol)));
  const Run r = run({"validate", "--in", dir / "i.json", "--solution", dir / "s.json"});
  CHECK(r.code == 2);
  CHECK(r.out.starts_with("FAIL"));
}

TEST_CASE("cli oracle enforces the size limit") {
  TempDir dir;
  spit(dir / "n9.json", instances_to_json(generate_instances(1, 9, 1, 10, 1)));
  const Run big = run({"oracle", "--in", dir / "n9.json"});
  CHECK(big.code == 2);
  CHECK(big.err.find("TooLarge") != std::string::npos);

  const auto small = generate_instances(1, 4, 1, 10, 1);
  spit(dir / "n4.json", instances_to_json(small));
  const Run ok = run({"oracle", "--in", dir / "n4.json"});
  CHECK(ok.code == 0);
  CHECK(solution_from_json(ok.out) == exhaustive_optimal_sequence(small[0]).solution);
}

TEST_CASE("cli train twice gives identical checkpoints") {
  TempDir dir;
  spit(dir / "cfg.json", R"({"steps": 5, "batch_size": 4, "embed_dim": 4})");
  const std::vector<std::string> common = {"train", "--config", dir / "cfg.json", "--count", "16",
                                           "--n", "4", "--seed", "11"};
  auto a = common, b = common;
  a.insert(a.end(), {"--out", dir / "a.ckpt", "--log", dir / "a.csv"});
  b.insert(b.end(), {"--out", dir / "b.ckpt", "--log", dir / "b.csv"});
  REQUIRE(run(a).code == 0);
  REQUIRE(run(b).code == 0);
  CHECK(slurp(dir / "a.ckpt") == slurp(dir / "b.ckpt"));
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  const Checkpoint ck = checkpoint_from_json(slurp(dir / "a.ckpt"));
  CHECK(ck.config.seed == 11);
  CHECK(ck.config.steps == 5);
  CHECK(ck.adam.step == 5);

  spit(dir / "bad.json", R"({"stepz": 5})");
  CHECK(run({"train", "--config", dir / "bad.json", "--out", dir / "c.ckpt"}).code == 2);
}

TEST_CASE("cli eval with a checkpoint") {
  TempDir dir;
  spit(dir / "cfg.json", R"({"steps": 3, "batch_size": 4, "embed_dim": 4})");
  REQUIRE(run({"train", "--config", dir / "cfg.json", "--count", "8", "--n", "4", "--out",
               dir / "p.ckpt"})
              .code == 0);
  spit(dir / "test.json", instances_to_json(generate_instances(6, 5, 1, 10, 3)));
  const std::vector<std::string> args = {
      "eval",        "--in",     dir / "test.json", "--checkpoint", dir / "p.ckpt", "--methods",
      "random,heuristic,policy-sampling,policy-beam,oracle", "--no-timing"};
  auto a = args, b = args;
  a.insert(a.end(), {"--csv", dir / "a.csv"});
  b.insert(b.end(), {"--csv", dir / "b.csv"});
  const Run ra = run(a);
  REQUIRE(ra.code == 0);
  REQUIRE(run(b).code == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(ra.out.find("policy-beam") != std::string::npos);

  CHECK(run({"eval", "--in", dir / "test.json", "--methods", "policy-beam"}).code == 2);
  CHECK(run({"eval", "--in", dir / "test.json", "--methods", "greedy"}).code == 1);
}

TEST_CASE("cli export-milp matches the library and golden text") {
  TempDir dir;
  const Instance inst{"golden-n2", {{2, 3, 4}, {1, 1, 1}}};
  spit(dir / "i.json", instances_to_json(std::span(&inst, 1)));
  const Run r = run({"export-milp", "--in", dir / "i.json", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(std::string(SURFPACK_GOLDEN_DIR) + "/n2.lp"));
  CHECK(r.err.find("counts PASS (27 decision variables)") != std::string::npos);

  const Run lit = run({"export-milp", "--in", dir / "i.json", "--pairs", "literal", "--check"});
  CHECK(lit.code == 0);
  CHECK(lit.err.find("counts PASS (24 decision variables)") != std::string::npos);

  const Run fixed = run({"export-milp", "--in", dir / "i.json", "--objective", "fixed-extents",
                         "--extents", "3,3,4"});
  CHECK(fixed.code == 0);
  CHECK(fixed.out.find(" L = 3\n") != std::string::npos);
  CHECK(run({"export-milp", "--in", dir / "i.json", "--objective", "fixed-extents"}).code == 2);
}
