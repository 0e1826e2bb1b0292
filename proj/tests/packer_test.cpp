#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "surfpack/error.hpp"
#include "surfpack/packer.hpp"

using namespace surfpack;
using surfpack::testing::make_box;
using surfpack::testing::random_instance;

namespace {

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("working bin is the sum of longest sides") {
  Instance inst{"w", {{1, 2, 3}, {4, 1, 1}, {2, 2, 2}}};
  PackingState state(inst);
  CHECK(state.working_bin() == BinExtents{9, 9, 9});
  CHECK(state.ems().size() == 1);
  CHECK(state.remaining_count() == 3);
}

TEST_CASE("least surface area choice") {
  SUBCASE("first item keeps its orientation on a full tie") {
    Instance inst{"a", {{2, 3, 4}}};
    PackingState state(inst);
    const auto c = least_surface_area_choice(state, 0);
    CHECK(c.half_area == 26);
    CHECK(c.orientation == Orientation::FrontUp);
    CHECK(c.origin() == Vec3{0, 0, 0});
  }
  SUBCASE("second unit cube goes to the first canonical space") {
    Instance inst{"b", {{1, 1, 1}, {1, 1, 1}}};
    PackingState state(inst);
    state.apply(0, least_surface_area_choice(state, 0));
    const auto c = least_surface_area_choice(state, 1);
    CHECK(c.half_area == 5);
    CHECK(c.ems == make_box(1, 0, 0, 2, 2, 2));
    CHECK(c.orientation == Orientation::FrontUp);
  }
  SUBCASE("a rod next to a plate is laid down") {
    Instance inst{"c", {{3, 3, 1}, {1, 1, 3}}};
    PackingState state(inst);
    state.apply(0, least_surface_area_choice(state, 0));
    const auto c = least_surface_area_choice(state, 1);
    CHECK(c.half_area == 19);
    CHECK(c.origin() == Vec3{3, 0, 0});
    CHECK(c.orientation == Orientation::FrontDown);
    CHECK(c.extents == BinExtents{4, 3, 1});
  }
  SUBCASE("placed items cannot be chosen again") {
    Instance inst{"d", {{1, 1, 1}, {1, 1, 1}}};
    PackingState state(inst);
    state.apply(0, least_surface_area_choice(state, 0));
    CHECK(error_of([&] { (void)least_surface_area_choice(state, 0); }) ==
          ErrorCode::BadSequence);
  }
}

TEST_CASE("least waste space choice") {
  SUBCASE("single remaining item") {
    Instance inst{"a", {{2, 2, 2}, {1, 2, 3}}};
    PackingState state(inst);
    state.apply(0, least_surface_area_choice(state, 0));
    CHECK(least_waste_space_choice(state) == 1);
  }
  SUBCASE("twin cube beats the unit cube") {
    Instance inst{"b", {{2, 2, 2}, {2, 2, 2}, {1, 1, 1}}};
    PackingState state(inst);
    state.apply(0, least_surface_area_choice(state, 0));
    const auto evals = evaluate_waste(state);
    REQUIRE(evals.size() == 2);
    CHECK(evals[0].item == 1);
    CHECK(evals[0].box_volume == 16);
    CHECK(evals[0].waste == 0);
    CHECK(evals[1].item == 2);
    CHECK(evals[1].box_volume == 12);
    CHECK(evals[1].waste == 3);
    CHECK(evals[1].box_minus_item == 11);
    CHECK(least_waste_space_choice(state) == 1);
  }
  SUBCASE("identical candidates resolve to the smaller index") {
    Instance inst{"c", {{2, 2, 2}, {1, 1, 1}, {1, 1, 1}}};
    PackingState state(inst);
    state.apply(0, least_surface_area_choice(state, 0));
    CHECK(least_waste_space_choice(state) == 1);
  }
}

TEST_CASE("pack_heuristic small cases") {
  Instance one{"a", {{2, 3, 4}}};
  CHECK(pack_heuristic(one).half_area() == 26);

  Instance two{"b", {{1, 1, 1}, {1, 1, 1}}};
  const auto s = pack_heuristic(two);
  CHECK(s.half_area() == 5);
  std::array<Length, 3> e{s.extents.L, s.extents.W, s.extents.H};
  std::sort(e.begin(), e.end());
  CHECK(e == std::array<Length, 3>{1, 1, 2});

  // Largest surface area goes first.
  Instance three{"c", {{1, 1, 1}, {3, 3, 1}, {2, 2, 2}}};
  CHECK(pack_heuristic(three).sequence.front() == 1);
}

TEST_CASE("pack_sequence") {
  Instance one{"a", {{2, 3, 4}}};
  const std::vector<std::size_t> s0{0};
  CHECK(pack_sequence(one, s0) == pack_heuristic(one));

  Instance two{"b", {{1, 1, 1}, {1, 1, 1}}};
  const std::vector<std::size_t> fwd{0, 1}, rev{1, 0};
  CHECK(pack_sequence(two, fwd).half_area() == 5);
  CHECK(pack_sequence(two, rev).half_area() == 5);

  const std::vector<std::size_t> dup{0, 0}, short_seq{0}, range{0, 2};
  CHECK(error_of([&] { (void)pack_sequence(two, dup); }) ==
        ErrorCode::BadSequence);
  CHECK(error_of([&] { (void)pack_sequence(two, short_seq); }) ==
        ErrorCode::BadSequence);
  CHECK(error_of([&] { (void)pack_sequence(two, range); }) ==
        ErrorCode::BadSequence);

  Instance empty{"e", {}};
  const std::vector<std::size_t> none;
  CHECK(error_of([&] { (void)pack_sequence(empty, none); }) ==
        ErrorCode::EmptyInstance);
}

TEST_CASE("heuristic equals sequence packing of its own order") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = random_instance(rng, 2 + trial % 9, 1, 10);
    const auto h = pack_heuristic(inst);
    CHECK(pack_sequence(inst, h.sequence) == h);
    CHECK(pack_heuristic(inst) == h);
  }
}

TEST_CASE("exhaustive oracle") {
  Instance two{"b", {{1, 1, 1}, {1, 1, 1}}};
  CHECK(exhaustive_optimal_sequence(two).solution.half_area() == 5);

  Instance three{"c", {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}};
  const auto r3 = exhaustive_optimal_sequence(three);
  CHECK(r3.solution.half_area() == 7);
  CHECK(r3.sequence == std::vector<std::size_t>{0, 1, 2});

  Instance nine{"n", std::vector<ItemDims>(9, {1, 2, 3})};
  CHECK(error_of([&] { (void)exhaustive_optimal_sequence(nine); }) ==
        ErrorCode::TooLarge);
  CHECK(error_of([&] { (void)exhaustive_optimal_sequence(two, 1); }) ==
        ErrorCode::TooLarge);
}

TEST_CASE("oracle matches plain enumeration of every order") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 8; ++trial) {
    const Instance inst = random_instance(rng, trial < 4 ? 6 : 5, 1, 10);
    std::vector<std::size_t> perm(inst.size());
    std::iota(perm.begin(), perm.end(), 0);
    Area best = 0;
    std::vector<std::size_t> best_seq;
    do {
      const Area v = pack_sequence(inst, perm).half_area();
      if (best_seq.empty() || v < best) {
        best = v;
        best_seq = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    const auto r = exhaustive_optimal_sequence(inst);
    CHECK(r.solution.half_area() == best);
    CHECK(r.sequence == best_seq);
    CHECK(r.solution.half_area() <= pack_heuristic(inst).half_area());
    CHECK(validate_solution(inst, r.solution).pass());
  }
}

TEST_CASE("working bin never runs out of room") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Length hi = trial % 2 ? 10 : 30;
    const Instance inst = random_instance(rng, 1 + trial % 12, 1, hi);
    std::vector<std::size_t> perm(inst.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = pack_heuristic(inst);
    const auto s = pack_sequence(inst, perm);
    CHECK(validate_solution(inst, h).pass());
    CHECK(validate_solution(inst, s).pass());
    CHECK(pack_sequence(inst, perm) == s);
  }
}

TEST_CASE("heuristic decisions are scale invariant") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = random_instance(rng, 2 + trial % 8, 1, 10);
    Instance scaled = inst;
    for (auto& d : scaled.items) d = {3 * d.l, 3 * d.w, 3 * d.h};
    const auto a = pack_heuristic(inst);
    const auto b = pack_heuristic(scaled);
    CHECK(a.sequence == b.sequence);
    for (std::size_t k = 0; k < a.placements.size(); ++k) {
      CHECK(a.placements[k].orientation == b.placements[k].orientation);
      CHECK(b.placements[k].origin == Vec3{3 * a.placements[k].origin.x,
                                           3 * a.placements[k].origin.y,
                                           3 * a.placements[k].origin.z});
    }
    CHECK(b.half_area() == 9 * a.half_area());
  }
}
