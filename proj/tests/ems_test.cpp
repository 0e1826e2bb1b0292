#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "surfpack/ems.hpp"
#include "surfpack/error.hpp"

using namespace surfpack;
using surfpack::testing::brute_force_maximal_empty;
using surfpack::testing::brute_force_prune;
using surfpack::testing::make_box;
using surfpack::testing::sorted_boxes;

TEST_CASE("initial space covers the bin") {
  CHECK(EmsSet::initial({10, 10, 10}).spaces() ==
        std::vector<Box>{make_box(0, 0, 0, 10, 10, 10)});
  CHECK(EmsSet::initial({5, 7, 9}).spaces() ==
        std::vector<Box>{make_box(0, 0, 0, 5, 7, 9)});
  for (BinExtents bad : {BinExtents{0, 1, 1}, BinExtents{1, 0, 1},
                         BinExtents{1, 1, 0}}) {
    try {
      (void)EmsSet::initial(bad);
      FAIL("expected DegenerateBin");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateBin);
    }
  }
}

TEST_CASE("corner placement yields three spaces") {
  const EmsSet s = EmsSet::initial({10, 10, 10}).place_and_split(
      make_box(0, 0, 0, 2, 3, 4));
  CHECK(s.spaces() == std::vector<Box>{make_box(2, 0, 0, 10, 10, 10),
                                       make_box(0, 3, 0, 10, 10, 10),
                                       make_box(0, 0, 4, 10, 10, 10)});
}

TEST_CASE("pseudo-2D interior placement") {
  const EmsSet s =
      EmsSet::initial({4, 1, 1}).place_and_split(make_box(1, 0, 0, 2, 1, 1));
  CHECK(s.spaces() == std::vector<Box>{make_box(0, 0, 0, 1, 1, 1),
                                       make_box(2, 0, 0, 4, 1, 1)});
  CHECK(s.spaces() ==
        sorted_boxes(brute_force_maximal_empty({4, 1, 1},
                                               {make_box(1, 0, 0, 2, 1, 1)})));
}

TEST_CASE("filling the only space leaves nothing") {
  const EmsSet s =
      EmsSet::initial({3, 2, 5}).place_and_split(make_box(0, 0, 0, 3, 2, 5));
  CHECK(s.empty());
}

TEST_CASE("placements outside the bin are rejected") {
  const EmsSet s = EmsSet::initial({3, 3, 3});
  for (const Box& b : {make_box(2, 0, 0, 4, 1, 1), make_box(-1, 0, 0, 1, 1, 1),
                       make_box(0, 0, 0, 0, 1, 1)}) {
    try {
      (void)s.place_and_split(b);
      FAIL("expected OutOfBin");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OutOfBin);
    }
  }
}

TEST_CASE("prune_inclusions") {
  const Box a = make_box(0, 0, 0, 2, 2, 2);
  const Box b = make_box(0, 0, 0, 1, 1, 1);
  CHECK(prune_inclusions({a, b}) == std::vector<Box>{a});
  CHECK(prune_inclusions({a, a}) == std::vector<Box>{a});
  CHECK(prune_inclusions({}).empty());

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Length> c(0, 4);
  std::uniform_int_distribution<Length> len(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Box> soup;
    for (int i = 0; i < 20; ++i) {
      const Length x = c(rng), y = c(rng), z = c(rng);
      soup.push_back(make_box(x, y, z, x + len(rng), y + len(rng), z + len(rng)));
    }
    CHECK(sorted_boxes(prune_inclusions(soup)) == brute_force_prune(soup));
  }
}

TEST_CASE("canonical order is z-major") {
  const auto v = prune_inclusions({make_box(1, 0, 0, 3, 3, 3),
                                   make_box(0, 0, 1, 3, 3, 3),
                                   make_box(0, 1, 0, 3, 3, 3)});
  CHECK(v == std::vector<Box>{make_box(1, 0, 0, 3, 3, 3),
                              make_box(0, 1, 0, 3, 3, 3),
                              make_box(0, 0, 1, 3, 3, 3)});
}

TEST_CASE("random placement sequences keep emptiness, coverage and maximality") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Length> side(2, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const BinExtents bin{side(rng), side(rng), side(rng)};
    EmsSet ems = EmsSet::initial(bin);
    std::vector<Box> items;
    for (int step = 0; step < 8 && !ems.empty(); ++step) {
      // Random sub-box of a random space.
      const Box& s = ems.spaces()[std::uniform_int_distribution<std::size_t>(
          0, ems.size() - 1)(rng)];
      auto pick = [&](Length lo, Length hi) {
        const Length a = std::uniform_int_distribution<Length>(lo, hi - 1)(rng);
        const Length b = std::uniform_int_distribution<Length>(a + 1, hi)(rng);
        return std::pair{a, b};
      };
      const auto [x0, x1] = pick(s.lo.x, s.hi.x);
      const auto [y0, y1] = pick(s.lo.y, s.hi.y);
      const auto [z0, z1] = pick(s.lo.z, s.hi.z);
      const Box placed = make_box(x0, y0, z0, x1, y1, z1);
      items.push_back(placed);
      const EmsSet again = ems.place_and_split(placed);
      ems = ems.place_and_split(placed);
      CHECK(again == ems);  // determinism

      for (const Box& sp : ems.spaces())
        for (const Box& it : items) CHECK_FALSE(sp.intersects(it));
      CHECK(sorted_boxes(ems.spaces()) ==
            brute_force_maximal_empty(bin, items));

      // Coverage: every free cell lies in some space.
      for (Length x = 0; x < bin.L; ++x)
        for (Length y = 0; y < bin.W; ++y)
          for (Length z = 0; z < bin.H; ++z) {
            const Box cell = make_box(x, y, z, x + 1, y + 1, z + 1);
            bool occupied = false;
            for (const Box& it : items) occupied = occupied || it.contains(cell);
            bool covered = false;
            for (const Box& sp : ems.spaces())
              covered = covered || sp.contains(cell);
            CHECK(covered != occupied);
          }
    }
  }
}
