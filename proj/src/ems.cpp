#include "surfpack/ems.hpp"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>

#include "surfpack/error.hpp"

namespace surfpack {

bool canonical_less(const Box& a, const Box& b) {
  return std::tie(a.lo.z, a.lo.y, a.lo.x, a.hi.z, a.hi.y, a.hi.x) <
         std::tie(b.lo.z, b.lo.y, b.lo.x, b.hi.z, b.hi.y, b.hi.x);
}

EmsSet EmsSet::initial(const BinExtents& bin) {
  if (bin.L <= 0 || bin.W <= 0 || bin.H <= 0) {
    throw Error(ErrorCode::DegenerateBin,
                fmt::format("bin ({}, {}, {}) has no volume", bin.L, bin.W,
                            bin.H));
  }
  return EmsSet(bin, {Box{{0, 0, 0}, {bin.L, bin.W, bin.H}}});
}

EmsSet EmsSet::place_and_split(const Box& placed) const {
  const Box whole{{0, 0, 0}, {bin_.L, bin_.W, bin_.H}};
  if (!placed.has_volume() || !whole.contains(placed)) {
    throw Error(ErrorCode::OutOfBin,
                fmt::format("box [({}, {}, {}), ({}, {}, {})] is not inside "
                            "the bin",
                            placed.lo.x, placed.lo.y, placed.lo.z, placed.hi.x,
                            placed.hi.y, placed.hi.z));
  }

  std::vector<Box> next;
  next.reserve(spaces_.size() + 6);
  for (const Box& s : spaces_) {
    if (!s.intersects(placed)) {
      next.push_back(s);
      continue;
    }
    Box left = s;
    left.hi.x = placed.lo.x;
    Box right = s;
    right.lo.x = placed.hi.x;
    Box front = s;
    front.hi.y = placed.lo.y;
    Box back = s;
    back.lo.y = placed.hi.y;
    Box below = s;
    below.hi.z = placed.lo.z;
    Box above = s;
    above.lo.z = placed.hi.z;
    for (const Box& c : {left, right, front, back, below, above}) {
      if (c.has_volume()) next.push_back(c);
    }
  }
  return EmsSet(bin_, prune_inclusions(std::move(next)));
}

std::vector<Box> prune_inclusions(std::vector<Box> spaces) {
  // Sorting by volume (descending) means a box can only be contained in one
  // that precedes it.
  std::sort(spaces.begin(), spaces.end(), [](const Box& a, const Box& b) {
    if (a.volume() != b.volume()) return a.volume() > b.volume();
    return canonical_less(a, b);
  });
  spaces.erase(std::unique(spaces.begin(), spaces.end()), spaces.end());

  std::vector<Box> kept;
  kept.reserve(spaces.size());
  for (const Box& s : spaces) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [&](const Box& k) { return k.contains(s); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  return kept;
}

}  // namespace surfpack
