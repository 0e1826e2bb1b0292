#pragma once

#include <span>
#include <vector>

#include "surfpack/geometry.hpp"

namespace surfpack {

using EmptyMaximalSpace = Box;

/// Canonical order of spaces: lexicographic on (z0, y0, x0, z1, y1, x1), so
/// lower, then nearer, then further-left spaces come first.
bool canonical_less(const Box& a, const Box& b);

/// Empty maximal spaces of a partial packing inside a fixed bin. Immutable
/// value; placing a box produces a new set.
class EmsSet {
 public:
  /// Single space covering the whole bin. Throws DegenerateBin.
  static EmsSet initial(const BinExtents& bin);

  /// Difference process: every space intersecting `placed` is replaced by up
  /// to six sub-spaces clipped around it, then inclusions are pruned.
  /// Throws OutOfBin if `placed` leaves the bin.
  EmsSet place_and_split(const Box& placed) const;

  const std::vector<Box>& spaces() const { return spaces_; }
  const BinExtents& bin() const { return bin_; }
  std::size_t size() const { return spaces_.size(); }
  bool empty() const { return spaces_.empty(); }

  bool operator==(const EmsSet&) const = default;

 private:
  EmsSet(BinExtents bin, std::vector<Box> spaces)
      : bin_(bin), spaces_(std::move(spaces)) {}

  BinExtents bin_;
  std::vector<Box> spaces_;
};

/// Keeps only inclusion-maximal boxes, collapsing duplicates; result is in
/// canonical order.
std::vector<Box> prune_inclusions(std::vector<Box> spaces);

}  // namespace surfpack
