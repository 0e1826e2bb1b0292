#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "surfpack/ems.hpp"
#include "surfpack/geometry.hpp"

namespace surfpack {

/// Where and how to put one item: at the min-corner of `ems`, rotated by
/// `orientation`.
struct PlacementChoice {
  Box ems;
  Orientation orientation = Orientation::FrontUp;
  OrientedDims dims;
  BinExtents extents;  // tight extents once the item is in
  Area half_area = 0;
  Length slack = 0;  // min over axes of (ems span - oriented side)

  Vec3 origin() const { return ems.lo; }
  Area surface_area() const { return 2 * half_area; }
};

/// A partial packing inside the cubic working bin. The instance must outlive
/// the state.
class PackingState {
 public:
  explicit PackingState(const Instance& instance);

  const Instance& instance() const { return *instance_; }
  const EmsSet& ems() const { return ems_; }
  const BinExtents& working_bin() const { return ems_.bin(); }
  const std::vector<Placement>& placements() const { return placements_; }
  const std::vector<std::size_t>& sequence() const { return sequence_; }
  // Tight extents of what is placed so far; all zero before the first item.
  const BinExtents& extents() const { return extents_; }
  Volume packed_volume() const { return packed_volume_; }

  bool is_remaining(std::size_t item) const;
  std::size_t remaining_count() const;
  bool complete() const { return remaining_count() == 0; }

  void apply(std::size_t item, const PlacementChoice& choice);

  PackingSolution to_solution() const;

 private:
  const Instance* instance_;
  EmsSet ems_;
  std::vector<Placement> placements_;
  std::vector<std::size_t> sequence_;
  std::vector<bool> remaining_;
  BinExtents extents_;
  Volume packed_volume_ = 0;
};

/// Least-surface-area rule: scan every space and orientation the item fits,
/// minimise the tentative tight half-area, break ties by smaller slack, then
/// by canonical space order and orientation order. Throws NoFit.
PlacementChoice least_surface_area_choice(const PackingState& state,
                                          std::size_t item);

struct WasteEvaluation {
  std::size_t item = 0;
  PlacementChoice choice;
  Volume box_volume = 0;       // tight bounding box after placing `item`
  Volume waste = 0;            // box_volume - all packed volume (ranked)
  Volume box_minus_item = 0;   // box_volume - volume of `item` alone
};

/// Waste figures for every remaining item, in index order.
std::vector<WasteEvaluation> evaluate_waste(const PackingState& state);

/// Least-waste rule: remaining item whose best placement leaves the least
/// empty volume in the bounding box; ties go to the smallest index.
std::size_t least_waste_space_choice(const PackingState& state);

/// Full constructive heuristic: largest-surface item first, then least-waste
/// item selection with least-surface-area placement.
PackingSolution pack_heuristic(const Instance& instance);

/// Packs items in the given order with the least-surface-area rule.
/// Throws BadSequence unless `sequence` is a permutation of 0..n-1.
PackingSolution pack_sequence(const Instance& instance,
                              std::span<const std::size_t> sequence);

struct OracleResult {
  std::vector<std::size_t> sequence;
  PackingSolution solution;
};

inline constexpr std::size_t kDefaultOracleLimit = 8;

/// Lexicographically first sequence minimising pack_sequence's half-area over
/// all n! orders. Throws TooLarge when n > limit.
OracleResult exhaustive_optimal_sequence(
    const Instance& instance, std::size_t limit = kDefaultOracleLimit);

}  // namespace surfpack
