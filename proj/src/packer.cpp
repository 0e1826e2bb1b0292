#include "surfpack/packer.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "surfpack/error.hpp"
#include "surfpack/parallel.hpp"

namespace surfpack {

std::size_t worker_count() {
  if (const char* env = std::getenv("SURFPACK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PackingState::PackingState(const Instance& instance)
    : instance_(&instance),
      ems_([&] {
        validate_instance(instance);
        const Length side = working_bin_side(instance);
        return EmsSet::initial({side, side, side});
      }()),
      remaining_(instance.size(), true) {
  placements_.reserve(instance.size());
  sequence_.reserve(instance.size());
}

bool PackingState::is_remaining(std::size_t item) const {
  return item < remaining_.size() && remaining_[item];
}

std::size_t PackingState::remaining_count() const {
  return static_cast<std::size_t>(
      std::count(remaining_.begin(), remaining_.end(), true));
}

void PackingState::apply(std::size_t item, const PlacementChoice& choice) {
  if (!is_remaining(item)) {
    throw Error(ErrorCode::BadSequence,
                fmt::format("item {} is not waiting to be packed", item));
  }
  const Box placed = box_at(choice.origin(), choice.dims);
  ems_ = ems_.place_and_split(placed);
  placements_.push_back({item, choice.origin(), choice.orientation});
  sequence_.push_back(item);
  remaining_[item] = false;
  extents_ = {std::max(extents_.L, placed.hi.x),
              std::max(extents_.W, placed.hi.y),
              std::max(extents_.H, placed.hi.z)};
  packed_volume_ += instance_->items[item].volume();
}

PackingSolution PackingState::to_solution() const {
  PackingSolution sol;
  sol.instance_id = instance_->id;
  sol.sequence = sequence_;
  sol.placements = placements_;
  sol.extents = extents_;
  sol.surface_area = surface_area(extents_);
  return sol;
}

PlacementChoice least_surface_area_choice(const PackingState& state,
                                          std::size_t item) {
  if (!state.is_remaining(item)) {
    throw Error(ErrorCode::BadSequence,
                fmt::format("item {} is not waiting to be packed", item));
  }
  const ItemDims& dims = state.instance().items[item];
  const BinExtents& cur = state.extents();

  std::optional<PlacementChoice> best;
  for (const Box& space : state.ems().spaces()) {
    for (Orientation o : kOrientations) {
      const OrientedDims od = orient(dims, o);
      if (od.l > space.span_x() || od.w > space.span_y() ||
          od.h > space.span_z()) {
        continue;
      }
      PlacementChoice c;
      c.ems = space;
      c.orientation = o;
      c.dims = od;
      c.extents = {std::max(cur.L, space.lo.x + od.l),
                   std::max(cur.W, space.lo.y + od.w),
                   std::max(cur.H, space.lo.z + od.h)};
      c.half_area = half_surface_area(c.extents);
      c.slack = std::min({space.span_x() - od.l, space.span_y() - od.w,
                          space.span_z() - od.h});
      if (!best || c.half_area < best->half_area ||
          (c.half_area == best->half_area && c.slack < best->slack)) {
        best = c;
      }
    }
  }
  if (!best) {
    throw Error(ErrorCode::NoFit,
                fmt::format("item {} fits no empty space", item));
  }
  return *best;
}

std::vector<WasteEvaluation> evaluate_waste(const PackingState& state) {
  std::vector<WasteEvaluation> out;
  const std::size_t n = state.instance().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!state.is_remaining(i)) continue;
    WasteEvaluation ev;
    ev.item = i;
    ev.choice = least_surface_area_choice(state, i);
    ev.box_volume = ev.choice.extents.volume();
    const Volume vi = state.instance().items[i].volume();
    ev.waste = ev.box_volume - (state.packed_volume() + vi);
    ev.box_minus_item = ev.box_volume - vi;
    out.push_back(ev);
  }
  return out;
}

namespace {

const WasteEvaluation& least_waste(const std::vector<WasteEvaluation>& evals) {
  if (evals.empty()) {
    throw Error(ErrorCode::NothingToSelect, "no remaining items");
  }
  const WasteEvaluation* best = &evals.front();
  for (const auto& ev : evals) {
    if (ev.waste < best->waste) best = &ev;
  }
  return *best;
}

}  // namespace

std::size_t least_waste_space_choice(const PackingState& state) {
  return least_waste(evaluate_waste(state)).item;
}

PackingSolution pack_heuristic(const Instance& instance) {
  PackingState state(instance);

  std::size_t first = 0;
  for (std::size_t i = 1; i < instance.size(); ++i) {
    if (instance.items[i].surface_area() >
        instance.items[first].surface_area()) {
      first = i;
    }
  }
  state.apply(first, least_surface_area_choice(state, first));

  while (!state.complete()) {
    const auto evals = evaluate_waste(state);
    const WasteEvaluation& pick = least_waste(evals);
    state.apply(pick.item, pick.choice);
  }
  return state.to_solution();
}

namespace {

void check_permutation(std::span<const std::size_t> sequence, std::size_t n) {
  if (sequence.size() != n) {
    throw Error(ErrorCode::BadSequence,
                fmt::format("sequence has {} entries for {} items",
                            sequence.size(), n));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i : sequence) {
    if (i >= n || seen[i]) {
      throw Error(ErrorCode::BadSequence,
                  fmt::format("entry {} is out of range or repeated", i));
    }
    seen[i] = true;
  }
}

}  // namespace

PackingSolution pack_sequence(const Instance& instance,
                              std::span<const std::size_t> sequence) {
  check_permutation(sequence, instance.size());
  PackingState state(instance);
  for (std::size_t item : sequence) {
    state.apply(item, least_surface_area_choice(state, item));
  }
  return state.to_solution();
}

namespace {

struct SearchBest {
  std::optional<PackingSolution> solution;

  Area value() const { return solution->half_area(); }
};

// Depth-first over orders in lexicographic order, reusing the packed prefix.
// Only strict improvements replace the incumbent, so the first minimiser in
// lexicographic order wins. Extents never shrink, so a prefix already at or
// above the incumbent cannot lead to a strict improvement.
void search(const PackingState& state, SearchBest& best) {
  if (state.complete()) {
    const Area v = half_surface_area(state.extents());
    if (!best.solution || v < best.value()) best.solution = state.to_solution();
    return;
  }
  const std::size_t n = state.instance().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!state.is_remaining(i)) continue;
    const PlacementChoice c = least_surface_area_choice(state, i);
    if (best.solution && c.half_area >= best.value()) continue;
    PackingState next = state;
    next.apply(i, c);
    search(next, best);
  }
}

}  // namespace

OracleResult exhaustive_optimal_sequence(const Instance& instance,
                                         std::size_t limit) {
  validate_instance(instance);
  const std::size_t n = instance.size();
  if (n > limit) {
    throw Error(ErrorCode::TooLarge,
                fmt::format("{} items exceeds the exhaustive limit of {}", n,
                            limit));
  }

  // One independent search per leading item; reduced in index order.
  std::vector<SearchBest> branch(n);
  parallel_for(n, [&](std::size_t first) {
    PackingState state(instance);
    state.apply(first, least_surface_area_choice(state, first));
    search(state, branch[first]);
  });

  std::optional<PackingSolution> best;
  for (auto& b : branch) {
    if (b.solution && (!best || b.value() < best->half_area())) {
      best = std::move(b.solution);
    }
  }

  // The heuristic's own order is one more candidate.
  const PackingSolution heuristic = pack_heuristic(instance);
  if (heuristic.half_area() < best->half_area() ||
      (heuristic.half_area() == best->half_area() &&
       heuristic.sequence < best->sequence)) {
    best = heuristic;
  }
  return {best->sequence, *best};
}

}  // namespace surfpack
