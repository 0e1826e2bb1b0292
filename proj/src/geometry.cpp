#include "surfpack/geometry.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "surfpack/error.hpp"

namespace surfpack {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPacking: return "EmptyPacking";
    case ErrorCode::InstanceMismatch: return "InstanceMismatch";
    case ErrorCode::DegenerateBin: return "DegenerateBin";
    case ErrorCode::OutOfBin: return "OutOfBin";
    case ErrorCode::NoFit: return "NoFit";
    case ErrorCode::BadSequence: return "BadSequence";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NothingToSelect: return "NothingToSelect";
    case ErrorCode::NoBaseline: return "NoBaseline";
    case ErrorCode::NumericalFault: return "NumericalFault";
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

Length ItemDims::max_side() const { return std::max({l, w, h}); }

namespace {
constexpr std::array<std::string_view, 6> kOrientationLabels = {
    "FrontUp", "FrontDown", "SideUp", "SideDown", "BottomUp", "BottomDown",
};
}  // namespace

std::string_view to_string(Orientation o) {
  return kOrientationLabels[static_cast<std::size_t>(o)];
}

std::optional<Orientation> parse_orientation(std::string_view label) {
  for (std::size_t k = 0; k < kOrientationLabels.size(); ++k) {
    if (kOrientationLabels[k] == label) return kOrientations[k];
  }
  return std::nullopt;
}

OrientedDims orient(const ItemDims& d, Orientation o) {
  switch (o) {
    case Orientation::FrontUp: return {d.l, d.w, d.h};
    case Orientation::FrontDown: return {d.l, d.h, d.w};
    case Orientation::SideUp: return {d.w, d.l, d.h};
    case Orientation::SideDown: return {d.w, d.h, d.l};
    case Orientation::BottomUp: return {d.h, d.l, d.w};
    case Orientation::BottomDown: return {d.h, d.w, d.l};
  }
  return {d.l, d.w, d.h};
}

bool Box::intersects(const Box& o) const {
  return lo.x < o.hi.x && o.lo.x < hi.x && lo.y < o.hi.y && o.lo.y < hi.y &&
         lo.z < o.hi.z && o.lo.z < hi.z;
}

bool Box::contains(const Box& o) const {
  return lo.x <= o.lo.x && lo.y <= o.lo.y && lo.z <= o.lo.z &&
         o.hi.x <= hi.x && o.hi.y <= hi.y && o.hi.z <= hi.z;
}

Box box_at(const Vec3& origin, const OrientedDims& d) {
  return {origin, {origin.x + d.l, origin.y + d.w, origin.z + d.h}};
}

Area surface_area(const BinExtents& e) { return 2 * half_surface_area(e); }

Area half_surface_area(const BinExtents& e) {
  return e.L * e.W + e.L * e.H + e.W * e.H;
}

void validate_instance(const Instance& instance) {
  if (instance.items.empty()) {
    throw Error(ErrorCode::EmptyInstance,
                fmt::format("instance '{}' has no items", instance.id));
  }
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const auto& d = instance.items[i];
    if (d.l <= 0 || d.w <= 0 || d.h <= 0) {
      throw Error(ErrorCode::BadInput,
                  fmt::format("item {} of '{}' has a non-positive side", i,
                              instance.id));
    }
  }
}

Length working_bin_side(const Instance& instance) {
  Length side = 0;
  for (const auto& d : instance.items) side += d.max_side();
  return side;
}

Box placed_box(const Instance& instance, const Placement& p) {
  return box_at(p.origin, orient(instance.items.at(p.item), p.orientation));
}

BinExtents tight_extents(std::span<const Placement> placements,
                         const Instance& instance) {
  if (placements.empty()) {
    throw Error(ErrorCode::EmptyPacking, "no placements");
  }
  BinExtents e;
  for (const auto& p : placements) {
    const Box b = placed_box(instance, p);
    e.L = std::max(e.L, b.hi.x);
    e.W = std::max(e.W, b.hi.y);
    e.H = std::max(e.H, b.hi.z);
  }
  return e;
}

RelativePosition relative_position(const Box& a, const Box& b) {
  return {a.hi.x <= b.lo.x, a.hi.y <= b.lo.y, a.hi.z <= b.lo.z};
}

ValidationReport validate_solution(const Instance& instance,
                                   const PackingSolution& solution) {
  const std::size_t n = instance.size();
  if (solution.placements.size() != n || solution.sequence.size() != n) {
    throw Error(ErrorCode::InstanceMismatch,
                fmt::format("instance has {} items, solution has {} "
                            "placements and a sequence of length {}",
                            n, solution.placements.size(),
                            solution.sequence.size()));
  }

  ValidationReport report;
  auto add = [&](ViolationKind kind, std::size_t a, std::size_t b,
                 std::string msg) {
    report.violations.push_back({kind, a, b, std::move(msg)});
  };

  std::vector<int> seen_in_sequence(n, 0);
  for (std::size_t i : solution.sequence) {
    if (i >= n || seen_in_sequence[i]++ > 0) {
      add(ViolationKind::BadSequence, i, i,
          fmt::format("sequence entry {} is out of range or repeated", i));
    }
  }

  // One placement (hence one orientation) per item.
  std::vector<int> placed(n, 0);
  std::vector<Box> boxes(n);
  for (const auto& p : solution.placements) {
    if (p.item >= n) {
      add(ViolationKind::MissingItem, p.item, p.item,
          fmt::format("placement refers to unknown item {}", p.item));
      continue;
    }
    if (placed[p.item]++ > 0) {
      add(ViolationKind::DuplicateItem, p.item, p.item,
          fmt::format("item {} is placed more than once", p.item));
      continue;
    }
    boxes[p.item] = placed_box(instance, p);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i] == 0) {
      add(ViolationKind::MissingItem, i, i,
          fmt::format("item {} is not placed", i));
    }
  }

  const auto& e = solution.extents;
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i] == 0) continue;
    const Box& b = boxes[i];
    if (b.lo.x < 0 || b.lo.y < 0 || b.lo.z < 0) {
      add(ViolationKind::NegativeCoordinate, i, i,
          fmt::format("item {} has a negative coordinate", i));
    }
    if (b.hi.x > e.L || b.hi.y > e.W || b.hi.z > e.H) {
      add(ViolationKind::OutsideBin, i, i,
          fmt::format("item {} extends past the bin ({}, {}, {})", i, e.L,
                      e.W, e.H));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i] == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (placed[j] == 0) continue;
      if (boxes[i].intersects(boxes[j])) {
        add(ViolationKind::Overlap, i, j,
            fmt::format("items {} and {} overlap", i, j));
      }
    }
  }

  if (solution.surface_area != surface_area(e)) {
    add(ViolationKind::ObjectiveMismatch, 0, 0,
        fmt::format("surface area {} does not match extents ({})",
                    solution.surface_area, surface_area(e)));
  }
  return report;
}

}  // namespace surfpack
