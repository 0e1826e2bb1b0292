#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfpack {

// All geometry is exact integer arithmetic.
using Length = std::int64_t;
using Area = std::int64_t;
using Volume = std::int64_t;

struct Vec3 {
  Length x = 0;
  Length y = 0;
  Length z = 0;

  auto operator<=>(const Vec3&) const = default;
};

struct ItemDims {
  Length l = 0;
  Length w = 0;
  Length h = 0;

  bool operator==(const ItemDims&) const = default;

  Volume volume() const { return l * w * h; }
  Length max_side() const;
  Area surface_area() const { return 2 * (l * w + l * h + w * h); }
};

// The six axis-aligned orientations; enumerator order matches the binary
// orientation indicators d_i_1 .. d_i_6 of the MILP model.
enum class Orientation : std::uint8_t {
  FrontUp,
  FrontDown,
  SideUp,
  SideDown,
  BottomUp,
  BottomDown,
};

inline constexpr std::array<Orientation, 6> kOrientations = {
    Orientation::FrontUp,  Orientation::FrontDown, Orientation::SideUp,
    Orientation::SideDown, Orientation::BottomUp,  Orientation::BottomDown,
};

std::string_view to_string(Orientation o);
std::optional<Orientation> parse_orientation(std::string_view label);

struct OrientedDims {
  Length l = 0;
  Length w = 0;
  Length h = 0;

  bool operator==(const OrientedDims&) const = default;
};

/// Side lengths along (x, y, z) after rotating `dims` by `o`:
/// FrontUp (l,w,h), FrontDown (l,h,w), SideUp (w,l,h), SideDown (w,h,l),
/// BottomUp (h,l,w), BottomDown (h,w,l).
OrientedDims orient(const ItemDims& dims, Orientation o);

/// Half-open axis-aligned box [lo, hi).
struct Box {
  Vec3 lo;
  Vec3 hi;

  bool operator==(const Box&) const = default;

  Length span_x() const { return hi.x - lo.x; }
  Length span_y() const { return hi.y - lo.y; }
  Length span_z() const { return hi.z - lo.z; }
  Volume volume() const { return span_x() * span_y() * span_z(); }
  bool has_volume() const { return lo.x < hi.x && lo.y < hi.y && lo.z < hi.z; }

  // Positive-volume intersection; shared faces do not count.
  bool intersects(const Box& other) const;
  bool contains(const Box& other) const;
};

Box box_at(const Vec3& origin, const OrientedDims& dims);

struct BinExtents {
  Length L = 0;
  Length W = 0;
  Length H = 0;

  bool operator==(const BinExtents&) const = default;
  Volume volume() const { return L * W * H; }
};

/// Physical surface area 2(LW + LH + WH).
Area surface_area(const BinExtents& e);
/// LW + LH + WH, the objective as written in the model.
Area half_surface_area(const BinExtents& e);

struct Instance {
  std::string id;
  std::vector<ItemDims> items;

  bool operator==(const Instance&) const = default;
  std::size_t size() const { return items.size(); }
};

/// Throws EmptyInstance / BadInput if the instance has no items or a
/// non-positive side.
void validate_instance(const Instance& instance);

/// Side of the cubic working bin large enough for any packing of the
/// instance: the sum over items of their longest side.
Length working_bin_side(const Instance& instance);

struct Placement {
  std::size_t item = 0;
  Vec3 origin;
  Orientation orientation = Orientation::FrontUp;

  bool operator==(const Placement&) const = default;
};

Box placed_box(const Instance& instance, const Placement& p);

struct PackingSolution {
  std::string instance_id;
  std::vector<std::size_t> sequence;
  std::vector<Placement> placements;  // in packing order
  BinExtents extents;
  Area surface_area = 0;

  bool operator==(const PackingSolution&) const = default;
  Area half_area() const { return surface_area / 2; }
};

/// Per-axis maxima of origin + oriented side. Throws EmptyPacking.
BinExtents tight_extents(std::span<const Placement> placements,
                         const Instance& instance);

// Ordered-pair separation flags: s = a entirely left of b (x), u = a entirely
// under b (y), b = a entirely behind b (z).
struct RelativePosition {
  bool s = false;
  bool u = false;
  bool b = false;

  bool any() const { return s || u || b; }
};

RelativePosition relative_position(const Box& a, const Box& b);

enum class ViolationKind {
  MissingItem,
  DuplicateItem,
  BadSequence,
  NegativeCoordinate,
  OutsideBin,
  Overlap,
  ObjectiveMismatch,
};

struct Violation {
  ViolationKind kind;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

/// Feasibility check against the non-overlap, containment and
/// single-orientation constraints, using `solution.extents` as the bin.
/// Throws InstanceMismatch when the solution does not describe n items.
ValidationReport validate_solution(const Instance& instance,
                                   const PackingSolution& solution);

}  // namespace surfpack
