#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfpack/geometry.hpp"

namespace surfpack {

// Mixed-integer model of the min-surface-area packing problem, written as an
// LP-format text file (CPLEX LP dialect, quadratic objective section).
//
// Variables
//   L, W, H                 bin extents, 0 <= . <= big-M side
//   x_i, y_i, z_i           left-bottom-back corner of item i, >= 0
//   s_i_j, u_i_j, b_i_j     binary: i left of / under / behind j (x / y / z)
//   d_i_k, k = 1..6         binary: item i uses orientation k
//   lhat_i, what_i, hhat_i  oriented sides of item i, >= 0
//
// Rows, in emission order
//   pair_i_j   exactly one separation binary per unordered pair
//   orient_i   d_i_1 + ... + d_i_6 = 1
//   sepx_i_j   x_i - x_j + lhat_i + M_L s_i_j <= M_L   (likewise sepy, sepz)
//   fitx_i     x_i + lhat_i - L <= 0                    (likewise fity, fitz)
//   defl_i     lhat_i - sum_k side(i, k) d_i_k = 0      (likewise defw, defh)
//
// With PairEncoding::Ordered every ordered pair (i, j), i != j, has its own
// s/u/b binaries and separation rows, and pair_i_j sums all six. With
// PairEncoding::Literal only i < j binaries and rows exist, which admits only
// packings where the lower-indexed item of every pair comes first on some
// axis.

enum class PairEncoding { Ordered, Literal };
enum class ObjectiveMode { Quadratic, FixedExtents };

std::string_view to_string(PairEncoding e);
std::string_view to_string(ObjectiveMode m);

enum class VarKind { Continuous, Binary };
enum class Sense { Le, Ge, Eq };

struct MilpVariable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;

  bool operator==(const MilpVariable&) const = default;
};

struct LinearTerm {
  std::int64_t coef = 0;
  std::string var;

  bool operator==(const LinearTerm&) const = default;
};

struct QuadraticTerm {
  std::int64_t coef = 0;
  std::string a;
  std::string b;

  bool operator==(const QuadraticTerm&) const = default;
};

struct MilpConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::Le;
  std::int64_t rhs = 0;

  bool operator==(const MilpConstraint&) const = default;
};

struct MilpModel {
  std::string instance_id;
  std::size_t items = 0;
  PairEncoding pairs = PairEncoding::Ordered;
  ObjectiveMode objective = ObjectiveMode::Quadratic;
  std::vector<LinearTerm> linear_objective;
  std::vector<QuadraticTerm> quadratic_objective;
  std::vector<MilpVariable> variables;
  std::vector<MilpConstraint> constraints;

  bool operator==(const MilpModel&) const = default;
};

struct ExportOptions {
  PairEncoding pairs = PairEncoding::Ordered;
  ObjectiveMode objective = ObjectiveMode::Quadratic;
  // Big-M sides for the separation rows; defaults to the working bin.
  std::optional<BinExtents> big_m;
  // Required for FixedExtents: L, W, H are fixed and also serve as big-M.
  std::optional<BinExtents> fixed_extents;
};

/// Throws EmptyInstance for n = 0, BadInput for a FixedExtents request
/// without extents.
MilpModel build_milp(const Instance& instance, const ExportOptions& options = {});

std::string render_lp(const MilpModel& model);

/// Reads text produced by render_lp back into a model. Throws BadInput.
MilpModel parse_lp(std::string_view text);

inline std::string export_milp(const Instance& instance,
                               const ExportOptions& options = {}) {
  return render_lp(build_milp(instance, options));
}

struct GroupCount {
  std::string group;
  std::size_t expected = 0;
  std::size_t found = 0;

  bool ok() const { return expected == found; }
};

struct CountReport {
  std::vector<GroupCount> groups;

  bool pass() const;
  std::size_t decision_variables() const;  // everything but the oriented sides
};

/// Compares per-group variable and row counts with the closed-form counts
/// for n items under `pairs`.
CountReport check_model_counts(const MilpModel& model, std::size_t n,
                               PairEncoding pairs);

using Assignment = std::map<std::string, std::int64_t>;

/// Model point from a packing: coordinates, one-hot orientations, oriented
/// sides, a separation witness per pair and L, W, H at the tight extents (or
/// the fixed ones). Empty when the encoding has no witness for some pair.
std::optional<Assignment> assignment_from_solution(const MilpModel& model,
                                                   const Instance& instance,
                                                   const PackingSolution& sol);

/// Names of rows and bounds that `point` violates (empty when feasible).
std::vector<std::string> violated_constraints(const MilpModel& model,
                                              const Assignment& point);

/// Objective at `point`; quadratic terms are already halved out, so this is
/// LW + LH + WH for the default model.
std::int64_t objective_value(const MilpModel& model, const Assignment& point);

}  // namespace surfpack
