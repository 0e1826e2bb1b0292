#include "surfpack/milp.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <sstream>

#include "surfpack/error.hpp"

namespace surfpack {

namespace {

std::string pair_name(char prefix, std::size_t i, std::size_t j) {
  return fmt::format("{}_{}_{}", prefix, i, j);
}

std::string idx_name(std::string_view prefix, std::size_t i) {
  return fmt::format("{}_{}", prefix, i);
}

constexpr std::string_view kSideNames[3] = {"lhat", "what", "hhat"};
constexpr std::string_view kCoordNames[3] = {"x", "y", "z"};
constexpr char kSepBinary[3] = {'s', 'u', 'b'};
constexpr std::string_view kSepRow[3] = {"sepx", "sepy", "sepz"};
constexpr std::string_view kFitRow[3] = {"fitx", "fity", "fitz"};
constexpr std::string_view kDefRow[3] = {"defl", "defw", "defh"};
constexpr std::string_view kExtent[3] = {"L", "W", "H"};

Length axis_of(const OrientedDims& d, int axis) {
  return axis == 0 ? d.l : axis == 1 ? d.w : d.h;
}

Length axis_of(const BinExtents& e, int axis) {
  return axis == 0 ? e.L : axis == 1 ? e.W : e.H;
}

std::string sanitize_id(std::string_view id) {
  std::string out(id);
  for (char& c : out)
    if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) c = '_';
  return out;
}

// Pairs whose separation binaries exist, in variable order.
std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(
    std::size_t n, PairEncoding pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (pairs == PairEncoding::Literal && j < i) continue;
      out.emplace_back(i, j);
    }
  return out;
}

}  // namespace

std::string_view to_string(PairEncoding e) {
  return e == PairEncoding::Ordered ? "ordered" : "literal";
}

std::string_view to_string(ObjectiveMode m) {
  return m == ObjectiveMode::Quadratic ? "quadratic" : "fixed-extents";
}

MilpModel build_milp(const Instance& instance, const ExportOptions& options) {
  validate_instance(instance);
  const std::size_t n = instance.size();

  BinExtents big_m;
  if (options.objective == ObjectiveMode::FixedExtents) {
    if (!options.fixed_extents)
      throw Error(ErrorCode::BadInput, "fixed-extents export needs L, W, H");
    big_m = *options.fixed_extents;
    if (big_m.L <= 0 || big_m.W <= 0 || big_m.H <= 0)
      throw Error(ErrorCode::BadInput, "fixed extents must be positive");
  } else if (options.big_m) {
    big_m = *options.big_m;
    if (big_m.L <= 0 || big_m.W <= 0 || big_m.H <= 0)
      throw Error(ErrorCode::BadInput, "big-M sides must be positive");
  } else {
    const Length side = working_bin_side(instance);
    big_m = {side, side, side};
  }

  MilpModel m;
  m.instance_id = instance.id;
  m.items = n;
  m.pairs = options.pairs;
  m.objective = options.objective;

  if (options.objective == ObjectiveMode::Quadratic) {
    m.quadratic_objective = {{1, "L", "W"}, {1, "L", "H"}, {1, "W", "H"}};
  }

  // Continuous variables first, then binaries; render_lp and parse_lp both
  // rely on this split to round-trip the variable order.
  for (int a = 0; a < 3; ++a) {
    MilpVariable v{std::string(kExtent[a]), VarKind::Continuous, 0,
                   axis_of(big_m, a)};
    if (options.objective == ObjectiveMode::FixedExtents) v.lower = *v.upper;
    m.variables.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (int a = 0; a < 3; ++a)
      m.variables.push_back({idx_name(kCoordNames[a], i), VarKind::Continuous, 0, {}});
  for (std::size_t i = 0; i < n; ++i)
    for (int a = 0; a < 3; ++a)
      m.variables.push_back({idx_name(kSideNames[a], i), VarKind::Continuous, 0, {}});

  const auto pairs = ordered_pairs(n, options.pairs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int a = 0; a < 3; ++a) {
        m.variables.push_back({pair_name(kSepBinary[a], i, j), VarKind::Binary, 0, 1});
        if (options.pairs == PairEncoding::Ordered)
          m.variables.push_back({pair_name(kSepBinary[a], j, i), VarKind::Binary, 0, 1});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 1; k <= 6; ++k)
      m.variables.push_back({fmt::format("d_{}_{}", i, k), VarKind::Binary, 0, 1});

  // pair_i_j: one separating relation per unordered pair.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MilpConstraint c{fmt::format("pair_{}_{}", i, j), {}, Sense::Eq, 1};
      for (int a = 0; a < 3; ++a) {
        c.terms.push_back({1, pair_name(kSepBinary[a], i, j)});
        if (options.pairs == PairEncoding::Ordered)
          c.terms.push_back({1, pair_name(kSepBinary[a], j, i)});
      }
      m.constraints.push_back(std::move(c));
    }

  for (std::size_t i = 0; i < n; ++i) {
    MilpConstraint c{idx_name("orient", i), {}, Sense::Eq, 1};
    for (int k = 1; k <= 6; ++k) c.terms.push_back({1, fmt::format("d_{}_{}", i, k)});
    m.constraints.push_back(std::move(c));
  }

  for (int a = 0; a < 3; ++a) {
    const Length M = axis_of(big_m, a);
    for (auto [i, j] : pairs) {
      m.constraints.push_back(
          {fmt::format("{}_{}_{}", kSepRow[a], i, j),
           {{1, idx_name(kCoordNames[a], i)},
            {-1, idx_name(kCoordNames[a], j)},
            {1, idx_name(kSideNames[a], i)},
            {M, pair_name(kSepBinary[a], i, j)}},
           Sense::Le,
           M});
    }
  }

  for (int a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < n; ++i)
      m.constraints.push_back({idx_name(kFitRow[a], i),
                               {{1, idx_name(kCoordNames[a], i)},
                                {1, idx_name(kSideNames[a], i)},
                                {-1, std::string(kExtent[a])}},
                               Sense::Le,
                               0});

  for (int a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      MilpConstraint c{idx_name(kDefRow[a], i), {{1, idx_name(kSideNames[a], i)}},
                       Sense::Eq, 0};
      for (int k = 0; k < 6; ++k) {
        const Length side = axis_of(orient(instance.items[i], kOrientations[k]), a);
        c.terms.push_back({-side, fmt::format("d_{}_{}", i, k + 1)});
      }
      m.constraints.push_back(std::move(c));
    }

  return m;
}

namespace {

void append_terms(std::string& out, const std::vector<LinearTerm>& terms) {
  bool first = true;
  for (const auto& t : terms) {
    const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (first) {
      if (t.coef < 0) out += "- ";
    } else {
      out += t.coef < 0 ? " - " : " + ";
    }
    if (mag != 1) out += fmt::format("{} ", mag);
    out += t.var;
    first = false;
  }
}

std::string_view sense_text(Sense s) {
  switch (s) {
    case Sense::Le: return "<=";
    case Sense::Ge: return ">=";
    case Sense::Eq: return "=";
  }
  return "=";
}

}  // namespace

std::string render_lp(const MilpModel& model) {
  std::string out;
  out += "\\ generated-by surfpack lp-format 1\n";
  out += fmt::format("\\ items {} pairs {} objective {} instance {}\n", model.items,
                     to_string(model.pairs), to_string(model.objective),
                     sanitize_id(model.instance_id));
  out += "Minimize\n obj:";
  if (model.quadratic_objective.empty() && model.linear_objective.empty()) {
    out += " 0 L";
  }
  if (!model.linear_objective.empty()) {
    out += ' ';
    append_terms(out, model.linear_objective);
  }
  if (!model.quadratic_objective.empty()) {
    out += model.linear_objective.empty() ? " [ " : " + [ ";
    bool first = true;
    for (const auto& q : model.quadratic_objective) {
      // LP quadratic blocks carry an implicit 1/2, so coefficients double.
      const std::int64_t c = 2 * q.coef;
      if (!first) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "- ";
      out += fmt::format("{} {} * {}", c < 0 ? -c : c, q.a, q.b);
      first = false;
    }
    out += " ] / 2";
  }
  out += "\nSubject To\n";
  for (const auto& c : model.constraints) {
    out += fmt::format(" {}: ", c.name);
    append_terms(out, c.terms);
    out += fmt::format(" {} {}\n", sense_text(c.sense), c.rhs);
  }
  out += "Bounds\n";
  for (const auto& v : model.variables) {
    if (v.kind != VarKind::Continuous) continue;
    if (v.upper && *v.upper == v.lower) {
      out += fmt::format(" {} = {}\n", v.name, v.lower);
    } else if (v.upper) {
      out += fmt::format(" {} <= {} <= {}\n", v.lower, v.name, *v.upper);
    } else {
      out += fmt::format(" {} >= {}\n", v.name, v.lower);
    }
  }
  out += "Binaries\n";
  for (const auto& v : model.variables)
    if (v.kind == VarKind::Binary) out += fmt::format(" {}\n", v.name);
  out += "End\n";
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::BadInput, fmt::format("lp line {}: {}", line, why));
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) return std::nullopt;
  return v;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Parses "[+|-] [coef] name ..." into terms.
std::vector<LinearTerm> parse_terms(const std::vector<std::string>& toks,
                                    std::size_t line) {
  std::vector<LinearTerm> out;
  std::int64_t sign = 1;
  std::optional<std::int64_t> coef;
  for (const auto& t : toks) {
    if (t == "+") {
      sign = 1;
    } else if (t == "-") {
      sign = -1;
    } else if (auto v = to_int(t)) {
      if (coef) parse_fail(line, "two coefficients in a row");
      coef = *v;
    } else {
      out.push_back({sign * coef.value_or(1), t});
      sign = 1;
      coef.reset();
    }
  }
  if (coef) parse_fail(line, "dangling coefficient");
  return out;
}

}  // namespace

MilpModel parse_lp(std::string_view text) {
  enum class Section { Header, Objective, Rows, Bounds, Binaries, Done };
  MilpModel m;
  Section sec = Section::Header;
  std::vector<MilpVariable> binaries;
  bool saw_meta = false;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;

    if (line.starts_with("\\")) {
      constexpr std::string_view meta = "\\ items ";
      if (line.starts_with(meta)) {
        const auto inst = line.find(" instance ");
        const auto toks = split_ws(line.substr(0, inst));
        if (toks.size() != 7 || toks[3] != "pairs" || toks[5] != "objective")
          parse_fail(lineno, "bad model comment");
        const auto n = to_int(toks[2]);
        if (!n || *n < 0) parse_fail(lineno, "bad item count");
        m.items = static_cast<std::size_t>(*n);
        if (toks[4] == "ordered") m.pairs = PairEncoding::Ordered;
        else if (toks[4] == "literal") m.pairs = PairEncoding::Literal;
        else parse_fail(lineno, "unknown pair encoding");
        if (toks[6] == "quadratic") m.objective = ObjectiveMode::Quadratic;
        else if (toks[6] == "fixed-extents") m.objective = ObjectiveMode::FixedExtents;
        else parse_fail(lineno, "unknown objective mode");
        if (inst != std::string_view::npos)
          m.instance_id = std::string(line.substr(inst + 10));
        saw_meta = true;
      }
      continue;
    }
    if (line == "Minimize") { sec = Section::Objective; continue; }
    if (line == "Subject To") { sec = Section::Rows; continue; }
    if (line == "Bounds") { sec = Section::Bounds; continue; }
    if (line == "Binaries") { sec = Section::Binaries; continue; }
    if (line == "End") { sec = Section::Done; continue; }
    if (split_ws(line).empty()) continue;

    switch (sec) {
      case Section::Header:
      case Section::Done:
        parse_fail(lineno, "text outside a section");
      case Section::Objective: {
        auto colon = line.find(':');
        if (colon == std::string_view::npos) parse_fail(lineno, "objective without label");
        std::string_view body = line.substr(colon + 1);
        const auto open = body.find('[');
        std::string_view lin = body.substr(0, open);
        auto lt = split_ws(lin);
        if (!lt.empty() && lt.back() == "+") lt.pop_back();
        for (auto& t : parse_terms(lt, lineno))
          if (t.coef != 0) m.linear_objective.push_back(std::move(t));
        if (open != std::string_view::npos) {
          const auto close = body.find(']', open);
          if (close == std::string_view::npos) parse_fail(lineno, "unclosed [");
          const auto tail = split_ws(body.substr(close + 1));
          if (tail != std::vector<std::string>{"/", "2"})
            parse_fail(lineno, "quadratic block must end with / 2");
          const auto toks = split_ws(body.substr(open + 1, close - open - 1));
          std::int64_t sign = 1;
          for (std::size_t k = 0; k < toks.size();) {
            if (toks[k] == "+" || toks[k] == "-") {
              sign = toks[k] == "-" ? -1 : 1;
              ++k;
              continue;
            }
            std::int64_t c = 1;
            if (auto v = to_int(toks[k])) { c = *v; ++k; }
            if (k + 2 >= toks.size() || toks[k + 1] != "*")
              parse_fail(lineno, "quadratic term must be a * b");
            if (c % 2 != 0) parse_fail(lineno, "odd quadratic coefficient");
            m.quadratic_objective.push_back({sign * c / 2, toks[k], toks[k + 2]});
            k += 3;
            sign = 1;
          }
        }
        break;
      }
      case Section::Rows: {
        auto colon = line.find(':');
        if (colon == std::string_view::npos) parse_fail(lineno, "row without name");
        MilpConstraint c;
        const auto name = split_ws(line.substr(0, colon));
        if (name.size() != 1) parse_fail(lineno, "bad row name");
        c.name = name[0];
        auto toks = split_ws(line.substr(colon + 1));
        if (toks.size() < 3) parse_fail(lineno, "short row");
        const auto rhs = to_int(toks.back());
        if (!rhs) parse_fail(lineno, "bad right-hand side");
        c.rhs = *rhs;
        toks.pop_back();
        const std::string sense = toks.back();
        toks.pop_back();
        if (sense == "<=") c.sense = Sense::Le;
        else if (sense == ">=") c.sense = Sense::Ge;
        else if (sense == "=") c.sense = Sense::Eq;
        else parse_fail(lineno, "bad sense");
        c.terms = parse_terms(toks, lineno);
        m.constraints.push_back(std::move(c));
        break;
      }
      case Section::Bounds: {
        const auto toks = split_ws(line);
        MilpVariable v;
        if (toks.size() == 5 && toks[1] == "<=" && toks[3] == "<=") {
          const auto lo = to_int(toks[0]);
          const auto hi = to_int(toks[4]);
          if (!lo || !hi) parse_fail(lineno, "bad bound");
          v = {toks[2], VarKind::Continuous, *lo, *hi};
        } else if (toks.size() == 3 && toks[1] == ">=") {
          const auto lo = to_int(toks[2]);
          if (!lo) parse_fail(lineno, "bad bound");
          v = {toks[0], VarKind::Continuous, *lo, {}};
        } else if (toks.size() == 3 && toks[1] == "=") {
          const auto val = to_int(toks[2]);
          if (!val) parse_fail(lineno, "bad bound");
          v = {toks[0], VarKind::Continuous, *val, *val};
        } else {
          parse_fail(lineno, "unsupported bound form");
        }
        m.variables.push_back(std::move(v));
        break;
      }
      case Section::Binaries:
        for (auto& t : split_ws(line))
          binaries.push_back({std::move(t), VarKind::Binary, 0, 1});
        break;
    }
  }
  if (sec != Section::Done) throw Error(ErrorCode::BadInput, "lp text has no End");
  if (!saw_meta) throw Error(ErrorCode::BadInput, "lp text has no model comment");
  for (auto& b : binaries) m.variables.push_back(std::move(b));
  return m;
}

bool CountReport::pass() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const GroupCount& g) { return g.ok(); });
}

std::size_t CountReport::decision_variables() const {
  std::size_t total = 0;
  for (const auto& g : groups)
    if (g.group.starts_with("var:") && g.group != "var:oriented-sides")
      total += g.found;
  return total;
}

namespace {

bool has_prefix_digits(std::string_view name, std::string_view prefix,
                       std::size_t parts) {
  if (!name.starts_with(prefix)) return false;
  std::string_view rest = name.substr(prefix.size());
  std::size_t seen = 0;
  while (!rest.empty()) {
    const auto us = rest.find('_');
    const auto part = rest.substr(0, us);
    if (part.empty() ||
        !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return false;
    ++seen;
    rest = us == std::string_view::npos ? std::string_view{} : rest.substr(us + 1);
  }
  return seen == parts;
}

std::string var_group(const MilpVariable& v) {
  const bool bin = v.kind == VarKind::Binary;
  if (!bin && (v.name == "L" || v.name == "W" || v.name == "H")) return "var:extents";
  if (!bin && (has_prefix_digits(v.name, "x_", 1) || has_prefix_digits(v.name, "y_", 1) ||
               has_prefix_digits(v.name, "z_", 1)))
    return "var:coordinates";
  if (bin && (has_prefix_digits(v.name, "s_", 2) || has_prefix_digits(v.name, "u_", 2) ||
              has_prefix_digits(v.name, "b_", 2)))
    return "var:separation";
  if (bin && has_prefix_digits(v.name, "d_", 2)) return "var:orientation";
  if (!bin && (has_prefix_digits(v.name, "lhat_", 1) || has_prefix_digits(v.name, "what_", 1) ||
               has_prefix_digits(v.name, "hhat_", 1)))
    return "var:oriented-sides";
  return "var:unrecognised";
}

std::string row_group(const MilpConstraint& c) {
  static constexpr std::pair<std::string_view, std::size_t> kRows[] = {
      {"pair_", 2}, {"orient_", 1}, {"sepx_", 2}, {"sepy_", 2}, {"sepz_", 2},
      {"fitx_", 1}, {"fity_", 1},   {"fitz_", 1}, {"defl_", 1}, {"defw_", 1},
      {"defh_", 1}};
  for (auto [prefix, parts] : kRows)
    if (has_prefix_digits(c.name, prefix, parts))
      return fmt::format("row:{}", prefix.substr(0, prefix.size() - 1));
  return "row:unrecognised";
}

}  // namespace

CountReport check_model_counts(const MilpModel& model, std::size_t n,
                               PairEncoding pairs) {
  const std::size_t unordered = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t sep = pairs == PairEncoding::Ordered ? 2 * unordered : unordered;

  CountReport r;
  r.groups = {
      {"var:extents", 3, 0},
      {"var:coordinates", 3 * n, 0},
      {"var:separation", 3 * sep, 0},
      {"var:orientation", 6 * n, 0},
      {"var:oriented-sides", 3 * n, 0},
      {"var:unrecognised", 0, 0},
      {"row:pair", unordered, 0},
      {"row:orient", n, 0},
      {"row:sepx", sep, 0},
      {"row:sepy", sep, 0},
      {"row:sepz", sep, 0},
      {"row:fitx", n, 0},
      {"row:fity", n, 0},
      {"row:fitz", n, 0},
      {"row:defl", n, 0},
      {"row:defw", n, 0},
      {"row:defh", n, 0},
      {"row:unrecognised", 0, 0},
  };
  auto bump = [&](const std::string& g) {
    for (auto& c : r.groups)
      if (c.group == g) ++c.found;
  };
  for (const auto& v : model.variables) bump(var_group(v));
  for (const auto& c : model.constraints) bump(row_group(c));
  return r;
}

std::optional<Assignment> assignment_from_solution(const MilpModel& model,
                                                   const Instance& instance,
                                                   const PackingSolution& sol) {
  const std::size_t n = instance.size();
  if (model.items != n || sol.placements.size() != n)
    throw Error(ErrorCode::InstanceMismatch,
                fmt::format("model has {} items, instance {}, solution {}", model.items,
                            n, sol.placements.size()));

  std::vector<const Placement*> by_item(n, nullptr);
  for (const auto& p : sol.placements) {
    if (p.item >= n || by_item[p.item])
      throw Error(ErrorCode::InstanceMismatch, "solution does not place each item once");
    by_item[p.item] = &p;
  }

  Assignment pt;
  const auto* fixed = &sol.extents;
  BinExtents pinned;
  if (model.objective == ObjectiveMode::FixedExtents) {
    for (const auto& v : model.variables) {
      if (v.name == "L") pinned.L = v.lower;
      if (v.name == "W") pinned.W = v.lower;
      if (v.name == "H") pinned.H = v.lower;
    }
    fixed = &pinned;
  }
  for (int a = 0; a < 3; ++a) pt[std::string(kExtent[a])] = axis_of(*fixed, a);

  std::vector<Box> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Placement& p = *by_item[i];
    const OrientedDims od = orient(instance.items[i], p.orientation);
    boxes[i] = box_at(p.origin, od);
    const Length origin[3] = {p.origin.x, p.origin.y, p.origin.z};
    for (int a = 0; a < 3; ++a) {
      pt[idx_name(kCoordNames[a], i)] = origin[a];
      pt[idx_name(kSideNames[a], i)] = axis_of(od, a);
    }
    for (int k = 0; k < 6; ++k)
      pt[fmt::format("d_{}_{}", i, k + 1)] = kOrientations[k] == p.orientation ? 1 : 0;
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RelativePosition ij = relative_position(boxes[i], boxes[j]);
      const RelativePosition ji = relative_position(boxes[j], boxes[i]);
      const bool ordered = model.pairs == PairEncoding::Ordered;
      // Candidate witnesses in a fixed preference order; the first that
      // holds is set to 1 and the rest to 0.
      const std::pair<std::string, bool> cands[6] = {
          {pair_name('s', i, j), ij.s}, {pair_name('s', j, i), ordered && ji.s},
          {pair_name('u', i, j), ij.u}, {pair_name('u', j, i), ordered && ji.u},
          {pair_name('b', i, j), ij.b}, {pair_name('b', j, i), ordered && ji.b},
      };
      bool chosen = false;
      for (const auto& [name, holds] : cands) {
        const bool take = holds && !chosen;
        chosen = chosen || take;
        pt[name] = take ? 1 : 0;
      }
      if (!chosen) return std::nullopt;
    }

  // Keep only names the model declares.
  Assignment out;
  for (const auto& v : model.variables) {
    auto it = pt.find(v.name);
    if (it != pt.end()) out.emplace(v.name, it->second);
  }
  return out;
}

std::vector<std::string> violated_constraints(const MilpModel& model,
                                              const Assignment& point) {
  std::vector<std::string> bad;
  for (const auto& v : model.variables) {
    auto it = point.find(v.name);
    if (it == point.end()) {
      bad.push_back(fmt::format("unassigned:{}", v.name));
      continue;
    }
    if (it->second < v.lower || (v.upper && it->second > *v.upper))
      bad.push_back(fmt::format("bound:{}", v.name));
  }
  for (const auto& c : model.constraints) {
    std::int64_t lhs = 0;
    bool missing = false;
    for (const auto& t : c.terms) {
      auto it = point.find(t.var);
      if (it == point.end()) {
        missing = true;
        break;
      }
      lhs += t.coef * it->second;
    }
    const bool ok = !missing && (c.sense == Sense::Le   ? lhs <= c.rhs
                                 : c.sense == Sense::Ge ? lhs >= c.rhs
                                                        : lhs == c.rhs);
    if (!ok) bad.push_back(c.name);
  }
  return bad;
}

std::int64_t objective_value(const MilpModel& model, const Assignment& point) {
  auto val = [&](const std::string& name) {
    auto it = point.find(name);
    if (it == point.end())
      throw Error(ErrorCode::BadInput, fmt::format("unassigned variable {}", name));
    return it->second;
  };
  std::int64_t z = 0;
  for (const auto& t : model.linear_objective) z += t.coef * val(t.var);
  for (const auto& q : model.quadratic_objective) z += q.coef * val(q.a) * val(q.b);
  return z;
}

}  // namespace surfpack
