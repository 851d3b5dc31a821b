#include "relpoly/ruling.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace relpoly {

namespace {

constexpr int kLineVars = 10;  // a1..a5 then b1..b5

int a_index(int i) { return i; }       // 1..5
int b_index(int i) { return 5 + i; }   // 6..10

// Rank of a rational matrix by Gaussian elimination.
int rank_of(std::vector<std::vector<Rat>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(m[r][c]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rat factor = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

const std::vector<Rat>& sample_grid() {
  static const std::vector<Rat> grid = {Rat(1),      Rat(-1), Rat(2),      Rat(-2),
                                        Rat(1, 2),   Rat(-1, 2), Rat(3),   Rat(1, 3),
                                        Rat(5),      Rat(-3)};
  return grid;
}

// Zero belongs to the grid: line families routinely force extra direction
// coordinates to zero. The all-zero direction is excluded separately.
const std::vector<Rat>& direction_grid() {
  static const std::vector<Rat> grid = {Rat(1), Rat(-1),    Rat(2),    Rat(-2),
                                        Rat(1, 2), Rat(-1, 2), Rat(5), Rat(0)};
  return grid;
}

std::string reference_case_label(const ZeroPattern& pattern) {
  struct Entry {
    ComponentSet zeroed;
    bool pinned;
    const char* label;
  };
  static const Entry table[] = {
      {component_set({1}), false, "Case 1 (a1 = 0)"},
      {component_set({1}), true, "Case 1 i) (a1 = 0, b1 = 1)"},
      {component_set({1, 2}), false, "Case 1 ii) / Case 2 (a1 = a2 = 0)"},
      {component_set({1, 3}), false, "Case 1 iii) (a1 = a3 = 0)"},
      {component_set({1, 4}), false, "Case 1 iv) (a1 = a4 = 0)"},
      {component_set({1, 5}), false, "Case 1 v) (a1 = a5 = 0)"},
      {component_set({1, 2}), true, "Case 2 i) (a1 = a2 = 0, b1 = 1)"},
      {component_set({1, 2, 3}), false, "Case 2 ii) / Case 3 (a1 = a2 = a3 = 0)"},
      {component_set({1, 2, 4}), false, "Case 2 iii) (a1 = a2 = a4 = 0)"},
      {component_set({1, 2, 3, 4}), false, "Case 3 i) / Case 4 (a1 = a2 = a3 = a4 = 0)"},
      {component_set({1, 2, 3, 5}), false, "Case 3 ii) (a1 = a2 = a3 = a5 = 0)"},
  };
  const bool pinned = !pattern.pins.empty();
  for (const auto& e : table)
    if (e.zeroed == pattern.zeroed && e.pinned == pinned) return e.label;
  return "";
}

// Substitution map of a pattern over the 10 unknowns.
std::map<int, Rat> pattern_substitution(const ZeroPattern& pattern) {
  std::map<int, Rat> sub;
  for (int i : component_list(pattern.zeroed)) sub.emplace(a_index(i), Rat(0));
  for (const auto& [j, v] : pattern.pins) sub.emplace(b_index(j), v);
  return sub;
}

}  // namespace

bool AffineLine6::is_degenerate() const {
  for (const Rat& v : a)
    if (sgn(v) != 0) return false;
  return true;
}

std::string ZeroPattern::key() const {
  std::string out;
  for (int i : component_list(zeroed)) {
    if (!out.empty()) out += ",";
    out += "a" + std::to_string(i);
  }
  for (const auto& [j, v] : pins) out += "|b" + std::to_string(j) + "=" + rat_to_string(v);
  return out;
}

std::vector<std::string> line_unknown_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 5; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) names.push_back("b" + std::to_string(i));
  return names;
}

std::array<SqFreePoly, 6> coefficient_system(const SqFreePoly& p) {
  if (p.num_vars() != 5)
    throw std::invalid_argument("coefficient system requires a 5-variable polynomial");

  std::array<SqFreePoly, 6> cs;
  for (auto& c : cs) c = SqFreePoly(kLineVars);

  for (const auto& [mono, coeff] : p.terms()) {
    const auto vars = component_list(mono);
    const int size = static_cast<int>(vars.size());
    // Each subset T of the monomial contributes coeff * prod_{i in T} a_i *
    // prod_{i notin T} b_i to c_{|T|}.
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << size); ++sub) {
      VarMask mask = 0;
      for (int j = 0; j < size; ++j) {
        const int idx = (sub >> j & 1) ? a_index(vars[j]) : b_index(vars[j]);
        mask |= VarMask{1} << (idx - 1);
      }
      cs[std::popcount(sub)].add_term(mask, coeff);
    }
  }
  return cs;
}

Rat complete_point(const SqFreePoly& p, const std::array<Rat, 5>& base) {
  return p.evaluate(std::vector<Rat>(base.begin(), base.end()));
}

bool verify_line_sampled(const SqFreePoly& p, const AffineLine6& line) {
  for (int t = 0; t <= 5; ++t) {
    std::vector<Rat> point(5);
    for (int i = 0; i < 5; ++i) point[i] = line.a[i] * t + line.b[i];
    if (p.evaluate(point) != line.a[5] * t + line.b[5]) return false;
  }
  return true;
}

bool verify_line_coeffs(const SqFreePoly& p, const AffineLine6& line) {
  const auto cs = coefficient_system(p);
  std::vector<Rat> point;
  point.reserve(kLineVars);
  for (int i = 0; i < 5; ++i) point.push_back(line.a[i]);
  for (int i = 0; i < 5; ++i) point.push_back(line.b[i]);
  if (cs[0].evaluate(point) != line.b[5]) return false;
  if (cs[1].evaluate(point) != line.a[5]) return false;
  for (int k = 2; k <= 5; ++k)
    if (sgn(cs[k].evaluate(point)) != 0) return false;
  return true;
}

bool verify_line(const SqFreePoly& p, const AffineLine6& line) {
  return verify_line_sampled(p, line);
}

std::vector<Branch> enumerate_branches(const SqFreePoly& p, std::uint64_t seed) {
  const auto cs = coefficient_system(p);
  std::mt19937_64 rng(seed);
  const auto& grid = sample_grid();

  auto make_branch = [&](ZeroPattern pattern) {
    Branch branch;
    branch.pattern = std::move(pattern);
    const auto sub = pattern_substitution(branch.pattern);
    branch.b6_formula = cs[0].substitute(sub);
    branch.a6_formula = cs[1].substitute(sub);
    for (int k = 2; k <= 5; ++k) {
      SqFreePoly r = cs[k].substitute(sub);
      if (!r.is_zero()) {
        branch.residual_powers.push_back(k);
        branch.residuals.push_back(std::move(r));
      }
    }
    branch.case_label = reference_case_label(branch.pattern);

    // dof = 12 - rank of the active constraints at a generic point of the
    // pattern plane. The zero/pin rows and the two defining rows (b6 - c0,
    // a6 - c1) are unit-pivoted and always independent; the residual rows
    // are evaluated at seeded random points, taking the best of 20 draws so
    // that non-generic sample points cannot depress the rank.
    int best_residual_rank = 0;
    const int fixed_rank = static_cast<int>(component_list(branch.pattern.zeroed).size() +
                                            branch.pattern.pins.size()) +
                           2;
    if (branch.residuals.empty()) {
      branch.dof = 12 - fixed_rank;
      return branch;
    }
    for (int draw = 0; draw < 20; ++draw) {
      std::vector<Rat> point(kLineVars);
      for (int v = 0; v < kLineVars; ++v)
        point[v] = grid[rng() % grid.size()];
      for (const auto& [v, value] : pattern_substitution(branch.pattern)) point[v - 1] = value;

      std::vector<std::vector<Rat>> jac;
      for (const auto& r : branch.residuals) {
        std::vector<Rat> row(kLineVars);
        for (int v = 1; v <= kLineVars; ++v) row[v - 1] = r.partial(v).evaluate(point);
        jac.push_back(std::move(row));
      }
      best_residual_rank = std::max(best_residual_rank, rank_of(std::move(jac)));
    }
    branch.dof = 12 - (fixed_rank + best_residual_rank);
    return branch;
  };

  std::vector<Branch> out;
  std::vector<int> all{1, 2, 3, 4, 5};
  for (int size = 1; size <= 4; ++size) {
    std::vector<int> pick(size);
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == size) {
        ZeroPattern pattern;
        pattern.zeroed = component_set(pick);
        out.push_back(make_branch(pattern));
        if (pattern.zeroed & component_set({1})) {
          ZeroPattern pinned = pattern;
          pinned.pins.emplace(1, Rat(1));
          out.push_back(make_branch(pinned));
        }
        return;
      }
      for (int i = start; i < 5; ++i) {
        pick[depth] = all[i];
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

std::vector<AffineLine6> solve_directions(const SqFreePoly& p, const std::array<Rat, 5>& base,
                                          const ZeroPattern& pattern, int max_lines) {
  if (pattern.zeroed == 0)
    throw std::domain_error(
        "empty zero pattern: the t^5 coefficient a1*a2*a3*a4*a5 forces at least one zero "
        "direction");
  for (const auto& [j, v] : pattern.pins) {
    if (j < 1 || j > 5) throw std::out_of_range("pin index out of range");
    if (base[j - 1] != v)
      throw std::domain_error("base point violates pin b" + std::to_string(j) + " = " +
                              rat_to_string(v));
  }

  const auto cs = coefficient_system(p);
  std::vector<int> free_dirs;
  for (int i = 1; i <= 5; ++i)
    if (!(pattern.zeroed & (ComponentSet{1} << (i - 1)))) free_dirs.push_back(i);

  std::vector<AffineLine6> out;
  if (free_dirs.empty()) return out;  // only the zero direction satisfies the pattern

  const Rat b6 = complete_point(p, base);
  const auto& grid = direction_grid();
  std::vector<std::size_t> choice(free_dirs.size(), 0);

  while (static_cast<int>(out.size()) < max_lines) {
    std::vector<Rat> point(kLineVars, Rat(0));
    for (int i = 0; i < 5; ++i) point[b_index(i + 1) - 1] = base[i];
    bool degenerate = true;
    for (std::size_t j = 0; j < free_dirs.size(); ++j) {
      point[a_index(free_dirs[j]) - 1] = grid[choice[j]];
      if (sgn(grid[choice[j]]) != 0) degenerate = false;
    }

    bool satisfied = !degenerate;
    for (int k = 2; k <= 5 && satisfied; ++k)
      if (sgn(cs[k].evaluate(point)) != 0) satisfied = false;

    if (satisfied) {
      AffineLine6 line;
      for (int i = 0; i < 5; ++i) {
        line.a[i] = point[a_index(i + 1) - 1];
        line.b[i] = base[i];
      }
      line.a[5] = cs[1].evaluate(point);
      line.b[5] = b6;
      if (!verify_line(p, line))
        throw std::logic_error("internal: sampled direction failed line verification");
      out.push_back(std::move(line));
    }

    // advance the mixed-radix counter over the grid
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == grid.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

std::optional<Rat> TWindow::midpoint() const {
  if (!bounded()) return std::nullopt;
  return Rat((*lo + *hi) / 2);
}

std::string TWindow::str() const {
  if (empty) return "empty";
  if (whole_line()) return "(-oo, oo)";
  std::string l = lo ? rat_to_string(*lo) : "-oo";
  std::string h = hi ? rat_to_string(*hi) : "oo";
  return "[" + l + ", " + h + "]";
}

TWindow probability_window(const AffineLine6& line) {
  TWindow window;
  for (int i = 0; i < 6; ++i) {
    const Rat& a = line.a[i];
    const Rat& b = line.b[i];
    if (sgn(a) == 0) {
      if (sgn(b) < 0 || b > 1) return TWindow{true, std::nullopt, std::nullopt};
      continue;
    }
    Rat lo = -b / a;
    Rat hi = (1 - b) / a;
    if (sgn(a) < 0) std::swap(lo, hi);
    if (!window.lo || lo > *window.lo) window.lo = lo;
    if (!window.hi || hi < *window.hi) window.hi = hi;
    if (window.lo && window.hi && *window.lo > *window.hi)
      return TWindow{true, std::nullopt, std::nullopt};
  }
  return window;
}

std::vector<RankedBranch> plausibility_report(const std::vector<Branch>& branches) {
  std::vector<RankedBranch> ranked;
  ranked.reserve(branches.size());
  for (const auto& b : branches) ranked.push_back({&b, false});
  std::sort(ranked.begin(), ranked.end(), [](const RankedBranch& x, const RankedBranch& y) {
    if (x.branch->dof != y.branch->dof) return x.branch->dof > y.branch->dof;
    return x.branch->pattern.key() < y.branch->pattern.key();
  });
  if (!ranked.empty()) {
    const int best = ranked.front().branch->dof;
    for (auto& r : ranked) r.maximal = r.branch->dof == best;
  }
  return ranked;
}

}  // namespace relpoly
