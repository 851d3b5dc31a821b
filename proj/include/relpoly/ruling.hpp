#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relpoly/netmodel.hpp"
#include "relpoly/rational.hpp"
#include "relpoly/sqfree_poly.hpp"

namespace relpoly {

/// A line t -> (a_1 t + b_1, ..., a_6 t + b_6) in R^6; coordinates 1..5 are
/// the component reliabilities, coordinate 6 the system reliability.
struct AffineLine6 {
  std::array<Rat, 6> a;  // direction
  std::array<Rat, 6> b;  // base point

  bool is_degenerate() const;  // true iff the direction is the zero vector
};

/// Which direction coordinates are pinned to zero, plus optional base-point
/// pins (the named sub-cases pin b_1 = 1).
struct ZeroPattern {
  ComponentSet zeroed = 0;    // subset of {1..5}
  std::map<int, Rat> pins;    // b-coordinate index -> pinned value

  std::string key() const;    // canonical text key, e.g. "a1,a3|b1=1"
};

/// One branch of the line-identification system: a zero pattern, the
/// t-power coefficient equations that survive the substitution, and the
/// degrees of freedom of the resulting solution family.
struct Branch {
  ZeroPattern pattern;
  std::vector<int> residual_powers;     // which t^k coefficients survived (2..5)
  std::vector<SqFreePoly> residuals;    // over the 10 unknowns a1..a5,b1..b5
  SqFreePoly b6_formula;                // c0 after the substitution
  SqFreePoly a6_formula;                // c1 after the substitution
  int dof = 0;
  std::string case_label;               // name in the case taxonomy, if any
};

/// Variable names for the 10 unknowns of the coefficient system.
std::vector<std::string> line_unknown_names();

/// The six t-power coefficient polynomials c_0..c_5 of p(a t + b) as
/// polynomials in the 10 unknowns (variables 1..5 are a_1..a_5, variables
/// 6..10 are b_1..b_5). A line lies in the graph of p iff b_6 = c_0,
/// a_6 = c_1 and c_2 = ... = c_5 = 0.
std::array<SqFreePoly, 6> coefficient_system(const SqFreePoly& p);

/// The reliability coordinate of the point (b_1..b_5) on the hypersurface.
Rat complete_point(const SqFreePoly& p, const std::array<Rat, 5>& base);

/// Exact check that the line lies in the graph of p, by evaluation at six
/// distinct parameter values (degree <= 5 makes that sufficient).
bool verify_line_sampled(const SqFreePoly& p, const AffineLine6& line);

/// The same check through the coefficient system.
bool verify_line_coeffs(const SqFreePoly& p, const AffineLine6& line);

bool verify_line(const SqFreePoly& p, const AffineLine6& line);

/// All 30 nonempty zero subsets of size 1..4 plus the pinned
/// variants (b_1 = 1 whenever a_1 is zeroed), each with its surviving
/// residual equations and exact Jacobian-rank degrees of freedom.
std::vector<Branch> enumerate_branches(const SqFreePoly& p,
                                       std::uint64_t seed = 0x5eed5eedULL);

/// Sample lines through the given base point whose directions satisfy the
/// pattern: free direction coordinates sweep a fixed rational grid and every
/// candidate is kept only if all residuals vanish exactly. Every returned
/// line passes verify_line. Throws when the base point violates the
/// pattern's pins or the pattern zeroes nothing.
std::vector<AffineLine6> solve_directions(const SqFreePoly& p, const std::array<Rat, 5>& base,
                                          const ZeroPattern& pattern, int max_lines = 8);

/// Closed t-interval on which every coordinate of the line stays within
/// [0,1]; may be empty, bounded, or the whole line (all-constant lines).
struct TWindow {
  bool empty = false;
  std::optional<Rat> lo;  // nullopt: unbounded below
  std::optional<Rat> hi;  // nullopt: unbounded above

  bool whole_line() const { return !empty && !lo && !hi; }
  bool bounded() const { return !empty && lo && hi; }
  std::optional<Rat> midpoint() const;
  std::string str() const;
};
TWindow probability_window(const AffineLine6& line);

/// Branches ranked by descending dof (ties in canonical key order); maxima
/// flagged.
struct RankedBranch {
  const Branch* branch = nullptr;
  bool maximal = false;
};
std::vector<RankedBranch> plausibility_report(const std::vector<Branch>& branches);

}  // namespace relpoly
