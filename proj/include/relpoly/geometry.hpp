#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relpoly/dense_poly.hpp"
#include "relpoly/netmodel.hpp"
#include "relpoly/quadext.hpp"
#include "relpoly/rational.hpp"
#include "relpoly/roots.hpp"
#include "relpoly/sqfree_poly.hpp"
#include "relpoly/upoly.hpp"

namespace relpoly {

/// Component i is the partial derivative with respect to variable i.
std::vector<SqFreePoly> gradient(const SqFreePoly& p);

/// True iff every gradient component vanishes identically when the
/// parametrized point (rationals and/or one free symbol per coordinate) is
/// substituted. The check is symbolic: each component becomes a univariate
/// polynomial in the symbol and must be the zero polynomial.
bool verify_critical_family(const SqFreePoly& p, const std::vector<FamilyCoord>& family);

enum class HessianClass { kPositiveDefinite, kNegativeDefinite, kIndefinite, kSemidefinite };
std::string hessian_class_str(HessianClass c);

/// Exact inertia classification of the Hessian at a point. Multilinear
/// polynomials have an identically zero Hessian diagonal, so a definite
/// answer is impossible for them; the classification is computed from the
/// characteristic polynomial by exact signed root counting.
HessianClass hessian_class(const SqFreePoly& p, const std::vector<Rat>& point);

/// Exact extrema of a multilinear polynomial over the unit cube. Multilinear
/// functions attain extrema at vertices, so exhaustive vertex evaluation is
/// exact. Ties resolve to the lexicographically first vertex (as a bitmask).
struct CubeExtrema {
  Rat min_value;
  ComponentSet argmin = 0;
  Rat max_value;
  ComponentSet argmax = 0;
};
CubeExtrema cube_extrema(const SqFreePoly& p);

/// Identification of component variables with k target labels. The canonical
/// convention: the assignment is surjective onto 1..k and the preimage block
/// sizes are nondecreasing in label order. (Labels are ordered; two blocks of
/// equal size still produce distinct patterns when swapped.)
struct DiagonalPattern {
  std::vector<int> assignment;  // assignment[i-1] = label of component i
  int k = 0;

  std::string str() const;
};

/// All diagonal patterns for n components onto k labels, in lexicographic
/// order of the assignment vector. Counts for n = 5: 1, 15, 50, 60, 120.
std::vector<DiagonalPattern> diagonal_patterns(int n, int k);

DensePoly apply_pattern(const SqFreePoly& p, const DiagonalPattern& pattern);

/// The all-components-equal diagonal restriction as a univariate polynomial.
UPoly<Rat> full_diagonal(const SqFreePoly& p);

/// True iff fixing the given variables makes p - c identically zero in the
/// remaining variables.
bool level_contains_variety(const SqFreePoly& p, const Rat& c,
                            const std::map<int, Rat>& constraints);

/// Exact real-root profile of u - a.
RootProfile real_roots_at_level(const UPoly<Rat>& u, const Rat& a);

/// Where a sits relative to the two extremum levels of the canonical quintic
/// restriction (the local minimum value on (1, oo) and the local maximum
/// value at x = 1), plus the positive-root count of u - a with multiplicity.
struct LevelClassification {
  enum class Region {
    kBelowMin,
    kAtMin,
    kMinToZero,
    kAtZero,
    kZeroToMax,
    kAtMax,
    kAboveMax,
    kUnclassified,
  };
  Region region = Region::kUnclassified;
  int positive_roots = 0;      // with multiplicity
  int zero_roots = 0;          // with multiplicity
  bool has_double_positive = false;
  std::string region_str() const;
};

/// Classifies the level a for a univariate restriction. The region is
/// resolved exactly (the local-minimum level is algebraic of degree two, so
/// the comparison runs in a quadratic extension); the root counts come from
/// Sturm counting on u - a and always match real_roots_at_level.
LevelClassification level_profile(const UPoly<Rat>& u, const Rat& a);

/// Extremum levels of the canonical quintic shape: the local minimum value on
/// (1, oo) as an exact quadratic-extension number and the local maximum value
/// u(1). Returns nullopt when u' does not leave a single quadratic factor
/// after extracting its rational roots.
struct ExtremumLevels {
  QuadExt min_level;
  Rat max_level;
  UPoly<Rat> quadratic;  // the factor of u' whose larger root attains min_level
};
std::optional<ExtremumLevels> extremum_levels(const UPoly<Rat>& u);

/// m equally spaced exact samples of u on [0,1].
struct CurvePoint {
  Rat x;
  Rat y;
};
std::vector<CurvePoint> curve_samples(const UPoly<Rat>& u, int m);

/// CSV rendering with header "x,y"; exact fractions by default, fixed-point
/// decimals when digits >= 0.
std::string curve_csv(const std::vector<CurvePoint>& points, int decimal_digits = -1);

/// True iff u' has no root in the open interval (0,1) and u is nondecreasing
/// there (checked by exact root isolation plus a sign probe).
bool nondecreasing_on_unit_interval(const UPoly<Rat>& u);

/// True iff u'' changes sign somewhere in (0,1) (an odd-multiplicity root).
bool has_inflection_in_unit_interval(const UPoly<Rat>& u);

}  // namespace relpoly
