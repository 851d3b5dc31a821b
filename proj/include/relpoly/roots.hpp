#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relpoly/dense_poly.hpp"
#include "relpoly/quadext.hpp"
#include "relpoly/rational.hpp"
#include "relpoly/upoly.hpp"

namespace relpoly {

/// One isolated real root: either known exactly as a rational, or bracketed
/// by an open isolating interval (lo, hi) on which the square-free part
/// changes sign and which contains no other root.
struct IsolatedRoot {
  std::optional<Rat> exact;
  Rat lo = 0;
  Rat hi = 0;
  int multiplicity = 1;
  int sign = 0;  // -1, 0, +1: sign of the root itself

  Rat approx() const { return exact ? *exact : Rat((lo + hi) / 2); }
  std::string str() const;
};

/// Multiset of isolated real roots with sign tallies (with multiplicity).
struct RootProfile {
  std::vector<IsolatedRoot> roots;  // ascending
  int negative = 0;
  int zero = 0;
  int positive = 0;
  int total() const { return negative + zero + positive; }
};

/// Optional restriction of the isolation domain to an interval.
struct RootDomain {
  std::optional<Rat> lo;  // open bound
  std::optional<Rat> hi;  // open bound
  static RootDomain all() { return {}; }
  static RootDomain open(Rat a, Rat b) { return {std::move(a), std::move(b)}; }
};

/// Exact real-root isolation with multiplicity: square-free decomposition,
/// capped rational-root extraction, then Sturm bisection to disjoint
/// isolating intervals refined below `min_width`. Throws on the zero
/// polynomial.
RootProfile isolate_real_roots(const UPoly<Rat>& u, const RootDomain& domain = RootDomain::all(),
                               const Rat& min_width = Rat(1, 1 << 30));

/// Converts a univariate DensePoly to the dense representation.
UPoly<Rat> to_upoly(const DensePoly& p);
DensePoly to_dense(const UPoly<Rat>& u, const std::string& var = "x");

/// Evaluates u at a chosen root of an irreducible-over-Q quadratic (positive
/// discriminant required), returning the exact value in Q(sqrt(d)) where d is
/// the square-free part of the integer discriminant.
QuadExt eval_at_quadratic_root(const UPoly<Rat>& u, const UPoly<Rat>& quadratic,
                               bool larger_root);

/// Lifts a rational-coefficient polynomial into a quadratic extension.
UPoly<QuadExt> lift_to_quadext(const UPoly<Rat>& u);

}  // namespace relpoly
