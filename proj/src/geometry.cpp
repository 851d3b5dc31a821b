#include "relpoly/geometry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace relpoly {

namespace {

constexpr int kCubeGuard = 20;

// Characteristic polynomial of an exact symmetric matrix via the
// Faddeev-LeVerrier recurrence; coefficients ascend by degree.
UPoly<Rat> char_poly(const std::vector<std::vector<Rat>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Rat> coeffs(n + 1, Rat(0));
  coeffs[n] = 1;

  std::vector<std::vector<Rat>> acc(n, std::vector<Rat>(n, Rat(0)));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} * I
    std::vector<std::vector<Rat>> next(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat sum = 0;
        for (int l = 0; l < n; ++l) sum += m[i][l] * acc[l][j];
        next[i][j] = sum;
      }
    for (int i = 0; i < n; ++i) next[i][i] += coeffs[n - k + 1];
    // c_{n-k} = -trace(A * M_k) / k
    Rat trace = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) trace += m[i][l] * next[l][i];
    coeffs[n - k] = -trace / k;
    acc = std::move(next);
  }
  return UPoly<Rat>(std::move(coeffs));
}

}  // namespace

std::vector<SqFreePoly> gradient(const SqFreePoly& p) {
  std::vector<SqFreePoly> out;
  out.reserve(p.num_vars());
  for (int i = 1; i <= p.num_vars(); ++i) out.push_back(p.partial(i));
  return out;
}

bool verify_critical_family(const SqFreePoly& p, const std::vector<FamilyCoord>& family) {
  if (static_cast<int>(family.size()) != p.num_vars())
    throw std::invalid_argument("family arity does not match variable count");
  for (int i = 1; i <= p.num_vars(); ++i) {
    if (!substitute_family(p.partial(i), family).is_zero()) return false;
  }
  return true;
}

std::string hessian_class_str(HessianClass c) {
  switch (c) {
    case HessianClass::kPositiveDefinite:
      return "positive-definite";
    case HessianClass::kNegativeDefinite:
      return "negative-definite";
    case HessianClass::kIndefinite:
      return "indefinite";
    case HessianClass::kSemidefinite:
      return "semidefinite/degenerate";
  }
  return "?";
}

HessianClass hessian_class(const SqFreePoly& p, const std::vector<Rat>& point) {
  const int n = p.num_vars();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("point length does not match variable count");

  std::vector<std::vector<Rat>> h(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 1; i <= n; ++i) {
    const SqFreePoly di = p.partial(i);
    for (int j = i + 1; j <= n; ++j) {
      Rat v = di.partial(j).evaluate(point);
      h[i - 1][j - 1] = v;
      h[j - 1][i - 1] = v;
    }
    // Multilinear: the diagonal second derivative is identically zero.
  }

  const auto counts = count_signed_roots(char_poly(h));
  if (counts.positive == n) return HessianClass::kPositiveDefinite;
  if (counts.negative == n) return HessianClass::kNegativeDefinite;
  if (counts.positive > 0 && counts.negative > 0) return HessianClass::kIndefinite;
  return HessianClass::kSemidefinite;
}

CubeExtrema cube_extrema(const SqFreePoly& p) {
  const int n = p.num_vars();
  if (n > kCubeGuard) throw std::invalid_argument("cube sweep guarded to 20 variables");

  CubeExtrema ext;
  std::vector<Rat> vertex(n, Rat(0));
  ext.min_value = ext.max_value = p.evaluate(vertex);
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t s = 1; s < size; ++s) {
    for (int i = 0; i < n; ++i) vertex[i] = (s >> i & 1) ? 1 : 0;
    const Rat v = p.evaluate(vertex);
    if (v < ext.min_value) {
      ext.min_value = v;
      ext.argmin = static_cast<ComponentSet>(s);
    }
    if (v > ext.max_value) {
      ext.max_value = v;
      ext.argmax = static_cast<ComponentSet>(s);
    }
  }
  return ext;
}

std::string DiagonalPattern::str() const {
  std::string out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(assignment[i]);
  }
  return out;
}

std::vector<DiagonalPattern> diagonal_patterns(int n, int k) {
  if (k < 1 || k > n) throw std::out_of_range("label count must be between 1 and n");
  std::vector<DiagonalPattern> out;
  std::vector<int> assignment(n, 1);

  // Enumerate all k^n assignments in lexicographic order; keep those that are
  // surjective with nondecreasing block sizes. n is desk-scale here.
  while (true) {
    std::vector<int> block(k, 0);
    for (int label : assignment) ++block[label - 1];
    bool ok = true;
    for (int b = 0; b < k && ok; ++b) {
      if (block[b] == 0) ok = false;
      if (b + 1 < k && block[b] > block[b + 1]) ok = false;
    }
    if (ok) out.push_back({assignment, k});

    int pos = n - 1;
    while (pos >= 0 && assignment[pos] == k) assignment[pos--] = 1;
    if (pos < 0) break;
    ++assignment[pos];
  }
  return out;
}

DensePoly apply_pattern(const SqFreePoly& p, const DiagonalPattern& pattern) {
  return substitute_pattern(p, pattern.assignment);
}

UPoly<Rat> full_diagonal(const SqFreePoly& p) {
  std::vector<int> all_one(p.num_vars(), 1);
  return to_upoly(substitute_pattern(p, all_one));
}

bool level_contains_variety(const SqFreePoly& p, const Rat& c,
                            const std::map<int, Rat>& constraints) {
  const SqFreePoly shifted = p - SqFreePoly::constant(p.num_vars(), c);
  return shifted.substitute(constraints).is_zero();
}

RootProfile real_roots_at_level(const UPoly<Rat>& u, const Rat& a) {
  return isolate_real_roots(u - UPoly<Rat>::constant(a));
}

std::string LevelClassification::region_str() const {
  switch (region) {
    case Region::kBelowMin:
      return "below local minimum level";
    case Region::kAtMin:
      return "at local minimum level";
    case Region::kMinToZero:
      return "between local minimum level and 0";
    case Region::kAtZero:
      return "at 0";
    case Region::kZeroToMax:
      return "between 0 and local maximum level";
    case Region::kAtMax:
      return "at local maximum level";
    case Region::kAboveMax:
      return "above local maximum level";
    case Region::kUnclassified:
      return "unclassified";
  }
  return "?";
}

std::optional<ExtremumLevels> extremum_levels(const UPoly<Rat>& u) {
  if (u.degree() < 2) return std::nullopt;
  UPoly<Rat> d = squarefree_part(u.derivative());

  // Peel the rational critical points; a single quadratic factor must remain.
  std::vector<Rat> rational_crit;
  const auto prof = isolate_real_roots(d);
  for (const auto& r : prof.roots)
    if (r.exact) rational_crit.push_back(*r.exact);
  for (const Rat& r : rational_crit) d = d.divmod(UPoly<Rat>({-r, Rat(1)})).first;
  if (d.degree() != 2) return std::nullopt;

  const Rat disc = d[1] * d[1] - 4 * d[2] * d[0];
  if (sgn(disc) <= 0) return std::nullopt;

  ExtremumLevels levels;
  levels.quadratic = d;
  levels.min_level = eval_at_quadratic_root(u, d, /*larger_root=*/true);
  levels.max_level = u.eval(Rat(1));
  return levels;
}

LevelClassification level_profile(const UPoly<Rat>& u, const Rat& a) {
  LevelClassification out;
  const UPoly<Rat> shifted = u - UPoly<Rat>::constant(a);
  const auto counts = count_signed_roots(shifted);
  out.positive_roots = counts.positive;
  out.zero_roots = counts.zero;

  // A repeated positive root shows up as a nontrivial square-free tower level.
  const auto factors = squarefree_decomposition(shifted);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].degree() > 0 && count_signed_roots(factors[i]).positive > 0)
      out.has_double_positive = true;
  }

  const auto levels = extremum_levels(u);
  if (!levels) return out;

  using Region = LevelClassification::Region;
  const QuadExt rel_min = QuadExt(a) - levels->min_level;
  const int vs_min = rel_min.sign_value();
  const int vs_zero = sgn(a);
  const int vs_max = cmp(a, levels->max_level);
  if (vs_min < 0)
    out.region = Region::kBelowMin;
  else if (vs_min == 0)
    out.region = Region::kAtMin;
  else if (vs_zero < 0)
    out.region = Region::kMinToZero;
  else if (vs_zero == 0)
    out.region = Region::kAtZero;
  else if (vs_max < 0)
    out.region = Region::kZeroToMax;
  else if (vs_max == 0)
    out.region = Region::kAtMax;
  else
    out.region = Region::kAboveMax;
  return out;
}

std::vector<CurvePoint> curve_samples(const UPoly<Rat>& u, int m) {
  if (m < 2) throw std::invalid_argument("at least two samples required");
  std::vector<CurvePoint> out;
  out.reserve(m);
  for (int j = 0; j < m; ++j) {
    Rat x(j, m - 1);
    x.canonicalize();
    out.push_back({x, u.eval(x)});
  }
  return out;
}

std::string curve_csv(const std::vector<CurvePoint>& points, int decimal_digits) {
  std::string out = "x,y\n";
  for (const auto& pt : points) {
    if (decimal_digits >= 0)
      out += rat_to_decimal(pt.x, decimal_digits) + "," + rat_to_decimal(pt.y, decimal_digits);
    else
      out += rat_to_string(pt.x) + "," + rat_to_string(pt.y);
    out += "\n";
  }
  return out;
}

bool nondecreasing_on_unit_interval(const UPoly<Rat>& u) {
  if (u.degree() <= 0) return true;
  const UPoly<Rat> d = u.derivative();
  if (d.is_zero()) return true;
  const auto interior = isolate_real_roots(d, RootDomain::open(0, 1));
  // A sign change inside would break monotonicity; an even-multiplicity
  // touch does not.
  for (const auto& r : interior.roots)
    if (r.multiplicity % 2 == 1) return false;
  // The derivative now has constant sign on (0,1) apart from touches; probe
  // until a non-root point decides it.
  for (int k = 2;; ++k) {
    const int s = sgn(d.eval(Rat(1, k)));
    if (s != 0) return s > 0;
  }
}

bool has_inflection_in_unit_interval(const UPoly<Rat>& u) {
  if (u.degree() < 2) return false;
  const UPoly<Rat> dd = u.derivative().derivative();
  if (dd.is_zero()) return false;
  const auto interior = isolate_real_roots(dd, RootDomain::open(0, 1));
  for (const auto& r : interior.roots)
    if (r.multiplicity % 2 == 1) return true;
  return false;
}

}  // namespace relpoly
