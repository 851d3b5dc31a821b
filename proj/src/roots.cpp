#include "relpoly/roots.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace relpoly {

namespace {

constexpr std::size_t kMaxRationalCandidates = 4096;

// Integer divisors of |z|, capped; empty result signals "too many".
std::vector<mpz_class> bounded_divisors(const mpz_class& z) {
  std::vector<mpz_class> divs;
  mpz_class n = abs(z);
  if (n == 0) return divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      mpz_class other = n / d;
      if (other != d) divs.push_back(other);
      if (divs.size() > kMaxRationalCandidates) return {};
    }
  }
  return divs;
}

// Extracts every rational root of the square-free polynomial g, deflating g.
// Returns nullopt (g untouched semantics restored by caller) when the
// candidate set is too large; Sturm isolation then hits exact roots at
// bisection points instead.
std::optional<std::vector<Rat>> extract_rational_roots(UPoly<Rat>& g) {
  std::vector<Rat> found;
  if (g.degree() <= 0) return found;

  while (g.degree() > 0 && sgn(g[0]) == 0) {
    found.push_back(0);
    g = g.divmod(UPoly<Rat>({Rat(0), Rat(1)})).first;
  }
  if (g.degree() <= 0) return found;

  mpz_class den_lcm = 1;
  for (const Rat& c : g.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  std::vector<mpz_class> ic;
  ic.reserve(g.coeffs().size());
  for (const Rat& c : g.coeffs()) ic.push_back(mpz_class(c.get_num() * (den_lcm / c.get_den())));

  const auto ps = bounded_divisors(ic.front());
  const auto qs = bounded_divisors(ic.back());
  if (ps.empty() || qs.empty() || ps.size() * qs.size() > kMaxRationalCandidates)
    return std::nullopt;

  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int s : {1, -1}) {
        if (g.degree() <= 0) return found;
        Rat cand(s * p, q);
        cand.canonicalize();
        if (sgn(g.eval(cand)) == 0) {
          found.push_back(cand);
          g = g.divmod(UPoly<Rat>({-cand, Rat(1)})).first;
        }
      }
  return found;
}

// Every real root r of g satisfies |r| < 1 + max|c_i / c_d|.
Rat cauchy_bound(const UPoly<Rat>& g) {
  Rat bound = 0;
  for (int i = 0; i < g.degree(); ++i) {
    Rat ratio = abs(g[i] / g.leading());
    if (ratio > bound) bound = ratio;
  }
  return bound + 1;
}

IsolatedRoot make_exact(const Rat& r, int mult) {
  IsolatedRoot root;
  root.exact = r;
  root.lo = root.hi = r;
  root.multiplicity = mult;
  root.sign = sgn(r);
  return root;
}

// Isolates all real roots of one square-free factor. Exact rational roots
// discovered at probe points restart the sweep on the deflated factor. The
// domain boundaries (and zero) are used as initial split points, so no
// resulting bracket ever straddles them and domain membership of a bracketed
// root is decidable by endpoint comparison alone.
std::vector<IsolatedRoot> isolate_factor(UPoly<Rat> g, int mult, const Rat& min_width,
                                         const RootDomain& domain) {
  std::vector<IsolatedRoot> out;

  auto rational = extract_rational_roots(g);
  if (rational) {
    for (const Rat& r : *rational) out.push_back(make_exact(r, mult));
  }

  bool restart = true;
  while (restart) {
    restart = false;
    if (g.degree() <= 0) break;

    // Drop brackets from a previous pass; exact roots survive.
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const IsolatedRoot& r) { return !r.exact; }),
              out.end());

    const Rat bound = cauchy_bound(g);
    std::vector<Rat> cuts{-bound};
    for (const auto& boundary : {domain.lo, domain.hi, std::optional<Rat>(Rat(0))}) {
      if (boundary && *boundary > -bound && *boundary < bound) cuts.push_back(*boundary);
    }
    cuts.push_back(bound);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t i = 1; i + 1 < cuts.size() && !restart; ++i) {
      if (sgn(g.eval(cuts[i])) == 0) {
        out.push_back(make_exact(cuts[i], mult));
        g = g.divmod(UPoly<Rat>({-cuts[i], Rat(1)})).first;
        restart = true;
      }
    }
    if (restart) continue;
    if (g.degree() <= 0) break;

    const auto chain = sturm_chain(g);
    std::deque<std::pair<Rat, Rat>> work;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) work.emplace_back(cuts[i], cuts[i + 1]);

    while (!work.empty() && !restart) {
      auto [lo, hi] = work.front();
      work.pop_front();
      const int count = sturm_count_interval(chain, lo, hi);
      if (count == 0) continue;

      if (count == 1 && hi - lo <= min_width) {
        IsolatedRoot root;
        root.lo = lo;
        root.hi = hi;
        root.multiplicity = mult;
        root.sign = sgn(hi) <= 0 ? -1 : 1;
        out.push_back(std::move(root));
        continue;
      }

      const Rat mid = (lo + hi) / 2;
      if (sgn(g.eval(mid)) == 0) {
        out.push_back(make_exact(mid, mult));
        g = g.divmod(UPoly<Rat>({-mid, Rat(1)})).first;
        restart = true;
        break;
      }
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }
  return out;
}

// True iff the root is strictly inside the open domain. Brackets never
// straddle a boundary (isolation splits at the boundaries first).
bool root_in_domain(const IsolatedRoot& r, const RootDomain& domain) {
  if (r.exact) {
    if (domain.lo && !(*r.exact > *domain.lo)) return false;
    if (domain.hi && !(*r.exact < *domain.hi)) return false;
    return true;
  }
  if (domain.lo && r.hi <= *domain.lo) return false;
  if (domain.hi && r.lo >= *domain.hi) return false;
  return true;
}

}  // namespace

std::string IsolatedRoot::str() const {
  std::string s = exact ? rat_to_string(*exact)
                        : "(" + rat_to_string(lo) + ", " + rat_to_string(hi) + ")";
  if (multiplicity > 1) s += " x" + std::to_string(multiplicity);
  return s;
}

UPoly<Rat> to_upoly(const DensePoly& p) {
  if (p.is_zero()) return UPoly<Rat>();
  if (!p.is_univariate()) throw std::invalid_argument("polynomial is not univariate");
  return UPoly<Rat>(p.univariate_coeffs());
}

DensePoly to_dense(const UPoly<Rat>& u, const std::string& var) {
  return DensePoly::univariate(var, u.coeffs());
}

RootProfile isolate_real_roots(const UPoly<Rat>& u, const RootDomain& domain,
                               const Rat& min_width) {
  if (u.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  RootProfile profile;
  if (u.degree() == 0) return profile;

  const auto factors = squarefree_decomposition(u);
  std::vector<IsolatedRoot> roots;
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    if (factors[fi].degree() <= 0) continue;
    for (auto& r : isolate_factor(factors[fi], static_cast<int>(fi) + 1, min_width, domain)) {
      if (root_in_domain(r, domain)) roots.push_back(std::move(r));
    }
  }

  std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.approx() < b.approx();
  });

  for (const auto& r : roots) {
    if (r.sign < 0)
      profile.negative += r.multiplicity;
    else if (r.sign == 0)
      profile.zero += r.multiplicity;
    else
      profile.positive += r.multiplicity;
  }
  profile.roots = std::move(roots);
  return profile;
}

QuadExt eval_at_quadratic_root(const UPoly<Rat>& u, const UPoly<Rat>& quadratic,
                               bool larger_root) {
  if (quadratic.degree() != 2) throw std::invalid_argument("quadratic factor required");
  const Rat A = quadratic[2], B = quadratic[1], C = quadratic[0];
  const Rat disc = B * B - 4 * A * C;
  if (sgn(disc) <= 0) throw std::domain_error("quadratic has no distinct real roots");

  // sqrt(num/den) = sqrt(num*den)/den; peel square factors from num*den.
  mpz_class inner = disc.get_num() * disc.get_den();
  mpz_class square = 1;
  for (mpz_class f = 2; f * f <= inner; ++f)
    while (inner % (f * f) == 0) {
      inner /= f * f;
      square *= f;
    }

  const Rat rad_coeff = Rat(square, disc.get_den()) * (larger_root ? 1 : -1);
  QuadExt root;
  if (inner == 1) {
    root = QuadExt(((-B) + rad_coeff) / (2 * A));
  } else {
    if (!inner.fits_slong_p())
      throw std::domain_error("discriminant too large for quadratic extension");
    root = QuadExt((-B) / (2 * A), rad_coeff / (2 * A), inner.get_si());
  }

  QuadExt acc;
  for (auto it = u.coeffs().rbegin(); it != u.coeffs().rend(); ++it)
    acc = acc * root + QuadExt(*it);
  return acc;
}

UPoly<QuadExt> lift_to_quadext(const UPoly<Rat>& u) {
  std::vector<QuadExt> coeffs;
  coeffs.reserve(u.coeffs().size());
  for (const Rat& c : u.coeffs()) coeffs.emplace_back(c);
  return UPoly<QuadExt>(std::move(coeffs));
}

}  // namespace relpoly
