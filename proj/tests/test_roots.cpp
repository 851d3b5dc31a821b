#include <doctest.h>

#include <random>

#include "relpoly/quadext.hpp"
#include "relpoly/roots.hpp"
#include "relpoly/upoly.hpp"
#include "oracles.hpp"

using namespace relpoly;

namespace {

// 2x^2 + x^3 - 3x^4 + x^5, the all-equal diagonal of the bridge polynomial.
UPoly<Rat> quintic() { return UPoly<Rat>({Rat(0), Rat(0), Rat(2), Rat(1), Rat(-3), Rat(1)}); }

UPoly<Rat> shift(const UPoly<Rat>& u, const Rat& a) {
  return u - UPoly<Rat>::constant(a);
}

}  // namespace

TEST_CASE("quadratic extension arithmetic and exact signs") {
  const QuadExt phi(Rat(1, 2), Rat(1, 2), 5);  // golden ratio
  CHECK((phi * phi - phi - QuadExt(1)).sign_value() == 0);
  CHECK(phi.sign_value() == 1);
  CHECK((phi - QuadExt(2)).sign_value() == -1);   // phi < 2
  CHECK((phi - QuadExt(Rat(8, 5))).sign_value() == 1);  // phi > 1.6
  const QuadExt inv = QuadExt(1) / phi;
  CHECK((inv - phi + QuadExt(1)).sign_value() == 0);  // 1/phi = phi - 1
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), std::domain_error);
}

TEST_CASE("root isolation factors the quintic at level zero") {
  // x^2 (x - 2)(x^2 - x - 1): 0 (double), 2, (1 +- sqrt 5)/2.
  const auto profile = isolate_real_roots(quintic());
  CHECK(profile.negative == 1);
  CHECK(profile.zero == 2);
  CHECK(profile.positive == 2);
  REQUIRE(profile.roots.size() == 4);

  CHECK(profile.roots[0].sign == -1);  // (1 - sqrt5)/2 ~ -0.618
  REQUIRE(profile.roots[1].exact.has_value());
  CHECK(*profile.roots[1].exact == 0);
  CHECK(profile.roots[1].multiplicity == 2);
  CHECK(profile.roots[2].sign == 1);  // golden ratio
  REQUIRE(profile.roots[3].exact.has_value());
  CHECK(*profile.roots[3].exact == 2);
}

TEST_CASE("level one gives a double root at one") {
  const auto profile = isolate_real_roots(shift(quintic(), 1));
  CHECK(profile.negative == 0);
  CHECK(profile.zero == 0);
  CHECK(profile.positive == 3);
  bool found_double_at_one = false;
  for (const auto& r : profile.roots)
    if (r.exact && *r.exact == 1 && r.multiplicity == 2) found_double_at_one = true;
  CHECK(found_double_at_one);
  // The remaining simple root exceeds 9/5.
  for (const auto& r : profile.roots)
    if (r.multiplicity == 1) CHECK(r.lo > Rat(9, 5));
}

TEST_CASE("polynomials without real roots give empty profiles") {
  const auto profile = isolate_real_roots(UPoly<Rat>({Rat(1), Rat(0), Rat(1)}));  // x^2 + 1
  CHECK(profile.roots.empty());
  CHECK(profile.total() == 0);
  CHECK_THROWS_AS(isolate_real_roots(UPoly<Rat>()), std::domain_error);
}

TEST_CASE("isolating intervals are sound") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rat> coeffs;
    const int deg = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(relpoly::testing::random_small_rat(rng));
    UPoly<Rat> u(coeffs);
    if (u.degree() < 1) continue;

    // Width far below the root-separation bound of this coefficient class, so
    // brackets from different square-free factors cannot overlap.
    const Rat tight(mpz_class(1), mpz_class(1) << 60);
    const auto profile = isolate_real_roots(u, RootDomain::all(), tight);
    const UPoly<Rat> sf = squarefree_part(u);
    int with_mult = 0;
    for (std::size_t i = 0; i < profile.roots.size(); ++i) {
      const auto& r = profile.roots[i];
      with_mult += r.multiplicity;
      if (r.exact) {
        CHECK(sgn(u.eval(*r.exact)) == 0);
      } else {
        // The square-free part changes sign across the bracket.
        CHECK(sgn(sf.eval(r.lo)) * sgn(sf.eval(r.hi)) == -1);
      }
      if (i + 1 < profile.roots.size()) {
        // Brackets are pairwise disjoint and ascending.
        const auto& next = profile.roots[i + 1];
        CHECK(r.hi <= (next.exact ? *next.exact : next.lo));
      }
    }
    CHECK(with_mult == profile.total());
    // Sturm total over the square-free part bounds the distinct count.
    const auto chain = sturm_chain(sf);
    const int distinct = sturm_variations_at_infinity(chain, -1) -
                         sturm_variations_at_infinity(chain, +1);
    CHECK(static_cast<int>(profile.roots.size()) == distinct);
  }
}

TEST_CASE("signed root counting with multiplicity matches isolation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rat> coeffs;
    const int deg = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(relpoly::testing::random_small_rat(rng));
    UPoly<Rat> u(coeffs);
    if (u.degree() < 1) continue;
    const auto counts = count_signed_roots(u);
    const auto profile = isolate_real_roots(u);
    CHECK(counts.negative == profile.negative);
    CHECK(counts.zero == profile.zero);
    CHECK(counts.positive == profile.positive);
  }
}

TEST_CASE("exact algebraic level: the local minimum of the quintic") {
  // u' = x(x-1)(5x^2-7x-4); the local minimum on (1, oo) sits at the larger
  // root of the quadratic, and u there equals (-383 - 129 sqrt(129))/6250.
  const UPoly<Rat> quad({Rat(-4), Rat(-7), Rat(5)});
  const QuadExt min_level = eval_at_quadratic_root(quintic(), quad, true);
  const QuadExt expected =
      QuadExt(Rat(-383, 6250)) + QuadExt(Rat(0), Rat(-129, 6250), 129);
  CHECK((min_level - expected).sign_value() == 0);
  CHECK(min_level.sign_value() == -1);

  // u - min_level over Q(sqrt 129): one negative root, a double positive.
  UPoly<QuadExt> shifted = lift_to_quadext(quintic()) - UPoly<QuadExt>::constant(min_level);
  const auto counts = count_signed_roots(shifted);
  CHECK(counts.negative == 1);
  CHECK(counts.zero == 0);
  CHECK(counts.positive == 2);

  // The positive root really is a double root: the square-free tower has a
  // multiplicity-two level with one positive root.
  const auto factors = squarefree_decomposition(shifted);
  REQUIRE(factors.size() >= 2);
  CHECK(factors[1].degree() == 1);
  CHECK(count_signed_roots(factors[1]).positive == 1);
}

TEST_CASE("domain-restricted isolation") {
  // u' of the quintic: roots 0, 1, (7 +- sqrt 129)/10; only none lie in (0,1).
  const UPoly<Rat> d = quintic().derivative();
  CHECK(isolate_real_roots(d, RootDomain::open(0, 1)).total() == 0);
  CHECK(isolate_real_roots(d, RootDomain::open(Rat(-1, 10), Rat(3, 2))).total() == 2);  // 0, 1
  const auto wide = isolate_real_roots(d, RootDomain::open(-10, 10));
  CHECK(wide.total() == 4);
}
