#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "relpoly/reliability.hpp"
#include "oracles.hpp"

using namespace relpoly;
namespace oracle = relpoly::testing;

namespace {

SqFreePoly bridge_poly() {
  return SqFreePoly::from_terms(5, {
                                       {{1, 4}, 1},
                                       {{2, 5}, 1},
                                       {{2, 3, 4}, 1},
                                       {{1, 2, 3, 4}, -1},
                                       {{1, 2, 4, 5}, -1},
                                       {{2, 3, 4, 5}, -1},
                                       {{1, 2, 3, 4, 5}, 1},
                                   });
}

}  // namespace

TEST_CASE("cut construction reproduces the bridge polynomial") {
  const auto cuts = std::vector<ComponentSet>{component_set({1, 2}), component_set({4, 5}),
                                              component_set({2, 4}), component_set({1, 3, 5})};
  CHECK(from_min_cuts(cuts, 5) == bridge_poly());

  CHECK(from_min_cuts({component_set({1, 2})}, 2) ==
        SqFreePoly::from_terms(2, {{{1}, 1}, {{2}, 1}, {{1, 2}, -1}}));
  CHECK(from_min_cuts({component_set({1}), component_set({2})}, 2) ==
        SqFreePoly::from_terms(2, {{{1, 2}, 1}}));
  CHECK_THROWS_AS(from_min_cuts({component_set({3})}, 2), std::out_of_range);
}

TEST_CASE("path construction reproduces the bridge polynomial") {
  const auto paths = std::vector<ComponentSet>{component_set({1, 4}), component_set({2, 5}),
                                               component_set({2, 3, 4})};
  CHECK(from_min_paths(paths, 5) == bridge_poly());

  CHECK(from_min_paths({component_set({1, 2, 3})}, 3) ==
        SqFreePoly::from_terms(3, {{{1, 2, 3}, 1}}));
  CHECK(from_min_paths({component_set({1}), component_set({2})}, 2) ==
        SqFreePoly::from_terms(2, {{{1}, 1}, {{2}, 1}, {{1, 2}, -1}}));
}

TEST_CASE("brute-force construction is the structure-function expectation") {
  const Network fig2 = Network::fixture("fig2");
  CHECK(bruteforce_poly(fig2) == bridge_poly());

  const Network unreachable = Network::parse(
      R"({"nodes":["A","B","C"],"source":"A","sink":"C",
          "arcs":[{"id":1,"from":"A","to":"B"}]})");
  CHECK(bruteforce_poly(unreachable).is_zero());

  const Network loopback = Network::parse(
      R"({"nodes":["A","B"],"source":"A","sink":"A",
          "arcs":[{"id":1,"from":"A","to":"B"}]})");
  CHECK(bruteforce_poly(loopback) == SqFreePoly::constant(1, 1));
}

TEST_CASE("exact evaluation") {
  const Network fig2 = Network::fixture("fig2");
  const std::vector<Rat> half(5, Rat(1, 2));
  CHECK(bruteforce_value(fig2, ProbabilityVector(half)) == Rat(15, 32));
  CHECK(bruteforce_value(fig2, ProbabilityVector(std::vector<Rat>(5, Rat(9, 10)))) ==
        Rat(97119, 100000));

  const ProbabilityVector degenerate({Rat(1), Rat(0), Rat(1, 3), Rat(2, 7), Rat(1, 2)});
  CHECK(bruteforce_value(fig2, degenerate) == Rat(2, 7));

  CHECK_THROWS_AS(ProbabilityVector({Rat(3, 2)}), std::domain_error);
  CHECK_THROWS_AS(ProbabilityVector({Rat(-1, 10)}), std::domain_error);
}

TEST_CASE("triple agreement on fixtures and random networks") {
  for (const char* name : {"fig1", "fig2"}) {
    const TriplePoly triple = triple_poly(Network::fixture(name));
    CHECK(triple.agree);
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Network net = oracle::random_connected_network(rng, 8);
    const TriplePoly triple = triple_poly(net);
    INFO("net: ", net.to_json().dump());
    CHECK(triple.agree);
  }
}

TEST_CASE("reliability polynomial is the multilinear extension") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    const Network net = oracle::random_connected_network(rng, 7);
    const int n = net.num_components();
    const SqFreePoly poly = reliability_poly(net);

    // vertices: value 1 exactly on working states
    for (ComponentSet s = 0; s < (ComponentSet{1} << n); ++s) {
      std::vector<Rat> vertex(n);
      for (int i = 0; i < n; ++i) vertex[i] = (s >> i & 1) ? 1 : 0;
      CHECK(poly.evaluate(vertex) == (is_working(net, s) ? 1 : 0));
    }

    // interior: value within [0,1], partials nonnegative (coherence)
    for (int probe = 0; probe < 20; ++probe) {
      const auto point = oracle::random_unit_point(rng, n);
      const Rat value = poly.evaluate(point);
      CHECK(sgn(value) >= 0);
      CHECK(value <= 1);
      for (int i = 1; i <= n; ++i) CHECK(sgn(poly.partial(i).evaluate(point)) >= 0);
    }
  }
}

TEST_CASE("monte carlo determinism and degenerate inputs") {
  const Network fig2 = Network::fixture("fig2");
  const ProbabilityVector nine(std::vector<Rat>(5, Rat(9, 10)));

  const auto a = monte_carlo(fig2, nine, 20000, 42);
  const auto b = monte_carlo(fig2, nine, 20000, 42);
  CHECK(a.estimate == b.estimate);

  const auto c = monte_carlo(fig2, nine, 20000, 43);
  CHECK(a.estimate != c.estimate);  // different stream

  CHECK(monte_carlo(fig2, ProbabilityVector(std::vector<Rat>(5, Rat(1))), 1000, 7).estimate ==
        1.0);
  CHECK(monte_carlo(fig2, ProbabilityVector(std::vector<Rat>(5, Rat(0))), 1000, 7).estimate ==
        0.0);
  CHECK_THROWS_AS(monte_carlo(fig2, nine, 0, 1), std::invalid_argument);
}

TEST_CASE("monte carlo lands near the exact value") {
  const Network fig2 = Network::fixture("fig2");
  const ProbabilityVector nine(std::vector<Rat>(5, Rat(9, 10)));
  const double exact = 0.97119;
  const auto result = monte_carlo(fig2, nine, 200000, 2024);
  CHECK(std::abs(result.estimate - exact) <= 4 * result.stderr_estimate);
}
