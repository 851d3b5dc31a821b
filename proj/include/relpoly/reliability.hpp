#pragma once

#include <cstdint>
#include <vector>

#include "relpoly/netmodel.hpp"
#include "relpoly/rational.hpp"
#include "relpoly/sqfree_poly.hpp"

namespace relpoly {

/// Per-component operating probabilities; every entry must lie in [0,1].
struct ProbabilityVector {
  std::vector<Rat> p;

  explicit ProbabilityVector(std::vector<Rat> probs);
  int size() const { return static_cast<int>(p.size()); }
};

/// Reliability polynomial from the minimal cuts: the Boolean-idempotent
/// product over cuts of the cut-availability polynomials
/// 1 - prod_{i in C} (1 - R_i). The empty cut family yields the constant 1.
SqFreePoly from_min_cuts(const std::vector<ComponentSet>& cuts, int n);

/// Reliability polynomial from the minimal paths by inclusion-exclusion over
/// path subfamilies: sign (-1)^(k+1), monomial = union of the components.
SqFreePoly from_min_paths(const std::vector<ComponentSet>& paths, int n);

/// Independent construction: expectation of the structure function over all
/// 2^n component states, expanded to canonical multilinear form. Guarded to
/// n <= 20.
SqFreePoly bruteforce_poly(const Network& net);

/// Exact system reliability at a probability vector by direct 2^n summation.
Rat bruteforce_value(const Network& net, const ProbabilityVector& probs);

struct MonteCarloResult {
  double estimate = 0;
  double stderr_estimate = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Seeded Monte Carlo estimate of system reliability. Deterministic given the
/// seed: the generator is std::mt19937_64 and each component draw consumes
/// exactly one 64-bit word, mapped to [0,1) with 53-bit resolution.
MonteCarloResult monte_carlo(const Network& net, const ProbabilityVector& probs,
                             std::uint64_t trials, std::uint64_t seed);

/// All three constructions with an exact agreement check.
struct TriplePoly {
  SqFreePoly from_cuts;
  SqFreePoly from_paths;
  SqFreePoly from_states;
  bool agree = false;
};
TriplePoly triple_poly(const Network& net);

/// The reliability polynomial (constructed from the minimal cuts).
SqFreePoly reliability_poly(const Network& net);

}  // namespace relpoly
