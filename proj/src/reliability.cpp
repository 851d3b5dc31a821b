#include "relpoly/reliability.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace relpoly {

namespace {

constexpr int kBruteForceGuard = 20;

void check_components(ComponentSet s, int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("component count out of range");
  if (s >> n) throw std::out_of_range("component index in set exceeds component count");
}

double unit_double(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<Rat> probs) : p(std::move(probs)) {
  for (const Rat& v : p)
    if (sgn(v) < 0 || v > 1)
      throw std::domain_error("probability outside [0,1]: " + rat_to_string(v));
}

SqFreePoly from_min_cuts(const std::vector<ComponentSet>& cuts, int n) {
  SqFreePoly acc = SqFreePoly::constant(n, 1);
  for (ComponentSet cut : cuts) {
    check_components(cut, n);
    // 1 - prod_{i in cut} (1 - R_i)
    SqFreePoly fail = SqFreePoly::constant(n, 1);
    for (ComponentSet bits = cut; bits; bits &= bits - 1) {
      const int idx = std::countr_zero(bits) + 1;
      fail = fail * (SqFreePoly::constant(n, 1) - SqFreePoly::variable(n, idx));
    }
    acc = mul_idempotent(acc, SqFreePoly::constant(n, 1) - fail);
  }
  return acc;
}

SqFreePoly from_min_paths(const std::vector<ComponentSet>& paths, int n) {
  for (ComponentSet path : paths) check_components(path, n);
  SqFreePoly out(n);
  const std::size_t k = paths.size();
  if (k > 25) throw std::invalid_argument("too many paths for inclusion-exclusion expansion");
  for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << k); ++sub) {
    ComponentSet u = 0;
    for (std::uint32_t bits = sub; bits; bits &= bits - 1) u |= paths[std::countr_zero(bits)];
    out.add_term(u, std::popcount(sub) % 2 == 1 ? 1 : -1);
  }
  return out;
}

SqFreePoly bruteforce_poly(const Network& net) {
  const int n = net.num_components();
  if (n > kBruteForceGuard)
    throw std::invalid_argument("brute-force construction guarded to 20 components");

  // Structure function on every vertex, then the finite-difference (Moebius)
  // transform gives the multilinear coefficients; they are integers here.
  const std::size_t size = std::size_t{1} << n;
  const StructureFunction working(net);
  std::vector<long long> coeff(size);
  for (std::size_t s = 0; s < size; ++s)
    coeff[s] = working(static_cast<ComponentSet>(s)) ? 1 : 0;
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 0; s < size; ++s)
      if (s >> i & 1) coeff[s] -= coeff[s ^ (std::size_t{1} << i)];

  SqFreePoly out(n);
  for (std::size_t s = 0; s < size; ++s)
    if (coeff[s] != 0) out.add_term(static_cast<ComponentSet>(s), Rat(static_cast<long>(coeff[s])));
  return out;
}

Rat bruteforce_value(const Network& net, const ProbabilityVector& probs) {
  const int n = net.num_components();
  if (n > kBruteForceGuard)
    throw std::invalid_argument("brute-force evaluation guarded to 20 components");
  if (probs.size() != n)
    throw std::invalid_argument("probability vector length does not match component count");

  Rat total = 0;
  const StructureFunction working(net);
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t s = 0; s < size; ++s) {
    if (!working(static_cast<ComponentSet>(s))) continue;
    Rat weight = 1;
    for (int i = 0; i < n; ++i) weight *= (s >> i & 1) ? probs.p[i] : Rat(1 - probs.p[i]);
    total += weight;
  }
  return total;
}

MonteCarloResult monte_carlo(const Network& net, const ProbabilityVector& probs,
                             std::uint64_t trials, std::uint64_t seed) {
  const int n = net.num_components();
  if (n == 0) throw std::invalid_argument("empty network");
  if (probs.size() != n)
    throw std::invalid_argument("probability vector length does not match component count");
  if (trials == 0) throw std::invalid_argument("at least one trial required");

  std::vector<double> p(n);
  for (int i = 0; i < n; ++i) p[i] = rat_to_double(probs.p[i]);

  const StructureFunction working(net);
  std::mt19937_64 rng(seed);
  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ComponentSet up = 0;
    for (int i = 0; i < n; ++i)
      if (unit_double(rng()) < p[i]) up |= ComponentSet{1} << i;
    if (working(up)) ++successes;
  }

  MonteCarloResult result;
  result.trials = trials;
  result.seed = seed;
  result.estimate = static_cast<double>(successes) / static_cast<double>(trials);
  result.stderr_estimate =
      std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(trials));
  return result;
}

TriplePoly triple_poly(const Network& net) {
  TriplePoly out;
  out.from_cuts = from_min_cuts(minimal_cuts(net), net.num_components());
  out.from_paths = from_min_paths(minimal_paths(net), net.num_components());
  out.from_states = bruteforce_poly(net);
  out.agree = out.from_cuts == out.from_paths && out.from_paths == out.from_states;
  return out;
}

SqFreePoly reliability_poly(const Network& net) {
  return from_min_cuts(minimal_cuts(net), net.num_components());
}

}  // namespace relpoly
