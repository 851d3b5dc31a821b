#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "relpoly/rational.hpp"

namespace relpoly {

/// Dense univariate polynomial over an exact ordered field K (rationals or a
/// real quadratic extension). Coefficients ascend by degree; the leading
/// coefficient is nonzero. Everything here is exact: the only operations used
/// are field arithmetic and sign tests.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(K v) { return UPoly({std::move(v)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const K& operator[](int i) const { return c_[i]; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& leading() const { return c_.back(); }

  K eval(const K& x) const {
    K acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly& operator+=(const UPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), K{});
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = c_[i] + rhs.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), K{});
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = c_[i] - rhs.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, K{});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
  }

  UPoly scaled(const K& k) const {
    std::vector<K> out = c_;
    for (auto& v : out) v = v * k;
    return UPoly(std::move(out));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<K> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * K(static_cast<int>(i));
    return UPoly(std::move(out));
  }

  /// Euclidean division; returns (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& div) const {
    if (div.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly rem = *this;
    if (rem.degree() < div.degree()) return {UPoly(), rem};
    std::vector<K> q(rem.degree() - div.degree() + 1, K{});
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
      const int shift = rem.degree() - div.degree();
      const K factor = rem.leading() / div.leading();
      q[shift] = factor;
      for (int i = 0; i <= div.degree(); ++i)
        rem.c_[i + shift] = rem.c_[i + shift] - factor * div.c_[i];
      rem.c_.pop_back();
      rem.trim();
    }
    return {UPoly(std::move(q)), rem};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / leading());
  }

  bool operator==(const UPoly& rhs) const {
    if (c_.size() != rhs.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sign(c_[i] - rhs.c_[i]) != 0) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's square-free decomposition: returns g_1..g_m (monic) with
/// u = lc * g_1 * g_2^2 * ... * g_m^m and the g_i pairwise coprime.
template <class K>
std::vector<UPoly<K>> squarefree_decomposition(const UPoly<K>& u) {
  if (u.is_zero()) throw std::domain_error("square-free decomposition of zero polynomial");
  std::vector<UPoly<K>> out;
  if (u.degree() == 0) return out;
  UPoly<K> d = u.derivative();
  UPoly<K> a = gcd(u, d);
  UPoly<K> b = u.divmod(a).first;
  UPoly<K> c = d.divmod(a).first;
  UPoly<K> z = c - b.derivative();
  while (b.degree() > 0) {
    UPoly<K> g = gcd(b, z);
    out.push_back(g.monic());
    b = b.divmod(g).first;
    z = z.divmod(g).first - b.derivative();
  }
  return out;
}

/// Square-free part: product of the distinct irreducible factors.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& u) {
  UPoly<K> out = UPoly<K>::constant(K(1));
  for (const auto& g : squarefree_decomposition(u)) out = out * g;
  return out;
}

template <class K>
std::vector<UPoly<K>> sturm_chain(const UPoly<K>& u) {
  std::vector<UPoly<K>> chain;
  chain.push_back(u);
  UPoly<K> d = u.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && chain.back().degree() > 0) {
    auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(rem.scaled(K(-1)));
  }
  return chain;
}

namespace detail {

inline int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace detail

/// Sign variations of the chain at a finite point.
template <class K>
int sturm_variations_at(const std::vector<UPoly<K>>& chain, const K& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) signs.push_back(sign(f.eval(x)));
  return detail::count_variations(signs);
}

/// Sign variations at +infinity (dir > 0) or -infinity (dir < 0).
template <class K>
int sturm_variations_at_infinity(const std::vector<UPoly<K>>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) {
    if (f.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sign(f.leading());
    if (dir < 0 && f.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return detail::count_variations(signs);
}

/// Number of distinct real roots in the half-open interval (lo, hi].
template <class K>
int sturm_count_interval(const std::vector<UPoly<K>>& chain, const K& lo, const K& hi) {
  return sturm_variations_at(chain, lo) - sturm_variations_at(chain, hi);
}

struct SignedRootCounts {
  int negative = 0;
  int zero = 0;
  int positive = 0;
  int total() const { return negative + zero + positive; }
};

/// Counts real roots with multiplicity, split by sign, via square-free
/// decomposition plus Sturm counting on each factor. Exact for any ordered
/// field K with exact sign tests.
template <class K>
SignedRootCounts count_signed_roots(const UPoly<K>& u) {
  if (u.is_zero()) throw std::domain_error("root count of zero polynomial");
  SignedRootCounts counts;
  const auto factors = squarefree_decomposition(u);
  const UPoly<K> x(std::vector<K>{K(0), K(1)});
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int mult = static_cast<int>(i) + 1;
    UPoly<K> g = factors[i];
    if (g.degree() <= 0) continue;
    if (sign(g.eval(K(0))) == 0) {
      // A square-free factor has 0 as a simple root; deflate it so the
      // half-open Sturm intervals below see only nonzero roots.
      counts.zero += mult;
      g = g.divmod(x).first;
      if (g.degree() <= 0) continue;
    }
    const auto chain = sturm_chain(g);
    const int at_minus_inf = sturm_variations_at_infinity(chain, -1);
    const int at_zero = sturm_variations_at(chain, K(0));
    const int at_plus_inf = sturm_variations_at_infinity(chain, +1);
    counts.negative += mult * (at_minus_inf - at_zero);
    counts.positive += mult * (at_zero - at_plus_inf);
  }
  return counts;
}

}  // namespace relpoly
