// Test-only oracles: brute-force enumerations and random generators that stay
// independent of the library's enumeration and construction paths.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "relpoly/netmodel.hpp"
#include "relpoly/rational.hpp"
#include "relpoly/sqfree_poly.hpp"

namespace relpoly::testing {

// Minimal working sets by sweeping all 2^n states with is_working only.
inline std::vector<ComponentSet> brute_minimal_working_sets(const Network& net) {
  const int n = net.num_components();
  std::vector<ComponentSet> working;
  for (ComponentSet s = 0; s < (ComponentSet{1} << n); ++s)
    if (is_working(net, s)) working.push_back(s);
  std::vector<ComponentSet> minimal;
  for (ComponentSet s : working) {
    bool dominated = false;
    for (ComponentSet t : working)
      if (t != s && (t & s) == t) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

// Minimal failing complements: C is a cut iff the complement of C fails.
inline std::vector<ComponentSet> brute_minimal_cut_sets(const Network& net) {
  const int n = net.num_components();
  const ComponentSet all = (ComponentSet{1} << n) - 1;
  std::vector<ComponentSet> cuts;
  for (ComponentSet c = 0; c <= all; ++c)
    if (!is_working(net, all & ~c)) cuts.push_back(c);
  std::vector<ComponentSet> minimal;
  for (ComponentSet s : cuts) {
    bool dominated = false;
    for (ComponentSet t : cuts)
      if (t != s && (t & s) == t) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

inline bool same_set_family(std::vector<ComponentSet> a, std::vector<ComponentSet> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Random connected two-terminal network with one component per arc.
inline Network random_connected_network(std::mt19937_64& rng, int max_components = 10) {
  while (true) {
    const int num_nodes = 3 + static_cast<int>(rng() % 4);  // 3..6
    std::vector<std::string> nodes;
    for (int i = 0; i < num_nodes; ++i) nodes.push_back(std::string(1, char('A' + i)));
    const int num_arcs = 2 + static_cast<int>(rng() % (max_components - 1));
    std::vector<Arc> arcs;
    int id = 1;
    for (int i = 0; i < num_arcs && id <= max_components; ++i) {
      const int u = static_cast<int>(rng() % num_nodes);
      int v = static_cast<int>(rng() % num_nodes);
      if (u == v) continue;
      arcs.push_back({id, nodes[u], nodes[v], id});
      ++id;
    }
    if (arcs.empty()) continue;
    try {
      Network net(nodes, arcs, nodes.front(), nodes.back());
      const ComponentSet all = (ComponentSet{1} << net.num_components()) - 1;
      if (is_working(net, all)) return net;
    } catch (const NetworkError&) {
      continue;
    }
  }
}

inline Rat random_small_rat(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 9) - 4;  // -4..4
  const long den = 1 + static_cast<long>(rng() % 4);  // 1..4
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat random_unit_rat(std::mt19937_64& rng) {
  const long den = 2 + static_cast<long>(rng() % 15);
  const long num = static_cast<long>(rng() % (den + 1));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::vector<Rat> random_unit_point(std::mt19937_64& rng, int n) {
  std::vector<Rat> point;
  point.reserve(n);
  for (int i = 0; i < n; ++i) point.push_back(random_unit_rat(rng));
  return point;
}

inline SqFreePoly random_sqfree_poly(std::mt19937_64& rng, int n, int max_terms = 6) {
  SqFreePoly p(n);
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    const VarMask mask = static_cast<VarMask>(rng() % (VarMask{1} << n));
    p.add_term(mask, random_small_rat(rng));
  }
  return p;
}

}  // namespace relpoly::testing
