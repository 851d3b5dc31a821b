#include "relpoly/sqfree_poly.hpp"

#include <bit>
#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "relpoly/dense_poly.hpp"

namespace relpoly {

namespace {

void check_same_space(const SqFreePoly& a, const SqFreePoly& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("variable-count mismatch: " + std::to_string(a.num_vars()) +
                                " vs " + std::to_string(b.num_vars()));
}

VarMask mask_of(int num_vars, const std::vector<int>& vars) {
  VarMask m = 0;
  for (int v : vars) {
    if (v < 1 || v > num_vars) throw std::out_of_range("variable index out of range");
    m |= VarMask{1} << (v - 1);
  }
  return m;
}

}  // namespace

SqFreePoly SqFreePoly::constant(int num_vars, const Rat& c) {
  SqFreePoly p(num_vars);
  p.add_term(0, c);
  return p;
}

SqFreePoly SqFreePoly::variable(int num_vars, int index) {
  if (index < 1 || index > num_vars) throw std::out_of_range("variable index out of range");
  SqFreePoly p(num_vars);
  p.add_term(VarMask{1} << (index - 1), 1);
  return p;
}

SqFreePoly SqFreePoly::from_terms(int num_vars,
                                  const std::vector<std::pair<std::vector<int>, Rat>>& terms) {
  SqFreePoly p(num_vars);
  for (const auto& [vars, c] : terms) p.add_term(mask_of(num_vars, vars), c);
  return p;
}

bool SqFreePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rat SqFreePoly::coeff(VarMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rat(0) : it->second;
}

int SqFreePoly::degree() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
  return d;
}

void SqFreePoly::add_term(VarMask mask, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SqFreePoly& SqFreePoly::operator+=(const SqFreePoly& rhs) {
  check_same_space(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SqFreePoly& SqFreePoly::operator-=(const SqFreePoly& rhs) {
  check_same_space(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SqFreePoly SqFreePoly::operator-() const {
  SqFreePoly out(n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SqFreePoly SqFreePoly::scaled(const Rat& c) const {
  SqFreePoly out(n_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

SqFreePoly operator*(const SqFreePoly& lhs, const SqFreePoly& rhs) {
  check_same_space(lhs, rhs);
  SqFreePoly out(lhs.num_vars());
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      if (ma & mb)
        throw std::domain_error("ordinary product would leave the square-free ring");
      out.add_term(ma | mb, ca * cb);
    }
  return out;
}

SqFreePoly mul_idempotent(const SqFreePoly& p, const SqFreePoly& q) {
  check_same_space(p, q);
  SqFreePoly out(p.num_vars());
  for (const auto& [ma, ca] : p.terms())
    for (const auto& [mb, cb] : q.terms()) out.add_term(ma | mb, ca * cb);
  return out;
}

Rat SqFreePoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw std::invalid_argument("point length does not match variable count");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (VarMask bits = m; bits; bits &= bits - 1)
      term *= point[std::countr_zero(bits)];
    total += term;
  }
  return total;
}

SqFreePoly SqFreePoly::partial(int index) const {
  if (index < 1 || index > n_) throw std::out_of_range("variable index out of range");
  const VarMask bit = VarMask{1} << (index - 1);
  SqFreePoly out(n_);
  for (const auto& [m, c] : terms_)
    if (m & bit) out.terms_.emplace(m & ~bit, c);
  return out;
}

SqFreePoly SqFreePoly::substitute(const std::map<int, Rat>& fixed) const {
  VarMask fixed_mask = 0;
  for (const auto& [v, value] : fixed) {
    if (v < 1 || v > n_) throw std::out_of_range("variable index out of range");
    fixed_mask |= VarMask{1} << (v - 1);
  }
  SqFreePoly out(n_);
  for (const auto& [m, c] : terms_) {
    Rat k = c;
    for (VarMask bits = m & fixed_mask; bits; bits &= bits - 1) {
      k *= fixed.at(std::countr_zero(bits) + 1);
      if (sgn(k) == 0) break;
    }
    out.add_term(m & ~fixed_mask, k);
  }
  return out;
}

std::string SqFreePoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<VarMask> order;
  order.reserve(terms_.size());
  for (const auto& [m, c] : terms_) order.push_back(m);
  std::sort(order.begin(), order.end(), [](VarMask a, VarMask b) {
    const int da = std::popcount(a), db = std::popcount(b);
    return da != db ? da < db : a < b;
  });

  std::string out;
  bool first = true;
  for (VarMask m : order) {
    const Rat& c = terms_.at(m);
    const bool neg = sgn(c) < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    for (VarMask bits = m; bits; bits &= bits - 1) {
      const int idx = std::countr_zero(bits) + 1;
      if (!vars.empty()) vars += "*";
      vars += names.empty() ? "R" + std::to_string(idx) : names.at(idx - 1);
    }
    if (vars.empty()) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += rat_to_string(mag) + "*" + vars;
    }
  }
  return out;
}

nlohmann::json SqFreePoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  std::vector<VarMask> order;
  for (const auto& [m, c] : terms_) order.push_back(m);
  std::sort(order.begin(), order.end(), [](VarMask a, VarMask b) {
    const int da = std::popcount(a), db = std::popcount(b);
    return da != db ? da < db : a < b;
  });
  for (VarMask m : order) {
    nlohmann::json vars = nlohmann::json::array();
    for (VarMask bits = m; bits; bits &= bits - 1) vars.push_back(std::countr_zero(bits) + 1);
    terms.push_back({{"coeff", rat_to_string(terms_.at(m))}, {"vars", vars}});
  }
  return {{"n", n_}, {"terms", terms}};
}

SqFreePoly SqFreePoly::from_json(const nlohmann::json& j) {
  SqFreePoly p(j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    std::vector<int> vars = term.at("vars").get<std::vector<int>>();
    p.add_term(mask_of(p.n_, vars), parse_rat(term.at("coeff").get<std::string>()));
  }
  return p;
}

DensePoly substitute_pattern(const SqFreePoly& p, const std::vector<int>& pattern,
                             const std::vector<std::string>& target_names) {
  if (static_cast<int>(pattern.size()) != p.num_vars())
    throw std::invalid_argument("pattern must assign a target to every variable");
  int k = 0;
  for (int label : pattern) {
    if (label < 1) throw std::invalid_argument("pattern labels must be positive");
    k = std::max(k, label);
  }
  std::vector<std::string> names = target_names;
  if (names.empty()) {
    static const char* defaults[] = {"x", "y", "z", "w", "v"};
    for (int i = 0; i < k; ++i)
      names.push_back(i < 5 ? defaults[i] : "x" + std::to_string(i + 1));
  }
  if (static_cast<int>(names.size()) != k)
    throw std::invalid_argument("target name count does not match label count");

  DensePoly out(names);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exps(k, 0);
    for (VarMask bits = m; bits; bits &= bits - 1)
      ++exps[pattern[std::countr_zero(bits)] - 1];
    out.add_term(exps, c);
  }
  return out;
}

DensePoly substitute_family(const SqFreePoly& p, const std::vector<FamilyCoord>& coords,
                            const std::string& symbol_name) {
  if (static_cast<int>(coords.size()) != p.num_vars())
    throw std::invalid_argument("family must assign every coordinate");
  DensePoly out({symbol_name});
  for (const auto& [m, c] : p.terms()) {
    Rat k = c;
    int power = 0;
    for (VarMask bits = m; bits; bits &= bits - 1) {
      const auto& coord = coords[std::countr_zero(bits)];
      if (coord.is_symbol)
        ++power;
      else
        k *= coord.value;
      if (sgn(k) == 0) break;
    }
    out.add_term({power}, k);
  }
  return out;
}

}  // namespace relpoly
