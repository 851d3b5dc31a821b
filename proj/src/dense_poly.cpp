#include "relpoly/dense_poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace relpoly {

namespace {

void check_same_space(const DensePoly& a, const DensePoly& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("variable-set mismatch");
}

}  // namespace

DensePoly DensePoly::constant(std::vector<std::string> vars, const Rat& c) {
  DensePoly p(std::move(vars));
  p.add_term(std::vector<int>(p.vars_.size(), 0), c);
  return p;
}

DensePoly DensePoly::univariate(const std::string& var, std::vector<Rat> coeffs) {
  DensePoly p({var});
  for (int e = 0; e < static_cast<int>(coeffs.size()); ++e) p.add_term({e}, coeffs[e]);
  return p;
}

int DensePoly::total_degree() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void DensePoly::add_term(const std::vector<int>& exps, const Rat& c) {
  if (exps.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

DensePoly& DensePoly::operator+=(const DensePoly& rhs) {
  check_same_space(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& rhs) {
  check_same_space(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs) {
  check_same_space(lhs, rhs);
  DensePoly out(lhs.vars_);
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

DensePoly DensePoly::scaled(const Rat& c) const {
  DensePoly out(vars_);
  if (sgn(c) == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

Rat DensePoly::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size())
    throw std::invalid_argument("point length does not match variable count");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int rep = 0; rep < e[i]; ++rep) term *= point[i];
    total += term;
  }
  return total;
}

DensePoly DensePoly::derivative(int var_index) const {
  if (var_index < 0 || var_index >= static_cast<int>(vars_.size()))
    throw std::out_of_range("variable index out of range");
  DensePoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var_index] == 0) continue;
    std::vector<int> d = e;
    --d[var_index];
    out.add_term(d, c * e[var_index]);
  }
  return out;
}

std::vector<Rat> DensePoly::univariate_coeffs() const {
  if (!is_univariate()) throw std::logic_error("polynomial is not univariate");
  std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(total_degree(), -1) + 1), Rat(0));
  for (const auto& [e, c] : terms_) coeffs[e[0]] = c;
  return coeffs;
}

std::string DensePoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::vector<int>*> order;
  for (const auto& [e, c] : terms_) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    const int da = std::accumulate(a->begin(), a->end(), 0);
    const int db = std::accumulate(b->begin(), b->end(), 0);
    return da != db ? da < db : *a < *b;
  });

  std::string out;
  bool first = true;
  for (const auto* e : order) {
    const Rat& c = terms_.at(*e);
    const bool neg = sgn(c) < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t i = 0; i < e->size(); ++i) {
      if ((*e)[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += vars_[i];
      if ((*e)[i] > 1) vars += "^" + std::to_string((*e)[i]);
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

nlohmann::json DensePoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_)
    terms.push_back({{"coeff", rat_to_string(c)}, {"exps", e}});
  return {{"vars", vars_}, {"terms", terms}};
}

DensePoly DensePoly::from_json(const nlohmann::json& j) {
  DensePoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& term : j.at("terms"))
    p.add_term(term.at("exps").get<std::vector<int>>(),
               parse_rat(term.at("coeff").get<std::string>()));
  return p;
}

}  // namespace relpoly
