#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "relpoly/rational.hpp"

namespace relpoly {

/// Polynomial with integer exponents over a small ordered set of named
/// variables. Used for diagonal restrictions and other post-substitution
/// results where genuine powers appear.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static DensePoly constant(std::vector<std::string> vars, const Rat& c);
  /// Dense univariate constructor, coefficients ascending by degree.
  static DensePoly univariate(const std::string& var, std::vector<Rat> coeffs);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const std::vector<int>& exps, const Rat& c);

  DensePoly& operator+=(const DensePoly& rhs);
  DensePoly& operator-=(const DensePoly& rhs);
  friend DensePoly operator+(DensePoly lhs, const DensePoly& rhs) { return lhs += rhs; }
  friend DensePoly operator-(DensePoly lhs, const DensePoly& rhs) { return lhs -= rhs; }
  friend DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs);
  DensePoly scaled(const Rat& c) const;

  bool operator==(const DensePoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
  }

  Rat evaluate(const std::vector<Rat>& point) const;
  DensePoly derivative(int var_index) const;

  bool is_univariate() const { return vars_.size() == 1; }
  /// Ascending coefficient vector; requires a univariate polynomial.
  std::vector<Rat> univariate_coeffs() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static DensePoly from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, Rat> terms_;  // exponent vector -> nonzero coeff
};

}  // namespace relpoly
