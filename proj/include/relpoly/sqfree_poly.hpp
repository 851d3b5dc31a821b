#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "relpoly/rational.hpp"

namespace relpoly {

/// Bitmask over variable indices 1..n (bit i-1 stands for variable i).
using VarMask = std::uint32_t;

class DensePoly;

/// Square-free (multilinear) polynomial with exact rational coefficients.
///
/// Terms are stored canonically: a map from variable subset to a nonzero
/// coefficient. Two polynomials are equal iff their term maps are identical.
class SqFreePoly {
 public:
  SqFreePoly() = default;
  explicit SqFreePoly(int num_vars) : n_(num_vars) {}

  static SqFreePoly constant(int num_vars, const Rat& c);
  static SqFreePoly variable(int num_vars, int index);
  /// Builds from (variable-index-list, coefficient) pairs; like terms collect.
  static SqFreePoly from_terms(int num_vars,
                               const std::vector<std::pair<std::vector<int>, Rat>>& terms);

  int num_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<VarMask, Rat>& terms() const { return terms_; }
  Rat coeff(VarMask mask) const;
  int degree() const;

  void add_term(VarMask mask, const Rat& c);

  SqFreePoly& operator+=(const SqFreePoly& rhs);
  SqFreePoly& operator-=(const SqFreePoly& rhs);
  friend SqFreePoly operator+(SqFreePoly lhs, const SqFreePoly& rhs) { return lhs += rhs; }
  friend SqFreePoly operator-(SqFreePoly lhs, const SqFreePoly& rhs) { return lhs -= rhs; }
  SqFreePoly operator-() const;
  SqFreePoly scaled(const Rat& c) const;

  /// Ordinary polynomial product. Requires the operands to have disjoint
  /// supports monomial-by-monomial (the product must stay square-free);
  /// throws std::domain_error otherwise.
  friend SqFreePoly operator*(const SqFreePoly& lhs, const SqFreePoly& rhs);

  bool operator==(const SqFreePoly& rhs) const {
    return n_ == rhs.n_ && terms_ == rhs.terms_;
  }

  Rat evaluate(const std::vector<Rat>& point) const;

  /// Exact partial derivative with respect to variable `index` (1-based).
  SqFreePoly partial(int index) const;

  /// Substitutes rationals for a subset of variables; the result lives in the
  /// same ambient variable space with the fixed variables eliminated.
  SqFreePoly substitute(const std::map<int, Rat>& fixed) const;

  /// Canonical text form, e.g. "R1*R4 + R2*R5 - R1*R2*R3*R4". Terms are
  /// ordered by (total degree, bitmask). Optional custom variable names.
  std::string str(const std::vector<std::string>& names = {}) const;

  nlohmann::json to_json() const;
  static SqFreePoly from_json(const nlohmann::json& j);

 private:
  int n_ = 0;
  std::map<VarMask, Rat> terms_;
};

/// Product under the Boolean idempotent rule R_i^2 -> R_i: monomials multiply
/// by set union of their variable subsets.
SqFreePoly mul_idempotent(const SqFreePoly& p, const SqFreePoly& q);

/// Replaces each variable by a target variable (pattern[i-1] = target label in
/// 1..k); exponents accumulate, producing a general-exponent polynomial over
/// the target variables.
DensePoly substitute_pattern(const SqFreePoly& p, const std::vector<int>& pattern,
                             const std::vector<std::string>& target_names = {});

/// One coordinate of a parametrized point: either a fixed rational or the
/// free symbol of the family.
struct FamilyCoord {
  bool is_symbol = false;
  Rat value = 0;
  static FamilyCoord symbol() { return {true, 0}; }
  static FamilyCoord fixed(Rat v) { return {false, std::move(v)}; }
};

/// Substitutes a parametrized point into p, yielding a univariate polynomial
/// in the family's free symbol.
DensePoly substitute_family(const SqFreePoly& p, const std::vector<FamilyCoord>& coords,
                            const std::string& symbol_name = "s");

}  // namespace relpoly
