#pragma once

#include <stdexcept>
#include <string>

#include "relpoly/rational.hpp"

namespace relpoly {

/// Element p + q*sqrt(d) of a real quadratic extension of the rationals.
/// d is a positive non-square integer; purely rational values carry d = 0 and
/// adopt the other operand's extension on demand, so rationals mix freely.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : p_(v) {}  // NOLINT: implicit by design
  QuadExt(Rat v) : p_(std::move(v)) {}  // NOLINT
  QuadExt(Rat p, Rat q, long d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
    if (sgn(q_) == 0) d_ = 0;
    if (d_ < 0) throw std::invalid_argument("negative extension discriminant");
  }

  const Rat& rational_part() const { return p_; }
  const Rat& radical_part() const { return q_; }
  long discriminant() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  QuadExt& operator+=(const QuadExt& rhs) {
    reconcile(rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    normalize();
    return *this;
  }
  QuadExt& operator-=(const QuadExt& rhs) {
    reconcile(rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    normalize();
    return *this;
  }
  QuadExt& operator*=(const QuadExt& rhs) {
    reconcile(rhs);
    const Rat p = p_ * rhs.p_ + q_ * rhs.q_ * d_;
    const Rat q = p_ * rhs.q_ + q_ * rhs.p_;
    p_ = p;
    q_ = q;
    normalize();
    return *this;
  }
  QuadExt& operator/=(const QuadExt& rhs) {
    reconcile(rhs);
    const Rat norm = rhs.p_ * rhs.p_ - rhs.q_ * rhs.q_ * d_;
    if (sgn(norm) == 0) throw std::domain_error("division by zero in quadratic extension");
    const Rat p = (p_ * rhs.p_ - q_ * rhs.q_ * d_) / norm;
    const Rat q = (q_ * rhs.p_ - p_ * rhs.q_) / norm;
    p_ = p;
    q_ = q;
    normalize();
    return *this;
  }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  QuadExt operator-() const { return QuadExt(-p_, -q_, d_); }

  bool operator==(const QuadExt& rhs) const {
    return (*this - rhs).sign_value() == 0;
  }

  /// Exact sign of p + q*sqrt(d).
  int sign_value() const {
    const int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 against d*q^2.
    const int cmp = cmp_abs(p_ * p_, q_ * q_ * d_);
    return cmp == 0 ? 0 : (cmp > 0 ? sp : sq);
  }

  std::string str() const {
    if (d_ == 0) return rat_to_string(p_);
    return rat_to_string(p_) + " + " + rat_to_string(q_) + "*sqrt(" + std::to_string(d_) + ")";
  }

 private:
  static int cmp_abs(const Rat& a, const Rat& b) { return cmp(a, b); }

  void normalize() {
    if (sgn(q_) == 0) d_ = 0;
  }
  void reconcile(const QuadExt& rhs) {
    if (d_ == 0) {
      d_ = rhs.d_;
    } else if (rhs.d_ != 0 && rhs.d_ != d_) {
      throw std::invalid_argument("mixing distinct quadratic extensions");
    }
  }

  Rat p_ = 0;
  Rat q_ = 0;
  long d_ = 0;
};

inline int sign(const QuadExt& x) { return x.sign_value(); }

}  // namespace relpoly
