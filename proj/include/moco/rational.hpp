#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "moco/errors.hpp"

namespace moco {

/// A reduced fraction p/q with q >= 0, where q == 0 encodes the single ideal
/// point "infinity" (stored as 1/0). Finite values are ordered by value,
/// infinity is greater than every finite value.
class ExtendedRational {
public:
  ExtendedRational() : num_(0), den_(1) {}

  ExtendedRational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      if (num != 1)
        throw ValidationError("denominator 0 is reserved for infinity = 1/0");
      num_ = 1;
      den_ = 0;
      return;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static ExtendedRational infinity() { return ExtendedRational(1, 0); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_infinity() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) {
    return !(a == b);
  }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return a == b || a < b;
  }

  /// Unreduced determinant a.num*b.den - a.den*b.num; +-1 characterizes
  /// Farey neighbours.
  friend std::int64_t det(const ExtendedRational& a, const ExtendedRational& b) {
    return a.num_ * b.den_ - a.den_ * b.num_;
  }

  /// Componentwise mediant (p+r)/(q+s). For Farey neighbours (det +-1) the
  /// result is automatically reduced; callers relying on that must check
  /// neighbourship themselves.
  friend ExtendedRational mediant(const ExtendedRational& a, const ExtendedRational& b) {
    return ExtendedRational(a.num_ + b.num_, a.den_ + b.den_);
  }

  /// Exact componentwise mediant test, without reduction: v == (u+w) as
  /// integer pairs. This is the contraction criterion for triangulation.
  friend bool is_mediant_of(const ExtendedRational& v, const ExtendedRational& u,
                            const ExtendedRational& w) {
    return v.num_ == u.num_ + w.num_ && v.den_ == u.den_ + w.den_;
  }

  std::string str() const {
    if (is_infinity()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace moco
