#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "moco/errors.hpp"
#include "moco/polynomial.hpp"

namespace moco {

inline std::vector<int> divisors_of(int n) {
  std::vector<int> out;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// n-th cyclotomic polynomial by exact division: Phi_n = (q^n - 1) / prod of
/// Phi_d over proper divisors d of n.
inline IntPolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic polynomial index must be positive");
  std::vector<IntPolynomial> phi(static_cast<std::size_t>(n) + 1);
  for (int k : divisors_of(n)) {
    IntPolynomial num = IntPolynomial::monomial(1, static_cast<std::size_t>(k)) -
                        IntPolynomial::constant(1);
    for (int d : divisors_of(k))
      if (d != k) num = divexact_unit(num, phi[static_cast<std::size_t>(d)]);
    phi[static_cast<std::size_t>(k)] = num;
  }
  return phi[static_cast<std::size_t>(n)];
}

/// Element of Z[q]/Phi_m(q), reduced on construction; phi(m) coefficients.
class CyclotomicInteger {
public:
  explicit CyclotomicInteger(int conductor, IntPolynomial value = IntPolynomial())
      : conductor_(conductor) {
    if (conductor < 1) throw DomainError("conductor must be positive");
    modulus_ = cyclotomic_polynomial(conductor);
    value_ = mod_unit(value, modulus_);
  }

  int conductor() const { return conductor_; }
  const IntPolynomial& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  bool is_rational() const { return value_.degree() <= 0; }
  cpp_int rational_part() const {
    if (!is_rational()) throw DomainError("cyclotomic value is not rational");
    return value_[0];
  }

  friend CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.require_same(b);
    return CyclotomicInteger(a.conductor_, a.value_ + b.value_);
  }
  friend CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.require_same(b);
    return CyclotomicInteger(a.conductor_, a.value_ - b.value_);
  }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.require_same(b);
    return CyclotomicInteger(a.conductor_, a.value_ * b.value_);
  }
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return a.conductor_ == b.conductor_ && a.value_ == b.value_;
  }

  /// Complex embedding at zeta_m = exp(2 pi i / m).
  std::complex<double> to_complex() const {
    std::complex<double> acc = 0.0;
    for (int j = 0; j <= value_.degree(); ++j) {
      double angle = 2.0 * std::numbers::pi * j / conductor_;
      acc += static_cast<double>(value_[static_cast<std::size_t>(j)]) *
             std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
  }

  /// "[c0, c1, ...] (mod Phi_m)" with phi(m) coefficients.
  std::string str() const {
    std::ostringstream out;
    out << "[";
    int width = euler_phi(conductor_);
    for (int j = 0; j < width; ++j) {
      if (j) out << ", ";
      out << value_[static_cast<std::size_t>(j)];
    }
    out << "] (mod Phi_" << conductor_ << ")";
    return out.str();
  }

private:
  void require_same(const CyclotomicInteger& other) const {
    if (conductor_ != other.conductor_)
      throw DomainError("cyclotomic arithmetic needs matching conductors");
  }

  int conductor_;
  IntPolynomial modulus_;
  IntPolynomial value_;
};

}  // namespace moco
