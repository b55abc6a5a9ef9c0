#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moco/errors.hpp"

namespace moco {

using boost::multiprecision::cpp_int;

/// Dense univariate polynomial over Z with exact big-integer coefficients,
/// trailing zeros trimmed; the zero polynomial has an empty vector and
/// degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;

  IntPolynomial(std::initializer_list<cpp_int> coeffs) : coeffs_(coeffs) { trim(); }

  explicit IntPolynomial(std::vector<cpp_int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(cpp_int c) { return IntPolynomial({std::move(c)}); }

  /// c * q^k
  static IntPolynomial monomial(cpp_int c, std::size_t k) {
    std::vector<cpp_int> v(k + 1);
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const cpp_int& operator[](std::size_t i) const {
    static const cpp_int zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const std::vector<cpp_int>& coeffs() const { return coeffs_; }

  const cpp_int& leading() const {
    if (is_zero()) throw InternalError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<cpp_int> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return IntPolynomial(std::move(out));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<cpp_int> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return IntPolynomial(std::move(out));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<cpp_int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
  }
  IntPolynomial operator-() const {
    std::vector<cpp_int> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  cpp_int evaluate(const cpp_int& x) const {
    cpp_int acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  /// Division with remainder by a divisor whose leading coefficient is a
  /// unit (+-1); quotient and remainder stay over Z.
  friend std::pair<IntPolynomial, IntPolynomial> divmod_unit(const IntPolynomial& a,
                                                             const IntPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (b.leading() != 1 && b.leading() != -1)
      throw DomainError("divmod_unit needs a unit leading coefficient");
    std::vector<cpp_int> rem = a.coeffs_;
    int db = b.degree();
    std::vector<cpp_int> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db) + 1 : 0);
    for (int i = a.degree(); i >= db; --i) {
      cpp_int factor = rem[static_cast<std::size_t>(i)] * b.leading();  // lc = +-1 so 1/lc = lc
      if (factor == 0) continue;
      quot[static_cast<std::size_t>(i - db)] = factor;
      for (int j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  /// Exact division; throws if the remainder is nonzero.
  friend IntPolynomial divexact_unit(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = divmod_unit(a, b);
    if (!r.is_zero()) throw InternalError("expected exact polynomial division");
    return q;
  }

  friend IntPolynomial mod_unit(const IntPolynomial& a, const IntPolynomial& b) {
    return divmod_unit(a, b).second;
  }

  /// Elementwise exact division by an integer.
  IntPolynomial divexact_scalar(const cpp_int& c) const {
    if (c == 0) throw DomainError("division by zero");
    std::vector<cpp_int> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] % c != 0) throw InternalError("scalar division is not exact");
      out[i] = coeffs_[i] / c;
    }
    return IntPolynomial(std::move(out));
  }

  /// Prints like "q^4 - q^2 + 1".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const cpp_int& c = coeffs_[i];
      if (c == 0) continue;
      cpp_int mag = c < 0 ? cpp_int(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (i == 0) {
        out << mag;
      } else {
        if (mag != 1) out << mag << "*";
        out << "q";
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<cpp_int> coeffs_;
};

namespace detail {

inline cpp_int pow_int(cpp_int base, int e) {
  cpp_int acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Pseudo-remainder: the r with lc(b)^(deg a - deg b + 1) * a = q*b + r and
// deg r < deg b. Each reduction step scales by one factor of lc(b); if the
// degree drops by more than one the missing factors are applied at the end.
inline IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  int db = b.degree();
  int delta = a.degree() - db;
  int reductions = 0;
  while (a.degree() >= db) {
    int da = a.degree();
    IntPolynomial shifted =
        IntPolynomial::monomial(a.leading(), static_cast<std::size_t>(da - db)) * b;
    std::vector<cpp_int> v(static_cast<std::size_t>(da) + 1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] * b.leading() - shifted[i];
    a = IntPolynomial(std::move(v));
    ++reductions;
  }
  if (reductions < delta + 1)
    a = a * IntPolynomial::constant(pow_int(b.leading(), delta + 1 - reductions));
  return a;
}

}  // namespace detail

/// Resultant by the subresultant polynomial remainder sequence; exact over Z.
/// Convention: res(a, b) = lc(a)^deg(b) * prod b at the roots of a.
inline cpp_int resultant(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0) return detail::pow_int(a.leading(), b.degree());
  if (b.degree() == 0) return detail::pow_int(b.leading(), a.degree());
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    std::swap(a, b);
  }
  cpp_int g = 1, h = 1;
  while (true) {
    int da = a.degree(), db = b.degree();
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    IntPolynomial r = detail::pseudo_remainder(a, b);
    a = b;
    cpp_int divisor = g * detail::pow_int(h, delta);
    b = r.divexact_scalar(divisor);
    g = a.leading();
    if (delta > 0) {
      cpp_int hd = detail::pow_int(g, delta);
      cpp_int hprev = detail::pow_int(h, delta - 1);
      if (hd % hprev != 0 && hprev != 1)
        throw InternalError("subresultant h update is not exact");
      h = hd / hprev;
    }
    if (b.is_zero()) return 0;
    if (b.degree() == 0) {
      // res = sign * lc(b)^deg(a) / h^(deg(a)-1)
      cpp_int num = detail::pow_int(b.leading(), a.degree());
      cpp_int den = detail::pow_int(h, a.degree() - 1);
      if (den != 0 && num % den != 0) throw InternalError("subresultant endgame is not exact");
      return sign * (num / den);
    }
  }
}

}  // namespace moco
