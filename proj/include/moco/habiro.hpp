#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "moco/cyclotomic.hpp"
#include "moco/errors.hpp"
#include "moco/polynomial.hpp"

namespace moco {

/// True iff r = p^k for a single prime p and k >= 1.
inline bool is_prime_power(std::int64_t r) {
  if (r < 2) return false;
  for (std::int64_t p = 2; p * p <= r; ++p) {
    if (r % p == 0) {
      while (r % p == 0) r /= p;
      return r == 1;
    }
  }
  return true;  // r itself is prime
}

/// If max(m,n)/min(m,n) is a positive prime power the cyclotomic ideals
/// (Phi_m) and (Phi_n) share a residue characteristic; otherwise they are
/// comaximal. Non-divisible ratios count as comaximal.
inline bool comaximal(std::int64_t m, std::int64_t n) {
  if (m == n) throw DomainError("comaximality is defined for distinct indices");
  if (m < 1 || n < 1) throw DomainError("indices must be positive");
  std::int64_t a = std::max(m, n), b = std::min(m, n);
  if (a % b != 0) return true;
  return !is_prime_power(a / b);
}

inline cpp_int cyclotomic_resultant(int m, int n) {
  if (m == n) throw DomainError("resultant oracle needs distinct indices");
  return resultant(cyclotomic_polynomial(m), cyclotomic_polynomial(n));
}

/// Nearness graph on a finite set of indices: n and m are adjacent iff their
/// ratio is a positive or negative prime power, i.e. iff the cyclotomic
/// primes are not comaximal.
struct CliqueGraph {
  std::vector<std::int64_t> nodes;                       // sorted
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::vector<std::int64_t>> components;     // each sorted, by least node
};

inline CliqueGraph clique_graph(const std::set<std::int64_t>& s) {
  if (s.empty()) throw DomainError("clique graph needs a non-empty set");
  CliqueGraph g;
  g.nodes.assign(s.begin(), s.end());
  for (std::int64_t n : g.nodes)
    if (n < 1) throw DomainError("clique graph indices must be positive");

  std::vector<std::size_t> parent(g.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
      if (!comaximal(g.nodes[i], g.nodes[j])) {
        g.edges.emplace_back(g.nodes[i], g.nodes[j]);
        parent[find(i)] = find(j);
      }

  std::map<std::size_t, std::vector<std::int64_t>> comp;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) comp[find(i)].push_back(g.nodes[i]);
  for (auto& [root, members] : comp) g.components.push_back(std::move(members));
  std::sort(g.components.begin(), g.components.end());
  return g;
}

/// Hypothesis of the completion-inclusion theorem: every clique component of
/// S meets S'. The inclusion itself is quoted theory, not recomputed.
inline bool hits_every_component(const std::set<std::int64_t>& s_prime,
                                 const std::set<std::int64_t>& s) {
  for (std::int64_t x : s_prime)
    if (!s.count(x)) throw NotSubset("S' must be a subset of S");
  CliqueGraph g = clique_graph(s);
  for (const auto& comp : g.components) {
    bool hit = false;
    for (std::int64_t x : comp)
      if (s_prime.count(x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

/// Divisor-closedness of S.
inline bool is_saturated(const std::set<std::int64_t>& s) {
  for (std::int64_t n : s) {
    if (n < 1) throw DomainError("saturation is defined for positive integers");
    for (std::int64_t d = 1; d * d <= n; ++d)
      if (n % d == 0 && (!s.count(d) || !s.count(n / d))) return false;
  }
  return true;
}

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n); the empty product at n = 0 is 1.
inline IntPolynomial q_pochhammer(int n) {
  IntPolynomial acc = IntPolynomial::constant(1);
  for (int k = 1; k <= n; ++k)
    acc = acc * (IntPolynomial::constant(1) - IntPolynomial::monomial(1, static_cast<std::size_t>(k)));
  return acc;
}

/// Truncation of an element of the inverse limit of Z[q]/((q;q)_n): the
/// residues r_0..r_N with r_n reduced mod (q;q)_n and compatible downwards.
/// (q^n-1)...(q-1) differs from (q;q)_n by the unit (-1)^n, so both generate
/// the same ideal; (q;q)_n is the canonical modulus here.
class HabiroElement {
public:
  /// From series coefficients a_0(q)..a_N(q): r_n = sum_{k<n} a_k (q;q)_k.
  static HabiroElement from_series(const std::vector<IntPolynomial>& coeffs) {
    if (coeffs.empty()) throw DomainError("series needs at least a_0");
    HabiroElement h;
    int level = static_cast<int>(coeffs.size()) - 1;
    IntPolynomial partial;  // running sum of a_k (q;q)_k
    IntPolynomial poch = IntPolynomial::constant(1);
    for (int n = 0; n <= level; ++n) {
      IntPolynomial modulus = q_pochhammer(n);
      h.residues_.push_back(mod_unit(partial, modulus));
      partial = partial + coeffs[static_cast<std::size_t>(n)] * poch;
      poch = poch * (IntPolynomial::constant(1) -
                     IntPolynomial::monomial(1, static_cast<std::size_t>(n) + 1));
    }
    return h;
  }

  static HabiroElement zero(int level) {
    return from_series(std::vector<IntPolynomial>(static_cast<std::size_t>(level) + 1));
  }

  static HabiroElement constant(cpp_int c, int level) {
    std::vector<IntPolynomial> coeffs(static_cast<std::size_t>(level) + 1);
    coeffs[0] = IntPolynomial::constant(std::move(c));
    return from_series(coeffs);
  }

  /// Kontsevich series: all a_n = 1.
  static HabiroElement kontsevich(int level) {
    std::vector<IntPolynomial> coeffs(static_cast<std::size_t>(level) + 1,
                                      IntPolynomial::constant(1));
    return from_series(coeffs);
  }

  int level() const { return static_cast<int>(residues_.size()) - 1; }
  const IntPolynomial& residue(int n) const { return residues_[static_cast<std::size_t>(n)]; }

  bool compatible() const {
    for (int n = 0; n < level(); ++n)
      if (mod_unit(residues_[static_cast<std::size_t>(n) + 1], q_pochhammer(n)) !=
          residues_[static_cast<std::size_t>(n)])
        return false;
    return true;
  }

  friend HabiroElement operator+(const HabiroElement& a, const HabiroElement& b) {
    return a.combine(b, [](const IntPolynomial& x, const IntPolynomial& y) { return x + y; });
  }
  friend HabiroElement operator*(const HabiroElement& a, const HabiroElement& b) {
    return a.combine(b, [](const IntPolynomial& x, const IntPolynomial& y) { return x * y; });
  }
  friend bool operator==(const HabiroElement& a, const HabiroElement& b) {
    return a.residues_ == b.residues_;
  }

private:
  HabiroElement() = default;

  template <typename Op>
  HabiroElement combine(const HabiroElement& other, Op op) const {
    int level_out = std::min(level(), other.level());
    HabiroElement h;
    for (int n = 0; n <= level_out; ++n)
      h.residues_.push_back(mod_unit(op(residues_[static_cast<std::size_t>(n)],
                                        other.residues_[static_cast<std::size_t>(n)]),
                                     q_pochhammer(n)));
    return h;
  }

  std::vector<IntPolynomial> residues_;
};

/// Value at the primitive m-th root of unity. Exact once the truncation
/// level reaches m, because (q;q)_n vanishes at zeta_m for all n >= m.
inline CyclotomicInteger evaluate_at_root(const HabiroElement& h, int m) {
  if (m < 1) throw DomainError("root index must be positive");
  if (h.level() < m)
    throw InsufficientTruncation("level " + std::to_string(h.level()) +
                                 " is below the root index " + std::to_string(m));
  return CyclotomicInteger(m, h.residue(h.level()));
}

/// Quadratic character of conductor 12: +1 on 1,11, -1 on 5,7 (mod 12).
inline int chi12(std::int64_t n) {
  switch (((n % 12) + 12) % 12) {
    case 1:
    case 11:
      return 1;
    case 5:
    case 7:
      return -1;
    default:
      return 0;
  }
}

struct ZagierReport {
  int m = 1;
  CyclotomicInteger exact_value;
  std::complex<double> exact_embedded;
  std::vector<double> radii;
  std::vector<std::complex<double>> radial_values;
  std::complex<double> extrapolated;
  double difference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

namespace detail {

/// -1/2 sum_{n>=1} n chi12(n) q^((n^2-1)/24) at q = r zeta_m, summed until
/// the terms drop below 1e-15.
inline std::complex<double> zagier_eta_side(double r, int m) {
  std::complex<double> total = 0.0;
  constexpr double kTermFloor = 1e-15;
  constexpr std::int64_t kIterationCap = 10'000'000;
  for (std::int64_t n = 1; n <= kIterationCap; n += 2) {
    int c = chi12(n);
    if (c == 0) continue;
    std::int64_t e = (n * n - 1) / 24;
    double mag = static_cast<double>(n) * std::pow(r, static_cast<double>(e));
    double angle = 2.0 * std::numbers::pi * static_cast<double>(e % m) / m;
    total += static_cast<double>(c) * mag * std::complex<double>(std::cos(angle), std::sin(angle));
    if (mag < kTermFloor) return -0.5 * total;
  }
  throw NonConvergence("eta-side series did not reach the term floor");
}

/// Neville extrapolation of (h_i, v_i) to h = 0.
inline std::complex<double> extrapolate_to_zero(const std::vector<double>& h,
                                                std::vector<std::complex<double>> v) {
  for (std::size_t j = 1; j < v.size(); ++j)
    for (std::size_t i = v.size() - 1; i >= j; --i) {
      double denom = h[i - j] - h[i];
      v[i] = ((h[i - j] - 0.0) * v[i] - (h[i] - 0.0) * v[i - 1]) / denom;
      if (i == j) break;
    }
  return v.back();
}

}  // namespace detail

/// Compares the exact Kontsevich value at zeta_m with the radial limit of
/// Zagier's eta-like series, extrapolated over the given radii.
inline ZagierReport zagier_radial_check(int m, std::vector<double> radii = {},
                                        double tolerance = 0.05) {
  if (m < 1 || m > 6) throw DomainError("radial check supports 1 <= m <= 6");
  if (radii.empty())
    for (int k = 1; k <= 4; ++k) radii.push_back(1.0 - std::pow(10.0, -k));
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]) || radii[i] <= 0.0 || radii[i + 1] >= 1.0)
      throw DomainError("radii must increase strictly inside (0,1)");

  ZagierReport report{.m = m,
                      .exact_value = evaluate_at_root(HabiroElement::kontsevich(m), m),
                      .exact_embedded = {},
                      .radii = radii,
                      .radial_values = {},
                      .extrapolated = {},
                      .difference = 0.0,
                      .tolerance = tolerance,
                      .pass = false};
  report.exact_embedded = report.exact_value.to_complex();

  std::vector<double> h;
  for (double r : radii) {
    report.radial_values.push_back(detail::zagier_eta_side(r, m));
    h.push_back(1.0 - r);
  }
  report.extrapolated = detail::extrapolate_to_zero(h, report.radial_values);
  report.difference = std::abs(report.extrapolated - report.exact_embedded);
  report.pass = report.difference < tolerance;
  return report;
}

}  // namespace moco
