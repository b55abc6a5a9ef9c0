#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moco/cyclotomic.hpp"
#include "moco/dessin.hpp"
#include "moco/errors.hpp"
#include "moco/permgroup.hpp"

namespace moco {

using boost::multiprecision::cpp_rational;

namespace repdetail {

/// Phi_n with machine-int coefficients; fine for the conductors a character
/// table at desk scale can produce.
inline std::vector<std::int64_t> phi_coeffs_i64(int n) {
  IntPolynomial p = cyclotomic_polynomial(n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(p.degree()) + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i].convert_to<std::int64_t>();
  return out;
}

/// Reduce a raw exponent vector (coefficient of zeta^t at index t) mod Phi_n;
/// result has exactly phi(n) entries.
inline std::vector<std::int64_t> reduce_mod_phi_i64(std::vector<std::int64_t> raw, int n) {
  std::vector<std::int64_t> phi = phi_coeffs_i64(n);
  int dp = static_cast<int>(phi.size()) - 1;
  if (static_cast<int>(raw.size()) < dp) raw.resize(static_cast<std::size_t>(dp), 0);
  for (int i = static_cast<int>(raw.size()) - 1; i >= dp; --i) {
    std::int64_t factor = raw[static_cast<std::size_t>(i)];
    if (factor == 0) continue;
    for (int j = 0; j <= dp; ++j)
      raw[static_cast<std::size_t>(i - dp + j)] -= factor * phi[static_cast<std::size_t>(j)];
  }
  raw.resize(static_cast<std::size_t>(dp));
  return raw;
}

}  // namespace repdetail

/// Exact cyclotomic character value: an element of Z[zeta_n] in the power
/// basis, with n the order of the class representative it belongs to.
class CharValue {
public:
  CharValue() : conductor_(1), coeffs_(1, 0) {}

  static CharValue integer(std::int64_t v) {
    CharValue c;
    c.coeffs_[0] = v;
    return c;
  }

  /// sum_t mult[t] * zeta_n^t, reduced.
  static CharValue zeta_sum(int conductor, std::vector<std::int64_t> mult) {
    CharValue c;
    c.conductor_ = conductor;
    mult.resize(static_cast<std::size_t>(conductor), 0);
    c.coeffs_ = repdetail::reduce_mod_phi_i64(std::move(mult), conductor);
    return c;
  }

  int conductor() const { return conductor_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }
  std::int64_t rational() const {
    if (!is_rational()) throw DomainError("character value is not rational");
    // at conductor 2 the basis is {1} as well, so coeffs_[0] is the value
    return coeffs_[0];
  }

  /// (a, b) with value = a + b*zeta_3; only for conductors 1, 2, 3.
  std::pair<std::int64_t, std::int64_t> zeta3_pair() const {
    if (conductor_ <= 2) return {coeffs_[0], 0};
    if (conductor_ == 3) return {coeffs_[0], coeffs_.size() > 1 ? coeffs_[1] : 0};
    throw DomainError("value does not live in Q(zeta_3)");
  }

  CharValue conj() const {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(conductor_), 0);
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      raw[static_cast<std::size_t>((conductor_ - static_cast<int>(t)) % conductor_)] += coeffs_[t];
    return zeta_sum(conductor_, std::move(raw));
  }

  friend bool operator==(const CharValue& a, const CharValue& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const CharValue& a, const CharValue& b) {
    if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
    return a.coeffs_ < b.coeffs_;
  }

  std::string str() const {
    if (is_rational()) return std::to_string(coeffs_[0]);
    std::vector<cpp_int> v(coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v)).str() + " (q = zeta_" + std::to_string(conductor_) + ")";
  }

private:
  int conductor_;
  std::vector<std::int64_t> coeffs_;
};

/// One value per conjugacy class, in class order.
struct ClassFunction {
  std::vector<CharValue> values;
};

/// Fixed points of each class representative.
inline ClassFunction permutation_character(const ConjugacyClasses& classes) {
  ClassFunction chi;
  for (const auto& rep : classes.representatives())
    chi.values.push_back(CharValue::integer(rep.fixed_points()));
  return chi;
}

namespace repdetail {

/// Exact sum over classes of h_c * f_c * conj(g_c), returned reduced mod
/// Phi_e in the power basis of Z[zeta_e]. Per-class products are computed in
/// the small conductor of that class; only the final reduction needs big
/// integers.
inline std::vector<cpp_int> hermitian_sum(const ConjugacyClasses& classes, const ClassFunction& f,
                                          const ClassFunction& g, std::int64_t exponent) {
  if (f.values.size() != classes.count() || g.values.size() != classes.count())
    throw DomainError("class function length does not match the class count");
  std::size_t e = static_cast<std::size_t>(exponent);
  std::vector<cpp_int> folded(e, 0);
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const CharValue& fv = f.values[c];
    CharValue gv = g.values[c].conj();
    int of = fv.conductor(), og = gv.conductor();
    int o = std::lcm(of, og);
    // multiply in Z[zeta_o]
    std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * o), 0);
    for (std::size_t i = 0; i < fv.coeffs().size(); ++i) {
      if (fv.coeffs()[i] == 0) continue;
      for (std::size_t j = 0; j < gv.coeffs().size(); ++j)
        prod[i * static_cast<std::size_t>(o / of) + j * static_cast<std::size_t>(o / og)] +=
            fv.coeffs()[i] * gv.coeffs()[j];
    }
    std::vector<std::int64_t> reduced = reduce_mod_phi_i64(std::move(prod), o);
    std::int64_t size = classes.sizes()[c];
    std::size_t stride = e / static_cast<std::size_t>(o);
    for (std::size_t t = 0; t < reduced.size(); ++t)
      if (reduced[t] != 0) folded[t * stride] += cpp_int(reduced[t]) * size;
  }
  // reduce mod Phi_e exactly
  IntPolynomial phi = cyclotomic_polynomial(static_cast<int>(exponent));
  IntPolynomial rem = mod_unit(IntPolynomial(std::move(folded)), phi);
  std::vector<cpp_int> out(static_cast<std::size_t>(phi.degree()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rem[i];
  return out;
}

}  // namespace repdetail

/// (1/|G|) sum over classes of size * f * conj(g). The result must be
/// rational, which holds whenever f and g are integral combinations of
/// characters.
inline cpp_rational inner_product(const ConjugacyClasses& classes, std::int64_t group_order,
                                  const ClassFunction& f, const ClassFunction& g) {
  std::vector<cpp_int> sum = repdetail::hermitian_sum(classes, f, g, classes.exponent());
  for (std::size_t i = 1; i < sum.size(); ++i)
    if (sum[i] != 0) throw DomainError("inner product is not rational");
  return cpp_rational(sum.empty() ? cpp_int(0) : sum[0], cpp_int(group_order));
}

struct CharacterTableOptions {
  std::int64_t class_enum_bound = 10'000'000;
  std::size_t max_classes = 40;
};

/// Complete exact character table by the Burnside-Dixon method: the class
/// matrices are simultaneously diagonalized over a prime field F_p with
/// p = 1 mod exponent(G) and p > 2 sqrt(|G|), the central characters are
/// converted to degrees and character values mod p, and the values are
/// lifted to Z[zeta] through the eigenvalue-multiplicity counts. Both
/// orthogonality relations are verified exactly before the table is
/// returned.
class CharacterTable {
public:
  static CharacterTable build(const PermutationGroup& g, CharacterTableOptions opts = {});

  const ConjugacyClasses& classes() const { return classes_; }
  std::int64_t group_order() const { return order_; }
  std::size_t size() const { return degrees_.size(); }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  const CharValue& value(std::size_t chi, std::size_t cls) const {
    return values_[chi][cls];
  }
  ClassFunction irreducible(std::size_t chi) const { return ClassFunction{values_[chi]}; }
  std::int64_t exponent() const { return exponent_; }
  std::int64_t dixon_prime() const { return prime_; }

private:
  void verify() const;

  ConjugacyClasses classes_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::int64_t prime_ = 0;
  std::vector<std::int64_t> degrees_;
  std::vector<std::vector<CharValue>> values_;  // [chi][class]
};

namespace repdetail {

struct Fp {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t acc = 1;
    a %= p;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
};

inline bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest prime = 1 (mod e) exceeding the given floor.
inline std::int64_t find_dixon_prime(std::int64_t e, std::int64_t floor_value) {
  std::int64_t p = e + 1;
  while (p <= floor_value || !is_prime_i64(p)) p += e;
  return p;
}

inline std::uint64_t primitive_root(const Fp& fp) {
  std::uint64_t m = fp.p - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = m;
  for (std::uint64_t d = 2; d * d <= rest; ++d)
    if (rest % d == 0) {
      prime_factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  if (rest > 1) prime_factors.push_back(rest);
  for (std::uint64_t z = 2; z < fp.p; ++z) {
    bool ok = true;
    for (std::uint64_t q : prime_factors)
      if (fp.pow(z, m / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  throw LiftFailure("no primitive root found");
}

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;  // row-major

inline Vec mat_vec(const Fp& fp, const Mat& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c) acc = fp.add(acc, fp.mul(m[r][c], v[c]));
    out[r] = acc;
  }
  return out;
}

/// Solve A x = b for x where the columns of A are the basis vectors; A is
/// k x m with rank m. Throws if inconsistent.
inline Vec solve_in_basis(const Fp& fp, const std::vector<Vec>& basis, const Vec& b) {
  std::size_t k = b.size(), m = basis.size();
  Mat aug(k, Vec(m + 1, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug[r][c] = basis[c][r];
    aug[r][m] = b[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < m && row < k; ++col) {
    std::size_t sel = row;
    while (sel < k && aug[sel][col] == 0) ++sel;
    if (sel == k) throw LiftFailure("basis is not independent");
    std::swap(aug[sel], aug[row]);
    std::uint64_t inv = fp.inv(aug[row][col]);
    for (std::size_t c = col; c <= m; ++c) aug[row][c] = fp.mul(aug[row][c], inv);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      std::uint64_t f = aug[r][col];
      for (std::size_t c = col; c <= m; ++c)
        aug[r][c] = fp.sub(aug[r][c], fp.mul(f, aug[row][c]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < k; ++r)
    if (aug[r][m] != 0) throw LiftFailure("vector is outside the invariant subspace");
  Vec x(m, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][m];
  return x;
}

/// Kernel basis of a square matrix over F_p.
inline std::vector<Vec> kernel_basis(const Fp& fp, Mat m) {
  std::size_t n = m.size();
  std::vector<int> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    std::uint64_t inv = fp.inv(m[row][col]);
    for (std::size_t c = col; c < n; ++c) m[row][c] = fp.mul(m[row][c], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      std::uint64_t f = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] = fp.sub(m[r][c], fp.mul(f, m[row][c]));
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<Vec> out;
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Vec v(n, 0);
    v[col] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0)
        v[c] = fp.sub(0, m[static_cast<std::size_t>(pivot_of_col[c])][col]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace repdetail

inline CharacterTable CharacterTable::build(const PermutationGroup& g,
                                            CharacterTableOptions opts) {
  using namespace repdetail;

  CharacterTable table;
  table.classes_ = g.conjugacy_classes(opts.class_enum_bound);
  const ConjugacyClasses& classes = table.classes_;
  std::size_t k = classes.count();
  if (k > opts.max_classes)
    throw SizeBoundExceeded("class count " + std::to_string(k) + " exceeds the table bound " +
                            std::to_string(opts.max_classes));
  table.order_ = g.order().convert_to<std::int64_t>();
  std::int64_t n = table.order_;
  table.exponent_ = classes.exponent();
  std::int64_t e = table.exponent_;

  std::int64_t sqrt_floor = 1;
  while (sqrt_floor * sqrt_floor <= 4 * n) ++sqrt_floor;  // first integer > 2 sqrt(n)
  table.prime_ = find_dixon_prime(e, sqrt_floor - 1);
  Fp fp{static_cast<std::uint64_t>(table.prime_)};

  // class structure constants a[i][j][l]: #{(x,y) in C_i x C_j : xy = rep_l}
  std::vector<std::vector<std::vector<std::int64_t>>> a(
      k, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0)));
  for (const auto& [packed, ci] : classes.element_index()) {
    Permutation x = Permutation::unpack(packed);
    Permutation xinv = x.inverse();
    for (std::size_t l = 0; l < k; ++l) {
      int cj = classes.class_of(xinv * classes.representatives()[l]);
      ++a[static_cast<std::size_t>(ci)][static_cast<std::size_t>(cj)][l];
    }
  }

  // simultaneous eigenvectors of the class matrices M_i over F_p
  std::vector<Mat> class_matrix(k);
  for (std::size_t i = 0; i < k; ++i) {
    class_matrix[i].assign(k, Vec(k, 0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) class_matrix[i][j][l] = fp.from_int(a[i][j][l]);
  }

  std::vector<std::vector<Vec>> subspaces;  // each: list of ambient column vectors
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < k; ++i) {
      Vec ei(k, 0);
      ei[i] = 1;
      full.push_back(std::move(ei));
    }
    subspaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < k; ++i) {
    bool all_split = true;
    for (const auto& sub : subspaces)
      if (sub.size() > 1) all_split = false;
    if (all_split) break;

    std::vector<std::vector<Vec>> next;
    for (auto& sub : subspaces) {
      std::size_t m = sub.size();
      if (m == 1) {
        next.push_back(std::move(sub));
        continue;
      }
      // restriction of M_i to the subspace, in basis coordinates
      Mat b(m, Vec(m, 0));
      for (std::size_t c = 0; c < m; ++c) {
        Vec image = mat_vec(fp, class_matrix[i], sub[c]);
        Vec coords = solve_in_basis(fp, sub, image);
        for (std::size_t r = 0; r < m; ++r) b[r][c] = coords[r];
      }
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < fp.p && found < m; ++lambda) {
        Mat shifted = b;
        for (std::size_t r = 0; r < m; ++r) shifted[r][r] = fp.sub(shifted[r][r], lambda);
        std::vector<Vec> kern = kernel_basis(fp, std::move(shifted));
        if (kern.empty()) continue;
        std::vector<Vec> ambient;
        for (const auto& coeff : kern) {
          Vec v(k, 0);
          for (std::size_t c = 0; c < m; ++c)
            for (std::size_t r = 0; r < k; ++r)
              v[r] = fp.add(v[r], fp.mul(coeff[c], sub[c][r]));
          ambient.push_back(std::move(v));
        }
        found += ambient.size();
        next.push_back(std::move(ambient));
      }
      if (found != m) throw LiftFailure("class matrix failed to diagonalize");
    }
    subspaces = std::move(next);
  }
  for (const auto& sub : subspaces)
    if (sub.size() != 1)
      throw LiftFailure("common eigenspaces are not one-dimensional");

  // inverse classes and power maps for the lift
  std::vector<std::size_t> inverse_class(k);
  std::vector<std::vector<std::size_t>> power_class(k);
  std::vector<std::int64_t> rep_order(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Permutation& rep = classes.representatives()[j];
    inverse_class[j] = static_cast<std::size_t>(classes.class_of(rep.inverse()));
    rep_order[j] = rep.order();
    Permutation pw(rep.degree());
    for (std::int64_t s = 0; s < rep_order[j]; ++s) {
      power_class[j].push_back(static_cast<std::size_t>(classes.class_of(pw)));
      pw = pw * rep;
    }
  }

  std::uint64_t theta = fp.pow(primitive_root(fp), static_cast<std::uint64_t>((table.prime_ - 1) / e));

  struct ModCharacter {
    std::int64_t degree;
    Vec values;  // chi mod p, per class
  };
  std::vector<ModCharacter> mod_chars;
  for (const auto& sub : subspaces) {
    Vec w = sub.front();
    if (w[0] == 0) throw LiftFailure("central character vanishes on the identity class");
    std::uint64_t scale = fp.inv(w[0]);
    for (auto& x : w) x = fp.mul(x, scale);

    // |G| / sum_j w_j w_{j*} / h_j = degree^2
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = fp.add(s, fp.mul(fp.mul(w[j], w[inverse_class[j]]),
                           fp.inv(fp.from_int(classes.sizes()[j]))));
    if (s == 0) throw LiftFailure("degree recovery hit a zero sum");
    std::uint64_t deg_sq = fp.mul(fp.from_int(n), fp.inv(s));
    std::int64_t degree = -1;
    for (std::int64_t t = 1; t * t <= n; ++t)
      if (fp.mul(fp.from_int(t), fp.from_int(t)) == deg_sq) {
        degree = t;
        break;
      }
    if (degree < 0) throw LiftFailure("degree is not a small square root mod p");

    ModCharacter mc;
    mc.degree = degree;
    mc.values.assign(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      mc.values[j] = fp.mul(fp.mul(fp.from_int(degree), w[j]),
                            fp.inv(fp.from_int(classes.sizes()[j])));
    mod_chars.push_back(std::move(mc));
  }

  // lift: chi(g) = sum_t m_t zeta_o^t with m_t the multiplicity of the
  // eigenvalue zeta_o^t of the representing matrix at g
  std::vector<std::pair<std::vector<CharValue>, std::int64_t>> lifted;
  for (const auto& mc : mod_chars) {
    std::vector<CharValue> row(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t o = rep_order[j];
      std::uint64_t theta_o = fp.pow(theta, static_cast<std::uint64_t>(e / o));
      std::uint64_t o_inv = fp.inv(fp.from_int(o));
      std::vector<std::int64_t> mult(static_cast<std::size_t>(o), 0);
      std::int64_t mult_total = 0;
      for (std::int64_t t = 0; t < o; ++t) {
        std::uint64_t acc = 0;
        for (std::int64_t s = 0; s < o; ++s) {
          std::uint64_t root = fp.pow(theta_o, static_cast<std::uint64_t>(
                                                   ((o - t) * s) % o));  // theta_o^{-st}
          acc = fp.add(acc, fp.mul(mc.values[power_class[j][static_cast<std::size_t>(s)]], root));
        }
        std::uint64_t m_t = fp.mul(acc, o_inv);
        if (static_cast<std::int64_t>(m_t) > mc.degree)
          throw LiftFailure("eigenvalue multiplicity exceeds the degree");
        mult[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(m_t);
        mult_total += mult[static_cast<std::size_t>(t)];
      }
      if (mult_total != mc.degree)
        throw LiftFailure("eigenvalue multiplicities do not sum to the degree");
      row[j] = CharValue::zeta_sum(static_cast<int>(o), std::move(mult));
    }
    lifted.emplace_back(std::move(row), mc.degree);
  }

  // trivial character first, then by degree with larger values earlier
  auto is_trivial_row = [k](const std::vector<CharValue>& row) {
    for (std::size_t j = 0; j < k; ++j)
      if (!(row[j].is_rational() && row[j].rational() == 1)) return false;
    return true;
  };
  std::sort(lifted.begin(), lifted.end(), [&](const auto& x, const auto& y) {
    bool tx = is_trivial_row(x.first), ty = is_trivial_row(y.first);
    if (tx != ty) return tx;
    if (x.second != y.second) return x.second < y.second;
    return x.first > y.first;
  });
  for (auto& [row, degree] : lifted) {
    table.values_.push_back(std::move(row));
    table.degrees_.push_back(degree);
  }

  table.verify();
  return table;
}

inline void CharacterTable::verify() const {
  using namespace repdetail;
  std::size_t k = size();
  cpp_int degree_sum = 0;
  for (std::int64_t d : degrees_) degree_sum += cpp_int(d) * d;
  if (degree_sum != order_)
    throw LiftFailure("sum of squared degrees is " + degree_sum.str() + ", expected " +
                      std::to_string(order_));

  // row orthogonality: <chi_i, chi_j> = delta_ij
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      std::vector<cpp_int> sum =
          hermitian_sum(classes_, ClassFunction{values_[i]}, ClassFunction{values_[j]}, exponent_);
      cpp_int expected = (i == j) ? cpp_int(order_) : cpp_int(0);
      for (std::size_t t = 0; t < sum.size(); ++t)
        if (sum[t] != (t == 0 ? expected : cpp_int(0)))
          throw LiftFailure("row orthogonality fails at pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    }

  // column orthogonality: sum_chi chi(g_i) conj(chi(g_j)) = delta_ij |C(g_i)|
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      int oi = values_[0][i].conductor(), oj = values_[0][j].conductor();
      int l = std::lcm(oi, oj);
      std::vector<cpp_int> folded(static_cast<std::size_t>(l), 0);
      for (std::size_t chi = 0; chi < k; ++chi) {
        const CharValue& vi = values_[chi][i];
        CharValue vj = values_[chi][j].conj();
        for (std::size_t s = 0; s < vi.coeffs().size(); ++s) {
          if (vi.coeffs()[s] == 0) continue;
          for (std::size_t t = 0; t < vj.coeffs().size(); ++t) {
            std::size_t exp = (s * static_cast<std::size_t>(l / oi) +
                               t * static_cast<std::size_t>(l / oj)) %
                              static_cast<std::size_t>(l);
            folded[exp] += cpp_int(vi.coeffs()[s]) * vj.coeffs()[t];
          }
        }
      }
      IntPolynomial rem = mod_unit(IntPolynomial(std::move(folded)), cyclotomic_polynomial(l));
      cpp_int expected = (i == j) ? cpp_int(classes_.centralizer_orders()[i]) : cpp_int(0);
      if (!(rem - IntPolynomial::constant(expected)).is_zero())
        throw LiftFailure("column orthogonality fails at classes (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
    }
}

// ---------------------------------------------------------------------------
// permutation module decomposition

struct DecompositionPart {
  int irreducible = -1;  // index into the table; 0/1 synthetic on the shortcut path
  std::int64_t multiplicity = 0;
  std::int64_t degree = 0;
  CharValue at_sigma0;
  CharValue at_sigma0_sq;
  CharValue at_sigma1;
};

struct Decomposition {
  std::vector<DecompositionPart> parts;
  bool via_2transitive_shortcut = false;
  std::int64_t permutation_degree = 0;
};

/// Decomposition through the full character table.
inline Decomposition decompose_with_table(const CharacterTable& table, const Dessin& d) {
  const ConjugacyClasses& classes = table.classes();
  ClassFunction perm = permutation_character(classes);
  std::size_t c0 = static_cast<std::size_t>(classes.class_of(d.sigma0()));
  std::size_t c0sq = static_cast<std::size_t>(classes.class_of(d.sigma0() * d.sigma0()));
  std::size_t c1 = static_cast<std::size_t>(classes.class_of(d.sigma1()));

  Decomposition out;
  out.permutation_degree = d.degree();
  std::int64_t check = 0;
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    cpp_rational m = inner_product(classes, table.group_order(), perm, table.irreducible(chi));
    if (m == 0) continue;
    if (boost::multiprecision::denominator(m) != 1 || m < 0)
      throw LiftFailure("multiplicity " + m.str() + " is not a non-negative integer");
    DecompositionPart part;
    part.irreducible = static_cast<int>(chi);
    part.multiplicity = boost::multiprecision::numerator(m).convert_to<std::int64_t>();
    part.degree = table.degrees()[chi];
    part.at_sigma0 = table.value(chi, c0);
    part.at_sigma0_sq = table.value(chi, c0sq);
    part.at_sigma1 = table.value(chi, c1);
    out.parts.push_back(std::move(part));
    check += out.parts.back().multiplicity * out.parts.back().degree;
  }
  if (check != d.degree())
    throw LiftFailure("multiplicities sum to dimension " + std::to_string(check) + ", expected " +
                      std::to_string(d.degree()));
  return out;
}

/// 2-transitive shortcut: the permutation module is trivial + standard, both
/// with multiplicity one, and the standard character is fix(x) - 1. No
/// character table is needed, so this route also covers groups beyond the
/// class-enumeration bound.
inline Decomposition decompose_2transitive(const PermutationGroup& g, const Dessin& d) {
  if (!g.is_2transitive()) throw NotTransitive("shortcut requires a 2-transitive action");
  Decomposition out;
  out.via_2transitive_shortcut = true;
  out.permutation_degree = d.degree();

  DecompositionPart trivial;
  trivial.irreducible = 0;
  trivial.multiplicity = 1;
  trivial.degree = 1;
  trivial.at_sigma0 = CharValue::integer(1);
  trivial.at_sigma0_sq = CharValue::integer(1);
  trivial.at_sigma1 = CharValue::integer(1);
  out.parts.push_back(trivial);

  Permutation s0sq = d.sigma0() * d.sigma0();
  DecompositionPart standard;
  standard.irreducible = 1;
  standard.multiplicity = 1;
  standard.degree = d.degree() - 1;
  standard.at_sigma0 = CharValue::integer(d.sigma0().fixed_points() - 1);
  standard.at_sigma0_sq = CharValue::integer(s0sq.fixed_points() - 1);
  standard.at_sigma1 = CharValue::integer(d.sigma1().fixed_points() - 1);
  out.parts.push_back(standard);
  return out;
}

/// Shortcut when the action is 2-transitive, full table otherwise;
/// SizeBoundExceeded when neither route applies.
inline Decomposition decompose_permutation(const PermutationGroup& g, const Dessin& d,
                                           CharacterTableOptions opts = {}) {
  if (g.is_2transitive()) return decompose_2transitive(g, d);
  return decompose_with_table(CharacterTable::build(g, opts), d);
}

// ---------------------------------------------------------------------------
// TQFT homomorphism counts

/// Number of homomorphisms pi_1(genus-g surface) -> G by exhaustive
/// enumeration of 2g-tuples; the independent oracle for the character-sum
/// formula. Z_G(C) = count / |G|.
inline cpp_int tqft_count_brute(int genus, const PermutationGroup& g,
                                std::int64_t tuple_bound = 100'000'000) {
  if (genus < 1) throw DomainError("genus must be at least 1");
  cpp_int tuples = 1;
  for (int i = 0; i < 2 * genus; ++i) {
    tuples *= g.order();
    if (tuples > tuple_bound)
      throw SizeBoundExceeded("|G|^(2g) exceeds the brute-force bound " +
                              std::to_string(tuple_bound));
  }
  std::vector<Permutation> elems = g.elements(tuple_bound);
  std::vector<Permutation> invs;
  invs.reserve(elems.size());
  for (const auto& x : elems) invs.push_back(x.inverse());

  std::size_t size = elems.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(2 * genus), 0);
  cpp_int count = 0;
  while (true) {
    Permutation prod(g.degree());
    for (int i = 0; i < genus; ++i) {
      const std::size_t ai = idx[static_cast<std::size_t>(2 * i)];
      const std::size_t bi = idx[static_cast<std::size_t>(2 * i + 1)];
      prod = prod * elems[ai] * elems[bi] * invs[ai] * invs[bi];
    }
    if (prod.is_identity()) ++count;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == size) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return count;
}

/// |G| * sum_chi (|G|/deg chi)^(2g-2); equals the homomorphism count by the
/// Frobenius-Mednykh formula, so tqft_count_characters / |G| is the cover
/// count Z_G(C).
inline cpp_int tqft_count_characters(int genus, const CharacterTable& table) {
  if (genus < 1) throw DomainError("genus must be at least 1");
  cpp_int total = 0;
  for (std::int64_t deg : table.degrees()) {
    if (table.group_order() % deg != 0)
      throw InternalError("character degree does not divide the group order");
    cpp_int base = table.group_order() / deg;
    cpp_int term = 1;
    for (int i = 0; i < 2 * genus - 2; ++i) term *= base;
    total += term;
  }
  return total * table.group_order();
}

}  // namespace moco
