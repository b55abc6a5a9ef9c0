#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "moco/errors.hpp"
#include "moco/reptheory.hpp"

namespace moco {

/// Dimension vector (a1,a2;b1,b2,b3): multiplicities of the eigenvalues
/// +1,-1 of the order-2 generator and 1,rho,rho^2 of the order-3 generator.
struct DimensionVector5 {
  std::int64_t a1 = 0, a2 = 0, b1 = 0, b2 = 0, b3 = 0;

  DimensionVector5() = default;
  DimensionVector5(std::int64_t a1_, std::int64_t a2_, std::int64_t b1_, std::int64_t b2_,
                   std::int64_t b3_)
      : a1(a1_), a2(a2_), b1(b1_), b2(b2_), b3(b3_) {
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0 || b3 < 0)
      throw ValidationError("dimension vector entries must be non-negative");
  }

  std::array<std::int64_t, 5> as_array() const { return {a1, a2, b1, b2, b3}; }

  friend DimensionVector5 operator+(const DimensionVector5& x, const DimensionVector5& y) {
    return {x.a1 + y.a1, x.a2 + y.a2, x.b1 + y.b1, x.b2 + y.b2, x.b3 + y.b3};
  }
  friend bool operator==(const DimensionVector5& x, const DimensionVector5& y) {
    return x.as_array() == y.as_array();
  }

  std::string str() const {
    std::ostringstream out;
    out << "(" << a1 << "," << a2 << ";" << b1 << "," << b2 << "," << b3 << ")";
    return out.str();
  }
};

/// Stability weight; the modular default is theta = (-1,-1;1,1,1).
struct Weight5 {
  std::array<std::int64_t, 5> t{-1, -1, 1, 1, 1};
};

/// Euler form of the modular quiver: the identity matrix with -1 at the six
/// positions pairing each a-vertex with each b-vertex,
///   chi(alpha,beta) = sum_i alpha_i beta_i - (a1+a2)(b1'+b2'+b3').
inline std::int64_t euler_form(const DimensionVector5& alpha, const DimensionVector5& beta) {
  std::int64_t dot = alpha.a1 * beta.a1 + alpha.a2 * beta.a2 + alpha.b1 * beta.b1 +
                     alpha.b2 * beta.b2 + alpha.b3 * beta.b3;
  return dot - (alpha.a1 + alpha.a2) * (beta.b1 + beta.b2 + beta.b3);
}

/// 1 - chi(alpha,alpha): the dimension of the family of isomorphism classes
/// through a stable alpha-dimensional representation. Existence of a stable
/// representative is not decided here.
inline std::int64_t family_dimension(const DimensionVector5& alpha) {
  return 1 - euler_form(alpha, alpha);
}

inline std::int64_t weight_pairing(const Weight5& theta, const DimensionVector5& alpha) {
  auto a = alpha.as_array();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < 5; ++i) acc += theta.t[i] * a[i];
  return acc;
}

/// Value a + b*zeta_3 of a character at an element of order dividing 3.
struct Zeta3 {
  std::int64_t a = 0, b = 0;
};

namespace quiverdetail {

// zeta_3^k * (a + b zeta_3), k = 0,1,2
inline Zeta3 mul_zeta_power(Zeta3 v, int k) {
  for (int i = 0; i < k; ++i) v = Zeta3{-v.b, v.a - v.b};
  return v;
}

}  // namespace quiverdetail

/// Eigenspace multiplicities from character values: a1 = (d + chi(s1))/2,
/// a2 = (d - chi(s1))/2 and b_{j+1} = (d + z^-j chi(s0) + z^-2j chi(s0^2))/3.
/// All five must come out as non-negative integers.
inline DimensionVector5 dimvec_from_character(std::int64_t d, std::int64_t chi_s1, Zeta3 chi_s0,
                                              Zeta3 chi_s0sq) {
  if ((d + chi_s1) % 2 != 0)
    throw NotIntegral("d + chi(sigma1) = " + std::to_string(d + chi_s1) + " is odd");
  std::int64_t a1 = (d + chi_s1) / 2;
  std::int64_t a2 = (d - chi_s1) / 2;
  std::int64_t b[3];
  for (int j = 0; j < 3; ++j) {
    Zeta3 t0 = quiverdetail::mul_zeta_power(chi_s0, (3 - j) % 3);            // z^-j chi(s0)
    Zeta3 t1 = quiverdetail::mul_zeta_power(chi_s0sq, (3 - (2 * j) % 3) % 3);  // z^-2j chi(s0^2)
    Zeta3 total{d + t0.a + t1.a, t0.b + t1.b};
    if (total.b != 0)
      throw NotIntegral("eigenvalue multiplicity for b" + std::to_string(j + 1) +
                        " is not rational");
    if (total.a % 3 != 0 || total.a < 0)
      throw NotIntegral("eigenvalue multiplicity for b" + std::to_string(j + 1) + " is " +
                        std::to_string(total.a) + "/3");
    b[j] = total.a / 3;
  }
  if (a1 < 0 || a2 < 0) throw NotIntegral("negative eigenspace multiplicity for sigma1");
  DimensionVector5 alpha{a1, a2, b[0], b[1], b[2]};
  if (alpha.a1 + alpha.a2 != d || alpha.b1 + alpha.b2 + alpha.b3 != d)
    throw NotIntegral("eigenspace multiplicities do not sum to the dimension");
  return alpha;
}

/// Finite quiver as an arrow-count matrix; arrows[i][j] is the number of
/// arrows from vertex i to vertex j, loops on the diagonal.
struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::int64_t>> arrows;
  std::optional<std::vector<std::int64_t>> alpha;  // multiplicity vector, when applicable

  std::int64_t loops(std::size_t i) const { return arrows[i][i]; }
};

namespace quiverdetail {

inline QuiverPresentation local_quiver(const std::vector<std::string>& labels,
                                       const std::vector<DimensionVector5>& dims,
                                       std::optional<std::vector<std::int64_t>> alpha) {
  QuiverPresentation q;
  q.vertices = labels;
  q.alpha = std::move(alpha);
  std::size_t k = dims.size();
  q.arrows.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t count = (i == j ? 1 : 0) - euler_form(dims[i], dims[j]);
      if (count < 0)
        throw NegativeArrowCount("arrow count " + std::to_string(count) + " between " +
                                 labels[i] + " and " + labels[j]);
      q.arrows[i][j] = count;
    }
  return q;
}

}  // namespace quiverdetail

/// Dimension vector of a decomposition part.
inline DimensionVector5 part_dimension_vector(const DecompositionPart& part) {
  auto [s0a, s0b] = part.at_sigma0.zeta3_pair();
  auto [sqa, sqb] = part.at_sigma0_sq.zeta3_pair();
  return dimvec_from_character(part.degree, part.at_sigma1.rational(), Zeta3{s0a, s0b},
                               Zeta3{sqa, sqb});
}

/// Modular content: the local quiver on the distinct irreducible summands,
/// with arrow counts delta_ij - chi(alpha_i, alpha_j) and the multiplicity
/// vector of the permutation module.
inline QuiverPresentation modular_content(const Decomposition& dec) {
  std::vector<std::string> labels;
  std::vector<DimensionVector5> dims;
  std::vector<std::int64_t> alpha;
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    labels.push_back("X" + std::to_string(i + 1));
    dims.push_back(part_dimension_vector(dec.parts[i]));
    alpha.push_back(dec.parts[i].multiplicity);
  }
  return quiverdetail::local_quiver(labels, dims, alpha);
}

/// The one quiver of the modular group algebra: six generator components
/// g_ij with b-part e_i and a-part e_j, in the order a=g11, b=g22, c=g31,
/// d=g12, e=g21, f=g32. The arrow rule gives the hexagon a-b-c-d-e-f.
inline QuiverPresentation one_quiver_modular() {
  auto gen = [](int i, int j) {
    return DimensionVector5{j == 1 ? 1 : 0, j == 2 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0,
                            i == 3 ? 1 : 0};
  };
  std::vector<DimensionVector5> dims{gen(1, 1), gen(2, 2), gen(3, 1),
                                     gen(1, 2), gen(2, 1), gen(3, 2)};
  return quiverdetail::local_quiver({"a", "b", "c", "d", "e", "f"}, dims, std::nullopt);
}

/// Local quiver of a semi-simple module over a genus-g surface group:
/// 2(g-1)n_i^2 + 2 loops at vertex i and 2 n_i n_j (g-1) arrows i -> j.
inline QuiverPresentation surface_local_quiver(int genus, const std::vector<std::int64_t>& dims) {
  if (genus < 1) throw DomainError("surface local quiver needs genus >= 1");
  if (dims.empty()) throw DomainError("need at least one simple summand");
  for (std::int64_t n : dims)
    if (n < 1) throw DomainError("summand dimensions must be positive");
  QuiverPresentation q;
  std::size_t k = dims.size();
  q.arrows.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    q.vertices.push_back("S" + std::to_string(i + 1));
    for (std::size_t j = 0; j < k; ++j)
      q.arrows[i][j] = (i == j) ? 2 * (genus - 1) * dims[i] * dims[i] + 2
                                : 2 * dims[i] * dims[j] * (genus - 1);
  }
  return q;
}

/// DOT export with arrow multiplicities as edge labels.
inline std::string quiver_dot(const QuiverPresentation& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (std::size_t i = 0; i < q.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << q.vertices[i];
    if (q.alpha) out << " (x" << (*q.alpha)[i] << ")";
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = 0; j < q.vertices.size(); ++j)
      if (q.arrows[i][j] > 0)
        out << "  v" << i << " -> v" << j << " [label=\"" << q.arrows[i][j] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace moco
