#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "moco/errors.hpp"
#include "moco/farey.hpp"
#include "moco/permutation.hpp"

namespace moco {

/// Bipartite cuboid graph given by its edge monodromy: sigma0 cycles the
/// edges around each trivalent white vertex (order 3), sigma1 swaps the two
/// edges at each bivalent black vertex (order 2). White vertices are the
/// cycles of sigma0 (length 3 or 1), black vertices the cycles of sigma1
/// (length 2 or 1); the pair must act transitively on the edge labels.
class Dessin {
public:
  Dessin(Permutation sigma0, Permutation sigma1,
         std::optional<FareySymbol> provenance = std::nullopt)
      : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)),
        provenance_(std::move(provenance)) {
    validate();
  }

  int degree() const { return sigma0_.degree(); }
  const Permutation& sigma0() const { return sigma0_; }
  const Permutation& sigma1() const { return sigma1_; }
  const std::optional<FareySymbol>& provenance() const { return provenance_; }

private:
  void validate() const {
    if (sigma0_.degree() != sigma1_.degree())
      throw ValidationError("sigma0 and sigma1 must have the same degree");
    if (degree() < 1) throw ValidationError("dessin needs at least one edge");
    if (!(sigma0_ * sigma0_ * sigma0_).is_identity())
      throw ValidationError("sigma0^3 != identity");
    if (!(sigma1_ * sigma1_).is_identity()) throw ValidationError("sigma1^2 != identity");
    for (const auto& c : sigma0_.cycles())
      if (c.size() != 1 && c.size() != 3)
        throw ValidationError("sigma0 has a cycle of length " + std::to_string(c.size()));
    // order 2 already forces sigma1 cycles of length 1 or 2
    std::vector<bool> seen(static_cast<std::size_t>(degree()), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Permutation* p : {&sigma0_, &sigma1_}) {
        int y = (*p)[x];
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != degree())
      throw ValidationError("monodromy pair does not act transitively on the edges");
  }

  Permutation sigma0_;
  Permutation sigma1_;
  std::optional<FareySymbol> provenance_;
};

/// Builds the modular dessin of a symbol from its triangulation.
///
/// Every triangle contributes a trivalent white centre carrying one edge per
/// side, labelled consecutively in the rotation order (u,v),(v,w),(w,u) of
/// the sorted vertices; triangles are taken in contraction order, so labels
/// are reproducible. Black vertices come from the side data:
///   - an interior diagonal joins the two centres it separates,
///   - a free pair joins the centres of its two sides (a loop when equal),
///   - an even side is a pendant black vertex at its centre,
///   - an odd side hangs a bivalent black vertex and a white leaf off its
///     centre; the leaf edges are labelled after all centre edges, in symbol
///     order.
inline Dessin build_dessin(const FareySymbol& s) {
  Triangulation tri = triangulate(s);
  int t_count = static_cast<int>(tri.triangles.size());

  // edge label (0-based) at a given (triangle, side) incidence
  std::map<std::pair<int, Side>, int> edge_at;
  std::vector<std::vector<int>> sigma0_cycles;
  for (int t = 0; t < t_count; ++t) {
    auto sides = tri.triangles[static_cast<std::size_t>(t)].sides();
    std::vector<int> cyc;
    for (int k = 0; k < 3; ++k) {
      int label = 3 * t + k;
      edge_at[{t, sides[static_cast<std::size_t>(k)]}] = label;
      cyc.push_back(label + 1);
    }
    sigma0_cycles.push_back(std::move(cyc));
  }

  std::vector<std::vector<int>> sigma1_cycles;

  // (b) interior diagonals
  std::map<Side, std::vector<int>> symbol_sides;
  for (std::size_t i = 0; i < s.side_count(); ++i) {
    auto [a, b] = s.side(i);
    symbol_sides[Side(a, b)].push_back(static_cast<int>(i));
  }
  for (const auto& [side, tris] : tri.side_to_triangles) {
    if (symbol_sides.count(side)) continue;
    if (tris.size() != 2)
      throw InternalError("diagonal " + side.str() + " not shared by two triangles");
    sigma1_cycles.push_back({edge_at.at({tris[0], side}) + 1, edge_at.at({tris[1], side}) + 1});
  }

  auto boundary_triangle = [&](const Side& side) {
    auto it = tri.side_to_triangles.find(side);
    if (it == tri.side_to_triangles.end() || it->second.size() != 1)
      throw InternalError("symbol side " + side.str() + " is not a boundary side");
    return it->second.front();
  };

  // (c) free pairs, by first occurrence in symbol order
  std::map<int, std::vector<int>> free_sides;
  for (std::size_t i = 0; i < s.side_count(); ++i)
    if (s.pairings()[i].is_free()) free_sides[s.pairings()[i].label].push_back(static_cast<int>(i));
  std::vector<std::pair<int, int>> free_pairs;
  for (const auto& [label, idxs] : free_sides) free_pairs.emplace_back(idxs[0], idxs[1]);
  std::sort(free_pairs.begin(), free_pairs.end());
  for (auto [i1, i2] : free_pairs) {
    auto [a1, b1] = s.side(static_cast<std::size_t>(i1));
    auto [a2, b2] = s.side(static_cast<std::size_t>(i2));
    Side s1(a1, b1), s2(a2, b2);
    sigma1_cycles.push_back(
        {edge_at.at({boundary_triangle(s1), s1}) + 1, edge_at.at({boundary_triangle(s2), s2}) + 1});
  }

  // (d) even sides leave their centre edge fixed under sigma1; nothing to add

  // (e) odd sides: leaf edges labelled after the centre edges, in symbol order
  int next_label = 3 * t_count;
  for (std::size_t i = 0; i < s.side_count(); ++i) {
    if (!s.pairings()[i].is_odd()) continue;
    auto [a, b] = s.side(i);
    Side side(a, b);
    ++next_label;
    sigma1_cycles.push_back({edge_at.at({boundary_triangle(side), side}) + 1, next_label});
  }

  int degree = next_label;
  return Dessin(Permutation::from_cycles(degree, sigma0_cycles),
                Permutation::from_cycles(degree, sigma1_cycles), s);
}

struct SurfaceInvariants {
  int genus = 0;
  int cusps = 0;
  int e2 = 0;     // fixed points of sigma1
  int e3 = 0;     // fixed points of sigma0
  int index = 0;  // = dessin degree
};

/// Genus from the Euler characteristic of the constellation,
///   2 - 2g = c(sigma0) + c(sigma1) + c(sigma0*sigma1) - d,
/// cusps as the cycles of sigma0*sigma1.
inline SurfaceInvariants surface_invariants(const Dessin& d) {
  SurfaceInvariants inv;
  inv.index = d.degree();
  inv.e2 = d.sigma1().fixed_points();
  inv.e3 = d.sigma0().fixed_points();
  Permutation prod = d.sigma0() * d.sigma1();
  inv.cusps = prod.cycle_count();
  int chi = d.sigma0().cycle_count() + d.sigma1().cycle_count() + inv.cusps - d.degree();
  if (chi % 2 != 0 || chi > 2)
    throw InternalError("Euler characteristic " + std::to_string(chi) + " is not 2-2g with g >= 0");
  inv.genus = (2 - chi) / 2;
  return inv;
}

/// DOT export: white nodes w<i> are the cycles of sigma0, black nodes b<j>
/// the cycles of sigma1, one edge line per dessin edge labelled 1..d.
inline std::string export_dessin_dot(const Dessin& d) {
  auto white = d.sigma0().cycles();
  auto black = d.sigma1().cycles();
  std::vector<int> white_of(static_cast<std::size_t>(d.degree()));
  std::vector<int> black_of(static_cast<std::size_t>(d.degree()));
  for (std::size_t i = 0; i < white.size(); ++i)
    for (int e : white[i]) white_of[static_cast<std::size_t>(e - 1)] = static_cast<int>(i);
  for (std::size_t i = 0; i < black.size(); ++i)
    for (int e : black[i]) black_of[static_cast<std::size_t>(e - 1)] = static_cast<int>(i);

  std::ostringstream out;
  out << "graph dessin {\n";
  for (std::size_t i = 0; i < white.size(); ++i)
    out << "  w" << i << " [shape=circle, label=\"\", width=0.15];\n";
  for (std::size_t i = 0; i < black.size(); ++i)
    out << "  b" << i << " [shape=point];\n";
  for (int e = 1; e <= d.degree(); ++e)
    out << "  w" << white_of[static_cast<std::size_t>(e - 1)] << " -- b"
        << black_of[static_cast<std::size_t>(e - 1)] << " [label=\"" << e << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace moco
