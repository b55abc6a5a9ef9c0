#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "moco/quiver.hpp"

using namespace moco;

namespace {
DimensionVector5 alpha_T() { return {1, 0, 1, 0, 0}; }
DimensionVector5 alpha_S(std::int64_t n) { return {2 * n - 1, 2 * n, 2 * n - 1, n, n}; }
DimensionVector5 alpha_M(std::int64_t n) { return {2 * n, 2 * n, 2 * n, n, n}; }
}  // namespace

TEST_CASE("euler form values") {
  CHECK(euler_form(alpha_T(), alpha_T()) == 1);
  CHECK(euler_form({0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}) == 0);
  for (std::int64_t n = 1; n <= 10; ++n) {
    CHECK(euler_form(alpha_T(), alpha_S(n)) == -1);
    CHECK(euler_form(alpha_S(n), alpha_T()) == -1);
    CHECK(euler_form(alpha_S(n), alpha_S(n)) == 1 - 2 * n * n);
  }
}

TEST_CASE("euler form is bilinear") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> pick(0, 20);
  auto rand_vec = [&] {
    return DimensionVector5{pick(rng), pick(rng), pick(rng), pick(rng), pick(rng)};
  };
  for (int i = 0; i < 60; ++i) {
    DimensionVector5 a = rand_vec(), a2 = rand_vec(), b = rand_vec();
    CHECK(euler_form(a + a2, b) == euler_form(a, b) + euler_form(a2, b));
    CHECK(euler_form(b, a + a2) == euler_form(b, a) + euler_form(b, a2));
  }
}

TEST_CASE("family dimension") {
  CHECK(family_dimension(alpha_T()) == 0);
  CHECK(family_dimension({1, 1, 1, 1, 0}) == 1);
  for (std::int64_t n = 1; n <= 6; ++n) CHECK(family_dimension(alpha_S(n)) == 2 * n * n);
}

TEST_CASE("weight pairing") {
  Weight5 theta;
  CHECK(weight_pairing(theta, {6, 6, 6, 3, 3}) == 0);
  CHECK(weight_pairing(theta, {1, 0, 0, 0, 0}) == -1);
  CHECK(weight_pairing(theta, {0, 0, 0, 0, 0}) == 0);
}

TEST_CASE("dimension vectors from character values") {
  CHECK(dimvec_from_character(12, 0, {3, 0}, {3, 0}) == DimensionVector5{6, 6, 6, 3, 3});
  CHECK(dimvec_from_character(1, 1, {1, 0}, {1, 0}) == alpha_T());
  CHECK(dimvec_from_character(2, 0, {-1, 0}, {-1, 0}) == DimensionVector5{1, 1, 0, 1, 1});
  // regular C3 module: chi(s0) = zeta_3, chi(s0^2) = zeta_3^2 = -1 - zeta_3
  CHECK(dimvec_from_character(1, 1, {0, 1}, {-1, -1}) == DimensionVector5{1, 0, 0, 1, 0});
  CHECK_THROWS_AS(dimvec_from_character(3, 2, {0, 0}, {0, 0}), NotIntegral);
  CHECK_THROWS_AS(dimvec_from_character(2, 0, {1, 0}, {0, 0}), NotIntegral);
}

TEST_CASE("balance invariant holds for table-derived vectors") {
  Dessin d = build_dessin(iguanodon_symbol(2));
  PermutationGroup g = group_from_dessin(d);
  Decomposition dec = decompose_permutation(g, d);
  std::int64_t total_a = 0;
  DimensionVector5 weighted_sum;
  for (const auto& part : dec.parts) {
    DimensionVector5 v = part_dimension_vector(part);
    CHECK(v.a1 + v.a2 == part.degree);
    CHECK(v.b1 + v.b2 + v.b3 == part.degree);
    for (std::int64_t m = 0; m < part.multiplicity; ++m) weighted_sum = weighted_sum + v;
    total_a += part.multiplicity * part.degree;
  }
  CHECK(total_a == d.degree());
  // sum of e_i alpha_i equals the dimension vector of the full module
  CHECK(weighted_sum == alpha_M(2));
}

TEST_CASE("modular content of the iguanodon modules") {
  for (int n : {2, 3, 4}) {
    Dessin d = build_dessin(iguanodon_symbol(n));
    PermutationGroup g = group_from_dessin(d);
    QuiverPresentation q = modular_content(decompose_permutation(g, d));
    REQUIRE(q.vertices.size() == 2);
    CHECK(q.arrows[0][1] == 1);
    CHECK(q.arrows[1][0] == 1);
    CHECK(q.loops(0) == 0);
    CHECK(q.loops(1) == 2 * n * n);
    CHECK(q.alpha == std::vector<std::int64_t>{1, 1});
    CHECK(q.arrows[0][1] == q.arrows[1][0]);  // symmetric quiver
  }
}

TEST_CASE("single trivial part gives the 1x1 zero matrix") {
  Dessin d(Permutation(1), Permutation(1));
  PermutationGroup g = group_from_dessin(d);
  QuiverPresentation q = modular_content(decompose_permutation(g, d));
  REQUIRE(q.vertices.size() == 1);
  CHECK(q.arrows[0][0] == 0);
}

TEST_CASE("one quiver of the modular group is the hexagon") {
  QuiverPresentation q = one_quiver_modular();
  REQUIRE(q.vertices == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  // hexagon a-b-c-d-e-f with single arrows both ways, no loops, nothing else
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      bool adjacent = (j == (i + 1) % 6) || (i == (j + 1) % 6);
      CHECK(q.arrows[i][j] == (adjacent ? 1 : 0));
    }
  }
}

TEST_CASE("one quiver adjacency matches the coordinate rule") {
  // 1 arrow iff the two generators differ in both the C3 and the C2 index
  struct Gen { int i, j; };
  std::vector<Gen> gens{{1, 1}, {2, 2}, {3, 1}, {1, 2}, {2, 1}, {3, 2}};
  QuiverPresentation q = one_quiver_modular();
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      if (x == y) continue;
      bool differ_both = gens[x].i != gens[y].i && gens[x].j != gens[y].j;
      CHECK(q.arrows[x][y] == (differ_both ? 1 : 0));
    }
}

TEST_CASE("surface local quivers") {
  QuiverPresentation one = surface_local_quiver(2, {1});
  REQUIRE(one.vertices.size() == 1);
  CHECK(one.loops(0) == 4);  // the one quiver: 2g loops at genus 2

  QuiverPresentation two = surface_local_quiver(2, {1, 2});
  CHECK(two.loops(0) == 4);
  CHECK(two.loops(1) == 10);
  CHECK(two.arrows[0][1] == 4);
  CHECK(two.arrows[1][0] == 4);

  QuiverPresentation flat = surface_local_quiver(1, {1, 1});
  CHECK(flat.loops(0) == 2);
  CHECK(flat.loops(1) == 2);
  CHECK(flat.arrows[0][1] == 0);

  CHECK_THROWS_AS(surface_local_quiver(0, {1}), DomainError);
  CHECK_THROWS_AS(surface_local_quiver(2, {0}), DomainError);
  CHECK_THROWS_AS(surface_local_quiver(2, {}), DomainError);
}

TEST_CASE("quiver DOT export") {
  std::string dot = quiver_dot(one_quiver_modular());
  CHECK(dot.rfind("digraph quiver {", 0) == 0);
  std::size_t arrows = 0, pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++arrows;
    pos += 4;
  }
  CHECK(arrows == 12);  // 6 edges, one arrow each direction
}
