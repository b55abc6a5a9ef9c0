#include <catch2/catch_amalgamated.hpp>

#include "moco/dessin.hpp"
#include "support/random_symbol.hpp"

using namespace moco;

TEST_CASE("Iguanodon(3) dessin matches the labelled figure data") {
  Dessin d = build_dessin(iguanodon_symbol(3));
  CHECK(d.degree() == 12);
  CHECK(d.sigma0().cycle_type() == std::vector<int>{3, 3, 3, 1, 1, 1});
  CHECK(d.sigma1().cycle_type() == std::vector<int>{2, 2, 2, 2, 2, 2});
}

TEST_CASE("dessin degrees reproduce the m(n) table") {
  const int expected[] = {8, 12, 16, 24, 28, 40, 48, 60};
  for (int n = 2; n <= 9; ++n) CHECK(build_dessin(iguanodon_symbol(n)).degree() == expected[n - 2]);
}

TEST_CASE("Iguanodon(2) fixed point counts") {
  Dessin d = build_dessin(iguanodon_symbol(2));
  CHECK(d.sigma1().fixed_points() == 0);
  CHECK(d.sigma0().fixed_points() == 2);
}

TEST_CASE("dessin validation rejects bad pairs") {
  // sigma0 of order 2
  CHECK_THROWS_AS(Dessin(parse_cycles("(1 2)", 2), Permutation(2)), ValidationError);
  // sigma1 of order 3
  CHECK_THROWS_AS(Dessin(Permutation(3), parse_cycles("(1 2 3)", 3)), ValidationError);
  // intransitive pair
  CHECK_THROWS_AS(Dessin(Permutation(2), Permutation(2)), ValidationError);
  // mixed degrees
  CHECK_THROWS_AS(Dessin(Permutation(2), Permutation(3)), ValidationError);
  CHECK_NOTHROW(Dessin(parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)));
}

TEST_CASE("hand-checked small dessins") {
  SECTION("one-edge dessin") {
    Dessin d(Permutation(1), Permutation(1));
    SurfaceInvariants inv = surface_invariants(d);
    CHECK(inv.genus == 0);
    CHECK(inv.cusps == 1);
    CHECK(inv.e2 == 1);
    CHECK(inv.e3 == 1);
    CHECK(inv.index == 1);
  }
  SECTION("sigma0 = (1 2 3), sigma1 = (1 2)") {
    Dessin d(parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3));
    SurfaceInvariants inv = surface_invariants(d);
    // cycles: sigma0 -> 1, sigma1 -> 2, product -> 2; 2-2g = 1+2+2-3 = 2
    CHECK(inv.genus == 0);
    CHECK(inv.cusps == 2);
    CHECK(inv.e2 == 1);
    CHECK(inv.e3 == 0);
  }
  SECTION("Iguanodon(3) invariants") {
    SurfaceInvariants inv = surface_invariants(build_dessin(iguanodon_symbol(3)));
    CHECK(inv.e2 == 0);
    CHECK(inv.e3 == 3);
    CHECK(inv.index == 12);
    CHECK(inv.genus >= 0);
  }
}

TEST_CASE("structural properties on random symbols") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 120; ++i) {
    FareySymbol s = testing::random_symbol(rng);
    Triangulation tri = triangulate(s);
    Dessin d = build_dessin(s);
    int T = static_cast<int>(tri.triangles.size());

    // construction invariants (validated in the ctor, re-checked here)
    CHECK((d.sigma0() * d.sigma0() * d.sigma0()).is_identity());
    CHECK((d.sigma1() * d.sigma1()).is_identity());

    CHECK(d.degree() == 3 * T + static_cast<int>(s.odd_side_count()));

    int three_cycles = 0;
    for (const auto& c : d.sigma0().cycles())
      if (c.size() == 3) ++three_cycles;
    CHECK(three_cycles == T);
    CHECK(d.sigma0().fixed_points() == static_cast<int>(s.odd_side_count()));
    CHECK(d.sigma1().fixed_points() == static_cast<int>(s.even_side_count()));

    SurfaceInvariants inv = surface_invariants(d);
    CHECK(inv.genus >= 0);
    CHECK(inv.cusps >= 1);
  }
}

TEST_CASE("DOT export has one line per edge") {
  Dessin d = build_dessin(iguanodon_symbol(4));
  std::string dot = export_dessin_dot(d);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(edges == 16);
  CHECK(dot.rfind("graph dessin {", 0) == 0);
}
