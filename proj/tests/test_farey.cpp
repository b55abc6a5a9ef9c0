#include <catch2/catch_amalgamated.hpp>

#include "moco/farey.hpp"
#include "support/random_symbol.hpp"

using namespace moco;

TEST_CASE("extended rationals reduce and order correctly") {
  ExtendedRational half(2, 4);
  CHECK(half.num() == 1);
  CHECK(half.den() == 2);
  CHECK(ExtendedRational(-3, -6) == half);
  CHECK(ExtendedRational(1, -2) == ExtendedRational(-1, 2));

  ExtendedRational inf = ExtendedRational::infinity();
  CHECK(inf.is_infinity());
  CHECK(ExtendedRational(5, 1) < inf);
  CHECK(!(inf < inf));
  CHECK(ExtendedRational(-1, 3) < ExtendedRational(0, 1));

  CHECK(mediant(ExtendedRational(0, 1), ExtendedRational(1, 2)) == ExtendedRational(1, 3));
  CHECK(is_mediant_of(ExtendedRational(1, 3), ExtendedRational(0, 1), ExtendedRational(1, 2)));
  // unreduced pair sum is rejected by the componentwise test
  CHECK(!is_mediant_of(ExtendedRational(0, 1), ExtendedRational(-1, 1), ExtendedRational(1, 1)));
}

TEST_CASE("parse_symbol accepts the F(3) iguanodon symbol") {
  FareySymbol s = parse_symbol("inf 1 0 b 1/3 b 1/2 b 1 1 inf");
  REQUIRE(s.fractions().size() == 4);
  CHECK(s.fractions()[0] == ExtendedRational(0, 1));
  CHECK(s.fractions()[1] == ExtendedRational(1, 3));
  CHECK(s.fractions()[2] == ExtendedRational(1, 2));
  CHECK(s.fractions()[3] == ExtendedRational(1, 1));
  REQUIRE(s.pairings().size() == 5);
  CHECK(s.pairings()[0] == Pairing::free_side(1));
  CHECK(s.pairings()[1] == Pairing::odd_side());
  CHECK(s.pairings()[4] == Pairing::free_side(1));
  CHECK(s == iguanodon_symbol(3));
}

TEST_CASE("parse_symbol rejects bad input with the right reasons") {
  // determinant |1*1 - 3*1| = 2
  CHECK_THROWS_AS(parse_symbol("inf 1 0 b 1/3 b 1 1 inf"), ValidationError);
  CHECK_THROWS_AS(parse_symbol("inf 1 0 b 2/4 b 1 1 inf"), ValidationError);  // not reduced
  CHECK_THROWS_AS(parse_symbol("inf 1 1/2 b 1 1 inf"), ValidationError);      // endpoint not integer
  CHECK_THROWS_AS(parse_symbol("inf 1 1 b 2 1 inf"), ValidationError);        // no zero
  CHECK_THROWS_AS(parse_symbol("inf 1 0 b 1 2 inf"), ValidationError);        // label 2 unpaired
  CHECK_THROWS_AS(parse_symbol("inf 1 1 b 0 1 inf"), ValidationError);        // not increasing
  CHECK_THROWS_AS(parse_symbol("inf 1 0 1"), SyntaxError);
  CHECK_THROWS_AS(parse_symbol("inf 1 0 x 1 1 inf"), SyntaxError);
  CHECK_THROWS_AS(parse_symbol("0 b 1"), SyntaxError);
}

TEST_CASE("format_symbol emits canonical text") {
  CHECK(format_symbol(iguanodon_symbol(3)) == "inf 1 0 b 1/3 b 1/2 b 1 1 inf");
  CHECK(format_symbol(iguanodon_symbol(2)) == "inf 1 0 b 1/2 b 1 1 inf");
  FareySymbol even = parse_symbol("inf 1 0 o 1 1 inf");
  CHECK(format_symbol(even) == "inf 1 0 o 1 1 inf");
}

TEST_CASE("parse/format round-trip is the identity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    FareySymbol s = testing::random_symbol(rng);
    CHECK(parse_symbol(format_symbol(s)) == s);
  }
}

TEST_CASE("iguanodon fractions follow the half Farey sequence") {
  CHECK(iguanodon_symbol(2).fractions() ==
        std::vector<ExtendedRational>{{0, 1}, {1, 2}, {1, 1}});
  CHECK(iguanodon_symbol(3).fractions() ==
        std::vector<ExtendedRational>{{0, 1}, {1, 3}, {1, 2}, {1, 1}});
  CHECK(iguanodon_symbol(5).fractions() ==
        std::vector<ExtendedRational>{{0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}, {1, 1}});
  CHECK_THROWS_AS(iguanodon_symbol(1), DomainError);
}

TEST_CASE("triangulate contracts mediants") {
  SECTION("Iguanodon(3) gives the three expected triangles") {
    Triangulation tri = triangulate(iguanodon_symbol(3));
    REQUIRE(tri.triangles.size() == 3);
    CHECK(tri.triangles[0].u == ExtendedRational(0, 1));
    CHECK(tri.triangles[0].v == ExtendedRational(1, 3));
    CHECK(tri.triangles[0].w == ExtendedRational(1, 2));
    CHECK(tri.triangles[1].v == ExtendedRational(1, 2));
    CHECK(tri.triangles[2].w.is_infinity());
  }
  SECTION("Iguanodon(2) gives two triangles") {
    CHECK(triangulate(iguanodon_symbol(2)).triangles.size() == 2);
  }
  SECTION("triangle count is V-2") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
      FareySymbol s = testing::random_symbol(rng);
      Triangulation tri = triangulate(s);
      CHECK(tri.triangles.size() == tri.vertices.size() - 2);
    }
  }
  SECTION("boundary sides touch one triangle, diagonals two") {
    Triangulation tri = triangulate(iguanodon_symbol(4));
    FareySymbol s = iguanodon_symbol(4);
    std::set<Side> boundary;
    for (std::size_t i = 0; i < s.side_count(); ++i) {
      auto [a, b] = s.side(i);
      boundary.insert(Side(a, b));
    }
    for (const auto& [side, tris] : tri.side_to_triangles) {
      if (boundary.count(side))
        CHECK(tris.size() == 1);
      else
        CHECK(tris.size() == 2);
    }
  }
  SECTION("two-vertex symbols are rejected") {
    FareySymbol s = parse_symbol("inf 1 0 1 inf");
    CHECK_THROWS_AS(triangulate(s), DegenerateSymbol);
  }
}

TEST_CASE("3T + odd sides reproduces the m(n) table") {
  const int expected[] = {8, 12, 16, 24, 28, 40, 48, 60};
  for (int n = 2; n <= 9; ++n) {
    FareySymbol s = iguanodon_symbol(n);
    Triangulation tri = triangulate(s);
    int m = 3 * static_cast<int>(tri.triangles.size()) + static_cast<int>(s.odd_side_count());
    CHECK(m == expected[n - 2]);
  }
}

TEST_CASE("iguanodon determinants are +-1 up to n = 20") {
  for (int n = 2; n <= 20; ++n) {
    FareySymbol s = iguanodon_symbol(n);
    const auto& fr = s.fractions();
    for (std::size_t i = 0; i + 1 < fr.size(); ++i) {
      std::int64_t d = det(fr[i], fr[i + 1]);
      CHECK((d == 1 || d == -1));
    }
  }
}
