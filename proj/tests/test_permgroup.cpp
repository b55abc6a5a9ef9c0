#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "moco/dessin.hpp"
#include "moco/permgroup.hpp"
#include "support/random_symbol.hpp"

using namespace moco;

namespace {
PermutationGroup iguanodon_group(int n, std::uint64_t seed = 0) {
  return group_from_dessin(build_dessin(iguanodon_symbol(n)), seed);
}
}  // namespace

TEST_CASE("textbook groups") {
  PermutationGroup s3(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
  CHECK(s3.order() == 6);
  CHECK(s3.is_transitive());
  CHECK(s3.is_2transitive());
  CHECK(s3.alternating_or_symmetric() == AltSymOther::sym);

  PermutationGroup c3(3, {parse_cycles("(1 2 3)", 3)});
  CHECK(c3.order() == 3);
  CHECK(c3.is_transitive());
  CHECK(!c3.is_2transitive());

  PermutationGroup trivial(4, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.orbits() == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

  PermutationGroup c2xc2(4, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)});
  CHECK(c2xc2.order() == 4);
  CHECK(c2xc2.orbits() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(!c2xc2.is_transitive());
  CHECK_THROWS_AS(c2xc2.is_2transitive(), NotTransitive);
}

TEST_CASE("iguanodon monodromy orders") {
  CHECK(iguanodon_group(2).order() == 168);
  CHECK(iguanodon_group(3).order() == 95040);
  CHECK(iguanodon_group(4).order() == factorial_big(16) / 2);
  CHECK(iguanodon_group(5).order() == 244823040);
}

TEST_CASE("alternating/symmetric recognition") {
  CHECK(iguanodon_group(4).alternating_or_symmetric() == AltSymOther::alt);
  CHECK(iguanodon_group(3).alternating_or_symmetric() == AltSymOther::other);
  CHECK(iguanodon_group(2).alternating_or_symmetric() == AltSymOther::other);
}

TEST_CASE("iguanodon actions are 2-transitive") {
  for (int n = 2; n <= 5; ++n) CHECK(iguanodon_group(n).is_2transitive());
}

TEST_CASE("order is invariant across seeds") {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    CHECK(iguanodon_group(3, seed).order() == 95040);
    PermutationGroup s4(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)}, seed);
    CHECK(s4.order() == 24);
  }
}

TEST_CASE("membership holds for generator words") {
  Dessin d = build_dessin(iguanodon_symbol(3));
  PermutationGroup g = group_from_dessin(d);
  std::vector<Permutation> gens{d.sigma0(), d.sigma1()};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(1, 8), pick(0, 1);
  for (int i = 0; i < 60; ++i) {
    Permutation word(d.degree());
    int l = len(rng);
    for (int j = 0; j < l; ++j) word = word * gens[static_cast<std::size_t>(pick(rng))];
    CHECK(g.contains(word));
  }
  // and a non-member: any odd permutation is outside M12
  CHECK(!g.contains(parse_cycles("(1 2)", d.degree())));
}

TEST_CASE("conjugacy classes of S3") {
  PermutationGroup s3(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
  ConjugacyClasses cc = s3.conjugacy_classes();
  REQUIRE(cc.count() == 3);
  CHECK(cc.sizes() == std::vector<std::int64_t>{1, 3, 2});
  CHECK(cc.centralizer_orders() == std::vector<std::int64_t>{6, 2, 3});
  CHECK(cc.representatives()[0].is_identity());
  CHECK(cc.exponent() == 6);
  CHECK(cc.class_of(parse_cycles("(1 3)", 3)) == 1);
  CHECK(cc.class_of(parse_cycles("(1 3 2)", 3)) == 2);
}

TEST_CASE("conjugacy classes of the small monodromy groups") {
  SECTION("PSL(2,7) has 6 classes summing to 168") {
    ConjugacyClasses cc = iguanodon_group(2).conjugacy_classes();
    CHECK(cc.count() == 6);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < cc.count(); ++i) {
      total += cc.sizes()[i];
      CHECK(cc.sizes()[i] * cc.centralizer_orders()[i] == 168);
    }
    CHECK(total == 168);
  }
  SECTION("M12 has 15 classes summing to 95040") {
    ConjugacyClasses cc = iguanodon_group(3).conjugacy_classes();
    CHECK(cc.count() == 15);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < cc.count(); ++i) {
      total += cc.sizes()[i];
      CHECK(cc.sizes()[i] * cc.centralizer_orders()[i] == 95040);
    }
    CHECK(total == 95040);
  }
  SECTION("classes are seed independent") {
    ConjugacyClasses a = iguanodon_group(2, 1).conjugacy_classes();
    ConjugacyClasses b = iguanodon_group(2, 42).conjugacy_classes();
    REQUIRE(a.count() == b.count());
    for (std::size_t i = 0; i < a.count(); ++i) {
      CHECK(a.representatives()[i] == b.representatives()[i]);
      CHECK(a.sizes()[i] == b.sizes()[i]);
    }
  }
}

TEST_CASE("class enumeration respects the size bound") {
  CHECK_THROWS_AS(iguanodon_group(2).conjugacy_classes(100), SizeBoundExceeded);
  CHECK_THROWS_AS(iguanodon_group(5).conjugacy_classes(), SizeBoundExceeded);  // |M24| > 1e7
}

TEST_CASE("cycle type and fixed points") {
  Permutation p = parse_cycles("(1 2)", 4);
  CHECK(p.cycle_type() == std::vector<int>{2, 1, 1});
  CHECK(p.fixed_points() == 2);
  CHECK(Permutation(7).fixed_points() == 7);
  Dessin d3 = build_dessin(iguanodon_symbol(3));
  CHECK(d3.sigma0().fixed_points() == 3);
}

TEST_CASE("dessin-derived groups are transitive with the declared orders") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 25; ++i) {
    Dessin d = build_dessin(testing::random_symbol(rng, 8));
    PermutationGroup g = group_from_dessin(d);
    CHECK(g.is_transitive());
    CHECK((d.sigma0() * d.sigma0() * d.sigma0()).is_identity());
    CHECK((d.sigma1() * d.sigma1()).is_identity());
  }
}

TEST_CASE("uniform sampling stays inside the group") {
  PermutationGroup g = iguanodon_group(2);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) CHECK(g.contains(g.random_element(rng)));
}
