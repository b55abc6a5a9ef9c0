#include <catch2/catch_amalgamated.hpp>

#include "moco/report.hpp"
#include "support/minischema.hpp"
#include "support/random_symbol.hpp"

using namespace moco;

#ifndef MOCO_SCHEMA_DIR
#define MOCO_SCHEMA_DIR "schemas"
#endif

namespace {
testing::SchemaValidator validator() { return testing::SchemaValidator(MOCO_SCHEMA_DIR); }
}  // namespace

TEST_CASE("symbol JSON round trip") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 40; ++i) {
    FareySymbol s = testing::random_symbol(rng);
    Json j = symbol_to_json(s);
    CHECK(symbol_from_json(j) == s);
  }
  Json j = symbol_to_json(iguanodon_symbol(3));
  CHECK(j.at("pairings")[0] == "free:1");
  CHECK(j.at("fractions")[1] == Json::array({1, 3}));
  validator().validate_file(j, "farey-symbol.schema.json");
}

TEST_CASE("dessin JSON export") {
  SECTION("one-edge dessin") {
    Json j = dessin_to_json(Dessin(Permutation(1), Permutation(1)));
    CHECK(j.dump() == R"({"degree":1,"sigma0":[1],"sigma1":[1]})");
    validator().validate_file(j, "dessin.schema.json");
  }
  SECTION("Iguanodon(2) has degree 8") {
    Json j = dessin_to_json(build_dessin(iguanodon_symbol(2)));
    CHECK(j.at("degree") == 8);
    validator().validate_file(j, "dessin.schema.json");
  }
  SECTION("permutations survive the JSON round trip") {
    Dessin d = build_dessin(iguanodon_symbol(3));
    Json j = dessin_to_json(d);
    Permutation s0 = permutation_from_json(j.at("sigma0"), d.degree());
    Permutation s1 = permutation_from_json(j.at("sigma1"), d.degree());
    CHECK(s0 == d.sigma0());
    CHECK(s1 == d.sigma1());
    CHECK_NOTHROW(Dessin(s0, s1));
  }
}

TEST_CASE("quiver and character table JSON validate") {
  validator().validate_file(quiver_to_json(one_quiver_modular()), "quiver.schema.json");
  validator().validate_file(quiver_to_json(surface_local_quiver(2, {1, 2})),
                            "quiver.schema.json");
  PermutationGroup s3(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
  validator().validate_file(character_table_to_json(CharacterTable::build(s3)),
                            "character-table.schema.json");
}

TEST_CASE("content report") {
  ContentReport r = build_content_report(iguanodon_symbol(3));
  SECTION("fields") {
    CHECK(r.degree == 12);
    CHECK(r.group_order == 95040);
    CHECK(r.two_transitive);
    CHECK(r.classification == AltSymOther::other);
    CHECK(r.total_dimension_vector == DimensionVector5{6, 6, 6, 3, 3});
    CHECK(r.content.arrows == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 18}});
  }
  SECTION("JSON validates against the schema") {
    Json j = content_report_to_json(r, 0);
    validator().validate_file(j, "content-report.schema.json");
    CHECK(j.at("group").at("order") == "95040");
    CHECK(j.at("decomposition").at("parts").size() == 2);
  }
  SECTION("byte-stable for a fixed seed") {
    std::string a = content_report_to_json(build_content_report(iguanodon_symbol(3)), 0).dump(2);
    std::string b = content_report_to_json(build_content_report(iguanodon_symbol(3)), 0).dump(2);
    CHECK(a == b);
  }
  SECTION("human-readable text mentions the key facts") {
    std::string text = content_report_to_text(r);
    CHECK(text.find("95040") != std::string::npos);
    CHECK(text.find("(6,6;6,3,3)") != std::string::npos);
  }
}

TEST_CASE("content pipeline handles a table-path symbol") {
  // all sides free-paired: a genus-bearing dessin whose group is not
  // 2-transitive, exercising the Dixon path end to end
  FareySymbol s = parse_symbol("inf 1 0 2 1 2 2 1 inf");
  ContentReport r = build_content_report(s);
  CHECK(!r.decomposition.via_2transitive_shortcut);
  std::int64_t total = 0;
  for (const auto& part : r.decomposition.parts)
    total += part.multiplicity * part.degree;
  CHECK(total == r.degree);
  validator().validate_file(content_report_to_json(r, 0), "content-report.schema.json");
}

TEST_CASE("the crossed-pair genus-1 symbol recovers the hexagon") {
  // index-6 normal subgroup with quotient C6: regular monodromy action, so
  // the module splits into all six linear characters and the local quiver
  // is the full one quiver
  ContentReport r = build_content_report(parse_symbol("inf 1 -1 2 0 1 1 2 inf"));
  CHECK(r.degree == 6);
  CHECK(r.group_order == 6);
  CHECK(r.surface.genus == 1);
  CHECK(r.surface.cusps == 1);
  CHECK(r.surface.e2 == 0);
  CHECK(r.surface.e3 == 0);
  REQUIRE(r.decomposition.parts.size() == 6);

  // each summand's dimension vector is one of the six generator vectors;
  // arrows exist exactly between generators differing in both coordinates
  for (std::size_t i = 0; i < 6; ++i) {
    const auto a = r.part_dimension_vectors[i];
    CHECK(a.a1 + a.a2 == 1);
    CHECK(a.b1 + a.b2 + a.b3 == 1);
    for (std::size_t j = 0; j < 6; ++j) {
      const auto b = r.part_dimension_vectors[j];
      bool differ_both = !(a.a1 == b.a1 && a.a2 == b.a2) &&
                         !(a.b1 == b.b1 && a.b2 == b.b2 && a.b3 == b.b3);
      CHECK(r.content.arrows[i][j] == (i != j && differ_both ? 1 : 0));
    }
  }
}

TEST_CASE("reports across random symbols validate and balance") {
  std::mt19937_64 rng(99);
  int done = 0;
  for (int i = 0; done < 10 && i < 60; ++i) {
    FareySymbol s = testing::random_symbol(rng, 6);
    ContentReport r = [&] {
      try {
        return build_content_report(s);
      } catch (const SizeBoundExceeded&) {
        return build_content_report(iguanodon_symbol(2));  // fallback, still a valid report
      }
    }();
    ++done;
    validator().validate_file(content_report_to_json(r, 7), "content-report.schema.json");
    std::int64_t total_arrows_ok = true;
    for (const auto& row : r.content.arrows)
      for (auto v : row) total_arrows_ok = total_arrows_ok && v >= 0;
    CHECK(total_arrows_ok);
  }
  CHECK(done == 10);
}
