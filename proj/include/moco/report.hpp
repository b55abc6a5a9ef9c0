#pragma once

// JSON serialization for every machine-readable surface, plus the end-to-end
// content pipeline. All reports embed the tool version and the engine seed;
// serialization uses ordered keys, so output is byte-stable for a fixed seed
// and version.

#include <string>
#include <vector>

#include <json.hpp>

#include "moco/dessin.hpp"
#include "moco/errors.hpp"
#include "moco/farey.hpp"
#include "moco/habiro.hpp"
#include "moco/permgroup.hpp"
#include "moco/quiver.hpp"
#include "moco/reptheory.hpp"
#include "moco/version.hpp"

namespace moco {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// farey symbol

inline Json symbol_to_json(const FareySymbol& s) {
  Json fractions = Json::array();
  for (const auto& x : s.fractions()) fractions.push_back({x.num(), x.den()});
  Json pairings = Json::array();
  for (const auto& p : s.pairings())
    pairings.push_back(p.is_free() ? "free:" + std::to_string(p.label) : p.token());
  return Json{{"fractions", std::move(fractions)}, {"pairings", std::move(pairings)}};
}

inline FareySymbol symbol_from_json(const Json& j) {
  if (!j.contains("fractions") || !j.contains("pairings"))
    throw SyntaxError("symbol JSON needs 'fractions' and 'pairings'");
  std::vector<ExtendedRational> fractions;
  for (const auto& f : j.at("fractions")) {
    if (!f.is_array() || f.size() != 2) throw SyntaxError("fraction must be a [p, q] pair");
    fractions.emplace_back(f[0].get<std::int64_t>(), f[1].get<std::int64_t>());
  }
  std::vector<Pairing> pairings;
  for (const auto& p : j.at("pairings")) {
    std::string tok = p.get<std::string>();
    if (tok.rfind("free:", 0) == 0)
      pairings.push_back(detail::parse_pairing_token(tok.substr(5)));
    else
      pairings.push_back(detail::parse_pairing_token(tok));
  }
  return FareySymbol(std::move(fractions), std::move(pairings));
}

// ---------------------------------------------------------------------------
// permutations and dessins: image arrays hold 1-based images, entry i is the
// image of point i+1

inline Json permutation_to_json(const Permutation& p) {
  Json arr = Json::array();
  for (int i = 0; i < p.degree(); ++i) arr.push_back(p[i] + 1);
  return arr;
}

inline Permutation permutation_from_json(const Json& j, int degree = -1) {
  std::vector<int> images;
  for (const auto& v : j) images.push_back(v.get<int>() - 1);
  if (degree >= 0 && static_cast<int>(images.size()) != degree)
    throw ValidationError("permutation degree mismatch in JSON");
  return Permutation(std::move(images));
}

inline Json dessin_to_json(const Dessin& d) {
  return Json{{"degree", d.degree()},
              {"sigma0", permutation_to_json(d.sigma0())},
              {"sigma1", permutation_to_json(d.sigma1())}};
}

inline std::string export_dessin(const Dessin& d, const std::string& format) {
  if (format == "dot") return export_dessin_dot(d);
  if (format == "json") return dessin_to_json(d).dump(2) + "\n";
  throw DomainError("unknown dessin export format '" + format + "'");
}

// ---------------------------------------------------------------------------
// quivers and character data

inline Json quiver_to_json(const QuiverPresentation& q) {
  Json j{{"vertices", q.vertices}, {"arrows", q.arrows}};
  if (q.alpha) j["alpha"] = *q.alpha;
  return j;
}

inline Json char_value_to_json(const CharValue& v) {
  return Json{{"conductor", v.conductor()}, {"coeffs", v.coeffs()}};
}

inline Json character_table_to_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < t.classes().count(); ++c) {
    classes.push_back(Json{{"size", t.classes().sizes()[c]},
                           {"element_order", t.classes().representatives()[c].order()},
                           {"cycle_type", t.classes().representatives()[c].cycle_type()},
                           {"centralizer_order", t.classes().centralizer_orders()[c]}});
  }
  Json values = Json::array();
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    Json row = Json::array();
    for (std::size_t c = 0; c < t.classes().count(); ++c)
      row.push_back(char_value_to_json(t.value(chi, c)));
    values.push_back(std::move(row));
  }
  return Json{{"order", t.group_order()},
              {"exponent", t.exponent()},
              {"dixon_prime", t.dixon_prime()},
              {"classes", std::move(classes)},
              {"degrees", t.degrees()},
              {"values", std::move(values)}};
}

inline Json zagier_report_to_json(const ZagierReport& r) {
  Json radial = Json::array();
  for (std::size_t i = 0; i < r.radii.size(); ++i)
    radial.push_back(Json{{"radius", r.radii[i]},
                          {"value", {r.radial_values[i].real(), r.radial_values[i].imag()}}});
  return Json{{"m", r.m},
              {"exact", r.exact_value.str()},
              {"exact_embedded", {r.exact_embedded.real(), r.exact_embedded.imag()}},
              {"radial", std::move(radial)},
              {"extrapolated", {r.extrapolated.real(), r.extrapolated.imag()}},
              {"difference", r.difference},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

// ---------------------------------------------------------------------------
// the content pipeline

struct PipelineOptions {
  std::uint64_t seed = 0;
  std::int64_t class_bound = 10'000'000;
  std::size_t max_classes = 40;
};

/// Everything the pipeline computes for one symbol.
struct ContentReport {
  std::string symbol_text;
  int degree = 0;
  std::vector<int> sigma0_cycle_type;
  std::vector<int> sigma1_cycle_type;
  SurfaceInvariants surface;
  BigInt group_order;
  bool transitive = false;
  bool two_transitive = false;
  AltSymOther classification = AltSymOther::other;
  Decomposition decomposition;
  std::vector<DimensionVector5> part_dimension_vectors;
  DimensionVector5 total_dimension_vector;
  QuiverPresentation content;
};

/// symbol -> dessin -> monodromy group -> decomposition -> local quiver.
inline ContentReport build_content_report(const FareySymbol& s, PipelineOptions opts = {}) {
  ContentReport r;
  r.symbol_text = format_symbol(s);
  Dessin d = build_dessin(s);
  r.degree = d.degree();
  r.sigma0_cycle_type = d.sigma0().cycle_type();
  r.sigma1_cycle_type = d.sigma1().cycle_type();
  r.surface = surface_invariants(d);

  PermutationGroup g = group_from_dessin(d, opts.seed);
  r.group_order = g.order();
  r.transitive = g.is_transitive();
  r.two_transitive = r.transitive && g.is_2transitive();
  r.classification = g.alternating_or_symmetric();

  r.decomposition =
      decompose_permutation(g, d, CharacterTableOptions{opts.class_bound, opts.max_classes});
  for (const auto& part : r.decomposition.parts)
    r.part_dimension_vectors.push_back(part_dimension_vector(part));

  Permutation s0sq = d.sigma0() * d.sigma0();
  r.total_dimension_vector = dimvec_from_character(
      d.degree(), d.sigma1().fixed_points(), Zeta3{d.sigma0().fixed_points(), 0},
      Zeta3{s0sq.fixed_points(), 0});

  // additivity: sum of e_i alpha_i must be the module's dimension vector
  DimensionVector5 weighted;
  std::int64_t dim_check = 0;
  for (std::size_t i = 0; i < r.decomposition.parts.size(); ++i) {
    for (std::int64_t m = 0; m < r.decomposition.parts[i].multiplicity; ++m)
      weighted = weighted + r.part_dimension_vectors[i];
    dim_check += r.decomposition.parts[i].multiplicity * r.decomposition.parts[i].degree;
  }
  if (dim_check != r.degree || !(weighted == r.total_dimension_vector))
    throw InternalError("decomposition does not add up to the permutation module");

  r.content = modular_content(r.decomposition);
  return r;
}

inline const char* classification_tag(AltSymOther c) {
  switch (c) {
    case AltSymOther::alt: return "alternating";
    case AltSymOther::sym: return "symmetric";
    default: return "other";
  }
}

inline Json content_report_to_json(const ContentReport& r, std::uint64_t seed) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < r.decomposition.parts.size(); ++i) {
    const auto& p = r.decomposition.parts[i];
    parts.push_back(Json{{"multiplicity", p.multiplicity},
                         {"degree", p.degree},
                         {"chi_sigma0", char_value_to_json(p.at_sigma0)},
                         {"chi_sigma0_sq", char_value_to_json(p.at_sigma0_sq)},
                         {"chi_sigma1", char_value_to_json(p.at_sigma1)},
                         {"dimension_vector", r.part_dimension_vectors[i].as_array()}});
  }
  return Json{
      {"tool", kToolName},
      {"version", kVersion},
      {"seed", seed},
      {"symbol", r.symbol_text},
      {"degree", r.degree},
      {"sigma0_cycle_type", r.sigma0_cycle_type},
      {"sigma1_cycle_type", r.sigma1_cycle_type},
      {"surface",
       Json{{"genus", r.surface.genus},
            {"cusps", r.surface.cusps},
            {"e2", r.surface.e2},
            {"e3", r.surface.e3},
            {"index", r.surface.index}}},
      {"group",
       Json{{"order", r.group_order.str()},
            {"transitive", r.transitive},
            {"two_transitive", r.two_transitive},
            {"classification", classification_tag(r.classification)}}},
      {"decomposition",
       Json{{"via_2transitive_shortcut", r.decomposition.via_2transitive_shortcut},
            {"parts", std::move(parts)}}},
      {"total_dimension_vector", r.total_dimension_vector.as_array()},
      {"content", quiver_to_json(r.content)},
      {"loop_convention",
       "arrow counts are delta_ij - chi(alpha_i, alpha_j); loops count directed arrows, so a "
       "figure counting symmetric arrow pairs shows half the loop number (n^2 instead of 2n^2 "
       "at the big Iguanodon vertex)"}};
}

/// Human-readable summary of a content report.
inline std::string content_report_to_text(const ContentReport& r) {
  std::ostringstream out;
  out << "symbol: " << r.symbol_text << "\n";
  out << "dessin degree: " << r.degree << "\n";
  auto type_str = [](const std::vector<int>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s;
  };
  out << "sigma0 cycle type: " << type_str(r.sigma0_cycle_type) << "\n";
  out << "sigma1 cycle type: " << type_str(r.sigma1_cycle_type) << "\n";
  out << "surface: genus " << r.surface.genus << ", cusps " << r.surface.cusps << ", e2 "
      << r.surface.e2 << ", e3 " << r.surface.e3 << ", index " << r.surface.index << "\n";
  out << "group order: " << r.group_order.str() << " (" << classification_tag(r.classification)
      << (r.two_transitive ? ", 2-transitive" : "") << ")\n";
  out << "decomposition (" << (r.decomposition.via_2transitive_shortcut ? "shortcut" : "table")
      << "):\n";
  for (std::size_t i = 0; i < r.decomposition.parts.size(); ++i) {
    const auto& p = r.decomposition.parts[i];
    out << "  " << r.content.vertices[i] << ": multiplicity " << p.multiplicity << ", degree "
        << p.degree << ", chi(s0) = " << p.at_sigma0.str() << ", chi(s1) = " << p.at_sigma1.str()
        << ", alpha = " << r.part_dimension_vectors[i].str() << "\n";
  }
  out << "total dimension vector: " << r.total_dimension_vector.str() << "\n";
  out << "content arrows:\n";
  for (std::size_t i = 0; i < r.content.arrows.size(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < r.content.arrows[i].size(); ++j)
      out << (j ? " " : "") << r.content.arrows[i][j];
    out << "\n";
  }
  return out.str();
}

}  // namespace moco
