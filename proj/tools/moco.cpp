// moco: generalized Farey symbols -> modular dessins -> monodromy groups ->
// modular content, plus exact cyclotomic/Habiro arithmetic.
//
// Exit codes: 0 success, 1 invalid input, 2 size bound exceeded, 3 internal
// inconsistency. Data goes to stdout, diagnostics to stderr.

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moco/report.hpp"

namespace {

using namespace moco;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 0;
  std::int64_t class_bound = 10'000'000;
  std::int64_t brute_bound = 100'000'000;
};

FareySymbol resolve_symbol(const std::string& text, int iguanodon) {
  if (iguanodon > 0 && !text.empty())
    throw ValidationError("give either a symbol or --iguanodon, not both");
  if (iguanodon > 0) return iguanodon_symbol(iguanodon);
  if (text.empty()) throw ValidationError("no symbol given; pass one or use --iguanodon");
  return parse_symbol(text);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw ValidationError("empty integer list '" + text + "'");
  return out;
}

DimensionVector5 parse_dimvec(const std::string& text) {
  std::vector<std::int64_t> v = parse_int_list(text);
  if (v.size() != 5) throw ValidationError("dimension vector needs 5 entries a1,a2,b1,b2,b3");
  return DimensionVector5{v[0], v[1], v[2], v[3], v[4]};
}

void emit(const GlobalOptions& g, const Json& machine, const std::string& human) {
  if (g.json)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

// ---- farey ----------------------------------------------------------------

void cmd_farey_parse(const GlobalOptions& g, const std::string& text, int iguanodon) {
  FareySymbol s = resolve_symbol(text, iguanodon);
  emit(g, symbol_to_json(s), format_symbol(s) + "\n");
}

void cmd_farey_triangulate(const GlobalOptions& g, const std::string& text, int iguanodon) {
  FareySymbol s = resolve_symbol(text, iguanodon);
  Triangulation tri = triangulate(s);
  if (g.json) {
    Json triangles = Json::array();
    for (const auto& t : tri.triangles)
      triangles.push_back({t.u.str(), t.v.str(), t.w.str()});
    emit(g, Json{{"symbol", format_symbol(s)}, {"triangles", triangles}}, "");
    return;
  }
  std::ostringstream out;
  out << "triangles (" << tri.triangles.size() << "):\n";
  for (const auto& t : tri.triangles)
    out << "  (" << t.u.str() << ", " << t.v.str() << ", " << t.w.str() << ")\n";
  std::cout << out.str();
}

// ---- dessin ---------------------------------------------------------------

void cmd_dessin(const GlobalOptions& g, const std::string& text, int iguanodon,
                const std::string& export_format) {
  Dessin d = build_dessin(resolve_symbol(text, iguanodon));
  if (!export_format.empty()) {
    std::cout << export_dessin(d, export_format);
    return;
  }
  if (g.json) {
    emit(g, dessin_to_json(d), "");
    return;
  }
  SurfaceInvariants inv = surface_invariants(d);
  std::ostringstream out;
  out << "degree: " << d.degree() << "\n";
  out << "sigma0: " << d.sigma0().cycle_string() << "\n";
  out << "sigma1: " << d.sigma1().cycle_string() << "\n";
  out << "genus " << inv.genus << ", cusps " << inv.cusps << ", e2 " << inv.e2 << ", e3 "
      << inv.e3 << "\n";
  std::cout << out.str();
}

// ---- group ----------------------------------------------------------------

void cmd_group(const GlobalOptions& g, const std::string& text, int iguanodon,
               const std::string& perms, bool with_classes, bool with_table, int tqft_genus) {
  PermutationGroup group = [&] {
    if (!perms.empty()) {
      if (!text.empty() || iguanodon > 0)
        throw ValidationError("--perms excludes a symbol argument");
      auto semi = perms.find(';');
      if (semi == std::string::npos)
        throw ValidationError("--perms wants two cycle-notation permutations 'S0;S1'");
      Permutation a = parse_cycles(perms.substr(0, semi));
      Permutation b = parse_cycles(perms.substr(semi + 1));
      int degree = std::max(a.degree(), b.degree());
      auto pad = [degree](const Permutation& p) {
        std::vector<int> images(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i < p.degree() ? p[i] : i;
        return Permutation(std::move(images));
      };
      return PermutationGroup(degree, {pad(a), pad(b)}, g.seed);
    }
    return group_from_dessin(build_dessin(resolve_symbol(text, iguanodon)), g.seed);
  }();

  Json j{{"tool", kToolName}, {"version", kVersion}, {"seed", g.seed},
         {"degree", group.degree()}, {"order", group.order().str()},
         {"orbits", group.orbits()}, {"transitive", group.is_transitive()}};
  j["two_transitive"] = group.is_transitive() ? Json(group.is_2transitive()) : Json(false);
  j["classification"] = classification_tag(group.alternating_or_symmetric());

  std::ostringstream out;
  out << "degree: " << group.degree() << "\norder: " << group.order().str() << "\n";
  out << "transitive: " << (group.is_transitive() ? "yes" : "no") << "\n";
  if (group.is_transitive())
    out << "2-transitive: " << (group.is_2transitive() ? "yes" : "no") << "\n";
  out << "classification: " << classification_tag(group.alternating_or_symmetric()) << "\n";

  if (with_classes || with_table) {
    if (with_table) {
      CharacterTable t = CharacterTable::build(
          group, CharacterTableOptions{g.class_bound, 40});
      j["character_table"] = character_table_to_json(t);
      out << "character degrees:";
      for (auto deg : t.degrees()) out << " " << deg;
      out << "\n";
    } else {
      ConjugacyClasses classes = group.conjugacy_classes(g.class_bound);
      Json cj = Json::array();
      out << "classes (" << classes.count() << "):\n";
      for (std::size_t c = 0; c < classes.count(); ++c) {
        cj.push_back(Json{{"size", classes.sizes()[c]},
                          {"element_order", classes.representatives()[c].order()},
                          {"representative", classes.representatives()[c].cycle_string()}});
        out << "  size " << classes.sizes()[c] << ", order "
            << classes.representatives()[c].order() << ", rep "
            << classes.representatives()[c].cycle_string() << "\n";
      }
      j["classes"] = std::move(cj);
    }
  }
  if (tqft_genus > 0) {
    cpp_int brute = tqft_count_brute(tqft_genus, group, g.brute_bound);
    j["tqft"] = Json{{"genus", tqft_genus}, {"homomorphisms", brute.str()}};
    out << "homomorphisms from the genus-" << tqft_genus << " surface group: " << brute.str()
        << "\n";
  }
  emit(g, j, out.str());
}

// ---- content ----------------------------------------------------------------

void cmd_content(const GlobalOptions& g, const std::string& text, int iguanodon) {
  FareySymbol s = resolve_symbol(text, iguanodon);
  ContentReport r = build_content_report(
      s, PipelineOptions{g.seed, g.class_bound, 40});
  emit(g, content_report_to_json(r, g.seed), content_report_to_text(r));
}

// ---- quiver ----------------------------------------------------------------

void cmd_quiver_one_modular(const GlobalOptions& g, const std::string& export_format) {
  QuiverPresentation q = one_quiver_modular();
  if (export_format == "dot") {
    std::cout << quiver_dot(q);
    return;
  }
  std::ostringstream out;
  out << "vertices: a b c d e f\narrows:\n";
  for (const auto& row : q.arrows) {
    out << " ";
    for (auto v : row) out << " " << v;
    out << "\n";
  }
  emit(g, quiver_to_json(q), out.str());
}

void cmd_quiver_surface(const GlobalOptions& g, int genus, const std::string& dims,
                        const std::string& export_format) {
  QuiverPresentation q = surface_local_quiver(genus, parse_int_list(dims));
  if (export_format == "dot") {
    std::cout << quiver_dot(q);
    return;
  }
  std::ostringstream out;
  out << "loops:";
  for (std::size_t i = 0; i < q.vertices.size(); ++i) out << " " << q.loops(i);
  out << "\narrows:\n";
  for (const auto& row : q.arrows) {
    out << " ";
    for (auto v : row) out << " " << v;
    out << "\n";
  }
  emit(g, quiver_to_json(q), out.str());
}

void cmd_quiver_euler(const GlobalOptions& g, const std::string& alpha, const std::string& beta) {
  DimensionVector5 a = parse_dimvec(alpha), b = parse_dimvec(beta);
  std::int64_t chi = euler_form(a, b);
  emit(g,
       Json{{"alpha", a.as_array()}, {"beta", b.as_array()}, {"euler_form", chi},
            {"family_dimension", 1 - euler_form(a, a)}},
       "chi(" + a.str() + ", " + b.str() + ") = " + std::to_string(chi) + "\n");
}

// ---- habiro ----------------------------------------------------------------

void cmd_habiro_phi(const GlobalOptions& g, int n) {
  IntPolynomial phi = cyclotomic_polynomial(n);
  Json coeffs = Json::array();
  for (const auto& c : phi.coeffs()) coeffs.push_back(c.str());
  emit(g, Json{{"n", n}, {"phi", phi.str()}, {"coeffs", coeffs}}, phi.str() + "\n");
}

void cmd_habiro_comax(const GlobalOptions& g, int m, int n) {
  bool co = comaximal(m, n);
  cpp_int res = cyclotomic_resultant(m, n);
  cpp_int mag = res < 0 ? cpp_int(-res) : res;
  emit(g, Json{{"m", m}, {"n", n}, {"comaximal", co}, {"resultant", mag.str()}},
       std::string(co ? "comaximal" : "not comaximal") + ", resultant " + mag.str() + "\n");
}

void cmd_habiro_clique(const GlobalOptions& g, const std::string& list) {
  std::vector<std::int64_t> values = parse_int_list(list);
  CliqueGraph graph = clique_graph(std::set<std::int64_t>(values.begin(), values.end()));
  Json edges = Json::array();
  for (auto [a, b] : graph.edges) edges.push_back({a, b});
  std::ostringstream out;
  out << graph.components.size() << " component(s):\n";
  for (const auto& comp : graph.components) {
    out << " ";
    for (auto v : comp) out << " " << v;
    out << "\n";
  }
  emit(g,
       Json{{"nodes", graph.nodes}, {"edges", std::move(edges)},
            {"components", graph.components}, {"saturated",
             is_saturated(std::set<std::int64_t>(values.begin(), values.end()))}},
       out.str());
}

void cmd_habiro_kontsevich(const GlobalOptions& g, int m, int level) {
  if (level < m) level = m;
  CyclotomicInteger v = evaluate_at_root(HabiroElement::kontsevich(level), m);
  Json coeffs = Json::array();
  int width = euler_phi(m);
  for (int i = 0; i < width; ++i) coeffs.push_back(v.value()[static_cast<std::size_t>(i)].str());
  emit(g, Json{{"m", m}, {"level", level}, {"conductor", m}, {"coeffs", coeffs}},
       v.str() + "\n");
}

void cmd_habiro_zagier(const GlobalOptions& g, int m, double tol) {
  ZagierReport r = zagier_radial_check(m, {}, tol);
  std::ostringstream out;
  out << "exact F(zeta_" << m << ") = " << r.exact_value.str() << " ~ ("
      << r.exact_embedded.real() << ", " << r.exact_embedded.imag() << ")\n";
  out << "radial extrapolation = (" << r.extrapolated.real() << ", " << r.extrapolated.imag()
      << ")\n";
  out << "difference " << r.difference << " vs tolerance " << r.tolerance << ": "
      << (r.pass ? "PASS" : "FAIL") << "\n";
  emit(g, zagier_report_to_json(r), out.str());
  if (!r.pass) throw InternalError("radial limit check failed its tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular dessins, monodromy groups and modular content"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "machine-readable JSON on stdout");
  app.add_option("--seed", g.seed, "group engine seed");
  app.add_option("--class-bound", g.class_bound, "largest order for class enumeration");
  app.add_option("--brute-bound", g.brute_bound, "largest tuple count for brute-force counts");

  std::string sym_text, perms, export_format, dims, alpha, beta, list;
  int iguanodon = 0, n_arg = 0, m_arg = 0, level = 0, genus = 0, tqft_genus = 0;
  double tol = 0.05;
  bool with_classes = false, with_table = false;

  auto add_symbol_options = [&](CLI::App* cmd) {
    cmd->add_option("symbol", sym_text, "Farey symbol, e.g. \"inf 1 0 b 1/2 b 1 1 inf\"");
    cmd->add_option("--iguanodon", iguanodon, "use the n-th Iguanodon symbol")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* farey = app.add_subcommand("farey", "parse, generate and triangulate symbols");
  farey->require_subcommand(1);
  CLI::App* farey_parse = farey->add_subcommand("parse", "validate and echo a symbol");
  add_symbol_options(farey_parse);
  CLI::App* farey_ig = farey->add_subcommand("iguanodon", "emit the n-th Iguanodon symbol");
  farey_ig->add_option("n", n_arg, "index")->required()->check(CLI::PositiveNumber);
  CLI::App* farey_tri = farey->add_subcommand("triangulate", "mediant triangulation");
  add_symbol_options(farey_tri);

  CLI::App* dessin = app.add_subcommand("dessin", "build the modular dessin of a symbol");
  add_symbol_options(dessin);
  dessin->add_option("--export", export_format, "dot | json");

  CLI::App* group = app.add_subcommand("group", "monodromy group of a symbol");
  add_symbol_options(group);
  group->add_option("--perms", perms, "explicit generators \"(1 2 3);(1 2)\"");
  group->add_flag("--classes", with_classes, "enumerate conjugacy classes");
  group->add_flag("--table", with_table, "compute the character table");
  group->add_option("--tqft", tqft_genus, "count homomorphisms from a genus-g surface group");

  CLI::App* content = app.add_subcommand("content", "full pipeline: modular content report");
  add_symbol_options(content);

  CLI::App* quiver = app.add_subcommand("quiver", "quiver utilities");
  quiver->require_subcommand(1);
  CLI::App* q_one = quiver->add_subcommand("one-modular", "one quiver of the modular group");
  q_one->add_option("--export", export_format, "dot");
  CLI::App* q_surface = quiver->add_subcommand("surface", "local quiver over a surface group");
  q_surface->add_option("-g,--genus", genus, "genus")->required();
  q_surface->add_option("dims", dims, "summand dimensions n1,n2,...")->required();
  q_surface->add_option("--export", export_format, "dot");
  CLI::App* q_euler = quiver->add_subcommand("euler", "Euler form of two dimension vectors");
  q_euler->add_option("alpha", alpha, "a1,a2,b1,b2,b3")->required();
  q_euler->add_option("beta", beta, "a1,a2,b1,b2,b3")->required();

  CLI::App* habiro = app.add_subcommand("habiro", "cyclotomic and Habiro-ring arithmetic");
  habiro->require_subcommand(1);
  CLI::App* h_phi = habiro->add_subcommand("phi", "cyclotomic polynomial");
  h_phi->add_option("n", n_arg, "index")->required()->check(CLI::PositiveNumber);
  CLI::App* h_comax = habiro->add_subcommand("comax", "comaximality and resultant");
  h_comax->add_option("m", m_arg, "first index")->required()->check(CLI::PositiveNumber);
  h_comax->add_option("n", n_arg, "second index")->required()->check(CLI::PositiveNumber);
  CLI::App* h_clique = habiro->add_subcommand("clique", "clique graph of an index set");
  h_clique->add_option("set", list, "comma-separated indices, e.g. \"1,2,3,6\"")->required();
  CLI::App* h_kont = habiro->add_subcommand("eval-kontsevich", "Kontsevich series at zeta_m");
  h_kont->add_option("m", m_arg, "root of unity order")->required()->check(CLI::PositiveNumber);
  h_kont->add_option("--level", level, "truncation level (default m)");
  CLI::App* h_zagier = habiro->add_subcommand("zagier-check", "radial limit comparison");
  h_zagier->add_option("m", m_arg, "root of unity order")->required()->check(CLI::PositiveNumber);
  h_zagier->add_option("--tol", tol, "tolerance (default 0.05)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (farey_parse->parsed()) cmd_farey_parse(g, sym_text, iguanodon);
    if (farey_ig->parsed()) std::cout << format_symbol(iguanodon_symbol(n_arg)) << "\n";
    if (farey_tri->parsed()) cmd_farey_triangulate(g, sym_text, iguanodon);
    if (dessin->parsed()) cmd_dessin(g, sym_text, iguanodon, export_format);
    if (group->parsed()) cmd_group(g, sym_text, iguanodon, perms, with_classes, with_table, tqft_genus);
    if (content->parsed()) cmd_content(g, sym_text, iguanodon);
    if (q_one->parsed()) cmd_quiver_one_modular(g, export_format);
    if (q_surface->parsed()) cmd_quiver_surface(g, genus, dims, export_format);
    if (q_euler->parsed()) cmd_quiver_euler(g, alpha, beta);
    if (h_phi->parsed()) cmd_habiro_phi(g, n_arg);
    if (h_comax->parsed()) cmd_habiro_comax(g, m_arg, n_arg);
    if (h_clique->parsed()) cmd_habiro_clique(g, list);
    if (h_kont->parsed()) cmd_habiro_kontsevich(g, m_arg, level);
    if (h_zagier->parsed()) cmd_habiro_zagier(g, m_arg, tol);
  } catch (const moco::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case moco::Error::Kind::validation: return 1;
      case moco::Error::Kind::size_bound: return 2;
      case moco::Error::Kind::internal: return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
