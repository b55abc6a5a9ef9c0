#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "moco/errors.hpp"
#include "moco/rational.hpp"

namespace moco {

/// Side label of a Farey symbol: an even fold (token "o"), an odd fold
/// (token "b"), or one half of a free pair (positive integer token).
struct Pairing {
  enum class Kind { even, odd, free_pair };

  Kind kind = Kind::odd;
  int label = 0;  // only meaningful for free_pair

  static Pairing even_side() { return {Kind::even, 0}; }
  static Pairing odd_side() { return {Kind::odd, 0}; }
  static Pairing free_side(int label) { return {Kind::free_pair, label}; }

  bool is_even() const { return kind == Kind::even; }
  bool is_odd() const { return kind == Kind::odd; }
  bool is_free() const { return kind == Kind::free_pair; }

  friend bool operator==(const Pairing& a, const Pairing& b) {
    return a.kind == b.kind && (a.kind != Kind::free_pair || a.label == b.label);
  }

  std::string token() const {
    switch (kind) {
      case Kind::even: return "o";
      case Kind::odd: return "b";
      default: return std::to_string(label);
    }
  }
};

/// A validated generalized Farey sequence x_0 < ... < x_n together with the
/// n+2 side labels for (inf,x_0), (x_0,x_1), ..., (x_n,inf).
class FareySymbol {
public:
  FareySymbol(std::vector<ExtendedRational> fractions, std::vector<Pairing> pairings)
      : fractions_(std::move(fractions)), pairings_(std::move(pairings)) {
    validate();
  }

  const std::vector<ExtendedRational>& fractions() const { return fractions_; }
  const std::vector<Pairing>& pairings() const { return pairings_; }

  std::size_t side_count() const { return pairings_.size(); }

  /// Side i as a vertex pair, i = 0 .. n+1; side 0 is (inf, x_0) and the
  /// last side is (x_n, inf).
  std::pair<ExtendedRational, ExtendedRational> side(std::size_t i) const {
    ExtendedRational inf = ExtendedRational::infinity();
    if (i == 0) return {inf, fractions_.front()};
    if (i == pairings_.size() - 1) return {fractions_.back(), inf};
    return {fractions_[i - 1], fractions_[i]};
  }

  std::size_t odd_side_count() const {
    return std::count_if(pairings_.begin(), pairings_.end(),
                         [](const Pairing& p) { return p.is_odd(); });
  }
  std::size_t even_side_count() const {
    return std::count_if(pairings_.begin(), pairings_.end(),
                         [](const Pairing& p) { return p.is_even(); });
  }

  friend bool operator==(const FareySymbol& a, const FareySymbol& b) {
    return a.fractions_ == b.fractions_ && a.pairings_ == b.pairings_;
  }

private:
  void validate() const {
    if (fractions_.empty()) throw ValidationError("symbol needs at least one fraction");
    if (pairings_.size() != fractions_.size() + 1)
      throw ValidationError("expected " + std::to_string(fractions_.size() + 1) +
                            " pairings, got " + std::to_string(pairings_.size()));
    for (const auto& x : fractions_)
      if (x.is_infinity()) throw ValidationError("interior fractions must be finite");
    if (!fractions_.front().is_integer() || !fractions_.back().is_integer())
      throw ValidationError("endpoints must be integers");
    bool has_zero = false;
    for (std::size_t i = 0; i < fractions_.size(); ++i) {
      if (fractions_[i].num() == 0) has_zero = true;
      if (i + 1 < fractions_.size()) {
        if (!(fractions_[i] < fractions_[i + 1]))
          throw ValidationError("fractions must be strictly increasing at position " +
                                std::to_string(i));
        std::int64_t d = det(fractions_[i], fractions_[i + 1]);
        if (d != 1 && d != -1)
          throw ValidationError("determinant condition violated between " +
                                fractions_[i].str() + " and " + fractions_[i + 1].str() +
                                " (|det| = " + std::to_string(d < 0 ? -d : d) + ")");
      }
    }
    if (!has_zero) throw ValidationError("symbol must contain 0");
    std::map<int, int> free_uses;
    for (const auto& p : pairings_) {
      if (p.is_free()) {
        if (p.label <= 0) throw ValidationError("free labels must be positive");
        ++free_uses[p.label];
      }
    }
    for (const auto& [label, uses] : free_uses)
      if (uses != 2)
        throw ValidationError("free label " + std::to_string(label) + " used " +
                              std::to_string(uses) + " times, expected 2");
  }

  std::vector<ExtendedRational> fractions_;
  std::vector<Pairing> pairings_;
};

namespace detail {

inline std::int64_t parse_int_token(const std::string& tok, const std::string& what) {
  if (tok.empty()) throw SyntaxError("empty " + what);
  std::size_t start = tok[0] == '-' ? 1 : 0;
  if (start == tok.size()) throw SyntaxError("bad " + what + " '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw SyntaxError("bad " + what + " '" + tok + "'");
  try {
    return std::stoll(tok);
  } catch (const std::exception&) {
    throw SyntaxError(what + " '" + tok + "' out of range");
  }
}

inline ExtendedRational parse_fraction_token(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) {
    return ExtendedRational(parse_int_token(tok, "integer"), 1);
  }
  std::int64_t p = parse_int_token(tok.substr(0, slash), "numerator");
  std::int64_t q = parse_int_token(tok.substr(slash + 1), "denominator");
  if (q <= 0) throw SyntaxError("denominator must be positive in '" + tok + "'");
  if (std::gcd(p < 0 ? -p : p, q) != 1)
    throw ValidationError("fraction '" + tok + "' is not reduced");
  return ExtendedRational(p, q);
}

inline Pairing parse_pairing_token(const std::string& tok) {
  if (tok == "o") return Pairing::even_side();
  if (tok == "b") return Pairing::odd_side();
  std::int64_t label = parse_int_token(tok, "pairing label");
  if (label <= 0) throw SyntaxError("pairing label must be positive, got '" + tok + "'");
  return Pairing::free_side(static_cast<int>(label));
}

}  // namespace detail

/// Parses the whitespace-separated grammar
///   inf PAIR frac (PAIR frac)* PAIR inf
/// where frac is `p/q` or an integer and PAIR is `o` | `b` | positive integer.
inline FareySymbol parse_symbol(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  // shortest form: inf PAIR frac PAIR inf
  if (tokens.size() < 5) throw SyntaxError("too few tokens for a Farey symbol");
  if (tokens.size() % 2 == 0) throw SyntaxError("token count must be odd");
  if (tokens.front() != "inf" || tokens.back() != "inf")
    throw SyntaxError("symbol must start and end with 'inf'");
  std::vector<Pairing> pairings;
  std::vector<ExtendedRational> fractions;
  for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
    if (i % 2 == 1)
      pairings.push_back(detail::parse_pairing_token(tokens[i]));
    else
      fractions.push_back(detail::parse_fraction_token(tokens[i]));
  }
  return FareySymbol(std::move(fractions), std::move(pairings));
}

/// Canonical text form; parse_symbol(format_symbol(s)) == s.
inline std::string format_symbol(const FareySymbol& s) {
  std::ostringstream out;
  out << "inf";
  for (std::size_t i = 0; i < s.fractions().size(); ++i)
    out << ' ' << s.pairings()[i].token() << ' ' << s.fractions()[i].str();
  out << ' ' << s.pairings().back().token() << " inf";
  return out.str();
}

/// The n-th Iguanodon symbol: the members of the Farey sequence F(n) that are
/// <= 1/2, followed by 1, with all interior sides odd and the two outer sides
/// freely paired with each other.
inline FareySymbol iguanodon_symbol(int n) {
  if (n < 2) throw DomainError("iguanodon symbol needs n >= 2");
  std::vector<ExtendedRational> fractions;
  for (std::int64_t b = 1; b <= n; ++b)
    for (std::int64_t a = 0; 2 * a <= b; ++a)
      if (std::gcd(a, b) == 1) fractions.emplace_back(a, b);
  std::sort(fractions.begin(), fractions.end());
  fractions.erase(std::unique(fractions.begin(), fractions.end()), fractions.end());
  fractions.emplace_back(1, 1);
  std::vector<Pairing> pairings;
  pairings.push_back(Pairing::free_side(1));
  for (std::size_t i = 0; i + 1 < fractions.size(); ++i) pairings.push_back(Pairing::odd_side());
  pairings.push_back(Pairing::free_side(1));
  return FareySymbol(std::move(fractions), std::move(pairings));
}

/// Unordered geodesic side between two ideal vertices.
struct Side {
  ExtendedRational a, b;

  Side(ExtendedRational x, ExtendedRational y) : a(x), b(y) {
    if (b < a) std::swap(a, b);
  }

  friend bool operator<(const Side& s, const Side& t) {
    if (s.a != t.a) return s.a < t.a;
    return s.b < t.b;
  }
  friend bool operator==(const Side& s, const Side& t) { return s.a == t.a && s.b == t.b; }

  std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }
};

/// Ideal triangle with vertices sorted u < v < w (infinity greatest).
struct Triangle {
  ExtendedRational u, v, w;

  Triangle(ExtendedRational x, ExtendedRational y, ExtendedRational z) : u(x), v(y), w(z) {
    if (v < u) std::swap(u, v);
    if (w < v) std::swap(v, w);
    if (v < u) std::swap(u, v);
  }

  /// Sides in the rotation order used for the dessin: (u,v), (v,w), (w,u).
  std::array<Side, 3> sides() const { return {Side(u, v), Side(v, w), Side(w, u)}; }
};

struct Triangulation {
  std::vector<ExtendedRational> vertices;  // cyclic order: inf, x_0, ..., x_n
  std::vector<Triangle> triangles;         // in contraction order
  std::map<Side, std::vector<int>> side_to_triangles;

  bool is_boundary(const Side& s) const {
    auto it = side_to_triangles.find(s);
    return it != side_to_triangles.end() && it->second.size() == 1;
  }
};

/// Decomposes the polygon of a symbol into ideal triangles by repeatedly
/// contracting a finite vertex that is the mediant of its current cyclic
/// neighbours. The mediant of two det-+-1 neighbours is automatically in
/// reduced form, so the componentwise test is exact.
inline Triangulation triangulate(const FareySymbol& s) {
  std::vector<ExtendedRational> verts;
  verts.push_back(ExtendedRational::infinity());
  for (const auto& x : s.fractions()) verts.push_back(x);

  if (verts.size() < 3)
    throw DegenerateSymbol("triangulation needs at least 3 ideal vertices, got " +
                           std::to_string(verts.size()));

  Triangulation tri;
  tri.vertices = verts;

  std::vector<ExtendedRational> cur = verts;
  while (cur.size() > 3) {
    bool contracted = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].is_infinity()) continue;
      const auto& left = cur[(i + cur.size() - 1) % cur.size()];
      const auto& right = cur[(i + 1) % cur.size()];
      if (is_mediant_of(cur[i], left, right)) {
        tri.triangles.emplace_back(left, cur[i], right);
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
        contracted = true;
        break;
      }
    }
    if (!contracted)
      throw NoMediant("no contractible vertex among " + std::to_string(cur.size()) +
                      " remaining vertices");
  }
  tri.triangles.emplace_back(cur[0], cur[1], cur[2]);

  for (std::size_t t = 0; t < tri.triangles.size(); ++t)
    for (const auto& side : tri.triangles[t].sides())
      tri.side_to_triangles[side].push_back(static_cast<int>(t));

  return tri;
}

}  // namespace moco
