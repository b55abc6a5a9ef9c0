#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "moco/errors.hpp"

namespace moco {

/// Permutation of {1..degree}, stored as a 0-based image table. All public
/// text/JSON interfaces speak 1-based, the internal table is 0-based.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  /// From a 0-based image table; validates bijectivity.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int img : images_) {
      if (img < 0 || img >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(img)])
        throw ValidationError("image table is not a bijection");
      seen[static_cast<std::size_t>(img)] = true;
    }
  }

  /// From disjoint cycles of 1-based points. Points missing from every cycle
  /// are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i] - 1;
        int to = cyc[(i + 1) % cyc.size()] - 1;
        if (from < 0 || from >= degree || to < 0 || to >= degree)
          throw ValidationError("cycle point out of range 1.." + std::to_string(degree));
        if (images[static_cast<std::size_t>(from)] != from)
          throw ValidationError("cycles are not disjoint at point " + std::to_string(from + 1));
        images[static_cast<std::size_t>(from)] = to;
      }
    }
    return Permutation(std::move(images));
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  /// Composition: (a*b)(x) = a(b(x)), i.e. b acts first.
  friend Permutation compose(const Permutation& a, const Permutation& b) {
    std::vector<int> images(a.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      images[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    return compose(a, b);
  }

  Permutation inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      images[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  Permutation power(std::int64_t e) const {
    Permutation base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    Permutation acc(degree());
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  /// Cycles in canonical order: each cycle starts at its smallest point,
  /// cycles ordered by starting point; fixed points included as 1-cycles.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      std::vector<int> cyc;
      int j = i;
      do {
        seen[static_cast<std::size_t>(j)] = true;
        cyc.push_back(j + 1);
        j = images_[static_cast<std::size_t>(j)];
      } while (j != i);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  int cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++count;
      int j = i;
      do {
        seen[static_cast<std::size_t>(j)] = true;
        j = images_[static_cast<std::size_t>(j)];
      } while (j != i);
    }
    return count;
  }

  /// Multiset of cycle lengths, descending.
  std::vector<int> cycle_type() const {
    std::vector<int> type;
    for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
    std::sort(type.rbegin(), type.rend());
    return type;
  }

  int fixed_points() const {
    int n = 0;
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] == i) ++n;
    return n;
  }

  std::int64_t order() const {
    std::int64_t o = 1;
    for (const auto& c : cycles()) o = std::lcm<std::int64_t>(o, static_cast<std::int64_t>(c.size()));
    return o;
  }

  /// Cycle notation with 1-based points; fixed points omitted, identity is "()".
  std::string cycle_string() const {
    std::ostringstream out;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      any = true;
      out << '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ' ';
        out << c[i];
      }
      out << ')';
    }
    if (!any) return "()";
    return out.str();
  }

  /// Compact byte key for hashing; degree must be < 256.
  std::string packed() const {
    std::string key(images_.size(), '\0');
    for (std::size_t i = 0; i < images_.size(); ++i)
      key[i] = static_cast<char>(static_cast<unsigned char>(images_[i]));
    return key;
  }

  static Permutation unpack(const std::string& key) {
    std::vector<int> images(key.size());
    for (std::size_t i = 0; i < key.size(); ++i)
      images[i] = static_cast<int>(static_cast<unsigned char>(key[i]));
    return Permutation(std::move(images));
  }

private:
  std::vector<int> images_;
};

/// Parses cycle notation like "(1 2 3)(4 5)"; commas are accepted as
/// separators too. Degree defaults to the largest point mentioned.
inline Permutation parse_cycles(const std::string& text, int degree = 0) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') throw SyntaxError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    std::string num;
    for (; i < text.size() && text[i] != ')'; ++i) {
      char d = text[i];
      if (std::isdigit(static_cast<unsigned char>(d))) {
        num += d;
      } else if (std::isspace(static_cast<unsigned char>(d)) || d == ',') {
        if (!num.empty()) {
          cyc.push_back(std::stoi(num));
          num.clear();
        }
      } else {
        throw SyntaxError(std::string("unexpected character '") + d + "' in cycle notation");
      }
    }
    if (i == text.size()) throw SyntaxError("unbalanced '(' in cycle notation");
    ++i;  // skip ')'
    if (!num.empty()) cyc.push_back(std::stoi(num));
    for (int p : cyc) {
      if (p <= 0) throw SyntaxError("points must be positive");
      max_point = std::max(max_point, p);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  int deg = std::max(degree, max_point);
  if (deg == 0) throw SyntaxError("empty permutation with no degree given");
  return Permutation::from_cycles(deg, cycles);
}

}  // namespace moco
