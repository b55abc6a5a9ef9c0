#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moco/errors.hpp"
#include "moco/permutation.hpp"

namespace moco {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial_big(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

enum class AltSymOther { alt, sym, other };

/// Conjugacy classes of a finite permutation group, fully enumerated: every
/// group element is stored with its class index, representatives are the
/// minimal elements of their classes and classes are sorted by
/// (representative order, size, cycle type, representative), so the result
/// is independent of the search seed.
class ConjugacyClasses {
public:
  const std::vector<Permutation>& representatives() const { return reps_; }
  const std::vector<std::int64_t>& sizes() const { return sizes_; }
  const std::vector<std::int64_t>& centralizer_orders() const { return centralizers_; }

  std::size_t count() const { return reps_.size(); }

  int class_of(const Permutation& p) const {
    auto it = index_.find(p.packed());
    if (it == index_.end()) throw DomainError("element is not in the group");
    return it->second;
  }

  /// lcm of the representative orders = exponent of the group.
  std::int64_t exponent() const {
    std::int64_t e = 1;
    for (const auto& r : reps_) e = std::lcm(e, r.order());
    return e;
  }

  /// Packed element -> class index, over the whole group.
  const std::unordered_map<std::string, int>& element_index() const { return index_; }

private:
  friend class PermutationGroup;
  std::vector<Permutation> reps_;
  std::vector<std::int64_t> sizes_;
  std::vector<std::int64_t> centralizers_;
  std::unordered_map<std::string, int> index_;
};

/// Finite permutation group on {1..degree} with a base and strong generating
/// set. The chain is built deterministically; the seed only mixes a few
/// redundant generator words into the input, which exercises different chain
/// layouts without changing any query result.
class PermutationGroup {
public:
  PermutationGroup(int degree, std::vector<Permutation> generators, std::uint64_t seed = 0)
      : degree_(degree), generators_(std::move(generators)), seed_(seed) {
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw ValidationError("generator degree mismatch");
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t seed() const { return seed_; }

  const BigInt& order() const {
    build();
    return order_;
  }

  bool contains(const Permutation& p) const {
    build();
    if (p.degree() != degree_) return false;
    return sift(p).is_identity();
  }

  /// Orbit partition of {1..degree}, each orbit sorted, orbits ordered by
  /// their least point. Does not need the chain.
  std::vector<std::vector<int>> orbits() const {
    std::vector<int> orbit_id(static_cast<std::size_t>(degree_), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < degree_; ++start) {
      if (orbit_id[static_cast<std::size_t>(start)] >= 0) continue;
      int id = static_cast<int>(out.size());
      std::vector<int> orbit{start};
      orbit_id[static_cast<std::size_t>(start)] = id;
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (const auto& g : generators_) {
          int y = g[orbit[head]];
          if (orbit_id[static_cast<std::size_t>(y)] < 0) {
            orbit_id[static_cast<std::size_t>(y)] = id;
            orbit.push_back(y);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      for (int& x : orbit) ++x;
      out.push_back(std::move(orbit));
    }
    return out;
  }

  bool is_transitive() const { return orbits().size() == 1; }

  /// True iff the stabilizer of the first base point has exactly two orbits
  /// on the points. The stabilizer generators are read off the chain.
  bool is_2transitive() const {
    if (!is_transitive()) throw NotTransitive("2-transitivity is defined for transitive groups");
    if (degree_ == 1) return false;
    build();
    std::vector<Permutation> stab_gens;
    if (levels_.size() >= 2) stab_gens = levels_[1].gens;
    std::vector<int> orbit_id(static_cast<std::size_t>(degree_), -1);
    int orbits_count = 0;
    for (int start = 0; start < degree_; ++start) {
      if (orbit_id[static_cast<std::size_t>(start)] >= 0) continue;
      ++orbits_count;
      std::vector<int> stack{start};
      orbit_id[static_cast<std::size_t>(start)] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& g : stab_gens) {
          int y = g[x];
          if (orbit_id[static_cast<std::size_t>(y)] < 0) {
            orbit_id[static_cast<std::size_t>(y)] = 1;
            stack.push_back(y);
          }
        }
      }
    }
    return orbits_count == 2;
  }

  /// Order-comparison recognition, adequate at desk scale.
  AltSymOther alternating_or_symmetric() const {
    BigInt full = factorial_big(degree_);
    if (order() == full) return AltSymOther::sym;
    if (order() * 2 == full) return AltSymOther::alt;
    return AltSymOther::other;
  }

  /// Uniform random element via the transversal chain.
  Permutation random_element(std::mt19937_64& rng) const {
    build();
    Permutation g(degree_);
    for (const auto& level : levels_) {
      std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
      g = g * level.transversal[static_cast<std::size_t>(level.orbit[pick(rng)])];
    }
    return g;
  }

  /// Complete class enumeration: candidate elements (identity, generators,
  /// powers and pairwise products of found representatives, then uniform
  /// random elements) are closed under conjugation by the generators until
  /// the class sizes sum to |G|, which certifies completeness.
  ConjugacyClasses conjugacy_classes(std::int64_t class_enum_bound = 10'000'000) const {
    if (order() > class_enum_bound)
      throw SizeBoundExceeded("group order " + order().str() + " exceeds class bound " +
                              std::to_string(class_enum_bound));
    std::int64_t group_order = order_.convert_to<std::int64_t>();

    ConjugacyClasses cc;
    std::vector<std::vector<Permutation>> class_elements;
    std::int64_t covered = 0;

    auto absorb = [&](const Permutation& x) {
      if (cc.index_.count(x.packed())) return;
      int id = static_cast<int>(class_elements.size());
      std::vector<Permutation> members{x};
      cc.index_.emplace(x.packed(), id);
      for (std::size_t head = 0; head < members.size(); ++head) {
        Permutation cur = members[head];
        for (const auto& g : generators_) {
          Permutation y = g * cur * g.inverse();
          auto [it, fresh] = cc.index_.emplace(y.packed(), id);
          (void)it;
          if (fresh) members.push_back(std::move(y));
        }
      }
      covered += static_cast<std::int64_t>(members.size());
      class_elements.push_back(std::move(members));
    };

    absorb(Permutation(degree_));
    for (const auto& g : generators_) absorb(g);
    std::size_t expanded = 0;
    std::mt19937_64 rng(seed_ ^ 0xc1a55e5ULL);
    while (covered < group_order) {
      // powers and pairwise products of known representatives first
      if (expanded < class_elements.size()) {
        Permutation r = class_elements[expanded].front();
        Permutation p = r;
        for (std::int64_t k = 2; !p.is_identity(); ++k) {
          p = p * r;
          absorb(p);
        }
        for (std::size_t j = 0; j <= expanded && j < class_elements.size(); ++j)
          absorb(class_elements[expanded].front() * class_elements[j].front());
        ++expanded;
        continue;
      }
      absorb(random_element(rng));
    }
    if (covered != group_order)
      throw InternalError("class sizes sum to " + std::to_string(covered) + ", expected " +
                          std::to_string(group_order));

    // canonical order: representative = least element of the class, classes
    // sorted by (element order, size, cycle type, representative)
    std::vector<int> perm_of_class(class_elements.size());
    std::iota(perm_of_class.begin(), perm_of_class.end(), 0);
    std::vector<Permutation> min_rep;
    min_rep.reserve(class_elements.size());
    for (auto& members : class_elements)
      min_rep.push_back(*std::min_element(members.begin(), members.end()));
    auto key = [&](int c) {
      return std::make_tuple(min_rep[static_cast<std::size_t>(c)].order(),
                             class_elements[static_cast<std::size_t>(c)].size(),
                             min_rep[static_cast<std::size_t>(c)].cycle_type(),
                             min_rep[static_cast<std::size_t>(c)].packed());
    };
    std::sort(perm_of_class.begin(), perm_of_class.end(),
              [&](int a, int b) { return key(a) < key(b); });

    std::vector<int> new_id(class_elements.size());
    for (std::size_t pos = 0; pos < perm_of_class.size(); ++pos) {
      int old = perm_of_class[pos];
      new_id[static_cast<std::size_t>(old)] = static_cast<int>(pos);
      cc.reps_.push_back(min_rep[static_cast<std::size_t>(old)]);
      auto size = static_cast<std::int64_t>(class_elements[static_cast<std::size_t>(old)].size());
      cc.sizes_.push_back(size);
      if (group_order % size != 0)
        throw InternalError("class size " + std::to_string(size) + " does not divide the order");
      cc.centralizers_.push_back(group_order / size);
    }
    for (auto& [packed, id] : cc.index_) id = new_id[static_cast<std::size_t>(id)];
    return cc;
  }

  /// All group elements, sorted; guarded by the caller-supplied bound.
  std::vector<Permutation> elements(std::int64_t bound) const {
    if (order() > bound)
      throw SizeBoundExceeded("group order " + order().str() + " exceeds bound " +
                              std::to_string(bound));
    std::vector<Permutation> elems{Permutation(degree_)};
    std::unordered_map<std::string, bool> seen{{elems[0].packed(), true}};
    for (std::size_t head = 0; head < elems.size(); ++head)
      for (const auto& g : generators_) {
        Permutation y = g * elems[head];
        auto [it, fresh] = seen.emplace(y.packed(), true);
        (void)it;
        if (fresh) elems.push_back(std::move(y));
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;        // strong generators fixing all earlier base points
    std::vector<int> orbit;               // discovery order, starts with base_point
    std::vector<int> where;               // point -> index into orbit, or -1
    std::vector<Permutation> transversal; // point -> u with u(base_point) = point
  };

  void recompute_orbit(Level& level) const {
    level.orbit.assign(1, level.base_point);
    level.where.assign(static_cast<std::size_t>(degree_), -1);
    level.where[static_cast<std::size_t>(level.base_point)] = 0;
    level.transversal.assign(static_cast<std::size_t>(degree_), Permutation());
    level.transversal[static_cast<std::size_t>(level.base_point)] = Permutation(degree_);
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      int beta = level.orbit[head];
      for (const auto& x : level.gens) {
        int gamma = x[beta];
        if (level.where[static_cast<std::size_t>(gamma)] < 0) {
          level.where[static_cast<std::size_t>(gamma)] = static_cast<int>(level.orbit.size());
          level.orbit.push_back(gamma);
          level.transversal[static_cast<std::size_t>(gamma)] =
              x * level.transversal[static_cast<std::size_t>(beta)];
        }
      }
    }
  }

  // Sift through levels [from, end); returns residue and the level index at
  // which sifting stopped (levels_.size() if it ran off the end).
  std::pair<Permutation, std::size_t> sift_from(Permutation g, std::size_t from) const {
    std::size_t l = from;
    for (; l < levels_.size(); ++l) {
      if (g.is_identity()) return {g, l};
      int beta = g[levels_[l].base_point];
      if (levels_[l].where[static_cast<std::size_t>(beta)] < 0) return {g, l};
      g = levels_[l].transversal[static_cast<std::size_t>(beta)].inverse() * g;
    }
    return {g, l};
  }

  Permutation sift(const Permutation& g) const { return sift_from(g, 0).first; }

  void append_base_point(const Permutation& moved_by) const {
    for (int i = 0; i < degree_; ++i)
      if (moved_by[i] != i) {
        levels_.emplace_back();
        levels_.back().base_point = i;
        return;
      }
    throw InternalError("asked to extend the base for an identity residue");
  }

  // Schreier-Sims. Establishes: the generators at level l generate the
  // pointwise stabilizer of the base points above l, so the order is the
  // product of the fundamental orbit lengths.
  void build() const {
    if (built_) return;

    std::vector<Permutation> gens = generators_;
    if (!generators_.empty()) {
      // redundant random words; they change the chain layout, never the group
      std::mt19937_64 rng(seed_ ^ 0x9e3779b97f4a7c15ULL);
      std::uniform_int_distribution<std::size_t> pick(0, generators_.size() - 1);
      for (int w = 0; w < 3; ++w) {
        Permutation word = generators_[pick(rng)];
        std::uniform_int_distribution<int> len(1, 3);
        int l = len(rng);
        for (int i = 0; i < l; ++i) word = word * generators_[pick(rng)];
        if (!word.is_identity()) gens.push_back(word);
      }
    }

    levels_.clear();
    for (const auto& g : gens) {
      if (g.is_identity()) continue;
      std::size_t l = 0;
      while (l < levels_.size() && g[levels_[l].base_point] == levels_[l].base_point) ++l;
      if (l == levels_.size()) append_base_point(g);
      for (std::size_t m = 0; m <= l && m < levels_.size(); ++m) levels_[m].gens.push_back(g);
    }

    if (levels_.empty()) {
      order_ = 1;
      built_ = true;
      return;
    }

    for (auto& level : levels_) recompute_orbit(level);

    std::size_t i = levels_.size();  // 1-based level about to be verified
    while (i >= 1) {
      Level& level = levels_[i - 1];
      bool restart = false;
      for (std::size_t oi = 0; oi < level.orbit.size() && !restart; ++oi) {
        int beta = level.orbit[oi];
        const Permutation& u_beta = level.transversal[static_cast<std::size_t>(beta)];
        for (const auto& x : level.gens) {
          Permutation schreier =
              level.transversal[static_cast<std::size_t>(x[beta])].inverse() * x * u_beta;
          if (schreier.is_identity()) continue;
          auto [residue, stop] = sift_from(schreier, i);
          if (residue.is_identity()) continue;
          if (stop == levels_.size()) append_base_point(residue);
          for (std::size_t m = i; m <= stop && m < levels_.size(); ++m) {
            levels_[m].gens.push_back(residue);
            recompute_orbit(levels_[m]);
          }
          i = stop + 1;
          restart = true;
          break;
        }
      }
      if (!restart) --i;
    }

    order_ = 1;
    for (const auto& level : levels_) order_ *= static_cast<std::int64_t>(level.orbit.size());
    built_ = true;
  }

  int degree_;
  std::vector<Permutation> generators_;
  std::uint64_t seed_;

  mutable bool built_ = false;
  mutable std::vector<Level> levels_;
  mutable BigInt order_ = 0;
};

/// Monodromy group of a dessin.
template <typename DessinT>
PermutationGroup group_from_dessin(const DessinT& d, std::uint64_t seed = 0) {
  return PermutationGroup(d.degree(), {d.sigma0(), d.sigma1()}, seed);
}

}  // namespace moco
