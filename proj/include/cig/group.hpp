#ifndef CIG_GROUP_HPP
#define CIG_GROUP_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "cig/error.hpp"
#include "cig/perm.hpp"
#include "cig/prng.hpp"

namespace cig {

constexpr std::uint64_t kOrderCap = 10'000'000'000ULL;  // fits A13 (3.1e9)

// Stabilizer chain built by the deterministic Schreier-Sims algorithm.
// Level i stabilises base points b_0..b_{i-1}; its transversal element
// u_x maps b_i to x.
class StabChain {
 public:
  StabChain() = default;

  explicit StabChain(std::size_t degree, const std::vector<Permutation>& generators)
      : degree_(degree) {
    for (const Permutation& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch("generator degree mismatch");
      add_generator(g);
    }
  }

  std::size_t degree() const { return degree_; }

  std::uint64_t order() const {
    unsigned __int128 ord = 1;
    for (const Level& lvl : levels_) {
      ord *= lvl.orbit.size();
      if (ord > kOrderCap) throw CapExceeded("group order exceeds the desk-scale cap of 10^10");
    }
    return static_cast<std::uint64_t>(ord);
  }

  std::size_t base_length() const { return levels_.size(); }
  Point base_point(std::size_t i) const { return levels_[i].base; }
  std::size_t orbit_size(std::size_t i) const { return levels_[i].orbit.size(); }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch("membership test across degrees");
    Permutation r = g;
    return sift(r) == levels_.size() && r.is_identity();
  }

  // Strips g through the chain in place; returns the level where stripping
  // stopped (== base_length() when g passed every level).
  std::size_t sift(Permutation& g) const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const Level& lvl = levels_[i];
      Point x = g[lvl.base];
      int pos = lvl.orbit_pos[x];
      if (pos < 0) return i;
      g = g * lvl.transversal[static_cast<std::size_t>(pos)].inverse();
    }
    return levels_.size();
  }

  // Adds a generator and restores the strong-generation invariant.
  void add_generator(const Permutation& g) {
    if (contains(g)) return;
    Permutation r = g;
    std::size_t lvl = sift(r);
    if (lvl == levels_.size()) {
      std::size_t moved = r.first_moved();
      levels_.push_back(Level(static_cast<Point>(moved), degree_));
    }
    levels_[lvl].gens.push_back(r);
    for (std::size_t i = lvl + 1; i-- > 0;) {
      if (i < lvl) levels_[i].gens.push_back(r);  // strong gens of upper levels include r? no
    }
    // r fixes base points b_0..b_{lvl-1} by construction, so it belongs to
    // every level <= lvl; levels above lvl already contain it implicitly.
    for (std::size_t i = 0; i < lvl; ++i) levels_[i].gens.push_back(r);
    close_from(0);
  }

  // All |G| elements in a fixed deterministic order.
  std::vector<Permutation> elements(std::uint64_t cap = kOrderCap) const {
    std::uint64_t n = order();
    if (n > cap) throw CapExceeded("enumeration cap exceeded: |G| = " + std::to_string(n));
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(n));
    enumerate_rec(Permutation::identity(degree_), levels_.size(), out);
    return out;
  }

  Permutation random_element(Prng& rng) const {
    Permutation g = Permutation::identity(degree_);
    for (std::size_t i = levels_.size(); i-- > 0;) {
      const Level& lvl = levels_[i];
      g = lvl.transversal[static_cast<std::size_t>(rng.below(lvl.orbit.size()))] * g;
    }
    return g;
  }

 private:
  struct Level {
    Level(Point b, std::size_t degree) : base(b), orbit_pos(degree, -1) {
      orbit.push_back(b);
      orbit_pos[b] = 0;
      transversal.push_back(Permutation::identity(degree));
    }
    Point base;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> orbit_pos;        // point -> index in orbit, or -1
    std::vector<Permutation> transversal;  // aligned with orbit
  };

  void recompute_orbit(Level& lvl) const {
    lvl.orbit.assign(1, lvl.base);
    std::fill(lvl.orbit_pos.begin(), lvl.orbit_pos.end(), -1);
    lvl.orbit_pos[lvl.base] = 0;
    lvl.transversal.assign(1, Permutation::identity(degree_));
    for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
      for (const Permutation& s : lvl.gens) {
        Point y = s[lvl.orbit[head]];
        if (lvl.orbit_pos[y] < 0) {
          lvl.orbit_pos[y] = static_cast<int>(lvl.orbit.size());
          lvl.orbit.push_back(y);
          lvl.transversal.push_back(lvl.transversal[head] * s);
        }
      }
    }
  }

  // Re-establishes closure at levels >= start: every Schreier generator of
  // level i must sift to the identity through levels i+1...
  void close_from(std::size_t start) {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      bool dirty = true;
      while (dirty) {
        dirty = false;
        recompute_orbit(levels_[i]);
        Level& lvl = levels_[i];
        for (std::size_t oi = 0; oi < lvl.orbit.size() && !dirty; ++oi) {
          for (const Permutation& s : lvl.gens) {
            Permutation sg = lvl.transversal[oi] * s;
            int pos = lvl.orbit_pos[sg[lvl.base]];
            sg = sg * lvl.transversal[static_cast<std::size_t>(pos)].inverse();
            if (sg.is_identity()) continue;
            Permutation r = sg;
            std::size_t j = sift_from(r, i + 1);
            if (j == levels_.size() && r.is_identity()) continue;
            if (j == levels_.size()) {
              levels_.push_back(Level(static_cast<Point>(r.first_moved()), degree_));
            }
            for (std::size_t k = i + 1; k <= j && k < levels_.size(); ++k)
              if (k == j || k <= j) levels_[k].gens.push_back(r);
            dirty = true;
            break;
          }
        }
      }
    }
  }

  std::size_t sift_from(Permutation& g, std::size_t start) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Level& lvl = levels_[i];
      int pos = lvl.orbit_pos[g[lvl.base]];
      if (pos < 0) return i;
      g = g * lvl.transversal[static_cast<std::size_t>(pos)].inverse();
    }
    return levels_.size();
  }

  void enumerate_rec(const Permutation& tail, std::size_t level, std::vector<Permutation>& out) const {
    if (level == 0) {
      out.push_back(tail);
      return;
    }
    const Level& lvl = levels_[level - 1];
    for (const Permutation& u : lvl.transversal) enumerate_rec(u * tail, level - 1, out);
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

// An immutable permutation group with an exact order certificate.
class PermGroup {
 public:
  PermGroup(std::vector<Permutation> generators, StabChain chain)
      : gens_(std::move(generators)), chain_(std::make_shared<StabChain>(std::move(chain))) {
    order_ = chain_->order();
  }

  std::size_t degree() const { return chain_->degree(); }
  std::uint64_t order() const { return order_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const StabChain& chain() const { return *chain_; }

  bool contains(const Permutation& p) const { return chain_->contains(p); }
  bool is_trivial() const { return order_ == 1; }

  std::vector<Permutation> elements(std::uint64_t cap = kOrderCap) const { return chain_->elements(cap); }
  Permutation random_element(Prng& rng) const { return chain_->random_element(rng); }
  Permutation identity() const { return Permutation::identity(degree()); }

  bool is_subgroup_of(const PermGroup& big) const {
    if (degree() != big.degree()) throw DegreeMismatch("subgroup test across degrees");
    for (const Permutation& g : gens_)
      if (!big.contains(g)) return false;
    return true;
  }

  bool same_group_as(const PermGroup& other) const {
    return order() == other.order() && is_subgroup_of(other);
  }

 private:
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabChain> chain_;
  std::uint64_t order_ = 0;
};

inline PermGroup build_group(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw Error("build_group requires at least one generator");
  std::size_t degree = generators[0].degree();
  for (const Permutation& g : generators)
    if (g.degree() != degree) throw DegreeMismatch("generators of mixed degree");
  StabChain chain(degree, generators);
  return PermGroup(generators, std::move(chain));
}

inline bool contains(const PermGroup& g, const Permutation& p) { return g.contains(p); }

inline std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t cap) {
  if (g.order() > cap) throw CapExceeded("cap exceeded: |G| = " + std::to_string(g.order()) + " > " + std::to_string(cap));
  return g.elements(cap);
}

inline PermGroup trivial_group(std::size_t degree) {
  return build_group({Permutation::identity(degree)});
}

}  // namespace cig

#endif
