#pragma once

/**
 * @file group.hpp
 * @brief Permutation groups given by generators, backed by a base and strong
 * generating set.
 *
 * The stabilizer chain is built with the incremental (Knuth style)
 * Schreier-Sims procedure, which is deterministic: every Schreier generator
 * is sifted, so the result is a certificate rather than a probabilistic
 * claim. Levels are indexed by point; the reported base is the increasing
 * sequence of points whose fundamental orbit is non-trivial, which is the
 * same as always choosing the smallest point moved by the current
 * stabilizer.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "perm.hpp"

namespace ppi {

class Group {
public:
  /// One non-trivial level of the stabilizer chain.
  struct Level {
    Point base_point;
    std::vector<Point> orbit;              ///< orbit[0] == base_point
    std::vector<Permutation> transversal;  ///< transversal[k] maps base_point to orbit[k]
  };

  /// Schreier-Sims on the given generators. Identity generators are kept,
  /// duplicates are dropped.
  static Group from_generators(std::span<const Permutation> gens) {
    if (gens.empty())
      throw Error(Errc::InvalidArgument, "generator list is empty");
    const std::size_t n = gens.front().degree();
    Group g;
    g.degree_ = n;
    for (const auto &p : gens) {
      if (p.degree() != n)
        throw Error(Errc::DegreeMismatch, std::to_string(p.degree()) + " vs " +
                                              std::to_string(n));
      if (std::find(g.generators_.begin(), g.generators_.end(), p) == g.generators_.end())
        g.generators_.push_back(p);
    }

    Chain chain(n);
    for (const auto &p : g.generators_)
      if (!chain.member(p, 0))
        chain.add_generator(p, 0);
    g.finish(chain);
    return g;
  }

  static Group from_generators(std::initializer_list<Permutation> gens) {
    std::vector<Permutation> v(gens);
    return from_generators(std::span<const Permutation>(v));
  }

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const std::vector<Permutation> &strong_generators() const noexcept { return strong_; }
  const std::vector<Level> &levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto &l : levels_)
      b.push_back(l.base_point);
    return b;
  }

  /// Membership by sifting through the stabilizer chain.
  bool contains(const Permutation &g) const {
    if (g.degree() != degree_)
      throw Error(Errc::DegreeMismatch, std::to_string(g.degree()) + " vs " +
                                            std::to_string(degree_));
    Permutation h = g;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const auto &l = levels_[i];
      Point img = h[l.base_point];
      if (img == l.base_point)
        continue;
      auto slot = slots_[i][img];
      if (slot < 0)
        return false;
      h = h * inverses_[i][static_cast<std::size_t>(slot)];
    }
    return h.is_identity();
  }

  /// Every element, in no particular order. The caller is responsible for
  /// bounding order() first.
  std::vector<Permutation> all_elements() const {
    std::vector<Permutation> out{Permutation(degree_)};
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
      std::vector<Permutation> next;
      next.reserve(out.size() * it->transversal.size());
      for (const auto &x : out)
        for (const auto &u : it->transversal)
          next.push_back(x * u);
      out = std::move(next);
    }
    return out;
  }

private:
  struct ChainLevel {
    std::vector<Permutation> gens;
    std::vector<std::int32_t> slot;  // empty while the orbit is {point}
    std::vector<Point> orbit;
    std::vector<Permutation> trans;
    std::vector<Permutation> trans_inv;
  };

  class Chain {
  public:
    explicit Chain(std::size_t n) : n_(n), levels_(n) {}

    ChainLevel &level(std::size_t i) {
      if (!levels_[i]) {
        levels_[i] = std::make_unique<ChainLevel>();
        levels_[i]->orbit.push_back(static_cast<Point>(i));
        levels_[i]->trans.emplace_back(n_);
        levels_[i]->trans_inv.emplace_back(n_);
      }
      return *levels_[i];
    }

    std::int32_t slot_of(std::size_t i, Point p) const {
      const auto &l = levels_[i];
      if (p == i)
        return 0;
      if (!l || l->slot.empty())
        return -1;
      return l->slot[p];
    }

    /// g fixes every point below `from`.
    bool member(Permutation g, std::size_t from) const {
      while (true) {
        std::size_t i = g.first_moved();
        if (i == n_)
          return true;
        if (i < from)
          return false;
        auto s = slot_of(i, g[i]);
        if (s < 0)
          return false;
        g = g * levels_[i]->trans_inv[static_cast<std::size_t>(s)];
      }
    }

    /// Adds g (fixing every point below lvl, not yet in the level group) as
    /// a generator of level lvl and restores the chain invariants.
    void add_generator(const Permutation &g, std::size_t lvl) {
      ChainLevel &L = level(lvl);
      L.gens.push_back(g);
      std::vector<Permutation> work;
      for (std::size_t k = 0; k < L.trans.size(); ++k)
        work.push_back(L.trans[k] * g);
      while (!work.empty()) {
        Permutation x = std::move(work.back());
        work.pop_back();
        Point img = x[lvl];
        auto s = slot_of(lvl, img);
        if (s < 0) {
          if (L.slot.empty()) {
            L.slot.assign(n_, -1);
            L.slot[lvl] = 0;
          }
          L.slot[img] = static_cast<std::int32_t>(L.trans.size());
          L.orbit.push_back(img);
          L.trans_inv.push_back(x.inverse());
          L.trans.push_back(x);
          for (const auto &gen : L.gens)
            work.push_back(L.trans.back() * gen);
        } else {
          Permutation h = x * L.trans_inv[static_cast<std::size_t>(s)];
          if (!member(h, lvl + 1))
            add_generator(h, lvl + 1);
        }
      }
    }

    std::size_t n_;
    std::vector<std::unique_ptr<ChainLevel>> levels_;
  };

  void finish(Chain &chain) {
    unsigned __int128 order = 1;
    std::unordered_set<Permutation, PermutationHash> strong;
    for (std::size_t i = 0; i < degree_; ++i) {
      auto &cl = chain.levels_[i];
      if (!cl)
        continue;
      for (const auto &s : cl->gens)
        if (strong.insert(s).second)
          strong_.push_back(s);
      if (cl->orbit.size() <= 1)
        continue;
      Level l{static_cast<Point>(i), cl->orbit, cl->trans};
      order *= cl->orbit.size();
      if (order > (static_cast<unsigned __int128>(1) << 62))
        throw Error(Errc::OrderOverflow, "group order exceeds 2^62");
      slots_.push_back(cl->slot);
      inverses_.push_back(cl->trans_inv);
      levels_.push_back(std::move(l));
    }
    order_ = static_cast<std::uint64_t>(order);
  }

  std::size_t degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  std::vector<std::vector<std::int32_t>> slots_;
  std::vector<std::vector<Permutation>> inverses_;
};

inline Group group_from_generators(std::span<const Permutation> gens) {
  return Group::from_generators(gens);
}

inline bool contains(const Group &g, const Permutation &p) { return g.contains(p); }

} // namespace ppi
