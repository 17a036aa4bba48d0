#pragma once

/**
 * @file normal.hpp
 * @brief Normal-subgroup lattice: minimal normal overgroups, the full list of
 * normal subgroups, and the radicals O_p, O_p', F built on them.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "subgroups.hpp"

namespace ppi {

inline constexpr std::size_t kNormalLatticeCap = 10000;

/// Conjugacy class of x under G.
inline std::vector<Index> conjugacy_class(const Subgroup &g, Index x) {
  const Ambient &amb = g.ambient();
  std::vector<Index> cls{x};
  std::set<Index> seen{x};
  for (std::size_t k = 0; k < cls.size(); ++k)
    for (Index s : g.generators()) {
      Index y = amb.conj(cls[k], s);
      if (seen.insert(y).second)
        cls.push_back(y);
    }
  return cls;
}

/// All M normal in G with N < M and M/N minimal normal in G/N, in canonical
/// order. They are the inclusion-minimal normal closures <N, g>^G.
inline std::vector<Subgroup> minimal_normal_overgroups(const Subgroup &g, const Subgroup &n) {
  const auto &amb = g.ambient_ptr();
  if (!is_normal(g, n))
    throw Error(Errc::NotNormal, n.describe() + " is not normal in " + g.describe());
  if (auto hit = amb->overgroup_memo().find(g.bits(), n.bits())) {
    std::vector<Subgroup> out;
    for (auto &d : *hit)
      out.emplace_back(amb, std::move(d));
    return out;
  }

  Bitset covered = n.bits();
  std::vector<Subgroup> candidates;
  std::set<Bitset> seen;
  const std::vector<Index> n_elems = n.elements();
  g.bits().for_each([&](Index x) {
    if (covered.test(x))
      return;
    Subgroup c = normal_closure(g, extend(n, x));
    if (seen.insert(c.bits()).second)
      candidates.push_back(c);
    // Every generator of <x>, and all their conjugates times N, give the same closure.
    const std::uint64_t ord = amb->element_order(x);
    for (std::uint64_t k = 1; k < ord; ++k) {
      if (std::gcd(k, ord) != 1)
        continue;
      Index y = amb->pow(x, k);
      if (covered.test(y))
        continue;
      for (Index z : conjugacy_class(g, y))
        for (Index m : n_elems)
          covered.set(amb->mul(m, z));
    }
  });

  sort_canonical(candidates);
  std::vector<Subgroup> minimal;
  for (const auto &c : candidates) {
    bool is_min = true;
    for (const auto &m : minimal)
      if (m.subset_of(c)) {
        is_min = false;
        break;
      }
    if (is_min)
      minimal.push_back(c);
  }

  std::vector<SubgroupData> memo;
  for (const auto &m : minimal)
    memo.push_back(m.data());
  amb->overgroup_memo().insert(g.bits(), n.bits(), std::move(memo));
  return minimal;
}

/// Every normal subgroup of G, reached breadth-first through minimal normal
/// overgroups from the trivial subgroup, in canonical order.
inline std::vector<Subgroup> all_normal_subgroups(const Subgroup &g,
                                                  std::size_t cap = kNormalLatticeCap) {
  std::vector<Subgroup> out{trivial_subgroup(g.ambient_ptr())};
  std::set<Bitset> seen{out.front().bits()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto &m : minimal_normal_overgroups(g, out[k]))
      if (seen.insert(m.bits()).second) {
        out.push_back(std::move(m));
        if (out.size() > cap)
          throw CapExceeded(out.size(), cap, Errc::LatticeCapExceeded);
      }
  sort_canonical(out);
  return out;
}

/// O_p(G), the core of a Sylow p-subgroup.
inline Subgroup o_p(const Subgroup &g, std::uint64_t p) { return core(g, sylow_subgroup(g, p)); }

/// O_p'(G): climb through minimal normal overgroups of p'-order.
inline Subgroup o_p_prime(const Subgroup &g, std::uint64_t p) {
  Subgroup z = trivial_subgroup(g.ambient_ptr());
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto &m : minimal_normal_overgroups(g, z))
      if ((m.order() / z.order()) % p != 0) {
        z = std::move(m);
        grew = true;
        break;
      }
  }
  return z;
}

/// F(G), the join of O_p(G) over the primes dividing |G|.
inline Subgroup fitting_subgroup(const Subgroup &g) {
  Subgroup f = trivial_subgroup(g.ambient_ptr());
  for (auto p : pi_of(g))
    f = join(g, f, o_p(g, p));
  return f;
}

/// Full subgroup lattice of G by joining cyclic subgroups. Only meant for
/// small groups; throws LatticeCapExceeded past `cap` subgroups.
inline std::vector<Subgroup> all_subgroups(const Subgroup &g, std::size_t cap = 5000) {
  const auto &amb = g.ambient_ptr();
  std::vector<Subgroup> cyclic;
  std::set<Bitset> cyc_seen;
  g.bits().for_each([&](Index x) {
    if (x == Ambient::identity())
      return;
    Subgroup c = generate(amb, std::vector<Index>{x});
    if (cyc_seen.insert(c.bits()).second)
      cyclic.push_back(std::move(c));
  });
  std::vector<Subgroup> out{trivial_subgroup(amb)};
  std::set<Bitset> seen{out.front().bits()};
  for (auto &c : cyclic)
    if (seen.insert(c.bits()).second)
      out.push_back(c);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto &c : cyclic) {
      if (c.subset_of(out[k]))
        continue;
      Subgroup j = out[k];
      for (Index x : c.generators())
        j = extend(j, x);
      if (seen.insert(j.bits()).second) {
        out.push_back(std::move(j));
        if (out.size() > cap)
          throw CapExceeded(out.size(), cap, Errc::LatticeCapExceeded);
      }
    }
  sort_canonical(out);
  return out;
}

/// Phi(G) for an arbitrary small G: trivial when F(G) is, otherwise the
/// intersection of the maximal subgroups taken from the full lattice.
inline Subgroup frattini_subgroup(const Subgroup &g, std::size_t cap = 5000) {
  if (fitting_subgroup(g).is_trivial())
    return trivial_subgroup(g.ambient_ptr());
  auto subs = all_subgroups(g, cap);
  Bitset acc = g.bits();
  for (const auto &m : subs) {
    if (m.order() == g.order())
      continue;
    bool maximal = true;
    for (const auto &o : subs)
      if (o.order() > m.order() && o.order() < g.order() && m.subset_of(o)) {
        maximal = false;
        break;
      }
    if (maximal)
      acc &= m.bits();
  }
  return subgroup_from_bits(g.ambient_ptr(), acc);
}

} // namespace ppi
