#pragma once

/**
 * @file subgroups.hpp
 * @brief Classical subgroup operators inside an enumerated ambient group.
 *
 * Every operator takes the "context" group explicitly as a Subgroup of the
 * ambient, so N_M(H) for a subgroup M is computed exactly like N_G(H) without
 * re-enumerating M. Normalizers and centralizers are full element scans.
 */

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ambient.hpp"
#include "numbers.hpp"

namespace ppi {

namespace detail {

inline void require_inside(const Subgroup &g, const Subgroup &h) {
  if (g.ambient_ptr() != h.ambient_ptr())
    throw Error(Errc::NotASubgroup, "subgroups live in different ambients");
  if (!h.subset_of(g))
    throw Error(Errc::NotASubgroup, h.describe() + " is not inside " + g.describe());
}

inline void require_p_group(const Subgroup &p_group, std::uint64_t p) {
  if (!is_prime(p) || !is_p_power(p_group.order(), p))
    throw Error(Errc::NotAPGroup, "order " + std::to_string(p_group.order()) +
                                      " is not a power of " + std::to_string(p));
}

} // namespace detail

/// Subgroup with exactly the given members; generators chosen greedily in
/// index order. The caller guarantees the set is a subgroup.
inline Subgroup subgroup_from_bits(const AmbientPtr &amb, const Bitset &bits) {
  Subgroup h = trivial_subgroup(amb);
  bits.for_each([&](Index x) {
    if (!h.contains(x))
      h = extend(h, x);
  });
  return h;
}

inline PrimeSet pi_of(const Subgroup &h) { return PrimeSet::of(h.order()); }
inline PrimeSet pi_of(const Group &g) { return PrimeSet::of(g.order()); }

/// <A, B>.
inline Subgroup join(const Subgroup &g, const Subgroup &a, const Subgroup &b) {
  detail::require_inside(g, a);
  detail::require_inside(g, b);
  if (b.subset_of(a))
    return a;
  if (a.subset_of(b))
    return b;
  Subgroup h = a;
  for (Index x : b.generators())
    h = extend(h, x);
  return h;
}

inline Subgroup intersection(const Subgroup &a, const Subgroup &b) {
  if (a.ambient_ptr() != b.ambient_ptr())
    throw Error(Errc::NotASubgroup, "subgroups live in different ambients");
  if (a.subset_of(b))
    return a;
  if (b.subset_of(a))
    return b;
  return subgroup_from_bits(a.ambient_ptr(), a.bits() & b.bits());
}

/// H^g = g^-1 H g.
inline Subgroup conjugate(const Subgroup &h, Index g) {
  const Ambient &amb = h.ambient();
  Bitset bits(amb.size());
  h.bits().for_each([&](Index x) { bits.set(amb.conj(x, g)); });
  std::vector<Index> gens;
  for (Index x : h.generators())
    gens.push_back(amb.conj(x, g));
  return Subgroup(h.ambient_ptr(), std::move(bits), std::move(gens));
}

/// True iff H is normalized by every generator of G.
inline bool is_normal(const Subgroup &g, const Subgroup &h) {
  detail::require_inside(g, h);
  const Ambient &amb = h.ambient();
  for (Index s : g.generators())
    for (Index x : h.generators())
      if (!h.contains(amb.conj(x, s)))
        return false;
  return true;
}

/// Smallest normal subgroup of G containing S.
inline Subgroup normal_closure(const Subgroup &g, const Subgroup &s) {
  detail::require_inside(g, s);
  const Ambient &amb = s.ambient();
  Subgroup h = s;
  std::vector<Index> queue = s.generators();
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Index t : g.generators()) {
      Index c = amb.conj(queue[k], t);
      if (!h.contains(c)) {
        h = extend(h, c);
        queue.push_back(c);
      }
    }
  return h;
}

/// N_G(H) by scanning the elements of G.
inline Subgroup normalizer(const Subgroup &g, const Subgroup &h) {
  detail::require_inside(g, h);
  const auto &amb = g.ambient_ptr();
  if (auto hit = amb->normalizer_memo().find(g.bits(), h.bits()))
    return Subgroup(amb, std::move(*hit));
  Bitset bits(amb->size());
  g.bits().for_each([&](Index x) {
    for (Index y : h.generators())
      if (!h.contains(amb->conj(y, x)))
        return;
    bits.set(x);
  });
  Subgroup n = subgroup_from_bits(amb, bits);
  amb->normalizer_memo().insert(g.bits(), h.bits(), n.data());
  return n;
}

/// C_G(H) by scanning the elements of G.
inline Subgroup centralizer(const Subgroup &g, const Subgroup &h) {
  detail::require_inside(g, h);
  const auto &amb = g.ambient_ptr();
  Bitset bits(amb->size());
  g.bits().for_each([&](Index x) {
    for (Index y : h.generators())
      if (amb->mul(x, y) != amb->mul(y, x))
        return;
    bits.set(x);
  });
  return subgroup_from_bits(amb, bits);
}

inline Subgroup center(const Subgroup &g) { return centralizer(g, g); }

/// G' as the normal closure of commutators of generator pairs.
inline Subgroup derived_subgroup(const Subgroup &g) {
  const auto &amb = g.ambient_ptr();
  std::vector<Index> comms;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(amb->commutator(gens[i], gens[j]));
  return normal_closure(g, generate(amb, comms));
}

/// Largest normal subgroup of G contained in H.
inline Subgroup core(const Subgroup &g, const Subgroup &h) {
  detail::require_inside(g, h);
  Subgroup c = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index s : g.generators()) {
      Subgroup next = intersection(c, conjugate(c, s));
      if (next.order() != c.order()) {
        c = next;
        changed = true;
      }
    }
  }
  return c;
}

/// Smallest k >= 1 with x^k in H (k divides the order of x).
inline std::uint64_t order_modulo(const Subgroup &h, Index x) {
  const Ambient &amb = h.ambient();
  std::uint64_t ord = amb.element_order(x);
  for (std::uint64_t d = 1; d <= ord; ++d)
    if (ord % d == 0 && h.contains(amb.pow(x, d)))
      return d;
  return ord;
}

/// A Sylow p-subgroup of G by normalizer ascent: repeatedly adjoin an element
/// of N_G(P) whose image in N_G(P)/P is a non-trivial p-element, scanning in
/// element order. Returns the trivial subgroup when p does not divide |G|.
inline Subgroup sylow_subgroup(const Subgroup &g, std::uint64_t p) {
  if (!is_prime(p))
    throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  const auto &amb = g.ambient_ptr();
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup s = trivial_subgroup(amb);
  while (s.order() < target) {
    Subgroup n = normalizer(g, s);
    std::optional<Index> pick;
    for (Index x : n.elements()) {
      if (s.contains(x))
        continue;
      std::uint64_t m = order_modulo(s, x);
      if (m % p == 0) {
        pick = amb->pow(x, m / p_part(m, p));
        break;
      }
    }
    if (!pick)
      throw Error(Errc::InvalidArgument, "normalizer ascent stalled");
    s = extend(s, *pick);
  }
  return s;
}

/// Every Sylow p-subgroup of G: the conjugacy class of sylow_subgroup(G, p),
/// in canonical order.
inline std::vector<Subgroup> all_sylow_subgroups(const Subgroup &g, std::uint64_t p) {
  std::vector<Subgroup> orbit{sylow_subgroup(g, p)};
  std::set<Bitset> seen{orbit.front().bits()};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (Index s : g.generators()) {
      Subgroup c = conjugate(orbit[k], s);
      if (seen.insert(c.bits()).second)
        orbit.push_back(c);
    }
  sort_canonical(orbit);
  return orbit;
}

/// Non-trivial cyclic p-subgroups of G, in canonical order.
inline std::vector<Subgroup> cyclic_p_subgroups(const Subgroup &g, std::uint64_t p) {
  const auto &amb = g.ambient_ptr();
  std::vector<Subgroup> out;
  std::set<Bitset> seen;
  g.bits().for_each([&](Index x) {
    std::uint64_t o = amb->element_order(x);
    if (o == 1 || !is_p_power(o, p))
      return;
    Subgroup c = generate(amb, std::vector<Index>{x});
    if (seen.insert(c.bits()).second)
      out.push_back(std::move(c));
  });
  sort_canonical(out);
  return out;
}

/// Phi(P) = P' <x^p : x generator of P> for a p-group P.
inline Subgroup frattini_of_p_group(const Subgroup &pg, std::uint64_t p) {
  detail::require_p_group(pg, p);
  const Ambient &amb = pg.ambient();
  Subgroup phi = derived_subgroup(pg);
  for (Index x : pg.generators())
    phi = extend(phi, amb.pow(x, p));
  return phi;
}

/// The index-p subgroups of a p-group P: preimages of the hyperplanes of the
/// elementary abelian P/Phi(P). One per normalized linear functional.
inline std::vector<Subgroup> maximal_subgroups_of_p_group(const Subgroup &pg, std::uint64_t p) {
  detail::require_p_group(pg, p);
  if (pg.is_trivial())
    return {};
  const Ambient &amb = pg.ambient();
  const Subgroup phi = frattini_of_p_group(pg, p);

  std::vector<Index> basis;
  Subgroup span = phi;
  pg.bits().for_each([&](Index x) {
    if (!span.contains(x)) {
      span = extend(span, x);
      basis.push_back(x);
    }
  });
  const std::size_t d = basis.size();

  std::vector<Subgroup> out;
  std::vector<std::uint64_t> coeff(d, 0);
  // Enumerate all non-zero coefficient vectors whose first non-zero entry is 1.
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[lead] = 1;
    std::size_t tail = d - lead - 1;
    std::uint64_t combos = 1;
    for (std::size_t k = 0; k < tail; ++k)
      combos *= p;
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t rest = c;
      for (std::size_t k = d; k-- > lead + 1;) {
        coeff[k] = rest % p;
        rest /= p;
      }
      Subgroup m = phi;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == lead)
          continue;
        Index v = amb.mul(basis[j], amb.pow(basis[lead], (p - coeff[j] % p) % p));
        m = extend(m, v);
      }
      out.push_back(std::move(m));
    }
  }
  sort_canonical(out);
  return out;
}

} // namespace ppi
