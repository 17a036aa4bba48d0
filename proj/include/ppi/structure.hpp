#pragma once

/**
 * @file structure.hpp
 * @brief Group-class predicates (p-nilpotent, p-soluble, supersoluble, ...)
 * and the hypercenters Z_U(G), Z_{U_p}(G).
 *
 * Chief-factor predicates read one deterministic chief series; independence
 * of the series choice is covered by tests.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chief.hpp"
#include "quotient.hpp"

namespace ppi {

struct PNilpotency {
  bool holds = false;
  std::optional<Subgroup> complement;  ///< normal p-complement when holds
};

/// G is p-nilpotent iff the subgroup generated by its p'-elements has order
/// |G|_{p'}; that subgroup is then the normal p-complement.
inline PNilpotency is_p_nilpotent(const Subgroup &g, std::uint64_t p) {
  const Ambient &amb = g.ambient();
  Subgroup k = trivial_subgroup(g.ambient_ptr());
  g.bits().for_each([&](Index x) {
    if (amb.element_order(x) % p != 0 && !k.contains(x))
      k = extend(k, x);
  });
  PNilpotency r;
  r.holds = k.order() == p_prime_part(g.order(), p);
  if (r.holds) {
    if (!is_normal(g, k))
      throw std::logic_error("p'-element closure is not normal");
    r.complement = std::move(k);
  }
  return r;
}

inline bool is_p_soluble(const Subgroup &g, std::uint64_t p) {
  for (const auto &s : first_chief_series(g).steps) {
    auto f = s.factor_order();
    if (f % p == 0 && !is_p_power(f, p))
      return false;
  }
  return true;
}

inline bool is_soluble(const Subgroup &g) {
  for (const auto &s : first_chief_series(g).steps)
    if (factorize(s.factor_order()).size() != 1)
      return false;
  return true;
}

inline bool is_supersoluble(const Subgroup &g) {
  for (const auto &s : first_chief_series(g).steps)
    if (!is_prime(s.factor_order()))
      return false;
  return true;
}

inline bool is_p_supersoluble(const Subgroup &g, std::uint64_t p) {
  for (const auto &s : first_chief_series(g).steps) {
    auto f = s.factor_order();
    if (f % p == 0 && f != p)
      return false;
  }
  return true;
}

/// Every Sylow subgroup normal.
inline bool is_nilpotent(const Subgroup &g) {
  for (auto p : pi_of(g))
    if (!is_normal(g, sylow_subgroup(g, p)))
      return false;
  return true;
}

/// For the largest prime p of the current group the Sylow p-subgroup must be
/// normal; then continue in the quotient by it.
inline bool is_sylow_tower_supersoluble_type(const Subgroup &g) {
  Subgroup cur = g;
  std::optional<QuotientMap> q;
  while (!cur.is_trivial()) {
    auto primes = pi_of(cur).primes();
    Subgroup s = sylow_subgroup(cur, primes.back());
    if (!is_normal(cur, s))
      return false;
    q.emplace(cur, s);
    cur = q->image();
  }
  return true;
}

/// Which chief factors a hypercenter may climb through.
using FactorRule = std::function<bool(std::uint64_t)>;

inline FactorRule supersoluble_rule() {
  return [](std::uint64_t f) { return is_prime(f); };
}

/// p'-factors are unconstrained; factors divisible by p must have order p.
inline FactorRule p_supersoluble_rule(std::uint64_t p) {
  return [p](std::uint64_t f) { return f % p != 0 || f == p; };
}

/// Ascend from 1 through minimal normal overgroups whose factor passes the rule.
inline Subgroup hypercenter(const Subgroup &g, const FactorRule &rule) {
  Subgroup z = trivial_subgroup(g.ambient_ptr());
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto &m : minimal_normal_overgroups(g, z))
      if (rule(m.order() / z.order())) {
        z = std::move(m);
        grew = true;
        break;
      }
  }
  return z;
}

/// The largest normal subgroup all of whose G-chief factors below are cyclic.
inline Subgroup hypercenter_U(const Subgroup &g) { return hypercenter(g, supersoluble_rule()); }

/// The largest normal subgroup whose G-chief factors of order divisible by p
/// below it are cyclic of order p.
inline Subgroup hypercenter_Up(const Subgroup &g, std::uint64_t p) {
  return hypercenter(g, p_supersoluble_rule(p));
}

/// Full-lattice certificate for a hypercenter: among all normal subgroups
/// whose chief factors below pass the rule, `z` is the largest and contains
/// the rest. Returns false when the lattice is over `lattice_cap`.
inline std::optional<bool> certify_hypercenter(const Subgroup &g, const Subgroup &z,
                                               const FactorRule &rule,
                                               std::size_t lattice_cap = 1000) {
  std::vector<Subgroup> normals;
  try {
    normals = all_normal_subgroups(g, lattice_cap);
  } catch (const CapExceeded &) {
    return std::nullopt;
  }
  for (const auto &n : normals) {
    // Any chief series of G through N: climb inside N.
    Subgroup cur = trivial_subgroup(g.ambient_ptr());
    bool good = true;
    while (cur.order() != n.order()) {
      std::optional<Subgroup> step;
      for (auto &m : minimal_normal_overgroups(g, cur))
        if (m.subset_of(n)) {
          step = std::move(m);
          break;
        }
      if (!rule(step->order() / cur.order()))
        good = false;
      cur = std::move(*step);
    }
    if (good && !n.subset_of(z))
      return false;
  }
  return true;
}

struct PrimeProfile {
  std::uint64_t p;
  bool p_nilpotent;
  bool p_soluble;
  bool p_supersoluble;
  Subgroup hypercenter_Up;
};

struct StructureProfile {
  std::uint64_t order;
  std::vector<std::pair<std::uint64_t, unsigned>> factorization;
  std::vector<PrimeProfile> per_prime;
  bool nilpotent;
  bool soluble;
  bool supersoluble;
  bool sylow_tower_supersoluble_type;
  Subgroup hypercenter_U;
};

inline StructureProfile structure_profile(const Subgroup &g) {
  StructureProfile s{g.order(),
                     factorize(g.order()),
                     {},
                     is_nilpotent(g),
                     is_soluble(g),
                     is_supersoluble(g),
                     is_sylow_tower_supersoluble_type(g),
                     hypercenter_U(g)};
  for (auto p : pi_of(g))
    s.per_prime.push_back(PrimeProfile{p, is_p_nilpotent(g, p).holds, is_p_soluble(g, p),
                                       is_p_supersoluble(g, p), hypercenter_Up(g, p)});
  return s;
}

} // namespace ppi
