#pragma once

/**
 * @file pi_property.hpp
 * @brief The partial Pi-property of a subgroup.
 *
 * H has the property in G when some chief series 1 = G_0 < ... < G_n = G
 * satisfies, at every step, that |G/G_{i-1} : N_{G/G_{i-1}}(X/G_{i-1})| is a
 * pi(X/G_{i-1})-number, where X = HG_{i-1} ∩ G_i.
 *
 * Since G_{i-1} is normal and lies in X, N_{G/G_{i-1}}(X/G_{i-1}) is
 * N_G(X)/G_{i-1}, so the index is |G : N_G(X)| and every step is evaluated in
 * G itself. The search is a memoized DFS over normal subgroups: whether a
 * good chain exists from N up to G depends on N alone.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chief.hpp"

namespace ppi {

inline constexpr std::size_t kPiMemoCap = 10000;

/// Everything computed for one chief factor B/A.
struct FactorEvaluation {
  bool ok = false;
  std::uint64_t intersection_order = 1;  ///< |HA ∩ B|
  std::uint64_t image_order = 1;         ///< |(HA ∩ B)/A|
  std::uint64_t normalizer_index = 1;    ///< |G : N_G(HA ∩ B)|
  PrimeSet pi;                           ///< primes of image_order
};

/// A chief step on which the condition failed.
struct PiRejection {
  std::uint64_t lower_order;
  std::uint64_t upper_order;
  FactorEvaluation factor;
};

struct PiVerdict {
  bool holds = false;
  std::optional<ChiefSeries> witness;  ///< present iff holds
  std::size_t explored = 0;            ///< normal subgroups visited
  std::vector<PiRejection> rejections;
};

namespace detail {

/// `ha` is the join <H, A>, shared by every step leaving A.
inline FactorEvaluation evaluate_with_join(const Subgroup &g, const Subgroup &ha,
                                           const Subgroup &a, const Subgroup &b) {
  Subgroup k = intersection(ha, b);
  FactorEvaluation ev;
  ev.intersection_order = k.order();
  ev.image_order = k.order() / a.order();
  ev.normalizer_index = g.order() / normalizer(g, k).order();
  ev.pi = PrimeSet::of(ev.image_order);
  ev.ok = is_pi_number(ev.normalizer_index, ev.pi);
  return ev;
}

} // namespace detail

inline FactorEvaluation evaluate_factor(const Subgroup &g, const Subgroup &h, const Subgroup &a,
                                        const Subgroup &b) {
  return detail::evaluate_with_join(g, join(g, h, a), a, b);
}

/// The per-step condition for the chief factor B/A of G.
inline bool factor_condition(const Subgroup &g, const Subgroup &h, const Subgroup &a,
                             const Subgroup &b) {
  return evaluate_factor(g, h, a, b).ok;
}

/// Decides whether H satisfies the partial Pi-property in G. On success the
/// witness is the first good chief series in canonical branch order; on
/// failure every normal subgroup reachable from 1 has been explored.
inline PiVerdict satisfies_partial_pi(const Subgroup &g, const Subgroup &h,
                                      std::size_t memo_cap = kPiMemoCap) {
  detail::require_inside(g, h);
  PiVerdict verdict;
  std::unordered_map<Bitset, std::optional<Subgroup>, BitsetHash> succ;
  std::unordered_map<Bitset, bool, BitsetHash> reach;

  std::function<bool(const Subgroup &)> search = [&](const Subgroup &n) -> bool {
    if (n.order() == g.order())
      return true;
    if (auto it = reach.find(n.bits()); it != reach.end())
      return it->second;
    if (reach.size() >= memo_cap)
      throw CapExceeded(reach.size() + 1, memo_cap, Errc::MemoCapExceeded);
    reach.emplace(n.bits(), false);
    ++verdict.explored;
    Subgroup hn = join(g, h, n);
    for (const auto &m : minimal_normal_overgroups(g, n)) {
      FactorEvaluation ev = detail::evaluate_with_join(g, hn, n, m);
      if (!ev.ok) {
        verdict.rejections.push_back({n.order(), m.order(), ev});
        continue;
      }
      if (search(m)) {
        reach[n.bits()] = true;
        succ.insert_or_assign(n.bits(), m);
        return true;
      }
    }
    return false;
  };

  Subgroup start = trivial_subgroup(g.ambient_ptr());
  verdict.holds = search(start);
  if (verdict.holds) {
    ChiefSeries s;
    Subgroup cur = start;
    while (cur.order() != g.order()) {
      Subgroup next = *succ.at(cur.bits());
      s.steps.push_back({cur, next});
      cur = std::move(next);
    }
    verdict.witness = std::move(s);
  }
  return verdict;
}

/// The property evaluated inside a subgroup M of the ambient (M's own chief
/// series and normalizers), for H <= M.
inline PiVerdict satisfies_partial_pi_in(const Subgroup &h, const Subgroup &m,
                                         std::size_t memo_cap = kPiMemoCap) {
  return satisfies_partial_pi(m, h, memo_cap);
}

/// Cached yes/no form used by the verification harness.
inline bool pi_holds(const Subgroup &g, const Subgroup &h) {
  const auto &amb = g.ambient_ptr();
  if (auto hit = amb->pi_memo().find(g.bits(), h.bits()))
    return *hit;
  bool holds = satisfies_partial_pi(g, h).holds;
  amb->pi_memo().insert(g.bits(), h.bits(), holds);
  return holds;
}

/// Replays a witness through factor_condition; true iff every step passes and
/// the steps chain from 1 to G.
inline bool replay_witness(const Subgroup &g, const Subgroup &h, const ChiefSeries &s) {
  std::uint64_t prev = 1;
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    const auto &step = s.steps[k];
    if (step.lower.order() != prev)
      return false;
    if (k && !(s.steps[k - 1].upper == step.lower))
      return false;
    if (!factor_condition(g, h, step.lower, step.upper))
      return false;
    prev = step.upper.order();
  }
  return prev == g.order();
}

} // namespace ppi
