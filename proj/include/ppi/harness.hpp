#pragma once

/**
 * @file harness.hpp
 * @brief Theorem and lemma checks over corpus groups, producing CheckReports.
 *
 * Each check instantiates the quantifiers of one statement on one group and
 * emits one report per instance. Quantifiers over normal subgroups, Sylow
 * subgroups and maximal subgroups of p-groups are exhaustive. Quantifiers over
 * "all p-subgroups H" use every Sylow p-subgroup followed by every cyclic
 * p-subgroup, truncated to `sample_cap` per (group, prime); truncation is
 * recorded in the report params.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "pi_property.hpp"
#include "structure.hpp"

namespace ppi {

enum class Status { Verified, Vacuous, Counterexample, SkippedCap };

inline const char *status_name(Status s) {
  switch (s) {
  case Status::Verified: return "verified";
  case Status::Vacuous: return "vacuous";
  case Status::Counterexample: return "COUNTEREXAMPLE";
  case Status::SkippedCap: return "skipped-cap";
  }
  return "?";
}

struct CheckReport {
  std::string check_id;
  std::string group;
  nlohmann::json params = nlohmann::json::object();
  bool hypothesis_met = false;
  std::optional<bool> conclusion_holds;
  Status status = Status::Vacuous;
  nlohmann::json witness = nlohmann::json::object();
  double elapsed_ms = 0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["check_id"] = check_id;
    j["group"] = group;
    j["params"] = params;
    j["hypothesis_met"] = hypothesis_met;
    if (conclusion_holds)
      j["conclusion_holds"] = *conclusion_holds;
    j["status"] = status_name(status);
    j["witness"] = witness;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }

  /// One-line human summary, e.g. "COUNTEREXAMPLE T3 A5 {"p":3}".
  std::string status_line() const {
    return std::string(status_name(status)) + " " + check_id + " " + group + " " + params.dump();
  }
};

/// Hypotheses that `search` mode can remove.
enum class Drop { None, GcdCondition, PPrimeSubgroupCondition, PiInNormalizer };

inline Drop parse_drop(const std::string &s) {
  if (s.empty() || s == "none")
    return Drop::None;
  if (s == "gcd-condition")
    return Drop::GcdCondition;
  if (s == "pprime-subgroup-condition")
    return Drop::PPrimeSubgroupCondition;
  if (s == "pi-in-normalizer")
    return Drop::PiInNormalizer;
  throw Error(Errc::InvalidArgument, "unknown hypothesis \"" + s + "\"");
}

inline const char *drop_name(Drop d) {
  switch (d) {
  case Drop::None: return "none";
  case Drop::GcdCondition: return "gcd-condition";
  case Drop::PPrimeSubgroupCondition: return "pprime-subgroup-condition";
  case Drop::PiInNormalizer: return "pi-in-normalizer";
  }
  return "?";
}

struct HarnessOptions {
  std::vector<std::uint64_t> primes;  ///< empty: pi(G) plus 2
  std::uint64_t cap = kDefaultElementCap;
  std::size_t sample_cap = 50;
  Drop drop = Drop::None;
  /// Number of Sylow conjugates per prime on which T5's hypothesis is tested.
  std::size_t t5_conjugates = 1;
  std::uint64_t seed = 20260101;
};

inline const std::vector<std::string> &all_check_ids() {
  static const std::vector<std::string> ids{"T1", "T2", "T3", "T4", "T5", "C1", "L1", "L2",
                                            "L3", "L4", "L5", "L6", "L7", "L8", "R1", "R2"};
  return ids;
}

inline std::string sampling_policy(const HarnessOptions &o) {
  return "exhaustive over normal subgroups, Sylow subgroups and maximal subgroups of "
         "p-groups; p-subgroup quantifiers (L1, L2, L3, L8) use all Sylow p-subgroups then "
         "all cyclic p-subgroups, first " +
         std::to_string(o.sample_cap) + " per (group, prime) in canonical order";
}

namespace detail {

inline nlohmann::json describe(const Subgroup &h) {
  nlohmann::json gens = nlohmann::json::array();
  for (Index g : h.generators())
    gens.push_back(h.ambient().element(g).to_string());
  return {{"order", h.order()}, {"generators", gens}};
}

/// Per-group state shared by all checks run on it.
class CheckContext {
public:
  CheckContext(std::string name, const Group &group, const HarnessOptions &opts,
               std::vector<std::string> tags)
      : name_(std::move(name)), opts_(opts), tags_(std::move(tags)),
        amb_(Ambient::create(group, opts.cap)), g_(whole_group(amb_)) {}

  const std::string &name() const { return name_; }
  const HarnessOptions &opts() const { return opts_; }
  const Subgroup &G() const { return g_; }
  const AmbientPtr &amb() const { return amb_; }
  bool has_tag(const std::string &t) const {
    return std::find(tags_.begin(), tags_.end(), t) != tags_.end();
  }

  std::vector<std::uint64_t> primes() const {
    if (!opts_.primes.empty())
      return opts_.primes;
    std::vector<std::uint64_t> ps = pi_of(g_).primes();
    if (std::find(ps.begin(), ps.end(), 2) == ps.end())
      ps.insert(ps.begin(), 2);
    return ps;
  }

  const std::vector<Subgroup> &normals() {
    if (!normals_)
      normals_ = all_normal_subgroups(g_);
    return *normals_;
  }

  const Subgroup &z_u() {
    if (!zu_)
      zu_ = hypercenter_U(g_);
    return *zu_;
  }

  const Subgroup &z_up(std::uint64_t p) {
    auto it = zup_.find(p);
    if (it == zup_.end())
      it = zup_.emplace(p, hypercenter_Up(g_, p)).first;
    return it->second;
  }

  bool p_nilpotent(std::uint64_t p) {
    auto it = pnil_.find(p);
    if (it == pnil_.end())
      it = pnil_.emplace(p, is_p_nilpotent(g_, p).holds).first;
    return it->second;
  }

  const QuotientMap &quotient_by(const Subgroup &n) {
    auto it = quotients_.find(n.bits());
    if (it == quotients_.end())
      it = quotients_.emplace(n.bits(), std::make_unique<QuotientMap>(g_, n, opts_.cap)).first;
    return *it->second;
  }

  /// Sylow p-subgroups then cyclic p-subgroups, deduplicated, capped.
  std::pair<std::vector<Subgroup>, bool> p_subgroup_sample(std::uint64_t p) {
    std::vector<Subgroup> out;
    std::set<Bitset> seen;
    bool truncated = false;
    auto push = [&](const Subgroup &h) {
      if (h.is_trivial() || !seen.insert(h.bits()).second)
        return;
      if (out.size() >= opts_.sample_cap) {
        truncated = true;
        return;
      }
      out.push_back(h);
    };
    if (g_.order() % p == 0) {
      for (const auto &s : all_sylow_subgroups(g_, p))
        push(s);
      for (const auto &c : cyclic_p_subgroups(g_, p))
        push(c);
    }
    return {out, truncated};
  }

  /// Every maximal subgroup of P has the property in M.
  bool maximals_hold_in(const Subgroup &pg, std::uint64_t p, const Subgroup &m) {
    for (const auto &x : maximal_subgroups_of_p_group(pg, p))
      if (!pi_holds(m, x))
        return false;
    return true;
  }

  /// Hypothesis shared by T3, T4, T5, C1 for a Sylow p-subgroup P of some
  /// normal subgroup: maximal subgroups of P have the property in N_G(P) and
  /// P' has it in G, minus whatever `drop` removes.
  struct SylowCondition {
    bool maximals_in_normalizer;
    bool derived_in_group;
    bool holds;
  };

  SylowCondition sylow_condition(const Subgroup &pg, std::uint64_t p) {
    SylowCondition c{true, true, true};
    if (opts_.drop != Drop::PiInNormalizer)
      c.maximals_in_normalizer = maximals_hold_in(pg, p, normalizer(g_, pg));
    if (opts_.drop != Drop::PPrimeSubgroupCondition)
      c.derived_in_group = pi_holds(g_, derived_subgroup(pg));
    c.holds = c.maximals_in_normalizer && c.derived_in_group;
    return c;
  }

  bool gcd_condition(std::uint64_t p) const {
    return opts_.drop == Drop::GcdCondition || std::gcd(g_.order(), p - 1) == 1;
  }

private:
  std::string name_;
  HarnessOptions opts_;
  std::vector<std::string> tags_;
  AmbientPtr amb_;
  Subgroup g_;
  std::optional<std::vector<Subgroup>> normals_;
  std::optional<Subgroup> zu_;
  std::map<std::uint64_t, Subgroup> zup_;
  std::map<std::uint64_t, bool> pnil_;
  std::map<Bitset, std::unique_ptr<QuotientMap>> quotients_;
};

class Reporter {
public:
  Reporter(std::string id, std::string group) : id_(std::move(id)), group_(std::move(group)) {
    start_ = std::chrono::steady_clock::now();
  }

  void emit(nlohmann::json params, bool hypothesis, bool conclusion,
            nlohmann::json witness = nlohmann::json::object()) {
    CheckReport r;
    r.check_id = id_;
    r.group = group_;
    r.params = std::move(params);
    r.hypothesis_met = hypothesis;
    if (hypothesis) {
      r.conclusion_holds = conclusion;
      r.status = conclusion ? Status::Verified : Status::Counterexample;
    } else {
      r.status = Status::Vacuous;
    }
    r.witness = std::move(witness);
    auto now = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    reports_.push_back(std::move(r));
  }

  std::vector<CheckReport> take() { return std::move(reports_); }

private:
  std::string id_;
  std::string group_;
  std::chrono::steady_clock::time_point start_;
  std::vector<CheckReport> reports_;
};

inline nlohmann::json prime_param(std::uint64_t p) { return {{"p", p}}; }

// If P is a normal p-subgroup whose maximal subgroups all have the property in G,
// then P <= Z_U(G).
inline void check_T1(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes())
    for (const auto &n : cx.normals()) {
      if (n.is_trivial() || !is_p_power(n.order(), p))
        continue;
      bool hyp = cx.maximals_hold_in(n, p, G);
      bool concl = n.subset_of(cx.z_u());
      out.emit({{"p", p}, {"P", describe(n)}}, hyp, concl,
               {{"Z_U_order", cx.z_u().order()}});
    }
}

// E normal, P in Syl_p(E), maximal subgroups of P have the property in G:
// E <= Z_{U_p}(G) or |E|_p = p. p not dividing |E| counts as hypothesis unmet.
inline void check_T2(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    if (G.order() % p)
      continue;
    for (const auto &e : cx.normals()) {
      nlohmann::json params{{"p", p}, {"E", describe(e)}};
      if (e.order() % p) {
        out.emit(params, false, false);
        continue;
      }
      Subgroup pg = sylow_subgroup(e, p);
      bool hyp = cx.maximals_hold_in(pg, p, G);
      bool in_hyper = e.subset_of(cx.z_up(p));
      bool small = p_part(e.order(), p) == p;
      out.emit(params, hyp, in_hyper || small,
               {{"Z_Up_order", cx.z_up(p).order()}, {"E_p", p_part(e.order(), p)}});
    }
  }
}

// (|G|, p-1) = 1, p | |G|: G p-nilpotent iff the Sylow condition holds.
inline void check_T3(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    nlohmann::json params{{"p", p}, {"drop", drop_name(cx.opts().drop)}};
    if (G.order() % p != 0 || !cx.gcd_condition(p)) {
      out.emit(params, false, false,
               {{"p_divides_order", G.order() % p == 0},
                {"gcd_order_p_minus_1", std::gcd(G.order(), p - 1)}});
      continue;
    }
    Subgroup pg = sylow_subgroup(G, p);
    auto c = cx.sylow_condition(pg, p);
    bool pn = cx.p_nilpotent(p);
    out.emit(params, true, c.holds == pn,
             {{"maximals_in_normalizer", c.maximals_in_normalizer},
              {"derived_in_group", c.derived_in_group},
              {"p_nilpotent", pn},
              {"sylow_order", pg.order()},
              {"normalizer_order", normalizer(G, pg).order()}});
  }
}

// (|G|, p-1) = 1, N normal with G/N p-nilpotent, P in Syl_p(N) with the Sylow
// condition: G is p-nilpotent.
inline void check_T4(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    if (G.order() % p != 0 || !cx.gcd_condition(p)) {
      out.emit({{"p", p}, {"drop", drop_name(cx.opts().drop)}}, false, false);
      continue;
    }
    for (const auto &n : cx.normals()) {
      const QuotientMap &q = cx.quotient_by(n);
      if (!is_p_nilpotent(q.image(), p).holds)
        continue;
      Subgroup pg = sylow_subgroup(n, p);
      auto c = cx.sylow_condition(pg, p);
      bool pn = cx.p_nilpotent(p);
      out.emit({{"p", p}, {"N", describe(n)}, {"drop", drop_name(cx.opts().drop)}}, c.holds, pn,
               {{"maximals_in_normalizer", c.maximals_in_normalizer},
                {"derived_in_group", c.derived_in_group},
                {"p_nilpotent", pn}});
    }
  }
}

// F = U: N normal with G/N supersoluble, the Sylow condition for every prime
// dividing |N|: G supersoluble.
inline void check_T5(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  std::mt19937_64 rng(cx.opts().seed);
  bool super = is_supersoluble(G);
  for (const auto &n : cx.normals()) {
    const QuotientMap &q = cx.quotient_by(n);
    if (!is_supersoluble(q.image()))
      continue;
    bool hyp = true;
    nlohmann::json per_prime = nlohmann::json::object();
    for (auto p : pi_of(n)) {
      Subgroup pg = sylow_subgroup(n, p);
      std::vector<Subgroup> tested{pg};
      for (std::size_t k = 1; k < cx.opts().t5_conjugates; ++k)
        tested.push_back(conjugate(pg, static_cast<Index>(rng() % cx.amb()->size())));
      bool ok = true;
      for (const auto &s : tested)
        ok = cx.sylow_condition(s, p).holds && ok;
      per_prime[std::to_string(p)] = ok;
      hyp = hyp && ok;
    }
    out.emit({{"N", describe(n)}, {"drop", drop_name(cx.opts().drop)},
              {"conjugates_per_prime", cx.opts().t5_conjugates}},
             hyp, super, {{"per_prime", per_prime}, {"supersoluble", super}});
  }
}

// Sylow condition for every Sylow subgroup of G: Sylow tower of supersoluble type.
inline void check_C1(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  bool hyp = true;
  nlohmann::json per_prime = nlohmann::json::object();
  for (auto p : pi_of(G)) {
    bool ok = cx.sylow_condition(sylow_subgroup(G, p), p).holds;
    per_prime[std::to_string(p)] = ok;
    hyp = hyp && ok;
  }
  bool tower = is_sylow_tower_supersoluble_type(G);
  out.emit({{"primes", pi_of(G).primes()}, {"drop", drop_name(cx.opts().drop)}}, hyp, tower,
           {{"per_prime", per_prime}, {"sylow_tower", tower}});
}

// H has the property in G, N normal with N <= H or (|H|,|N|) = 1:
// HN/N has it in G/N.
inline void check_L1(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    auto [sample, truncated] = cx.p_subgroup_sample(p);
    for (const auto &h : sample) {
      bool holds_in_g = pi_holds(G, h);
      for (const auto &n : cx.normals()) {
        if (!n.subset_of(h) && std::gcd(h.order(), n.order()) != 1)
          continue;
        nlohmann::json params{{"p", p}, {"H", describe(h)}, {"N", describe(n)},
                              {"sampled", truncated}};
        if (!holds_in_g) {
          out.emit(params, false, false);
          continue;
        }
        const QuotientMap &q = cx.quotient_by(n);
        Subgroup img = q.image_of(join(G, h, n));
        out.emit(params, true, pi_holds(q.image(), img), {{"image_order", img.order()}});
      }
    }
  }
}

// H a p-subgroup with the property in G, H <= N <= G: H has it in N. N ranges
// over the normal subgroups containing H.
inline void check_L2(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    auto [sample, truncated] = cx.p_subgroup_sample(p);
    for (const auto &h : sample) {
      bool hyp = pi_holds(G, h);
      for (const auto &n : cx.normals()) {
        if (!h.subset_of(n))
          continue;
        out.emit({{"p", p}, {"H", describe(h)}, {"N", describe(n)}, {"sampled", truncated}},
                 hyp, hyp ? pi_holds(n, h) : false);
      }
    }
  }
}

// N normal, P a p-subgroup that is Sylow in G or has (|N|, p) = 1:
// N_{G/N}(PN/N) = N_G(P)N/N.
inline void check_L3(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    if (G.order() % p)
      continue;
    auto [sample, truncated] = cx.p_subgroup_sample(p);
    Subgroup syl = sylow_subgroup(G, p);
    for (const auto &n : cx.normals()) {
      const QuotientMap &q = cx.quotient_by(n);
      auto test = [&](const Subgroup &pg, const char *which, bool hyp) {
        nlohmann::json params{{"p", p}, {"case", which}, {"P", describe(pg)},
                              {"N", describe(n)}, {"sampled", truncated}};
        if (!hyp) {
          out.emit(params, false, false);
          return;
        }
        Subgroup lhs = normalizer(q.image(), q.image_of(pg));
        Subgroup rhs = q.image_of(normalizer(G, pg));
        out.emit(params, true, lhs == rhs,
                 {{"quotient_normalizer_order", lhs.order()}, {"image_order", rhs.order()}});
      };
      test(syl, "sylow", true);
      bool coprime = n.order() % p != 0;
      if (coprime)
        for (const auto &h : sample)
          if (!(h == syl))
            test(h, "coprime", true);
    }
  }
}

// Every maximal subgroup of the image of P in G/K has the property in the
// quotient normalizer of that image.
inline bool quotient_maximals_hold(const QuotientMap &q, const Subgroup &pg, std::uint64_t p) {
  Subgroup img = q.image_of(pg);
  Subgroup nbar = normalizer(q.image(), img);
  for (const auto &x : maximal_subgroups_of_p_group(img, p))
    if (!pi_holds(nbar, x))
      return false;
  return true;
}

// K normal, P in Syl_p(G) with maximal subgroups having the property in N_G(P):
// the same holds for PK/K in G/K.
inline void check_L4(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    if (G.order() % p)
      continue;
    Subgroup pg = sylow_subgroup(G, p);
    bool hyp = cx.maximals_hold_in(pg, p, normalizer(G, pg));
    for (const auto &k : cx.normals()) {
      nlohmann::json params{{"p", p}, {"K", describe(k)}};
      if (!hyp) {
        out.emit(params, false, false);
        continue;
      }
      out.emit(params, true, quotient_maximals_hold(cx.quotient_by(k), pg, p));
    }
  }
}

// H normal, P in Syl_p(H), K a normal p'-subgroup, maximal subgroups of P have
// the property in N_G(P): the same for PK/K in G/K.
inline void check_L5(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    if (G.order() % p)
      continue;
    for (const auto &h : cx.normals()) {
      if (h.order() % p)
        continue;
      Subgroup pg = sylow_subgroup(h, p);
      bool hyp = cx.maximals_hold_in(pg, p, normalizer(G, pg));
      for (const auto &k : cx.normals()) {
        if (k.order() % p == 0)
          continue;
        nlohmann::json params{{"p", p}, {"H", describe(h)}, {"K", describe(k)}};
        if (!hyp) {
          out.emit(params, false, false);
          continue;
        }
        out.emit(params, true, quotient_maximals_hold(cx.quotient_by(k), pg, p));
      }
    }
  }
}

// N soluble normal, N != 1, no minimal normal subgroup of G inside N lies in
// Phi(G): F(N) is a direct product of minimal normal subgroups of G inside N.
inline void check_L6(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  std::optional<Subgroup> phi;
  std::vector<Subgroup> minimal = minimal_normal_overgroups(G, trivial_subgroup(cx.amb()));
  for (const auto &n : cx.normals()) {
    if (n.is_trivial() || !is_soluble(n))
      continue;
    if (!phi)
      phi = frattini_subgroup(G);
    std::vector<Subgroup> inside;
    bool hyp = true;
    for (const auto &m : minimal)
      if (m.subset_of(n)) {
        inside.push_back(m);
        hyp = hyp && !m.subset_of(*phi);
      }
    nlohmann::json params{{"N", describe(n)}};
    if (!hyp) {
      out.emit(params, false, false, {{"frattini_order", phi->order()}});
      continue;
    }
    Subgroup fit = fitting_subgroup(n);
    // Greedy independent selection spans the join when the factors are minimal normal.
    Subgroup acc = trivial_subgroup(cx.amb());
    std::uint64_t product = 1;
    std::size_t used = 0;
    for (const auto &m : inside)
      if (intersection(acc, m).is_trivial()) {
        acc = join(G, acc, m);
        product *= m.order();
        ++used;
      }
    bool concl = acc == fit && acc.order() == product;
    out.emit(params, true, concl,
             {{"fitting_order", fit.order()}, {"factors", used}, {"frattini_order", phi->order()}});
  }
}

// P in Syl_p(G), N normal with P ∩ N <= Phi(P): N is p-nilpotent.
inline void check_L7(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    if (G.order() % p)
      continue;
    Subgroup pg = sylow_subgroup(G, p);
    Subgroup phi = frattini_of_p_group(pg, p);
    for (const auto &n : cx.normals()) {
      bool hyp = intersection(pg, n).subset_of(phi);
      out.emit({{"p", p}, {"N", describe(n)}}, hyp, hyp ? is_p_nilpotent(n, p).holds : false);
    }
  }
}

// G p-nilpotent, H a p-subgroup: H has the property in G.
inline void check_L8(CheckContext &cx, Reporter &out) {
  const auto &G = cx.G();
  for (auto p : cx.primes()) {
    if (!cx.p_nilpotent(p)) {
      out.emit({{"p", p}}, false, false);
      continue;
    }
    auto [sample, truncated] = cx.p_subgroup_sample(p);
    if (sample.empty())
      out.emit({{"p", p}, {"H", describe(trivial_subgroup(cx.amb()))}, {"sampled", false}}, true,
               pi_holds(G, trivial_subgroup(cx.amb())));
    for (const auto &h : sample)
      out.emit({{"p", p}, {"H", describe(h)}, {"sampled", truncated}}, true, pi_holds(G, h));
  }
}

// PSL(2,7) at p = 2: N_G(P) = P, the three maximal subgroups of P have the
// property in N_G(P), P' does not have it in G, G is not 2-nilpotent.
inline void check_R1(CheckContext &cx, Reporter &out) {
  if (!cx.has_tag("remark-R1"))
    return;
  const auto &G = cx.G();
  const std::uint64_t p = 2;
  Subgroup pg = sylow_subgroup(G, p);
  Subgroup ng = normalizer(G, pg);
  auto maximals = maximal_subgroups_of_p_group(pg, p);
  std::size_t good = 0;
  for (const auto &m : maximals)
    good += pi_holds(ng, m);
  Subgroup pd = derived_subgroup(pg);
  PiVerdict v = satisfies_partial_pi(G, pd);
  std::uint64_t index = v.rejections.empty() ? 0 : v.rejections.front().factor.normalizer_index;
  bool pn = cx.p_nilpotent(p);
  bool ps = is_p_soluble(G, p);
  bool ok = G.order() == 168 && ng == pg && ng.order() == 8 && maximals.size() == 3 &&
            good == 3 && pd.order() == 2 && !v.holds && index == 21 && !pn && !ps;
  out.emit({{"p", p}}, true, ok,
           {{"order", G.order()},
            {"normalizer_order", ng.order()},
            {"normalizer_is_sylow", ng == pg},
            {"maximal_subgroups", maximals.size()},
            {"maximals_satisfying_in_normalizer", good},
            {"derived_order", pd.order()},
            {"derived_satisfies_in_group", v.holds},
            {"witnessed_index", index},
            {"p_nilpotent", pn},
            {"p_soluble", ps}});
}

// A5 at p = 3: the Sylow condition holds, A5 is not 3-nilpotent, and
// (|G|, p-1) != 1 so the gcd hypothesis is what excludes it.
inline void check_R2(CheckContext &cx, Reporter &out) {
  if (!cx.has_tag("remark-R2"))
    return;
  const auto &G = cx.G();
  const std::uint64_t p = 3;
  Subgroup pg = sylow_subgroup(G, p);
  Subgroup ng = normalizer(G, pg);
  auto maximals = maximal_subgroups_of_p_group(pg, p);
  std::size_t good = 0;
  for (const auto &m : maximals)
    good += pi_holds(ng, m);
  Subgroup pd = derived_subgroup(pg);
  bool pd_holds = pi_holds(G, pd);
  bool pn = cx.p_nilpotent(p);
  auto g = std::gcd(G.order(), p - 1);
  bool ok = G.order() == 60 && pg.order() == 3 && ng.order() == 6 &&
            good == maximals.size() && pd.is_trivial() && pd_holds && !pn && g != 1;
  out.emit({{"p", p}}, true, ok,
           {{"order", G.order()},
            {"sylow_order", pg.order()},
            {"normalizer_order", ng.order()},
            {"maximal_subgroups", maximals.size()},
            {"maximals_satisfying_in_normalizer", good},
            {"derived_order", pd.order()},
            {"derived_satisfies_in_group", pd_holds},
            {"p_nilpotent", pn},
            {"gcd_order_p_minus_1", g}});
}

} // namespace detail

/// Runs one check on one group. Enumeration caps turn into a single
/// skipped-cap report rather than an exception.
inline std::vector<CheckReport> run_check(const std::string &check_id, const std::string &name,
                                          const Group &group, const HarnessOptions &opts = {},
                                          const std::vector<std::string> &tags = {}) {
  using Fn = void (*)(detail::CheckContext &, detail::Reporter &);
  static const std::map<std::string, Fn> table{
      {"T1", detail::check_T1}, {"T2", detail::check_T2}, {"T3", detail::check_T3},
      {"T4", detail::check_T4}, {"T5", detail::check_T5}, {"C1", detail::check_C1},
      {"L1", detail::check_L1}, {"L2", detail::check_L2}, {"L3", detail::check_L3},
      {"L4", detail::check_L4}, {"L5", detail::check_L5}, {"L6", detail::check_L6},
      {"L7", detail::check_L7}, {"L8", detail::check_L8}, {"R1", detail::check_R1},
      {"R2", detail::check_R2}};
  auto it = table.find(check_id);
  if (it == table.end())
    throw Error(Errc::InvalidArgument, "unknown check \"" + check_id + "\"");
  detail::Reporter out(check_id, name);
  try {
    detail::CheckContext cx(name, group, opts, tags);
    it->second(cx, out);
  } catch (const CapExceeded &e) {
    CheckReport r;
    r.check_id = check_id;
    r.group = name;
    r.status = Status::SkippedCap;
    r.witness = {{"reason", e.what()}};
    auto done = out.take();
    done.push_back(std::move(r));
    return done;
  }
  return out.take();
}

/// All requested checks for one entry, sharing nothing between checks so each
/// report's timing is its own.
inline std::vector<CheckReport> run_entry(const CorpusEntry &entry,
                                          const std::vector<std::string> &checks,
                                          const HarnessOptions &opts = {}) {
  Group g = build_group(entry);
  std::vector<CheckReport> all;
  for (const auto &id : checks) {
    auto r = run_check(id, entry.name, g, opts, entry.tags);
    all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return all;
}

struct ReportSummary {
  std::size_t verified = 0;
  std::size_t vacuous = 0;
  std::size_t counterexample = 0;
  std::size_t skipped = 0;

  void add(const CheckReport &r) {
    switch (r.status) {
    case Status::Verified: ++verified; break;
    case Status::Vacuous: ++vacuous; break;
    case Status::Counterexample: ++counterexample; break;
    case Status::SkippedCap: ++skipped; break;
    }
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["summary"] = {{"verified", verified},
                    {"vacuous", vacuous},
                    {"counterexample", counterexample},
                    {"skipped", skipped}};
    return j;
  }
};

/// Runs `check_id` with one hypothesis removed over a corpus and returns every
/// report. Counterexamples are the expected outcome.
inline std::vector<CheckReport> search_counterexamples(const std::string &check_id,
                                                       const std::vector<CorpusEntry> &corpus,
                                                       Drop drop, HarnessOptions opts = {}) {
  static const std::set<std::string> supported{"T3", "T4", "T5", "C1"};
  if (!supported.count(check_id))
    throw Error(Errc::InvalidArgument, "search supports T3, T4, T5, C1");
  if (drop == Drop::GcdCondition && check_id != "T3" && check_id != "T4")
    throw Error(Errc::InvalidArgument, "gcd-condition only appears in T3 and T4");
  opts.drop = drop;
  std::vector<CheckReport> all;
  for (const auto &e : corpus) {
    auto r = run_check(check_id, e.name, build_group(e), opts, e.tags);
    all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return all;
}

} // namespace ppi
