#include <random>

#include <gtest/gtest.h>

#include <ppi/ppi.hpp>

#include "bridge.hpp"

using namespace ppi;

namespace {

Subgroup cyc(const Subgroup &g, const char *s) {
  auto i = g.ambient().index_of(parse_permutation(s, g.ambient().degree()));
  return extend(trivial_subgroup(g.ambient_ptr()), *i);
}

// Groups small enough for every oracle scan.
std::vector<std::string> small_names() {
  std::vector<std::string> out;
  for (const auto &e : builtin_corpus())
    if (*e.expected_order <= 200)
      out.push_back(e.name);
  return out;
}

} // namespace

TEST(Join, Examples) {
  auto s3 = bridge::make("S3");
  auto a = cyc(s3.G, "(1 2)"), b = cyc(s3.G, "(1 2 3)");
  EXPECT_EQ(join(s3.G, a, trivial_subgroup(s3.amb)), a);
  Subgroup j = join(s3.G, a, b);
  EXPECT_EQ(j.order(), 6u);
  EXPECT_EQ(s3.to_oracle(j), s3.t.join(s3.to_oracle(a), s3.to_oracle(b)));

  auto d8 = bridge::make("D8");
  Subgroup z = center(d8.G);
  EXPECT_EQ(join(d8.G, z, z), z);
}

TEST(Intersection, Examples) {
  auto s3 = bridge::make("S3");
  auto a = cyc(s3.G, "(1 2)");
  EXPECT_EQ(intersection(a, a), a);
  EXPECT_TRUE(intersection(a, cyc(s3.G, "(1 2 3)")).is_trivial());

  auto psl = bridge::make("PSL27");
  Subgroup pd = derived_subgroup(sylow_subgroup(psl.G, 2));
  EXPECT_EQ(intersection(pd, psl.G), pd);
  EXPECT_EQ(pd.order(), 2u);
}

TEST(NormalClosure, Examples) {
  auto s4 = bridge::make("S4");
  EXPECT_TRUE(normal_closure(s4.G, trivial_subgroup(s4.amb)).is_trivial());
  Subgroup v = normal_closure(s4.G, cyc(s4.G, "(1 2)(3 4)"));
  EXPECT_EQ(v.order(), 4u);
  EXPECT_EQ(s4.to_oracle(v), s4.t.normal_closure(s4.t.all(), s4.to_oracle(cyc(s4.G, "(1 2)(3 4)"))));

  auto a5 = bridge::make("A5");
  for (Index x = 1; x < a5.amb->size(); ++x)
    EXPECT_EQ(normal_closure(a5.G, extend(trivial_subgroup(a5.amb), x)).order(), 60u);
}

TEST(Normalizer, Examples) {
  auto psl = bridge::make("PSL27");
  EXPECT_EQ(normalizer(psl.G, psl.G), psl.G);
  Subgroup p = sylow_subgroup(psl.G, 2);
  EXPECT_EQ(normalizer(psl.G, p), p);
  EXPECT_EQ(normalizer(psl.G, p).order(), 8u);

  auto a5 = bridge::make("A5");
  Subgroup p3 = sylow_subgroup(a5.G, 3);
  EXPECT_EQ(normalizer(a5.G, p3).order(), 6u);
  EXPECT_EQ(a5.to_oracle(normalizer(a5.G, p3)), a5.t.normalizer(a5.t.all(), a5.to_oracle(p3)));
}

TEST(Centralizer, Examples) {
  auto s3 = bridge::make("S3");
  EXPECT_EQ(centralizer(s3.G, trivial_subgroup(s3.amb)), s3.G);
  EXPECT_EQ(centralizer(s3.G, cyc(s3.G, "(1 2 3)")), cyc(s3.G, "(1 2 3)"));
  auto d8 = bridge::make("D8");
  EXPECT_EQ(centralizer(d8.G, d8.G).order(), 2u);
  EXPECT_EQ(d8.to_oracle(center(d8.G)), d8.t.centralizer(d8.t.all(), d8.t.all()));
}

TEST(Derived, Examples) {
  EXPECT_TRUE(derived_subgroup(bridge::make("C12").G).is_trivial());
  EXPECT_TRUE(derived_subgroup(bridge::make("C3^2").G).is_trivial());
  auto d8 = bridge::make("D8");
  EXPECT_EQ(derived_subgroup(d8.G).order(), 2u);
  auto a5 = bridge::make("A5");
  EXPECT_TRUE(derived_subgroup(sylow_subgroup(a5.G, 3)).is_trivial());
}

TEST(Sylow, Examples) {
  auto a5 = bridge::make("A5");
  EXPECT_TRUE(sylow_subgroup(a5.G, 7).is_trivial());
  EXPECT_EQ(sylow_subgroup(a5.G, 3).order(), 3u);

  auto psl = bridge::make("PSL27");
  Subgroup p = sylow_subgroup(psl.G, 2);
  EXPECT_EQ(p.order(), 8u);
  std::vector<std::uint64_t> census;
  for (Index x : p.elements())
    census.push_back(psl.amb->element_order(x));
  std::sort(census.begin(), census.end());
  EXPECT_EQ(census, (std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2, 4, 4}));
  EXPECT_FALSE(center(p) == p);  // non-abelian
  EXPECT_EQ(center(p).order(), 2u);
}

TEST(Sylow, ExactPPartEverywhere) {
  for (const auto &e : builtin_corpus()) {
    auto amb = elements(build_group(e));
    Subgroup g = whole_group(amb);
    for (auto p : pi_of(g)) {
      Subgroup s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), p_part(g.order(), p)) << e.name << " p=" << p;
      EXPECT_EQ(g.order() % s.order(), 0u);
    }
  }
}

TEST(Sylow, ConjugatesAndCountMatchOracle) {
  for (const auto &name : small_names()) {
    auto b = bridge::make(name);
    auto subs = b.t.subgroups(b.t.all());
    for (auto p : pi_of(b.G)) {
      auto syl = all_sylow_subgroups(b.G, p);
      std::size_t want = 0;
      for (const auto &s : subs)
        want += s.size() == p_part(b.G.order(), p);
      EXPECT_EQ(syl.size(), want) << name << " p=" << p;
      // Any two are conjugate: find an explicit conjugator.
      Subgroup s0 = sylow_subgroup(b.G, p);
      for (const auto &s : syl) {
        bool found = false;
        for (Index x = 0; x < b.amb->size() && !found; ++x)
          found = conjugate(s0, x) == s;
        EXPECT_TRUE(found) << name;
      }
    }
  }
}

TEST(Sylow, DifferentGeneratorOrderStillConjugate) {
  for (const char *name : {"S4", "A5", "PSL27", "GL23", "S3xS3"}) {
    auto e = *find_entry(builtin_corpus(), name);
    auto e2 = e;
    std::reverse(e2.generators.begin(), e2.generators.end());
    auto amb = elements(build_group(e));
    Subgroup g = whole_group(amb);
    // rebuild the reversed presentation inside the same ambient
    std::vector<Permutation> gens;
    for (const auto &s : e2.generators)
      gens.push_back(parse_permutation(s, e2.degree));
    Subgroup g2 = subgroup_from_perms(amb, gens);
    ASSERT_EQ(g2, g);
    for (auto p : pi_of(g)) {
      Subgroup a = sylow_subgroup(g, p), b = sylow_subgroup(g2, p);
      bool found = false;
      for (Index x = 0; x < amb->size() && !found; ++x)
        found = conjugate(a, x) == b;
      EXPECT_TRUE(found) << name << " p=" << p;
    }
  }
}

TEST(MaximalOfPGroup, Examples) {
  auto c5 = bridge::make("C5");
  auto m = maximal_subgroups_of_p_group(c5.G, 5);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_TRUE(m[0].is_trivial());

  auto d8 = bridge::make("D8");
  auto md = maximal_subgroups_of_p_group(d8.G, 2);
  EXPECT_EQ(md.size(), 3u);
  for (const auto &x : md)
    EXPECT_EQ(x.order(), 4u);

  EXPECT_EQ(maximal_subgroups_of_p_group(bridge::make("C2^3").G, 2).size(), 7u);
  EXPECT_EQ(maximal_subgroups_of_p_group(bridge::make("C3^3").G, 3).size(), 13u);
  EXPECT_THROW(maximal_subgroups_of_p_group(bridge::make("S3").G, 2), Error);
}

TEST(MaximalOfPGroup, MatchesLatticeOracle) {
  for (const auto &name : small_names()) {
    auto b = bridge::make(name);
    for (auto p : pi_of(b.G)) {
      Subgroup s = sylow_subgroup(b.G, p);
      auto os = b.to_oracle(s);
      std::set<oracle::Sub> want;
      auto subs = b.t.subgroups(os);
      for (const auto &x : subs)
        if (x.size() * p == os.size())
          want.insert(x);
      std::set<oracle::Sub> got;
      for (const auto &x : maximal_subgroups_of_p_group(s, p))
        got.insert(b.to_oracle(x));
      EXPECT_EQ(got, want) << name << " p=" << p;
    }
  }
}

TEST(Frattini, Examples) {
  EXPECT_TRUE(frattini_of_p_group(bridge::make("C2^3").G, 2).is_trivial());
  auto d8 = bridge::make("D8");
  EXPECT_EQ(frattini_of_p_group(d8.G, 2), center(d8.G));
  EXPECT_EQ(frattini_of_p_group(bridge::make("C4").G, 2).order(), 2u);
}

TEST(Frattini, EqualsIntersectionOfMaximals) {
  for (const auto &e : builtin_corpus()) {
    auto amb = elements(build_group(e));
    Subgroup g = whole_group(amb);
    for (auto p : pi_of(g)) {
      Subgroup s = sylow_subgroup(g, p);
      Subgroup meet = s;
      for (const auto &m : maximal_subgroups_of_p_group(s, p))
        meet = intersection(meet, m);
      EXPECT_EQ(frattini_of_p_group(s, p), meet) << e.name << " p=" << p;
    }
  }
}

TEST(OpSubgroups, Examples) {
  EXPECT_TRUE(o_p(bridge::make("A5").G, 2).is_trivial());
  auto s4 = bridge::make("S4");
  EXPECT_EQ(o_p(s4.G, 2).order(), 4u);
  EXPECT_TRUE(o_p_prime(s4.G, 2).is_trivial());
  auto s3 = bridge::make("S3");
  EXPECT_EQ(o_p_prime(s3.G, 2), cyc(s3.G, "(1 2 3)"));
}

TEST(OpSubgroups, PPrimeContainsAllNormalPPrime) {
  for (const auto &e : builtin_corpus()) {
    auto amb = elements(build_group(e));
    Subgroup g = whole_group(amb);
    auto normals = all_normal_subgroups(g);
    for (auto p : pi_of(g)) {
      Subgroup o = o_p_prime(g, p);
      EXPECT_NE(o.order() % p, 0u);
      EXPECT_TRUE(is_normal(g, o));
      for (const auto &n : normals)
        if (n.order() % p) {
          EXPECT_TRUE(n.subset_of(o)) << e.name;
        }
    }
  }
}

TEST(Fitting, Examples) {
  auto q8 = bridge::make("Q8");
  EXPECT_EQ(fitting_subgroup(q8.G), q8.G);
  EXPECT_EQ(fitting_subgroup(bridge::make("S4").G).order(), 4u);
  EXPECT_TRUE(fitting_subgroup(bridge::make("A5").G).is_trivial());
}

TEST(NormalSubgroups, Examples) {
  for (const char *simple : {"A5", "PSL27", "C7", "A6"}) {
    auto b = bridge::make(simple);
    auto ns = all_normal_subgroups(b.G);
    ASSERT_EQ(ns.size(), 2u) << simple;
    EXPECT_TRUE(ns[0].is_trivial());
    EXPECT_EQ(ns[1], b.G);
  }
  auto s4 = bridge::make("S4");
  auto ns = all_normal_subgroups(s4.G);
  std::vector<std::uint64_t> orders;
  for (const auto &n : ns)
    orders.push_back(n.order());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{1, 4, 12, 24}));
  EXPECT_EQ(all_normal_subgroups(bridge::make("C2^2").G).size(), 5u);
}

TEST(NormalSubgroups, MatchOracleScan) {
  for (const auto &name : small_names()) {
    auto b = bridge::make(name);
    std::set<oracle::Sub> got;
    for (const auto &n : all_normal_subgroups(b.G))
      got.insert(b.to_oracle(n));
    std::set<oracle::Sub> want;
    for (const auto &s : b.t.subgroups(b.t.all()))
      if (b.t.normal_in(s, b.t.all()))
        want.insert(s);
    EXPECT_EQ(got, want) << name;
  }
}

TEST(PrimeDivisors, Examples) {
  EXPECT_TRUE(pi_of(bridge::make("C1").G).empty());
  EXPECT_EQ(pi_of(bridge::make("A5").G).primes(), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(pi_of(bridge::make("PSL27").G).primes(), (std::vector<std::uint64_t>{2, 3, 7}));
  EXPECT_TRUE(is_pi_number(1, PrimeSet{}));
  EXPECT_FALSE(is_pi_number(21, PrimeSet{2}));
  EXPECT_TRUE(is_pi_number(12, PrimeSet{2, 3}));
}

TEST(Invariants, LagrangeAndNormalizerStabilizer) {
  std::mt19937_64 rng(17);
  for (const auto &name : small_names()) {
    auto b = bridge::make(name);
    auto subs = b.t.subgroups(b.t.all());
    for (std::size_t k = 0; k < subs.size(); k += 1 + subs.size() / 8) {
      Subgroup h = b.to_lib(subs[k]);
      Subgroup n = normalizer(b.G, h);
      Subgroup c = centralizer(b.G, h);
      for (const auto *x : {&n, &c})
        EXPECT_EQ(b.G.order() % x->order(), 0u);
      EXPECT_TRUE(h.subset_of(n));
      EXPECT_TRUE(c.subset_of(n));
      for (int r = 0; r < 50; ++r) {
        Index g = static_cast<Index>(rng() % b.amb->size());
        EXPECT_EQ(conjugate(h, g) == h, n.contains(g)) << name;
      }
      EXPECT_EQ(b.to_oracle(derived_subgroup(h)), b.t.derived(subs[k])) << name;
      EXPECT_EQ(b.to_oracle(c), b.t.centralizer(b.t.all(), subs[k])) << name;
    }
  }
}

TEST(Errors, OutsideAndNonPGroup) {
  auto a = bridge::make("S3"), b = bridge::make("S4");
  EXPECT_THROW(normalizer(a.G, b.G), Error);
  EXPECT_THROW(frattini_of_p_group(a.G, 3), Error);
  EXPECT_THROW(subgroup_from_perms(a.amb, {parse_permutation("(1 2)", 4)}), Error);
}
