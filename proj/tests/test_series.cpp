#include <random>

#include <gtest/gtest.h>

#include <ppi/ppi.hpp>

#include "bridge.hpp"

using namespace ppi;

TEST(Quotient, ByTrivialIsRegular) {
  auto b = bridge::make("S3");
  QuotientMap q(b.G, trivial_subgroup(b.amb));
  EXPECT_EQ(q.index(), 6u);
  EXPECT_EQ(q.image().order(), 6u);
  EXPECT_EQ(q.image_ambient()->degree(), 6u);
}

TEST(Quotient, S4ByV4IsS3) {
  auto b = bridge::make("S4");
  Subgroup v = o_p(b.G, 2);
  QuotientMap q(b.G, v);
  Subgroup img = q.image();
  EXPECT_EQ(img.order(), 6u);
  EXPECT_FALSE(center(img) == img);
  EXPECT_FALSE(is_supersoluble(b.G));
  EXPECT_TRUE(is_supersoluble(img));
}

TEST(Quotient, ByWholeIsTrivial) {
  auto b = bridge::make("A5");
  EXPECT_EQ(QuotientMap(b.G, b.G).image().order(), 1u);
}

TEST(Quotient, Errors) {
  auto b = bridge::make("S4");
  Subgroup s3 = subgroup_from_perms(b.amb, {parse_permutation("(1 2 3)", 4), parse_permutation("(1 2)", 4)});
  try {
    QuotientMap(b.G, s3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotNormal);
  }
}

TEST(Quotient, HomomorphismFaithfulnessRoundTrip) {
  std::mt19937_64 rng(23);
  for (const auto &e : builtin_corpus()) {
    if (*e.expected_order > 400)
      continue;
    auto amb = elements(build_group(e));
    Subgroup g = whole_group(amb);
    for (const auto &n : all_normal_subgroups(g)) {
      QuotientMap q(g, n);
      const Ambient &im = *q.image_ambient();
      EXPECT_EQ(q.image().order() * n.order(), g.order()) << e.name;
      for (int k = 0; k < 100; ++k) {
        Index a = static_cast<Index>(rng() % amb->size()), c = static_cast<Index>(rng() % amb->size());
        EXPECT_EQ(q.map(amb->mul(a, c)), im.mul(q.map(a), q.map(c)));
      }
      // kernel of the action is exactly N
      for (Index x = 0; x < amb->size(); ++x)
        EXPECT_EQ(q.map(x) == Ambient::identity(), n.contains(x));
      // canonical coset representatives are the least member
      for (Index x = 0; x < amb->size(); ++x) {
        Index r = q.coset_rep(x);
        EXPECT_LE(r, x);
        EXPECT_EQ(q.map(r), q.map(x));
      }
      // X ⊇ N round-trips
      for (const auto &x : all_normal_subgroups(g))
        if (n.subset_of(x)) {
          EXPECT_EQ(q.preimage_of(q.image_of(x)), x) << e.name;
        }
      for (auto p : pi_of(g)) {
        Subgroup x = join(g, sylow_subgroup(g, p), n);
        EXPECT_EQ(q.preimage_of(q.image_of(x)), x);
      }
    }
  }
}

TEST(MinimalNormal, Examples) {
  for (const char *simple : {"A5", "PSL27"}) {
    auto b = bridge::make(simple);
    auto m = minimal_normal_overgroups(b.G, trivial_subgroup(b.amb));
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0], b.G);
  }
  auto s4 = bridge::make("S4");
  auto m = minimal_normal_overgroups(s4.G, trivial_subgroup(s4.amb));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].order(), 4u);
  auto v = bridge::make("C2^2");
  auto mv = minimal_normal_overgroups(v.G, trivial_subgroup(v.amb));
  EXPECT_EQ(mv.size(), 3u);
  for (const auto &x : mv)
    EXPECT_EQ(x.order(), 2u);
}

TEST(MinimalNormal, RejectsNonNormalBase) {
  auto b = bridge::make("S3");
  Subgroup t = subgroup_from_perms(b.amb, {parse_permutation("(1 2)", 3)});
  EXPECT_THROW(minimal_normal_overgroups(b.G, t), Error);
}

TEST(MinimalNormal, MatchOracle) {
  for (const auto &e : builtin_corpus()) {
    if (*e.expected_order > 200)
      continue;
    auto b = bridge::make(e);
    auto normals = b.t.normal_subgroups(b.t.all());
    for (const auto &n : all_normal_subgroups(b.G)) {
      std::set<oracle::Sub> got, want;
      for (const auto &m : minimal_normal_overgroups(b.G, n))
        got.insert(b.to_oracle(m));
      for (const auto &m : b.t.minimal_over(b.t.all(), b.to_oracle(n), normals))
        want.insert(m);
      EXPECT_EQ(got, want) << e.name;
    }
  }
}

TEST(ChiefSeries, Examples) {
  auto a5 = bridge::make("A5");
  EXPECT_EQ(count_chief_series(a5.G, 100), 1u);
  EXPECT_EQ(first_chief_series(a5.G).orders(), (std::vector<std::uint64_t>{1, 60}));

  auto s4 = bridge::make("S4");
  EXPECT_EQ(count_chief_series(s4.G, 100), 1u);
  EXPECT_EQ(first_chief_series(s4.G).orders(), (std::vector<std::uint64_t>{1, 4, 12, 24}));
  EXPECT_EQ(first_chief_series(s4.G).describe(), "1 < 4 < 12 < 24");

  EXPECT_EQ(count_chief_series(bridge::make("C2^2").G, 100), 3u);
}

TEST(ChiefSeries, FactorOrders) {
  EXPECT_EQ(jordan_holder_factor_orders(first_chief_series(bridge::make("A5").G)),
            (std::vector<std::uint64_t>{60}));
  EXPECT_EQ(jordan_holder_factor_orders(first_chief_series(bridge::make("S4").G)),
            (std::vector<std::uint64_t>{2, 3, 4}));
}

TEST(ChiefSeries, CountMatchesOracleAndStepsCertified) {
  for (const auto &e : builtin_corpus()) {
    if (*e.expected_order > 200)
      continue;
    auto b = bridge::make(e);
    auto want = b.t.chief_series(b.t.all(), 501);
    if (want.size() > 500)
      continue;
    std::set<std::vector<oracle::Sub>> want_set(want.begin(), want.end());
    std::set<std::vector<oracle::Sub>> got_set;
    auto it = chief_series_iter(b.G);
    while (auto s = it.next()) {
      std::vector<oracle::Sub> terms{b.to_oracle(trivial_subgroup(b.amb))};
      if (!s->steps.empty()) {
        ASSERT_TRUE(s->steps.front().lower.is_trivial());
        ASSERT_EQ(s->steps.back().upper, b.G);
      }
      for (std::size_t k = 0; k < s->steps.size(); ++k) {
        const auto &st = s->steps[k];
        if (k) {
          EXPECT_EQ(s->steps[k - 1].upper, st.lower);
        }
        auto m = minimal_normal_overgroups(b.G, st.lower);
        EXPECT_NE(std::find(m.begin(), m.end(), st.upper), m.end());
        terms.push_back(b.to_oracle(st.upper));
      }
      got_set.insert(terms);
    }
    EXPECT_EQ(got_set, want_set) << e.name;
  }
}

TEST(ChiefSeries, JordanHolderAcrossAllSeries) {
  for (const auto &e : builtin_corpus()) {
    auto amb = elements(build_group(e));
    Subgroup g = whole_group(amb);
    if (count_chief_series(g, 201) > 200)
      continue;
    auto ref = jordan_holder_factor_orders(first_chief_series(g));
    auto it = chief_series_iter(g);
    while (auto s = it.next())
      EXPECT_EQ(jordan_holder_factor_orders(*s), ref) << e.name;
  }
}
