#include <gtest/gtest.h>

#include "support.hpp"

using namespace osborn;

TEST(Properties, OsbornMethodsAgreeUpToOrder5) {
  for (const auto& l : support::loops_upto(5)) {
    const bool ref = is_osborn(l, OsbornMethod::OS2).holds;
    for (OsbornMethod m : kOsbornMethods) EXPECT_EQ(is_osborn(l, m).holds, ref) << method_name(m);
  }
}

TEST(Properties, OsbornOnKnownLoops) {
  for (const auto& g : bundled_groups())
    for (OsbornMethod m : kOsbornMethods) EXPECT_TRUE(is_osborn(g.loop, m).holds) << g.name;
  const LoopTable m12 = moufang_loop_12();
  EXPECT_TRUE(holds(m12, IdentityId::MOUFANG));
  EXPECT_FALSE(holds(m12, IdentityId::ASSOC));
  for (OsbornMethod m : kOsbornMethods) EXPECT_TRUE(is_osborn(m12, m).holds);
}

TEST(Properties, AutotopismWitnessViolatesTheAutotopismLaw) {
  const LoopTable l = support::non_osborn5();
  const CheckResult r = is_osborn(l, OsbornMethod::AUTOTOPISM);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 3u);
  const auto t = osborn_autotopism(l, r.witness[0]);
  const Element y = r.witness[1], z = r.witness[2];
  EXPECT_NE(l.mul(t.a(y), t.b(z)), t.c(l.mul(y, z)));
}

TEST(Properties, NucleiAndCenter) {
  const LoopTable s3 = support::s3();
  const Nuclei ns = nuclei(s3);
  EXPECT_EQ(ns.nucleus.size(), 6u);
  EXPECT_EQ(ns.left.size(), 6u);
  EXPECT_EQ(centrum(s3), (ElementSet{0}));
  EXPECT_EQ(center(s3), (ElementSet{0}));
  const LoopTable z5 = support::z(5);
  EXPECT_EQ(nuclei(z5).nucleus.size(), 5u);
  EXPECT_EQ(center(z5).size(), 5u);
  const LoopTable q8 = quaternion_group();
  EXPECT_EQ(center(q8).size(), 2u);
  const Nuclei na = nuclei(support::first_nonassoc5());
  EXPECT_LT(na.nucleus.size(), 5u);
  EXPECT_TRUE(contains(na.nucleus, 0));
}

TEST(Properties, NucleiMatchDefinitions) {
  for (const auto& l : support::loops_upto(5)) {
    const std::size_t n = l.order();
    const Nuclei ns = nuclei(l);
    for (Element a = 0; a < n; ++a) {
      bool left = true, mid = true, right = true;
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          left = left && l.mul(l.mul(a, x), y) == l.mul(a, l.mul(x, y));
          mid = mid && l.mul(x, l.mul(a, y)) == l.mul(l.mul(x, a), y);
          right = right && l.mul(x, l.mul(y, a)) == l.mul(l.mul(x, y), a);
        }
      EXPECT_EQ(contains(ns.left, a), left);
      EXPECT_EQ(contains(ns.middle, a), mid);
      EXPECT_EQ(contains(ns.right, a), right);
      EXPECT_EQ(contains(ns.nucleus, a), left && mid && right);
    }
  }
}

TEST(Properties, LocalSets) {
  const LoopTable g = support::s3();
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) EXPECT_EQ(local_sets(g, x, y).n_lambda.size(), 6u);
  bool proper = false;
  for (const auto& l : support::all_loops(5))
    for (Element x = 0; x < 5; ++x)
      for (Element y = 0; y < 5; ++y) {
        const LocalSets s = local_sets(l, x, y);
        EXPECT_TRUE(contains(s.n_lambda, 0));
        EXPECT_TRUE(contains(s.n_rho, 0));
        proper = proper || s.n_lambda.size() < 5;
      }
  EXPECT_TRUE(proper);
}

TEST(Properties, PowerAssociativity) {
  for (const auto& l : support::loops_upto(4)) EXPECT_TRUE(is_power_associative(l).holds);
  for (const auto& g : bundled_groups()) EXPECT_TRUE(is_power_associative(g.loop).holds) << g.name;
  bool some_fail = false;
  for (const auto& l : support::all_loops(5)) {
    const CheckResult r = is_power_associative(l);
    if (r.holds) continue;
    some_fail = true;
    ASSERT_EQ(r.witness.size(), 1u);
  }
  EXPECT_TRUE(some_fail);
}

TEST(Properties, ExponentTwo) {
  EXPECT_TRUE(is_exponent_two(klein_group()).holds);
  EXPECT_TRUE(is_exponent_two(direct_product(klein_group(), support::z(2))).holds);
  const CheckResult r = is_exponent_two(support::z(3));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (std::vector<Element>{1}));
}

TEST(Properties, UniversalWip) {
  for (const auto& g : {support::z(4), support::s3(), klein_group()}) EXPECT_TRUE(is_universal_wip(g).holds);
  // A WIP loop that is not Osborn loses WIP in some isotope.
  bool found = false;
  for (const auto& l : support::all_loops(5)) {
    if (!holds(l, IdentityId::WIP) || is_osborn(l).holds) continue;
    const CheckResult r = is_universal_wip(l);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.isotope.has_value());
    EXPECT_FALSE(holds(principal_isotope(l, r.isotope->first, r.isotope->second), IdentityId::WIP));
    found = true;
  }
  EXPECT_TRUE(found);
}

// Implications among the lattice, as property checks over order <= 6.
TEST(Properties, LatticeImplications) {
  for (const auto& l : support::loops_upto(6)) {
    const PropertyReport p = property_report(l);
    EXPECT_EQ(p.is_cc, p.results.at(IdentityId::CC_LEFT).holds && p.results.at(IdentityId::CC_RIGHT).holds);
    if (p.is_group) {
      EXPECT_TRUE(p.is_osborn);
      EXPECT_TRUE(p.is_moufang);
    }
    if (p.is_moufang) EXPECT_TRUE(p.is_osborn);
    if (p.is_osborn && p.is_group) EXPECT_TRUE(p.is_universal_wip);
  }
}

TEST(Properties, Order6Counts) {
  // Frozen after cross-checking against the post-filtered full catalog.
  std::size_t osb = 0, mou = 0, grp = 0, cc = 0;
  for (const auto& l : support::all_loops(6)) {
    osb += is_osborn(l).holds;
    mou += holds(l, IdentityId::MOUFANG);
    grp += holds(l, IdentityId::ASSOC);
    cc += is_cc_loop(l);
  }
  EXPECT_EQ(osb, 120u);
  EXPECT_EQ(mou, 80u);
  EXPECT_EQ(grp, 80u);
  EXPECT_EQ(cc, 120u);
}
