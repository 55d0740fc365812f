#include <gtest/gtest.h>

#include "support.hpp"

using namespace osborn;

TEST(Mappings, AutotopismExamples) {
  const LoopTable z5 = support::z(5);
  const Permutation id = Permutation::identity(5);
  EXPECT_TRUE(is_autotopism(z5, id, id, id).holds);
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b)
      EXPECT_TRUE(is_autotopism(z5, left_translation(z5, a), left_translation(z5, b),
                                left_translation(z5, z5.mul(a, b)))
                      .holds);
  const LoopTable bad = support::non_osborn5();
  bool some_fail = false;
  for (Element x = 0; x < 5; ++x) {
    const auto t = osborn_autotopism(bad, x);
    some_fail = some_fail || !is_autotopism(bad, t.a, t.b, t.c).holds;
  }
  EXPECT_TRUE(some_fail);
  EXPECT_THROW(Autotopism(bad, left_translation(bad, 1), id, id), Error);
}

TEST(Mappings, InnerMapsOnGroups) {
  const LoopTable z6 = support::z(6);
  for (Element x = 0; x < 6; ++x) {
    EXPECT_TRUE(t_map(z6, x).is_identity());
    for (Element y = 0; y < 6; ++y) {
      EXPECT_TRUE(r_inner(z6, x, y).is_identity());
      EXPECT_TRUE(l_inner(z6, x, y).is_identity());
    }
  }
  // In S3, T_(x) is conjugation z -> x^-1 z x.
  const LoopTable s3 = support::s3();
  for (Element x = 0; x < 6; ++x)
    for (Element z = 0; z < 6; ++z) EXPECT_EQ(t_map(s3, x)(z), s3.mul(s3.mul(s3.rho(x), z), x));
}

TEST(Mappings, TMapFactorsOnOsbornLoops) {
  for (const auto& l : support::osborn_upto(6))
    for (Element x = 0; x < l.order(); ++x)
      EXPECT_EQ(t_map(l, x), left_translation(l, l.lam(x)) * right_translation(l, x));
}

TEST(Mappings, MultiplicationGroups) {
  for (std::size_t n : {2u, 5u, 7u}) {
    const LoopTable zn = support::z(n);
    EXPECT_EQ(mult_group(zn).order(), n);
    EXPECT_EQ(inner_group(zn, InnerFlavor::all).order(), 1u);
  }
  const LoopTable l = support::first_nonassoc5();
  const PermGroup m = mult_group(l);
  EXPECT_EQ(m.stabilizer(0).order() * 5, m.order());
  EXPECT_EQ(inner_group(l, InnerFlavor::all).order() * 5, m.order());
}

TEST(Mappings, InnerGroupIsStabilizerOfIdentity) {
  for (const auto& l : support::all_loops(5)) {
    const PermGroup all = inner_group(l, InnerFlavor::all);
    for (const auto& p : all.elements()) EXPECT_EQ(p(0), 0);
    for (InnerFlavor f : {InnerFlavor::rho, InnerFlavor::lambda, InnerFlavor::mu}) {
      const PermGroup g = inner_group(l, f);
      for (const auto& p : g.generators()) EXPECT_TRUE(all.contains(p));
    }
  }
}

TEST(Mappings, MoufangTwelveGroupOrders) {
  // Frozen after an independent closure run.
  const LoopTable m = moufang_loop_12();
  EXPECT_EQ(mult_group(m).order(), 2592u);
  EXPECT_EQ(inner_group(m, InnerFlavor::all).order(), 216u);
  EXPECT_EQ(inner_group(m, InnerFlavor::rho).order(), 54u);
  EXPECT_TRUE(inner_group(m, InnerFlavor::rho).same_elements(inner_group(m, InnerFlavor::lambda)));
}

TEST(Mappings, InnerRhoEqualsInnerLambdaOnOsbornLoops) {
  for (const auto& l : support::osborn_upto(6))
    EXPECT_TRUE(inner_group(l, InnerFlavor::rho).same_elements(inner_group(l, InnerFlavor::lambda)));
}

TEST(Mappings, PseudoAutomorphisms) {
  EXPECT_NE(kPseudoAutConvention.find("(c.xT).yT = c.((xy)T)"), std::string_view::npos);
  const LoopTable q8 = quaternion_group();
  for (Element x = 0; x < 8; ++x) {
    const Permutation conj = t_map(q8, x);
    ASSERT_TRUE(is_automorphism(q8, conj).holds);
    EXPECT_TRUE(is_left_pseudo_aut(q8, conj, 0).holds);
    EXPECT_TRUE(is_right_pseudo_aut(q8, conj, 0).holds);
  }
  // T_(x) in the Moufang loop of order 12 is a right pseudo-automorphism with
  // companion x^l (x^l x^l).
  const LoopTable m = moufang_loop_12();
  for (Element x = 0; x < 12; ++x) {
    const Element xl = m.lam(x);
    EXPECT_TRUE(is_right_pseudo_aut(m, t_map(m, x), m.mul(xl, m.mul(xl, xl))).holds);
  }
  for (const auto& l : support::osborn_upto(5))
    for (Element x = 0; x < l.order(); ++x)
      for (Element y = 0; y < l.order(); ++y) {
        const Element c = l.mul(l.lam(l.mul(x, y)), l.ldiv(l.lam(y), x));
        EXPECT_EQ(r_inner_companion(l, x, y), c);
        EXPECT_TRUE(is_right_pseudo_aut(l, r_inner(l, x, y), c).holds);
      }
  EXPECT_THROW(is_left_pseudo_aut(q8, Permutation::identity(3), 0), DegreeMismatch);
}

TEST(Mappings, FindCompanion) {
  const LoopTable m = moufang_loop_12();
  for (const auto& lc : left_inner_companions(m)) EXPECT_TRUE(lc.companion.has_value());
  const auto w = find_companion(m, Permutation::identity(12), PseudoSide::left);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->companion, 0);
}

TEST(Mappings, VdLoops) {
  for (const auto& g : bundled_groups()) EXPECT_TRUE(is_vd_loop(g.loop).holds) << g.name;
  EXPECT_FALSE(is_vd_loop(support::non_osborn5()).holds);
  for (const auto& l : support::loops_upto(6))
    if (is_vd_loop(l).holds) EXPECT_TRUE(is_osborn(l).holds);
}

TEST(Mappings, InnerMapPseudoAutomorphismBattery) {
  for (const auto& g : bundled_groups()) EXPECT_TRUE(theorem_1_1_battery(g.loop).holds) << g.name;
  EXPECT_TRUE(theorem_1_1_battery(moufang_loop_12()).holds);
  for (const auto& l : support::osborn_upto(6)) EXPECT_TRUE(theorem_1_1_battery(l).holds);
  EXPECT_THROW(theorem_1_1_battery(support::non_osborn5()), NotOsborn);
}

TEST(Mappings, CommutatorConvention) {
  const LoopTable s3 = support::s3();
  const Permutation a = left_translation(s3, 1), b = right_translation(s3, 3);
  EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
}
