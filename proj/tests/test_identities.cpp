#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace osborn;

TEST(Identities, RegistryNamesRoundTrip) {
  EXPECT_EQ(all_identities().size(), kIdentityCount);
  for (const auto& inf : all_identities()) {
    EXPECT_EQ(identity_from_name(inf.name), inf.id);
    EXPECT_GE(inf.arity, 1);
    EXPECT_LE(inf.arity, 3);
    EXPECT_FALSE(inf.equation.empty());
  }
  EXPECT_THROW(identity_from_name("BOL"), UnknownIdentity);
}

TEST(Identities, GroupsSatisfyTheAssociativeLattice) {
  for (const auto& g : bundled_groups()) {
    for (IdentityId id : {IdentityId::OS1, IdentityId::OS2, IdentityId::OS3, IdentityId::OS2P, IdentityId::OS3P,
                          IdentityId::WIP, IdentityId::LIP, IdentityId::RIP, IdentityId::AAIP, IdentityId::FLEX,
                          IdentityId::LAP, IdentityId::RAP, IdentityId::MOUFANG, IdentityId::CC_LEFT,
                          IdentityId::CC_RIGHT, IdentityId::PAPL3, IdentityId::LSIP, IdentityId::RSIP,
                          IdentityId::ASSOC}) {
      EXPECT_TRUE(holds(g.loop, id)) << g.name << " " << name(id);
    }
  }
}

TEST(Identities, SpotChecks) {
  EXPECT_TRUE(holds(support::z(4), IdentityId::OS2));
  EXPECT_TRUE(holds(support::z(4), IdentityId::COMM));
  const CheckResult r = check_identity(support::s3(), IdentityId::COMM);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_FALSE(evaluate(support::s3(), IdentityId::COMM, r.witness[0], r.witness[1]));
  EXPECT_TRUE(holds(klein_group(), IdentityId::EXP2));
  const CheckResult z3 = check_identity(support::z(3), IdentityId::EXP2);
  ASSERT_FALSE(z3.holds);
  EXPECT_EQ(z3.witness, (std::vector<Element>{1}));
  // CIP in a group is commutativity.
  EXPECT_FALSE(holds(support::s3(), IdentityId::CIP));
  EXPECT_TRUE(holds(support::z(26), IdentityId::CIP));
}

TEST(Identities, FirstNonOsbornOrder5LoopHasTripleWitness) {
  const LoopTable l = support::non_osborn5();
  const CheckResult r = check_identity(l, IdentityId::OS2);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 3u);
  // Independent recomputation of x(yz.x) = (x^l \ y).zx at the witness.
  const Element x = r.witness[0], y = r.witness[1], z = r.witness[2];
  const Element xl = l.rdiv(0, x);
  EXPECT_NE(l.mul(x, l.mul(l.mul(y, z), x)), l.mul(l.ldiv(xl, y), l.mul(z, x)));
  EXPECT_LE(r.checked, 125u);
}

TEST(Identities, WitnessesAreFirstAndSound) {
  for (const auto& l : support::loops_upto(5)) {
    for (const auto& inf : all_identities()) {
      const CheckResult r = check_identity(l, inf.id);
      if (r.holds) continue;
      ASSERT_EQ(r.witness.size(), static_cast<std::size_t>(inf.arity));
      const Element y = inf.arity >= 2 ? r.witness[1] : 0;
      const Element z = inf.arity >= 3 ? r.witness[2] : 0;
      EXPECT_FALSE(evaluate(l, inf.id, r.witness[0], y, z));
      // Every tuple scanned earlier holds.
      const std::size_t n = l.order();
      const std::size_t ny = inf.arity >= 2 ? n : 1, nz = inf.arity >= 3 ? n : 1;
      std::uint64_t k = 0;
      for (std::size_t a = 0; a < n && k + 1 < r.checked; ++a)
        for (std::size_t b = 0; b < ny && k + 1 < r.checked; ++b)
          for (std::size_t c = 0; c < nz && k + 1 < r.checked; ++c, ++k)
            ASSERT_TRUE(evaluate(l, inf.id, static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c)));
    }
  }
}

TEST(Identities, MoufangAgainstDirectFormula) {
  for (const auto& l : support::all_loops(6)) {
    bool direct = true;
    for (Element x = 0; x < 6 && direct; ++x)
      for (Element y = 0; y < 6 && direct; ++y)
        for (Element z = 0; z < 6 && direct; ++z)
          direct = l.mul(l.mul(x, y), l.mul(z, x)) == l.mul(l.mul(x, l.mul(y, z)), x);
    ASSERT_EQ(direct, holds(l, IdentityId::MOUFANG));
  }
}

// Partial evaluation never contradicts the full table: erase cells of a
// complete table, and whatever is decided must match the full verdict.
TEST(Identities, PartialEvaluationIsSound) {
  std::mt19937 rng(11);
  const auto& loops = support::all_loops(5);
  for (int trial = 0; trial < 300; ++trial) {
    const LoopTable& l = loops[rng() % loops.size()];
    const std::size_t n = l.order();
    std::vector<Element> cells(l.cells()), rowpos(n * n, kUndefined), colpos(n * n, kUndefined);
    for (std::size_t i = n; i < n * n; ++i)
      if (i % n != 0 && rng() % 2) cells[i] = kUndefined;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Element v = cells[a * n + b];
        if (v == kUndefined) continue;
        rowpos[a * n + v] = static_cast<Element>(b);
        colpos[b * n + v] = static_cast<Element>(a);
      }
    const PartialOps p{n, cells.data(), rowpos.data(), colpos.data()};
    const FullOps f{&l};
    for (const auto& inf : all_identities()) {
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z) {
            const Tri t = inf.partial(p, x, y, z);
            if (t != Tri::unknown) ASSERT_EQ(t, inf.full(f, x, y, z)) << inf.name;
          }
    }
  }
}
