#include <gtest/gtest.h>

#include "support.hpp"

using namespace osborn;

TEST(Cycles, CyclicGroupOfOrderFive) {
  const CycleDecomposition d = rho_cycles(support::z(5));
  EXPECT_EQ(d.orbits, (std::vector<std::vector<Element>>{{0}, {1, 4}, {2, 3}}));
  EXPECT_EQ(d.lengths, (std::vector<std::size_t>{1, 2, 2}));
  EXPECT_EQ(d.longest(), 2u);
}

TEST(Cycles, OrbitsFollowRho) {
  for (const auto& l : support::loops_upto(6)) {
    const CycleDecomposition d = rho_cycles(l);
    std::size_t sum = 0;
    for (std::size_t len : d.lengths) sum += len;
    EXPECT_EQ(sum, l.order());
    EXPECT_EQ(d.lengths, j_map(l, Side::rho).cycle_type());
    for (const auto& o : d.orbits) {
      for (std::size_t i = 0; i < o.size(); ++i) EXPECT_EQ(l.rho(o[i]), o[(i + 1) % o.size()]);
      EXPECT_EQ(o.front(), *std::min_element(o.begin(), o.end()));
    }
  }
}

TEST(Cycles, ShortCyclesIffJSquaredIsIdentity) {
  for (const auto& l : support::loops_upto(6)) {
    const Permutation j = j_map(l, Side::rho);
    EXPECT_EQ(rho_cycles(l).longest() <= 2, (j * j).is_identity());
  }
}

TEST(Cycles, GroupsHaveShortCycles) {
  std::vector<LoopTable> zs;
  for (std::size_t n = 2; n <= 8; ++n) zs.push_back(support::z(n));
  for (const auto& e : cycle_census(zs)) EXPECT_LE(e.length, 2u);
  for (const auto& g : bundled_groups()) EXPECT_LE(rho_cycles(g.loop).longest(), 2u) << g.name;
}

TEST(Cycles, OrderFiveCensus) {
  // Frozen after recounting with j_map(rho).cycle_type() over the order-5 catalog.
  const std::vector<CensusEntry> expect{{5, 1, 88}, {5, 2, 12}, {5, 3, 24}, {5, 4, 24}};
  EXPECT_EQ(cycle_census(support::all_loops(5)), expect);
}

TEST(Cycles, EmptyCatalog) { EXPECT_TRUE(cycle_census(std::vector<LoopTable>{}).empty()); }

TEST(Cycles, NonLsipOsbornLoopHasLongCycle) {
  const LoopTable cc6 = as_loop(read_table_file(support::data_path("cc6.tbl")));
  ASSERT_TRUE(is_osborn(cc6).holds);
  ASSERT_FALSE(holds(cc6, IdentityId::LSIP));
  EXPECT_EQ(rho_cycles(cc6).longest(), 3u);
  for (const auto& l : support::osborn_upto(6))
    if (!holds(l, IdentityId::LSIP)) EXPECT_GT(rho_cycles(l).longest(), 2u);
}
