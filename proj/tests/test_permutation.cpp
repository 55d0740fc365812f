#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "osborn/perm_group.hpp"
#include "osborn/permutation.hpp"

using namespace osborn;

namespace {

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<Element> img(n);
  std::iota(img.begin(), img.end(), Element{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
  EXPECT_THROW(Permutation({0, 3}), Error);
}

TEST(Permutation, CompositionIsPostfix) {
  const Permutation a({1, 2, 0});  // 0->1->2->0
  const Permutation b({1, 0, 2});  // swap 0 1
  const Permutation ab = a * b;
  for (Element x = 0; x < 3; ++x) EXPECT_EQ(ab(x), b(a(x)));
  EXPECT_EQ(ab(0), 0);
  EXPECT_THROW(a * Permutation::identity(4), DegreeMismatch);
}

TEST(Permutation, CyclesStartAtLeastPoint) {
  const Permutation p({3, 0, 4, 1, 2, 5});
  const auto c = p.cycles();
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (std::vector<Element>{0, 3, 1}));
  EXPECT_EQ(c[1], (std::vector<Element>{2, 4}));
  EXPECT_EQ(c[2], (std::vector<Element>{5}));
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(p.order(), 6u);
}

TEST(Permutation, GroupLawsOnS4) {
  const auto s4 = all_perms(4);
  const Permutation id = Permutation::identity(4);
  for (const auto& a : s4) {
    EXPECT_EQ(a * a.inverse(), id);
    EXPECT_EQ(a.inverse() * a, id);
    EXPECT_TRUE(a.pow(static_cast<long long>(a.order())).is_identity());
    EXPECT_EQ(a.pow(-1), a.inverse());
    std::size_t sum = 0;
    for (std::size_t len : a.cycle_type()) sum += len;
    EXPECT_EQ(sum, 4u);
    for (const auto& b : s4) {
      EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
      if (a * b == b * a) EXPECT_TRUE(commutator(a, b).is_identity());
    }
  }
}

TEST(Permutation, AssociativeOnRandomTriples) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> img(7);
    std::iota(img.begin(), img.end(), Element{0});
    std::vector<Permutation> p;
    for (int k = 0; k < 3; ++k) {
      std::shuffle(img.begin(), img.end(), rng);
      p.emplace_back(img);
    }
    EXPECT_EQ((p[0] * p[1]) * p[2], p[0] * (p[1] * p[2]));
  }
}

TEST(PermGroup, ClosureOfS4Generators) {
  const PermGroup g = PermGroup::generate(4, {Permutation({1, 2, 3, 0}), Permutation({1, 0, 2, 3})});
  EXPECT_EQ(g.order(), 24u);
  EXPECT_TRUE(g.is_closed());
  EXPECT_EQ(g.stabilizer(0).order(), 6u);
  EXPECT_TRUE(g.contains(Permutation::identity(4)));
}

TEST(PermGroup, BoundExceededReportsPartialSize) {
  try {
    PermGroup::generate(5, {Permutation({1, 2, 3, 4, 0}), Permutation({1, 0, 2, 3, 4})}, 50);
    FAIL() << "expected ClosureBoundExceeded";
  } catch (const ClosureBoundExceeded& e) {
    EXPECT_GT(e.partial_size(), 50u);
  }
}

TEST(PermGroup, SameElementsIgnoresGenerators) {
  const PermGroup a = PermGroup::generate(3, {Permutation({1, 2, 0})});
  const PermGroup b = PermGroup::generate(3, {Permutation({2, 0, 1})});
  EXPECT_TRUE(a.same_elements(b));
  EXPECT_EQ(a.order(), 3u);
}
