#include <gtest/gtest.h>

#include <cstdio>
#include <map>
#include <set>

#include "efx/core.hpp"

using namespace efx;

TEST(TypeOf, FixedPartition) {
  EXPECT_EQ(type_of(0), ItemType::A);
  EXPECT_EQ(type_of(3), ItemType::A);
  EXPECT_EQ(type_of(4), ItemType::B);
  EXPECT_EQ(type_of(5), ItemType::C);
  EXPECT_EQ(type_of(6), ItemType::X);
  EXPECT_EQ(type_of(7), ItemType::Y);
  EXPECT_EQ(type_char(ItemType::X), 'x');
}

TEST(Bundle, SetOperations) {
  const Bundle s{0, 3, 6};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.without(3), (Bundle{0, 6}));
  EXPECT_EQ(s.with(7).size(), 4);
  EXPECT_EQ((s | Bundle{1}), (Bundle{0, 1, 3, 6}));
  EXPECT_EQ((s & Bundle{0, 1}), (Bundle{0}));
  EXPECT_EQ((s - Bundle{0}), (Bundle{3, 6}));
  EXPECT_EQ(s.complement(), (Bundle{1, 2, 4, 5, 7}));
  EXPECT_TRUE((Bundle{0}).is_subset_of(s));
  EXPECT_EQ(s.goods(), (std::vector<int>{0, 3, 6}));
  EXPECT_EQ(s.digits(), "036");
  EXPECT_EQ(Bundle::empty().digits(), "{}");
  EXPECT_EQ(Bundle::all().size(), 8);
}

TEST(Bundle, IterationIsAscending) {
  std::vector<int> seen;
  for (GoodId g : Bundle{7, 2, 5}) seen.push_back(g);
  EXPECT_EQ(seen, (std::vector<int>{2, 5, 7}));
}

TEST(SupportOf, Examples) {
  EXPECT_EQ(support_of(Bundle{0, 3, 1, 4}).word(), "AB");
  EXPECT_EQ(support_of(Bundle{}).word(), "∅");
  EXPECT_TRUE(support_of(Bundle{}).is_empty());
  EXPECT_EQ(support_of(Bundle{0, 2, 6}).word(), "ACx");
  EXPECT_EQ(support_of(Bundle::all()).word(), "ABCxy");
}

TEST(SupportOf, UnionHomomorphism) {
  for (int s = 0; s < kBundles; ++s)
    for (int t = 0; t < kBundles; t += 7) {
      const Bundle a(static_cast<std::uint8_t>(s)), b(static_cast<std::uint8_t>(t));
      EXPECT_EQ(support_of(a | b), support_of(a) | support_of(b));
    }
}

TEST(Permutation, SigmaExamples) {
  const auto sigma = GoodPermutation::sigma();
  EXPECT_EQ(apply_permutation(sigma, Bundle{2, 5}), (Bundle{0, 3}));
  EXPECT_EQ(apply_permutation(sigma, Bundle{}), Bundle{});
  EXPECT_EQ(sigma.order(), 3);
  EXPECT_TRUE(sigma.power(3).is_identity());
  EXPECT_FALSE(sigma.is_identity());
  EXPECT_EQ(sigma.compose(sigma.inverse()), GoodPermutation());
}

TEST(Permutation, PreservesSizeAndInverts) {
  const auto sigma = GoodPermutation::sigma();
  const auto inv = sigma.inverse();
  for (int m = 0; m < kBundles; ++m) {
    const Bundle s(static_cast<std::uint8_t>(m));
    EXPECT_EQ(sigma(s).size(), s.size());
    EXPECT_EQ(inv(sigma(s)), s);
    EXPECT_EQ(sigma(sigma(sigma(s))), s);
  }
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(GoodPermutation({0, 0, 2, 3, 4, 5, 6, 7}), std::invalid_argument);
  EXPECT_THROW(GoodPermutation({0, 1, 2, 3, 4, 5, 6, 9}), std::invalid_argument);
}

TEST(Allocation, CounterEncoding) {
  const Allocation first = allocation_from_counter(0);
  EXPECT_EQ(first[0], Bundle::all());
  EXPECT_TRUE(first[1].is_empty());
  EXPECT_TRUE(first[2].is_empty());
  // Good 0 follows the lowest base-3 digit.
  EXPECT_EQ(allocation_from_counter(1)[1], Bundle{0});
  EXPECT_EQ(allocation_from_counter(50).to_string(), "(4567 | 13 | 02)");
  for (int c = 0; c < kAllocations; ++c) EXPECT_EQ(counter_of(allocation_from_counter(c)), c);
}

TEST(Allocation, EnumerationIsCompleteAndDistinct) {
  std::set<std::uint32_t> seen;
  int count = 0;
  for (const Allocation& x : enumerate_allocations()) {
    ASSERT_TRUE(x.is_valid());
    EXPECT_EQ(x[0].size() + x[1].size() + x[2].size(), kGoods);
    seen.insert(x.packed());
    ++count;
  }
  EXPECT_EQ(count, 6561);
  EXPECT_EQ(seen.size(), 6561u);
  const auto& packed = packed_allocations();
  ASSERT_EQ(packed.size(), 6561u);
  EXPECT_EQ(packed[50], allocation_from_counter(50).packed());
}

TEST(Allocation, ValidityRejectsOverlapAndGaps) {
  EXPECT_FALSE(Allocation(Bundle{0, 1}, Bundle{1}, Bundle{2, 3, 4, 5, 6, 7}).is_valid());
  EXPECT_FALSE(Allocation(Bundle{0}, Bundle{1}, Bundle{2}).is_valid());
}

TEST(Allocation, SizePatternCountsMatchMultinomials) {
  std::map<std::string, std::uint64_t> counts;
  for (const Allocation& x : enumerate_allocations()) ++counts[x.sizes().key()];
  EXPECT_EQ(counts.size(), 45u);
  EXPECT_EQ(counts["2,3,3"], 560u);
  EXPECT_EQ(counts["2,2,4"], 420u);
  EXPECT_EQ(multinomial(SizePattern{{2, 3, 3}}), 560u);
  EXPECT_EQ(multinomial(SizePattern{{2, 2, 4}}), 420u);
  EXPECT_EQ(multinomial(SizePattern{{8, 0, 0}}), 1u);
  for (const auto& [key, n] : counts) {
    SizePattern p;
    std::sscanf(key.c_str(), "%d,%d,%d", &p.sizes[0], &p.sizes[1], &p.sizes[2]);
    EXPECT_EQ(multinomial(p), n) << key;
  }
}

TEST(Rotation, Examples) {
  const Allocation x(Bundle{0, 1}, Bundle{2, 3}, Bundle{4, 5, 6, 7});
  const Allocation y = rotate_allocation(x);
  EXPECT_EQ(y.sizes().key(), "2,4,2");
  EXPECT_EQ(rotate_allocation(rotate_allocation(y)), x);
  const Allocation only_one(Bundle{}, Bundle::all(), Bundle{});
  EXPECT_EQ(rotate_allocation(only_one), Allocation(Bundle::all(), Bundle{}, Bundle{}));
}

TEST(Rotation, IsABijection) {
  std::set<int> image;
  for (int c = 0; c < kAllocations; ++c) {
    const Allocation x = allocation_from_counter(c);
    const Allocation y = rotate_allocation(x);
    ASSERT_TRUE(y.is_valid());
    EXPECT_EQ(y.sizes().sizes[0], x.sizes().sizes[1]);
    image.insert(counter_of(y));
    EXPECT_EQ(rotate_allocation(rotate_allocation(y)), x);
  }
  EXPECT_EQ(image.size(), 6561u);
}
