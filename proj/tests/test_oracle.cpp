#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include <fishburn/oracle.hpp>

#include "brute.hpp"

using namespace fishburn;

using namespace brute;

TEST(OracleFishburnDim, Examples) {
  EXPECT_EQ(enum_fishburn_dim(1, true), std::vector<TriMatrix>{TriMatrix::from_rows({{1}})});
  auto two = enum_fishburn_dim(2, true);
  ASSERT_EQ(two.size(), 2u);
  for (const auto& m : two) {
    EXPECT_EQ(m(1, 1), 1u);
    EXPECT_EQ(m(2, 2), 1u);
  }
  auto three = enum_fishburn_dim(3, true, 3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0], TriMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_THROW(enum_fishburn_dim(2, false), error);
  EXPECT_THROW(enum_fishburn_dim(kOracleMaxDim + 1, true), error);
}

TEST(OracleFishburnDim, PrimitiveAgainstRawMasks) {
  for (unsigned k = 1; k <= 5; ++k) {
    std::size_t want = 0;
    masks(k, [&](const TriMatrix& m) { want += fishburn_check(m); });
    EXPECT_EQ(enum_fishburn_dim(k, true).size(), want) << "k=" << k;
  }
}

TEST(OracleFishburnSize, Examples) {
  EXPECT_EQ(enum_fishburn_by_size(1, false), std::vector<TriMatrix>{TriMatrix::from_rows({{1}})});
  auto two = enum_fishburn_by_size(2, false);
  EXPECT_EQ(two, (std::vector<TriMatrix>{TriMatrix::from_rows({{2}}), TriMatrix::from_rows({{1, 0}, {0, 1}})}));
  EXPECT_EQ(enum_fishburn_by_size(3, false).size(), 5u);
}

TEST(OracleFishburnSize, AgainstGridSearch) {
  for (unsigned n = 1; n <= 6; ++n) {
    auto all = grid(n, fishburn_check);
    EXPECT_EQ(enum_fishburn_by_size(n, false), all) << "n=" << n;
    auto prim = grid(n, [](const TriMatrix& m) { return fishburn_check(m) && zero_one(m); });
    EXPECT_EQ(enum_fishburn_by_size(n, true), prim) << "n=" << n;
  }
}

TEST(OracleRowFishburn, Examples) {
  EXPECT_EQ(enum_row_fishburn_by_size(1, false).size(), 1u);
  EXPECT_EQ(enum_row_fishburn_by_size(2, false).size(), 3u);
  EXPECT_EQ(enum_row_fishburn_by_size(2, true).size(), 2u);
}

TEST(OracleRowFishburn, AgainstGridSearch) {
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(enum_row_fishburn_by_size(n, false), grid(n, row_check)) << "n=" << n;
    EXPECT_EQ(enum_row_fishburn_by_size(n, true),
              grid(n, [](const TriMatrix& m) { return row_check(m) && zero_one(m); }))
        << "n=" << n;
  }
}

TEST(OracleSelfDual, Examples) {
  EXPECT_EQ(enum_selfdual(SelfDualGrading::by_size, 2, false).size(), 2u);
  EXPECT_EQ(enum_selfdual(SelfDualGrading::by_dim, 2, true).size(), 2u);
  auto rs1 = enum_selfdual(SelfDualGrading::by_reduced_size, 1, false);
  EXPECT_EQ(rs1, (std::vector<TriMatrix>{TriMatrix::from_rows({{1}}), TriMatrix::from_rows({{1, 0}, {0, 1}})}));
}

TEST(OracleSelfDual, AgainstGridSearch) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (bool prim : {false, true}) {
      auto want = grid(n, [&](const TriMatrix& m) { return fishburn_check(m) && mirror_fixed(m) && (!prim || zero_one(m)); });
      EXPECT_EQ(enum_selfdual(SelfDualGrading::by_size, n, prim), want) << "n=" << n << " prim=" << prim;
    }
  }
}

TEST(OracleSelfDual, ReducedSizeAgainstGridSearch) {
  // rs = n forces the cell sum to lie in n..2n.
  for (unsigned n = 1; n <= 3; ++n) {
    for (bool prim : {false, true}) {
      std::vector<TriMatrix> want;
      for (unsigned size = n; size <= 2 * n; ++size)
        for (const auto& m : grid(size, [&](const TriMatrix& m) {
               return fishburn_check(m) && mirror_fixed(m) && reduced_size(m) == n && (!prim || zero_one(m));
             }))
          want.push_back(m);
      std::sort(want.begin(), want.end());
      EXPECT_EQ(enum_selfdual(SelfDualGrading::by_reduced_size, n, prim), want) << "n=" << n << " prim=" << prim;
    }
  }
}

TEST(OracleSelfDual, ReducedSizeAgainstSizeGraded) {
  for (unsigned n = 1; n <= 4; ++n) {
    std::vector<TriMatrix> want;
    for (unsigned size = n; size <= 2 * n; ++size)
      for (const auto& m : enum_selfdual(SelfDualGrading::by_size, size, false))
        if (reduced_size(m) == n) want.push_back(m);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(enum_selfdual(SelfDualGrading::by_reduced_size, n, false), want) << "n=" << n;
  }
}

TEST(OracleSelfDual, DimensionGradedAgainstMaskSearch) {
  for (unsigned k = 1; k <= 5; ++k) {
    std::size_t want = 0;
    for (const auto& m : enum_fishburn_dim(k, true)) want += mirror_fixed(m);
    EXPECT_EQ(enum_selfdual(SelfDualGrading::by_dim, k, true).size(), want);
  }
}

TEST(OracleConsistency, DimensionGradedSumsToSizeGraded) {
  for (unsigned n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (unsigned k = 1; k <= std::min(n, kOracleMaxDim); ++k)
      for (const auto& m : enum_fishburn_dim(k, false, n)) total += m.total() == n;
    EXPECT_EQ(total, enum_fishburn_by_size(n, false).size()) << "n=" << n;
  }
}

TEST(OracleConsistency, DualityClosureAndFixedPoints) {
  for (unsigned n = 1; n <= 7; ++n) {
    auto all = enum_fishburn_by_size(n, false);
    std::vector<TriMatrix> duals, fixed;
    for (const auto& m : all) {
      duals.push_back(dual(m));
      if (dual(m) == m) fixed.push_back(m);
    }
    std::sort(duals.begin(), duals.end());
    EXPECT_EQ(duals, all) << "n=" << n;
    EXPECT_EQ(fixed, enum_selfdual(SelfDualGrading::by_size, n, false)) << "n=" << n;
  }
}

TEST(OraclePosets, CountsAgainstLabelledSearch) {
  const std::vector<std::size_t> expected{1, 2, 5, 15};
  for (unsigned n = 1; n <= 4; ++n) {
    EXPECT_EQ(enum_interval_orders(n).size(), count_interval_orders(n)) << "n=" << n;
    EXPECT_EQ(enum_interval_orders(n).size(), expected[n - 1]);
  }
  EXPECT_EQ(enum_interval_orders(5).size(), 53u);
}

TEST(OraclePosets, MatchMatrixCountsAndBijection) {
  for (unsigned n = 1; n <= 6; ++n) {
    auto posets = enum_interval_order_posets(n);
    auto matrices = enum_fishburn_by_size(n, false);
    ASSERT_EQ(posets.size(), matrices.size()) << "n=" << n;
    std::vector<TriMatrix> images;
    for (const auto& p : posets) images.push_back(poset_to_matrix(p));
    std::sort(images.begin(), images.end());
    EXPECT_EQ(images, matrices) << "n=" << n;
  }
}

TEST(OracleOrder, Deterministic) {
  EXPECT_EQ(enum_fishburn_by_size(5, false), enum_fishburn_by_size(5, false));
  auto v = enum_fishburn_by_size(5, false);
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
  EXPECT_EQ(enum_interval_orders(4), enum_interval_orders(4));
}
