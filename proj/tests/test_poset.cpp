#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include <fishburn/poset.hpp>

using namespace fishburn;

namespace {

Poset two_plus_two() { return Poset::from_relations(4, {{0, 1}, {2, 3}}); }
Poset vee() { return Poset::from_relations(3, {{0, 1}, {0, 2}}); }
Poset wedge() { return Poset::from_relations(3, {{1, 0}, {2, 0}}); }

// Brute-force isomorphism test over all bijections.
bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<unsigned> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    bool ok = true;
    for (unsigned i = 0; i < a.size() && ok; ++i)
      for (unsigned j = 0; j < a.size() && ok; ++j) ok = a.less(i, j) == b.less(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Interval orders from random real intervals (always 2+2-free).
Poset random_interval_order(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> d(0, 2 * int(n));
  std::vector<std::pair<int, int>> iv;
  for (unsigned e = 0; e < n; ++e) {
    int a = d(rng), b = d(rng);
    iv.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (iv[a].second < iv[b].first) pairs.emplace_back(a, b);
  return Poset::from_relations(n, pairs);
}

}  // namespace

TEST(PosetTwoPlusTwo, Examples) {
  EXPECT_FALSE(is_two_plus_two_free(two_plus_two()));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_TRUE(is_two_plus_two_free(Poset::chain(n)));
  // every strict order on 3 labelled elements
  unsigned checked = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::vector<bool>> rel(3, std::vector<bool>(3, false));
    unsigned bit = 0;
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned b = 0; b < 3; ++b)
        if (a != b) rel[a][b] = (mask >> bit++) & 1u;
    Poset p;
    try {
      p = Poset::from_table(rel);
    } catch (const error&) {
      continue;
    }
    ++checked;
    EXPECT_TRUE(is_two_plus_two_free(p));
  }
  EXPECT_EQ(checked, 19u);  // labelled posets on 3 elements
}

TEST(PosetLevels, Examples) {
  auto la = level_assignment(Poset::chain(2));
  EXPECT_EQ(la.magnitude, 2u);
  EXPECT_EQ(la.level, (std::vector<unsigned>{1, 2}));
  EXPECT_EQ(la.uplevel, (std::vector<unsigned>{1, 2}));

  la = level_assignment(Poset::antichain(2));
  EXPECT_EQ(la.magnitude, 1u);
  EXPECT_EQ(la.level, (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(la.uplevel, (std::vector<unsigned>{1, 1}));

  EXPECT_EQ(level_assignment(Poset::antichain(1)).magnitude, 1u);
  EXPECT_THROW(level_assignment(two_plus_two()), error);
}

TEST(PosetToMatrix, Examples) {
  EXPECT_EQ(poset_to_matrix(Poset::chain(2)), TriMatrix::from_rows({{1, 0}, {0, 1}}));
  EXPECT_EQ(poset_to_matrix(Poset::antichain(2)), TriMatrix::from_rows({{2}}));
  // bottom element below two tops: levels 1,2,2; up-levels 1,2,2
  EXPECT_EQ(poset_to_matrix(vee()), TriMatrix::from_rows({{1, 0}, {0, 2}}));
  EXPECT_EQ(poset_to_matrix(wedge()), TriMatrix::from_rows({{2, 0}, {0, 1}}));
}

TEST(MatrixToPoset, Examples) {
  EXPECT_TRUE(isomorphic(matrix_to_poset(TriMatrix::from_rows({{1}})), Poset::antichain(1)));
  EXPECT_TRUE(isomorphic(matrix_to_poset(TriMatrix::from_rows({{1, 0}, {0, 1}})), Poset::chain(2)));
  EXPECT_TRUE(isomorphic(matrix_to_poset(TriMatrix::from_rows({{2}})), Poset::antichain(2)));
  EXPECT_THROW(matrix_to_poset(TriMatrix::from_rows({{0, 1}, {0, 1}})), error);
}

TEST(PosetDual, Examples) {
  EXPECT_TRUE(isomorphic(dual_poset(Poset::chain(4)), Poset::chain(4)));
  EXPECT_TRUE(isomorphic(dual_poset(vee()), wedge()));
  EXPECT_FALSE(isomorphic(vee(), wedge()));
  EXPECT_EQ(dual_poset(Poset::antichain(3)), Poset::antichain(3));
}

TEST(PosetPrimitive, Examples) {
  EXPECT_FALSE(is_primitive_poset(Poset::antichain(2)));
  EXPECT_TRUE(is_primitive_poset(Poset::chain(2)));
  EXPECT_TRUE(is_primitive_poset(Poset::antichain(1)));
  EXPECT_FALSE(is_primitive_poset(vee()));
}

TEST(PosetCanonical, Examples) {
  auto a = Poset::from_relations(3, {{0, 1}, {1, 2}});
  auto b = Poset::from_relations(3, {{2, 0}, {0, 1}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(Poset::chain(2)), canonical_form(Poset::antichain(2)));
  EXPECT_EQ(canonical_form(Poset::antichain(1)), "1:0");
}

TEST(PosetCanonical, AgreesWithBruteIsomorphism) {
  std::mt19937 rng(8);
  for (int round = 0; round < 200; ++round) {
    unsigned n = 1 + rng() % 5;
    Poset p = random_interval_order(rng, n), q = random_interval_order(rng, n);
    EXPECT_EQ(canonical_form(p) == canonical_form(q), isomorphic(p, q));
  }
}

TEST(PosetBijection, RandomIntervalOrdersRoundTrip) {
  std::mt19937 rng(31);
  for (int round = 0; round < 300; ++round) {
    unsigned n = 1 + rng() % 7;
    Poset p = random_interval_order(rng, n);
    ASSERT_TRUE(is_two_plus_two_free(p));
    TriMatrix m = poset_to_matrix(p);
    EXPECT_TRUE(is_fishburn(m));
    EXPECT_EQ(m.total(), n);
    EXPECT_TRUE(isomorphic(matrix_to_poset(m), p));
    EXPECT_EQ(poset_to_matrix(matrix_to_poset(m)), m);
    // duality and primitivity commute with the bijection
    EXPECT_EQ(poset_to_matrix(dual_poset(p)), dual(m));
    EXPECT_EQ(is_primitive_poset(p), is_primitive(m));
    // minimal elements: first row; maximal: last column
    unsigned minimal = 0, maximal = 0;
    for (unsigned e = 0; e < n; ++e) {
      minimal += p.down_set(e).empty();
      maximal += p.up_set(e).empty();
    }
    auto s = stats(m);
    EXPECT_EQ(minimal, s.min + s.iso);
    EXPECT_EQ(maximal, s.max + s.iso);
  }
}

TEST(PosetJson, RoundTrip) {
  std::mt19937 rng(2);
  for (int round = 0; round < 30; ++round) {
    Poset p = random_interval_order(rng, 1 + rng() % 6);
    EXPECT_EQ(poset_from_json(to_json(p)), p);
  }
}

TEST(PosetConstruction, RejectsNonOrders) {
  EXPECT_THROW(Poset::from_relations(2, {{0, 1}, {1, 0}}), error);
  EXPECT_THROW(Poset::from_relations(2, {{0, 2}}), error);
  EXPECT_THROW(Poset::from_table({{false, true}, {false, false}, {false, false}}), error);
}
