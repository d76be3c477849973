#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "bandperm/permutation.hpp"
#include "bandperm/ranking.hpp"
#include "bandperm/structure.hpp"
#include "bandperm/surgery.hpp"
#include "bandperm/swap_set.hpp"
#include "brute_force.hpp"

using namespace bandperm;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<Sign> S(std::string_view text) { return parse_signs(text); }

// Every permutation of size 1..max_n.
template <class Fn>
void for_all_up_to(int max_n, Fn fn) {
  for (int n = 1; n <= max_n; ++n) for_each_permutation(n, fn);
}

}  // namespace

// --- parsing and formatting -------------------------------------------------

TEST(Parse, ReadsOneLineNotation) {
  EXPECT_EQ(parse_permutation("3 1 4 2"), P({3, 1, 4, 2}));
  EXPECT_EQ(parse_permutation("1"), Permutation::identity(1));
  EXPECT_EQ(parse_permutation("  2\t1 \n"), P({2, 1}));
}

TEST(Parse, DuplicateValueReportsIndex) {
  try {
    parse_permutation("2 2 1");
    FAIL() << "expected MalformedPermutation";
  } catch (const MalformedPermutation& e) {
    EXPECT_EQ(e.index(), 2);
  }
}

TEST(Parse, RejectsMissingAndOutOfRange) {
  EXPECT_THROW(parse_permutation(""), MalformedPermutation);
  EXPECT_THROW(parse_permutation("1 2 4"), MalformedPermutation);
  EXPECT_THROW(parse_permutation("0 1"), MalformedPermutation);
  EXPECT_THROW(parse_permutation("1 x"), MalformedPermutation);
  EXPECT_THROW(Permutation(std::vector<int>{2, 3}), MalformedPermutation);
}

TEST(Parse, FormatRoundTripsExhaustively) {
  for_all_up_to(6, [](const Permutation& p) {
    ASSERT_EQ(parse_permutation(format(p)), p);
  });
}

TEST(SwapSetText, ParsesAndFormats) {
  const SwapSet s = parse_swapset("1 3", 4);
  EXPECT_EQ(s.positions().size(), 2u);
  EXPECT_EQ(format(s), "1 3");
  EXPECT_EQ(parse_swapset("", 4), SwapSet(4));
  EXPECT_EQ(parse_swapset("3 1", 4), s);
  EXPECT_THROW(parse_swapset("1 2", 4), MalformedInput);
  EXPECT_THROW(parse_swapset("4", 4), MalformedInput);
  EXPECT_THROW(parse_swapset("0", 4), MalformedInput);
}

// --- inverse, compose, bandwidth ---------------------------------------------

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(P({3, 1, 4, 2})), P({2, 4, 1, 3}));
  EXPECT_EQ(inverse(Permutation::identity(5)), Permutation::identity(5));
  EXPECT_EQ(inverse(P({3, 4, 1, 2})), P({3, 4, 1, 2}));
}

TEST(Compose, MatchesDenseMatrixProduct) {
  for (int n = 1; n <= 4; ++n) {
    for_each_permutation(n, [&](const Permutation& a) {
      for_each_permutation(n, [&](const Permutation& b) {
        const auto expected = brute::multiply(brute::dense(brute::one_line(a)),
                                              brute::dense(brute::one_line(b)));
        ASSERT_EQ(brute::dense(brute::one_line(compose(a, b))), expected);
      });
    });
  }
}

TEST(Compose, InverseGivesIdentityAndSizesMustMatch) {
  for_all_up_to(6, [](const Permutation& p) {
    ASSERT_TRUE(compose(p, inverse(p)).is_identity());
    ASSERT_TRUE(compose(inverse(p), p).is_identity());
  });
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), SizeMismatch);
}

TEST(Bandwidth, Examples) {
  EXPECT_EQ(bandwidth(P({3, 1, 4, 2})), 2);
  EXPECT_EQ(bandwidth(Permutation::identity(4)), 0);
  EXPECT_EQ(bandwidth(P({2, 3, 4, 1})), 3);
}

// --- swap sets ---------------------------------------------------------------

TEST(ApplySwapSet, Examples) {
  EXPECT_EQ(apply_swapset(SwapSet(4, {1, 3}), P({3, 1, 4, 2})), P({1, 3, 2, 4}));
  EXPECT_EQ(apply_swapset(SwapSet(4), P({3, 1, 4, 2})), P({3, 1, 4, 2}));
  EXPECT_EQ(apply_swapset(SwapSet(4, {2}), P({1, 3, 2, 4})), Permutation::identity(4));
}

TEST(ApplySwapSet, IsLeftMultiplication) {
  for (int n = 1; n <= 5; ++n) {
    const auto sets = brute::all_swap_sets(n);
    for_each_permutation(n, [&](const Permutation& p) {
      for (const auto& s : sets) {
        const auto expected =
            brute::multiply(brute::swap_matrix(n, s), brute::dense(brute::one_line(p)));
        ASSERT_EQ(brute::dense(brute::one_line(apply_swapset(SwapSet(n, s), p))), expected);
        ASSERT_EQ(compose(SwapSet(n, s).to_permutation(), p), apply_swapset(SwapSet(n, s), p));
      }
    });
  }
}

TEST(ApplySwapSet, SizeMismatchThrows) {
  EXPECT_THROW(apply_swapset(SwapSet(3, {1}), Permutation::identity(4)), SizeMismatch);
}

TEST(SwapSet, RejectsAdjacentPositions) {
  EXPECT_THROW(SwapSet(5, {2, 3}), MalformedInput);
  EXPECT_NO_THROW(SwapSet(5, {2, 4}));
}

TEST(SwapSet, EqualityIsSetEquality) {
  EXPECT_EQ(SwapSet(6, {5, 1, 3}), SwapSet(6, {1, 3, 5}));
  EXPECT_NE(SwapSet(6, {1}), SwapSet(5, {1}));
}

// --- signs -------------------------------------------------------------------

TEST(Signs, Examples) {
  const SignProfile a = signs(P({3, 1, 4, 2}));
  EXPECT_EQ(a.rows, S("+-+-"));
  EXPECT_EQ(a.cols, S("--++"));
  const SignProfile b = signs(Permutation::identity(3));
  EXPECT_EQ(b.rows, S("000"));
  EXPECT_EQ(b.cols, S("000"));
  const SignProfile c = signs(P({2, 3, 4, 1}));
  EXPECT_EQ(c.rows, S("+++-"));
  EXPECT_EQ(c.cols, S("-+++"));
}

TEST(Signs, RowAndColumnCountsAgree) {
  for_all_up_to(7, [](const Permutation& p) {
    const SignProfile s = signs(p);
    for (Sign x : {Sign::positive, Sign::negative, Sign::neutral})
      ASSERT_EQ(std::count(s.rows.begin(), s.rows.end(), x),
                std::count(s.cols.begin(), s.cols.end(), x));
  });
}

TEST(Signs, ColumnSignIsDefinedByTheInverse) {
  for_all_up_to(6, [](const Permutation& p) {
    const Permutation q = inverse(p);
    const SignProfile s = signs(p);
    for (int j = 1; j <= p.size(); ++j) ASSERT_EQ(s.cols[j - 1], sign_of(j - q(j)));
  });
}

TEST(Signs, TextFormRoundTrips) {
  const SignProfile s = signs(P({2, 3, 4, 1}));
  EXPECT_EQ(format(s), "+++-\n-+++");
  EXPECT_EQ(parse_signs("+0-"), S("+0-"));
  EXPECT_THROW(parse_signs("+x"), MalformedInput);
}

// --- sections, inversions, blocks --------------------------------------------

TEST(Sections, Examples) {
  EXPECT_EQ(sections(P({2, 1, 3, 5, 4})),
            (std::vector<RowRange>{{1, 2}, {3, 3}, {4, 5}}));
  EXPECT_EQ(sections(Permutation::identity(3)),
            (std::vector<RowRange>{{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_EQ(sections(P({3, 1, 4, 2})), (std::vector<RowRange>{{1, 4}}));
}

TEST(Sections, InversionsNeverCrossBoundaries) {
  for_all_up_to(7, [](const Permutation& p) {
    const auto secs = sections(p);
    auto section_index = [&](int r) {
      for (std::size_t i = 0; i < secs.size(); ++i)
        if (secs[i].contains(r)) return i;
      return secs.size();
    };
    for (const auto& [i, j] : inversions(p).index_pairs)
      ASSERT_EQ(section_index(i), section_index(j));
    // each section maps its rows onto its own columns
    for (const RowRange& r : secs) ASSERT_NO_THROW(section_of(p, r));
  });
}

TEST(Inversions, Examples) {
  const Inversions a = inversions(P({3, 1, 4, 2}));
  EXPECT_EQ(a.count, 3);
  EXPECT_EQ(a.index_pairs, (std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {3, 4}}));
  EXPECT_EQ(inversions(Permutation::identity(4)).count, 0);
  EXPECT_EQ(inversions(P({3, 2, 1})).count, 3);
  EXPECT_EQ(inversions(P({3, 2, 1})).adjacent_value_pairs,
            (std::vector<std::pair<int, int>>{{3, 2}, {2, 1}}));
}

TEST(InvertedBlocks, Examples) {
  EXPECT_EQ(inverted_blocks(P({5, 2, 3, 4, 1})), (std::vector<RowRange>{{1, 2}, {4, 5}}));
  EXPECT_TRUE(inverted_blocks(Permutation::identity(4)).empty());
  EXPECT_EQ(inverted_blocks(P({3, 2, 1})), (std::vector<RowRange>{{1, 3}}));
}

TEST(InvertedBlocks, MatchDecreasingRuns) {
  for_all_up_to(7, [](const Permutation& p) {
    std::vector<RowRange> expected;
    for (const auto& [lo, hi] : brute::decreasing_runs(brute::one_line(p)))
      expected.push_back({lo, hi});
    ASSERT_EQ(inverted_blocks(p), expected);
  });
}

TEST(InvertRows, Examples) {
  EXPECT_EQ(invert_rows(1, P({3, 1, 4, 2})), (RowRange{1, 4}));
  EXPECT_EQ(invert_rows(3, P({3, 1, 4, 2})), (RowRange{3, 4}));
  EXPECT_EQ(invert_rows(2, Permutation::identity(3)), (RowRange{2, 2}));
}

TEST(InvertRows, SpansExactlyTheInvertedPartners) {
  for_all_up_to(6, [](const Permutation& p) {
    for (int m = 1; m <= p.size(); ++m) {
      int lo = m;
      int hi = m;
      for (const auto& [i, j] : inversions(p).index_pairs) {
        if (i == m) hi = std::max(hi, j);
        if (j == m) lo = std::min(lo, i);
      }
      ASSERT_EQ(invert_rows(m, p), (RowRange{lo, hi}));
    }
  });
}

// --- surgery -----------------------------------------------------------------

TEST(InsertFix, Examples) {
  EXPECT_EQ(insert_fix(2, P({2, 1})), P({3, 2, 1}));
  EXPECT_EQ(insert_fix(2, P({4, 2, 3, 1})), P({5, 2, 3, 4, 1}));
  EXPECT_EQ(insert_fix(1, Permutation::identity(2)), Permutation::identity(3));
  EXPECT_THROW(insert_fix(4, P({2, 1})), PreconditionError);
}

TEST(DeleteFix, Examples) {
  EXPECT_EQ(essence(P({5, 2, 3, 4, 1})), P({2, 1}));
  EXPECT_EQ(delete_fix(2, P({3, 2, 1})), P({2, 1}));
  EXPECT_THROW(delete_fix(1, P({2, 1})), PreconditionError);
  EXPECT_THROW(delete_fix(1, Permutation::identity(1)), PreconditionError);
  EXPECT_THROW(essence(Permutation::identity(3)), PreconditionError);
}

TEST(Surgery, InsertThenDeleteIsIdentity) {
  for_all_up_to(6, [](const Permutation& p) {
    for (int m = 1; m <= p.size() + 1; ++m) {
      const Permutation q = insert_fix(m, p);
      ASSERT_TRUE(q.is_fixed(m));
      ASSERT_EQ(delete_fix(m, q), p);
      if (!p.is_identity()) {
        ASSERT_EQ(essence(q), essence(p));
      }
      const int grow = bandwidth(q) - bandwidth(p);
      ASSERT_TRUE(grow == 0 || grow == 1) << format(p) << " at " << m;
    }
  });
}

TEST(Surgery, EssenceIsTracefree) {
  for_all_up_to(6, [](const Permutation& p) {
    if (p.is_identity()) return;
    const Permutation e = essence(p);
    for (int i = 1; i <= e.size(); ++i) ASSERT_FALSE(e.is_fixed(i));
  });
}

TEST(UnsignRow, Examples) {
  EXPECT_EQ(unsign_row(1, P({3, 2, 1})), P({1, 2, 3}));
  EXPECT_EQ(unsign_row(2, P({2, 3, 1})), P({3, 2, 1}));
  EXPECT_THROW(unsign_row(2, Permutation::identity(3)), PreconditionError);
}

TEST(UnsignRow, ComposesWithTransposition) {
  for_all_up_to(6, [](const Permutation& p) {
    for (int m = 1; m <= p.size(); ++m) {
      if (p.is_fixed(m)) continue;
      const int m_prime = inverse(p)(m);
      std::vector<int> t(static_cast<std::size_t>(p.size()));
      std::iota(t.begin(), t.end(), 1);
      std::swap(t[m - 1], t[m_prime - 1]);
      // sigma o tau: apply tau first, then sigma
      ASSERT_EQ(unsign_row(m, p), compose(Permutation(t), p));
      ASSERT_TRUE(unsign_row(m, p).is_fixed(m));
    }
  });
}

// --- distance table ------------------------------------------------------------

TEST(DistanceTable, Examples) {
  const DistanceTable a = distance_table(P({3, 1, 4, 2}));
  EXPECT_EQ(a.entries, (std::vector<int>{2, -1, 1, -2}));
  EXPECT_EQ(a.l1(), 6);
  EXPECT_EQ(a.linf(), 2);
  EXPECT_EQ(distance_table(Permutation::identity(3)).entries, (std::vector<int>{0, 0, 0}));
  const DistanceTable c = distance_table(P({2, 3, 4, 1}));
  EXPECT_EQ(c.entries, (std::vector<int>{1, 1, 1, -3}));
  EXPECT_EQ(c.linf(), 3);
}

TEST(DistanceTable, LinfIsBandwidthAndEntriesSumToZero) {
  for_all_up_to(7, [](const Permutation& p) {
    const DistanceTable d = distance_table(p);
    ASSERT_EQ(d.linf(), bandwidth(p));
    ASSERT_EQ(std::accumulate(d.entries.begin(), d.entries.end(), 0), 0);
  });
}

// Twice the inversion count is l1 plus twice the overtakes of signed rows plus
// the overtakes of neutral rows.
TEST(InversionIdentity, HoldsExhaustively) {
  for_all_up_to(7, [](const Permutation& p) {
    const auto ov = overtaker_counts(p);
    std::int64_t twice = distance_table(p).l1();
    for (int m = 1; m <= p.size(); ++m) twice += (p.is_fixed(m) ? 1 : 2) * ov[m - 1];
    ASSERT_EQ(2 * inversion_count(p), twice) << format(p);
  });
}

// --- ranking -----------------------------------------------------------------

TEST(Ranking, LexicographicAndBijective) {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t expected = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      ASSERT_EQ(rank_of(p), expected);
      ASSERT_EQ(rank_of(p), brute::lex_index(brute::one_line(p)));
      ASSERT_EQ(unrank(n, expected), p);
      ++expected;
    });
    ASSERT_EQ(expected, factorial(n));
  }
}

TEST(Ranking, LargeSizesRoundTrip) {
  const Permutation p = P({20, 1, 19, 2, 18, 3, 17, 4, 16, 5, 15, 6, 14, 7, 13, 8, 12, 9, 11, 10});
  EXPECT_EQ(unrank(20, rank_of(p)), p);
  EXPECT_EQ(rank_of(Permutation::identity(20)), 0u);
}
