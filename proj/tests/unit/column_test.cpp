#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "scrack/column.hpp"
#include "scrack/partition.hpp"
#include "test_util.hpp"

using namespace scrack;

TEST(Column, RejectsEmptyInput) { EXPECT_THROW(CrackedColumn(std::vector<Value>{}), std::invalid_argument); }

TEST(Column, FreshColumnIsOnePiece) {
  CrackedColumn col({4, 2, 8});
  EXPECT_EQ(col.piece_count(), 1u);
  const Piece p = col.find_piece(100);
  EXPECT_EQ(p.lo, 0);
  EXPECT_EQ(p.hi, 2);
  EXPECT_FALSE(p.lower);
  EXPECT_FALSE(p.upper);
}

TEST(CrackInTwo, SplitsAroundPivot) {
  CrackedColumn col({5, 1, 9, 3, 7});
  const Position p = crack_in_two(col, col.find_piece(6), 6);
  EXPECT_EQ(p, 3);
  for (Position i = 0; i < 3; ++i) EXPECT_LT(col.data()[i], 6);
  for (Position i = 3; i < 5; ++i) EXPECT_GE(col.data()[i], 6);
  ASSERT_EQ(col.index().size(), 1u);
  EXPECT_EQ(col.index().at(6), 3);
  EXPECT_EQ(col.counters().tuples_touched, 5u);
  EXPECT_EQ(col.counters().cracks_added, 1u);
}

TEST(CrackInTwo, PivotOutsideValuesAddsNoCrack) {
  CrackedColumn col({5, 1, 9, 3, 7});
  EXPECT_EQ(crack_in_two(col, col.find_piece(0), 0), 0);
  EXPECT_EQ(crack_in_two(col, col.find_piece(100), 100), 5);
  EXPECT_TRUE(col.index().empty());
  EXPECT_EQ(col.counters().cracks_added, 0u);
}

TEST(CrackInTwo, RepeatedPivotIsNoOp) {
  CrackedColumn col(test::shuffled(100, 1));
  crack_in_two(col, col.find_piece(40), 40);
  const auto before = std::vector<Value>(col.data().begin(), col.data().end());
  col.reset_counters();
  EXPECT_EQ(crack_in_two(col, col.find_piece(40), 40), 40);
  EXPECT_EQ(col.counters().tuples_touched, 0u);
  EXPECT_EQ(col.counters().cracks_added, 0u);
  EXPECT_EQ(std::vector<Value>(col.data().begin(), col.data().end()), before);
}

TEST(CrackInTwo, PivotOutsidePieceBoundsThrows) {
  CrackedColumn col(test::shuffled(100, 2));
  crack_in_two(col, col.find_piece(50), 50);
  const Piece low = col.find_piece(10);
  EXPECT_THROW(crack_in_two(col, low, 70), std::out_of_range);
}

TEST(CrackInThree, ReturnsBothBoundaries) {
  CrackedColumn col(test::shuffled(10, 3));
  const auto [a, b] = crack_in_three(col, col.find_piece(3), 3, 7);
  EXPECT_EQ(a, 3);
  EXPECT_EQ(b, 7);
  EXPECT_EQ(col.index().size(), 2u);
  EXPECT_TRUE(test::index_holds(col));
  EXPECT_EQ(test::sorted_copy(col.data().subspan(3, 4)), (std::vector<Value>{3, 4, 5, 6}));
}

TEST(CrackInThree, RejectsReversedBounds) {
  CrackedColumn col(test::shuffled(10, 3));
  EXPECT_THROW(crack_in_three(col, col.find_piece(3), 7, 3), std::invalid_argument);
}

TEST(CrackInThree, EqualBoundsGiveEmptyMiddle) {
  CrackedColumn col(test::shuffled(10, 4));
  const auto [a, b] = crack_in_three(col, col.find_piece(5), 5, 5);
  EXPECT_EQ(a, 5);
  EXPECT_EQ(b, 5);
}

TEST(AddCrack, RejectsEntriesThatContradictData) {
  CrackedColumn col({1, 2, 3, 4});
  EXPECT_THROW(col.add_crack(3, 1), std::logic_error);
  EXPECT_THROW(col.add_crack(2, 3), std::logic_error);
  EXPECT_THROW(col.add_crack(2, 7), std::logic_error);
  EXPECT_TRUE(col.add_crack(3, 2));
  EXPECT_FALSE(col.add_crack(3, 2));
  // Same value, different position.
  CrackedColumn dup({1, 2, 2, 4});
  EXPECT_TRUE(dup.add_crack(2, 1));
  EXPECT_THROW(dup.add_crack(2, 3), std::logic_error);
}

TEST(AddCrack, ZeroWidthPiecesAreNotIndexed) {
  CrackedColumn col({1, 5, 9});
  EXPECT_TRUE(col.add_crack(5, 1));
  // 3 < w <= 5 would also sit at position 1.
  EXPECT_FALSE(col.add_crack(4, 1));
  EXPECT_FALSE(col.add_crack(0, 0));
  EXPECT_FALSE(col.add_crack(10, 3));
  EXPECT_EQ(col.index().size(), 1u);
}

TEST(FindPiece, ResolvesBoundsFromNeighbours) {
  CrackedColumn col(test::shuffled(100, 5));
  crack_in_two(col, col.find_piece(30), 30);
  crack_in_two(col, col.find_piece(60), 60);
  const Piece mid = col.find_piece(45);
  EXPECT_EQ(mid.lo, 30);
  EXPECT_EQ(mid.hi, 59);
  EXPECT_EQ(mid.lower, 30);
  EXPECT_EQ(mid.upper, 60);
  EXPECT_EQ(col.find_piece(30), mid);
  EXPECT_EQ(col.find_piece(60).lo, 60);
  EXPECT_EQ(col.find_piece(29).hi, 29);
}

TEST(MakeView, ChecksBounds) {
  CrackedColumn col({1, 2, 3});
  EXPECT_EQ(make_view(col, 0, 3).count(), 3u);
  EXPECT_EQ(make_view(col, 2, 2).count(), 0u);
  EXPECT_THROW(make_view(col, 2, 1), std::out_of_range);
  EXPECT_THROW(make_view(col, 0, 4), std::out_of_range);
  EXPECT_THROW(make_view(col, -1, 1), std::out_of_range);
}

TEST(ResultSet, ConcatenatesViewsAndBuffers) {
  const std::vector<Value> column{9, 8, 7, 6};
  ResultSet r;
  r.add_buffer({1, 2});
  r.add_view(1, 3);
  r.add_buffer({});
  EXPECT_EQ(r.count(), 4u);
  EXPECT_EQ(r.collect(column), (std::vector<Value>{1, 2, 8, 7}));
  EXPECT_THROW(r.add_view(3, 2), std::invalid_argument);
}

TEST(TwoCursorPass, BudgetedPassResumesToSameOutcome) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto data = test::shuffled(200, seed);
    auto reference = data;
    Position l = 0;
    Position r = 199;
    const auto full = detail::two_cursor_pass(reference, l, r, 100);
    ASSERT_TRUE(full.complete);
    ASSERT_EQ(l, 100);

    std::vector<int> seen(200, 0);
    Position left = 0;
    Position right = 199;
    std::size_t swaps = 0;
    int rounds = 0;
    for (bool done = false; !done; ++rounds) {
      auto pass = detail::two_cursor_pass(data, left, right, 100, 3, [&](Value v) { ++seen[v]; });
      EXPECT_LE(pass.swaps, 3u);
      swaps += pass.swaps;
      done = pass.complete;
      for (Position i = 0; i < left; ++i) ASSERT_LT(data[i], 100);
      for (Position i = right + 1; i < 200; ++i) ASSERT_GE(data[i], 100);
    }
    EXPECT_EQ(left, 100);
    EXPECT_EQ(swaps, full.swaps);
    EXPECT_EQ(data, reference);
    for (int s : seen) EXPECT_EQ(s, 1);
    EXPECT_GE(rounds, static_cast<int>(full.swaps / 3));
  }
}
