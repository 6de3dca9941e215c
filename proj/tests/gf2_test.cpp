#include "interlace/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "interlace/error.hpp"
#include "oracle.hpp"

namespace interlace {
namespace {

GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  GF2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
  return m;
}

std::vector<std::uint64_t> row_masks(const GF2Matrix& m) {
  std::vector<std::uint64_t> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r)[0]);
  return out;
}

TEST(Gf2Rank, Examples) {
  EXPECT_EQ(rank(GF2Matrix(0, 0)), 0U);
  EXPECT_EQ(rank(GF2Matrix::from_rows({{0, 1}, {1, 0}})), 2U);
  EXPECT_EQ(rank(GF2Matrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})), 2U);
}

TEST(Gf2Nullity, Examples) {
  EXPECT_EQ(nullity(GF2Matrix(0, 0)), 0U);
  EXPECT_EQ(nullity(GF2Matrix(1, 1)), 1U);
  EXPECT_EQ(nullity(GF2Matrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})), 1U);
}

TEST(Gf2Corank, Examples) {
  EXPECT_EQ(corank(GF2Matrix::identity(5)), 0U);
  EXPECT_EQ(corank(GF2Matrix(2, 2)), 2U);
  EXPECT_EQ(corank(GF2Matrix::from_rows({{0}})), 1U);
  EXPECT_THROW(corank(GF2Matrix(2, 3)), ContractError);
}

TEST(Gf2StackRank, Examples) {
  EXPECT_EQ(stack_rank(GF2Matrix::from_rows({{1, 0}}), GF2Matrix::from_rows({{1, 0}})), 1U);
  EXPECT_EQ(stack_rank(GF2Matrix::from_rows({{1, 0}}), GF2Matrix::from_rows({{0, 1}})), 2U);
  // K1 canonical system: L basis (x) = bits (1,0); F-hat for F = x is the same row.
  EXPECT_EQ(stack_rank(GF2Matrix::from_rows({{1, 0}}), GF2Matrix::from_rows({{1, 0}})), 1U);
  EXPECT_THROW(stack_rank(GF2Matrix(1, 2), GF2Matrix(1, 3)), ContractError);
}

TEST(Gf2Rank, DoesNotMutateInput) {
  const GF2Matrix m = GF2Matrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 1, 1}});
  const GF2Matrix copy = m;
  (void)rank(m);
  EXPECT_EQ(m, copy);
}

TEST(Gf2Rank, BoundedByShape) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = rng() % 9;
    const std::size_t cols = rng() % 140;
    const GF2Matrix m = random_matrix(rows, cols, rng);
    const std::size_t r = rank(m);
    EXPECT_LE(r, std::min(rows, cols));
    EXPECT_EQ(r + nullity(m), cols);
  }
}

TEST(Gf2Rank, InvariantUnderRowOperations) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = 2 + rng() % 7;
    const std::size_t cols = 1 + rng() % 100;
    GF2Matrix m = random_matrix(rows, cols, rng);
    const std::size_t before = rank(m);
    const std::size_t a = rng() % rows;
    std::size_t b = rng() % rows;
    if (b == a) b = (a + 1) % rows;
    // add row a to row b
    for (std::size_t c = 0; c < cols; ++c)
      if (m.get(a, c)) m.flip(b, c);
    EXPECT_EQ(rank(m), before);
    // swap rows a and b
    for (std::size_t c = 0; c < cols; ++c) {
      const bool t = m.get(a, c);
      m.set(a, c, m.get(b, c));
      m.set(b, c, t);
    }
    EXPECT_EQ(rank(m), before);
  }
}

TEST(Gf2Rank, MatchesRowSpaceEnumeration) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const GF2Matrix m = random_matrix(rng() % 9, 1 + rng() % 10, rng);
    EXPECT_EQ(rank(m), testing::brute_rank(row_masks(m)));
  }
}

TEST(Gf2StackRank, DimensionFormulaAgainstBruteIntersection) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const std::size_t cols = 1 + rng() % 10;
    const GF2Matrix a = random_matrix(rng() % 6, cols, rng);
    const GF2Matrix b = random_matrix(rng() % 6, cols, rng);
    const auto sa = testing::span_of(row_masks(a));
    const auto sb = testing::span_of(row_masks(b));
    std::size_t common = 0;
    for (auto v : sa) common += sb.count(v);
    const auto dim_meet = static_cast<std::size_t>(std::countr_zero(common));
    EXPECT_EQ(stack_rank(a, b), rank(a) + rank(b) - dim_meet);
  }
}

TEST(Gf2RankInPlace, AgreesWithColumnOrderElimination) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 1000; ++i) {
    const GF2Matrix m = random_matrix(rng() % 25, 1 + rng() % 64, rng);
    auto rows = row_masks(m);
    EXPECT_EQ(rank_in_place(rows), rank(m));
  }
}

TEST(Gf2Matrix, PaddingBitsStayZero) {
  GF2Matrix m(1, 5);
  m.set_row_mask(0, ~std::uint64_t{0});
  EXPECT_EQ(m.row(0)[0], 0x1FU);
  EXPECT_THROW(GF2Matrix(1, 70).set_row_mask(0, 1), ContractError);
}

}  // namespace
}  // namespace interlace
