#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace interlace {

/// Dense matrix over GF(2), rows bit-packed into 64-bit words.
///
/// Bit c of row r lives in word c / 64 at position c % 64. Bits beyond
/// cols() in the last word of every row are kept zero.
class GF2Matrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  /// Literal construction, mostly for tests: {{0,1},{1,0}}.
  static GF2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  /// Square identity.
  static GF2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  std::span<const Word> row(std::size_t r) const;
  std::span<Word> row(std::size_t r);

  /// Overwrites row r from a bit mask; only valid when cols() <= 64.
  void set_row_mask(std::size_t r, Word mask);

  /// Appends a zero row and returns its index.
  std::size_t append_row();

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

/// Dimension of the row space. Works on a scratch copy.
std::size_t rank(const GF2Matrix& m);

/// cols - rank.
std::size_t nullity(const GF2Matrix& m);

/// n - rank for a square n x n matrix; throws ContractError otherwise.
std::size_t corank(const GF2Matrix& m);

/// Rank of the vertical concatenation of a and b (equal column counts).
std::size_t stack_rank(const GF2Matrix& a, const GF2Matrix& b);

/// Rank of a set of single-word rows, eliminating in place.
///
/// This is the hot kernel of the subset sums: every row fits one word, so
/// elimination is a handful of XORs per row. The contents of rows are
/// destroyed.
std::size_t rank_in_place(std::span<std::uint64_t> rows) noexcept;

}  // namespace interlace
