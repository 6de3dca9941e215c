#include "interlace/gf2.hpp"

#include <algorithm>
#include <string>

#include "interlace/error.hpp"

namespace interlace {

namespace {

constexpr std::size_t words_for(std::size_t cols) {
  return (cols + GF2Matrix::kWordBits - 1) / GF2Matrix::kWordBits;
}

// Column-order Gaussian elimination over whole words. For each column the
// first row at or below the current rank with that bit set becomes the pivot.
std::size_t eliminate(std::vector<GF2Matrix::Word>& data, std::size_t rows, std::size_t cols,
                      std::size_t words) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    const std::size_t w = c / GF2Matrix::kWordBits;
    const GF2Matrix::Word bit = GF2Matrix::Word{1} << (c % GF2Matrix::kWordBits);
    std::size_t pivot = rank;
    while (pivot < rows && (data[pivot * words + w] & bit) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(data.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                       data.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                       data.begin() + static_cast<std::ptrdiff_t>(rank * words));
    }
    const GF2Matrix::Word* src = &data[rank * words];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      GF2Matrix::Word* dst = &data[r * words];
      if (dst[w] & bit) {
        for (std::size_t k = w; k < words; ++k) dst[k] ^= src[k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

GF2Matrix GF2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  GF2Matrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw ContractError("GF2Matrix::from_rows: ragged rows");
    std::size_t c = 0;
    for (int v : row) m.set(r, c++, (v & 1) != 0);
    ++r;
  }
  return m;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool GF2Matrix::get(std::size_t r, std::size_t c) const {
  return (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * words_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

void GF2Matrix::flip(std::size_t r, std::size_t c) {
  data_[r * words_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
}

std::span<const GF2Matrix::Word> GF2Matrix::row(std::size_t r) const {
  return {data_.data() + r * words_, words_};
}

std::span<GF2Matrix::Word> GF2Matrix::row(std::size_t r) {
  return {data_.data() + r * words_, words_};
}

void GF2Matrix::set_row_mask(std::size_t r, Word mask) {
  if (cols_ > kWordBits) throw ContractError("GF2Matrix::set_row_mask: more than 64 columns");
  if (cols_ == 0) return;
  const Word keep = cols_ == kWordBits ? ~Word{0} : ((Word{1} << cols_) - 1);
  data_[r * words_] = mask & keep;
}

std::size_t GF2Matrix::append_row() {
  data_.resize(data_.size() + words_, 0);
  return rows_++;
}

std::size_t rank(const GF2Matrix& m) {
  std::vector<GF2Matrix::Word> scratch;
  scratch.reserve(m.rows() * m.words_per_row());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    scratch.insert(scratch.end(), row.begin(), row.end());
  }
  return eliminate(scratch, m.rows(), m.cols(), m.words_per_row());
}

std::size_t nullity(const GF2Matrix& m) { return m.cols() - rank(m); }

std::size_t corank(const GF2Matrix& m) {
  if (m.rows() != m.cols()) {
    throw ContractError("corank: matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected square");
  }
  return m.cols() - rank(m);
}

std::size_t stack_rank(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols() != b.cols()) {
    throw ContractError("stack_rank: column mismatch (" + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.cols()) + ")");
  }
  std::vector<GF2Matrix::Word> scratch;
  const std::size_t words = a.words_per_row();
  scratch.reserve((a.rows() + b.rows()) * words);
  for (const GF2Matrix* m : {&a, &b}) {
    for (std::size_t r = 0; r < m->rows(); ++r) {
      auto row = m->row(r);
      scratch.insert(scratch.end(), row.begin(), row.end());
    }
  }
  return eliminate(scratch, a.rows() + b.rows(), a.cols(), words);
}

std::size_t rank_in_place(std::span<std::uint64_t> rows) noexcept {
  std::size_t rank = 0;
  const std::size_t k = rows.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t r = rows[i];
    if (r == 0) continue;
    ++rank;
    const std::uint64_t low = r & (~r + 1);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (rows[j] & low) rows[j] ^= r;
    }
  }
  return rank;
}

}  // namespace interlace
