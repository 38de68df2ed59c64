#include "irr/bockstein/fp_matrix.hpp"

#include <algorithm>

#include "irr/errors.hpp"

namespace irr::bockstein {

namespace {

// Row-reduces in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols,
                                    std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m[row * cols + c], m[pivot * cols + c]);
    const std::uint64_t inv = inverse_mod(m[row * cols + col], p);
    for (std::size_t c = 0; c < cols; ++c) m[row * cols + c] = m[row * cols + c] * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r * cols + col] == 0) continue;
      const std::uint64_t factor = m[r * cols + col];
      for (std::size_t c = 0; c < cols; ++c)
        m[r * cols + c] = (m[r * cols + c] + (p - factor) * m[row * cols + c]) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DomainError("zero has no inverse mod p");
  std::uint64_t result = 1, base = a, exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2 || p >= (1ULL << 31)) throw DomainError("FpMatrix prime out of range");
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  const auto pp = static_cast<std::int64_t>(p_);
  data_[r * cols_ + c] = static_cast<std::uint64_t>(((value % pp) + pp) % pp);
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

std::size_t FpMatrix::rank() const {
  auto copy = data_;
  return row_reduce(copy, rows_, cols_, p_).size();
}

std::vector<std::vector<std::uint64_t>> FpMatrix::kernel_basis() const {
  auto reduced = data_;
  const auto pivots = row_reduce(reduced, rows_, cols_, p_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::uint64_t entry = reduced[r * cols_ + free];
      v[pivots[r]] = (p_ - entry) % p_;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw DomainError("FpMatrix shape mismatch");
  FpMatrix out(a.rows_, b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.data_[i * out.cols_ + j] = (out.data_[i * out.cols_ + j] + x * b.at(k, j)) % a.p_;
    }
  return out;
}

std::size_t span_rank(const std::vector<std::vector<std::uint64_t>>& vectors, std::uint64_t p) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::uint64_t> m;
  m.reserve(vectors.size() * cols);
  for (const auto& v : vectors) m.insert(m.end(), v.begin(), v.end());
  return row_reduce(m, vectors.size(), cols, p).size();
}

}  // namespace irr::bockstein
