#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace irr::bockstein {

/// Dense matrix over F_p, p prime (p < 2^31).
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores value mod p; negative values are reduced into 0..p-1.
  void set(std::size_t r, std::size_t c, std::int64_t value);

  bool is_zero() const;
  std::size_t rank() const;

  /// Column vectors spanning the kernel.
  std::vector<std::vector<std::uint64_t>> kernel_basis() const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> data_;
};

/// Rank of a list of vectors of equal length over F_p.
std::size_t span_rank(const std::vector<std::vector<std::uint64_t>>& vectors, std::uint64_t p);

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace irr::bockstein
