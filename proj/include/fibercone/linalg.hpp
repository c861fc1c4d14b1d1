#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fibercone {

/// Sparse row: (column, value) pairs, values already reduced mod p.
using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Rank over F_p by incremental Gaussian elimination against reduced pivots.
class RowEchelon {
 public:
  RowEchelon(std::size_t ncols, std::uint32_t prime);

  /// Reduces the row; returns true if it was independent and got added.
  bool insert(const SparseRow& row);
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t ncols_;
  std::uint32_t prime_;
  std::size_t rank_ = 0;
  // pivots_[c] is the monic row whose leading column is c (empty if none).
  std::vector<SparseRow> pivots_;
  std::vector<std::uint32_t> dense_;
};

std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::size_t ncols, std::uint32_t prime);

}  // namespace fibercone
