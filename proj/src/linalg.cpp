#include "fibercone/linalg.hpp"

#include <algorithm>

#include "fibercone/modular.hpp"

namespace fibercone {

namespace modp {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace modp

RowEchelon::RowEchelon(std::size_t ncols, std::uint32_t prime)
    : ncols_(ncols), prime_(prime), pivots_(ncols), dense_(ncols, 0) {
  modp::require_odd_prime(prime);
}

bool RowEchelon::insert(const SparseRow& row) {
  if (row.empty()) return false;
  std::uint32_t lo = static_cast<std::uint32_t>(ncols_);
  for (auto [c, v] : row) {
    require(c < ncols_, "column out of range");
    dense_[c] = modp::add(dense_[c], v % prime_, prime_);
    lo = std::min(lo, c);
  }
  std::size_t lead = ncols_;
  for (std::size_t c = lo; c < ncols_; ++c) {
    std::uint32_t v = dense_[c];
    if (v == 0) continue;
    if (pivots_[c].empty()) {
      lead = c;
      break;
    }
    // Pivot rows are monic at their leading column.
    for (auto [pc, pv] : pivots_[c]) dense_[pc] = modp::sub(dense_[pc], modp::mul(v, pv, prime_), prime_);
  }
  if (lead == ncols_) return false;

  std::uint32_t scale = modp::inv(dense_[lead], prime_);
  SparseRow reduced;
  for (std::size_t c = lead; c < ncols_; ++c) {
    if (dense_[c] != 0) {
      reduced.emplace_back(static_cast<std::uint32_t>(c), modp::mul(dense_[c], scale, prime_));
      dense_[c] = 0;
    }
  }
  pivots_[lead] = std::move(reduced);
  ++rank_;
  return true;
}

std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::size_t ncols, std::uint32_t prime) {
  RowEchelon echelon(ncols, prime);
  for (const auto& r : rows) echelon.insert(r);
  return echelon.rank();
}

}  // namespace fibercone
