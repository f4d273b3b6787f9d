#pragma once

// Gaussian elimination over F_q for the small systems that appear when
// building conjugators and inverting rational transforms.

#include <optional>
#include <vector>

#include "pglinv/field.hpp"

namespace pglinv {

struct AffineSolution {
  std::vector<Felt> particular;
  std::vector<std::vector<Felt>> kernel;  // basis of the homogeneous solution space
};

/// Solves rows * x = rhs. Returns nothing when the system is inconsistent.
inline std::optional<AffineSolution> solve_linear(const Field& f, std::vector<std::vector<Felt>> rows,
                                                  std::vector<Felt> rhs, std::size_t ncols) {
  const std::size_t nrows = rows.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && rows[piv][c].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    const Felt inv = rows[r][c].inv();
    for (auto& x : rows[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Felt t = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= t * rows[r][j];
      rhs[i] -= t * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nrows; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(ncols, f.zero());
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) sol.particular[pivot_cols[i]] = rhs[i];
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Felt> v(ncols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][free];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace pglinv
