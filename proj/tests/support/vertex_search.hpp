#pragma once

#include <functional>
#include <vector>

#include "causalgames/lp.hpp"

namespace causalgames::testing {

/// Exhaustive feasibility oracle: after slacking the inequalities, a
/// consistent system with x >= 0 is feasible iff some basic solution is
/// nonnegative. Enumerates all column subsets of rank size; exponential,
/// for systems of at most ~20 columns.
inline bool feasible_by_vertex_search(const RationalLP& lp) {
  const std::size_t m = lp.eq_rows.size() + lp.le_rows.size();
  const std::size_t n = lp.num_vars + lp.le_rows.size();

  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) {
    for (std::size_t j = 0; j < lp.num_vars; ++j) a[i][j] = lp.eq_rows[i][j];
    a[i][n] = lp.eq_rhs[i];
  }
  for (std::size_t i = 0; i < lp.le_rows.size(); ++i) {
    auto& row = a[lp.eq_rows.size() + i];
    for (std::size_t j = 0; j < lp.num_vars; ++j) row[j] = lp.le_rows[i][j];
    row[lp.num_vars + i] = 1;
    row[n] = lp.le_rhs[i];
  }

  // Row echelon over the augmented matrix; consistency check and rank.
  std::vector<std::vector<Rational>> red = a;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && red[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(red[rank], red[pivot]);
    const Rational inv = 1 / red[rank][col];
    for (auto& v : red[rank]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || red[i][col] == 0) continue;
      const Rational f = red[i][col];
      for (std::size_t j = 0; j <= n; ++j) red[i][j] -= f * red[rank][j];
    }
    ++rank;
  }
  for (std::size_t i = rank; i < m; ++i) {
    if (red[i][n] != 0) return false;  // 0 = nonzero
  }

  std::vector<std::size_t> cols(rank, 0);
  auto satisfies_all = [&](const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < m; ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * x[j];
      if (lhs != a[i][n]) return false;
    }
    return true;
  };

  // All column subsets of size `rank`.
  std::vector<std::size_t> subset;
  auto try_subset = [&](const std::vector<std::size_t>& chosen) {
    // Solve the reduced system restricted to the chosen columns.
    std::vector<std::vector<Rational>> sys(rank, std::vector<Rational>(rank + 1, Rational(0)));
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t k = 0; k < rank; ++k) sys[i][k] = red[i][chosen[k]];
      sys[i][rank] = red[i][n];
    }
    for (std::size_t col = 0; col < rank; ++col) {
      std::size_t pivot = col;
      while (pivot < rank && sys[pivot][col] == 0) ++pivot;
      if (pivot == rank) return false;  // singular basis
      std::swap(sys[col], sys[pivot]);
      const Rational inv = 1 / sys[col][col];
      for (auto& v : sys[col]) v *= inv;
      for (std::size_t i = 0; i < rank; ++i) {
        if (i == col || sys[i][col] == 0) continue;
        const Rational f = sys[i][col];
        for (std::size_t j = 0; j <= rank; ++j) sys[i][j] -= f * sys[col][j];
      }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t k = 0; k < rank; ++k) {
      if (sys[k][rank] < 0) return false;
      x[chosen[k]] = sys[k][rank];
    }
    return satisfies_all(x);
  };

  if (rank == 0) return true;  // all-zero consistent system; x = 0 works

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (chosen.size() == rank) return try_subset(chosen);
    for (std::size_t c = start; c + (rank - chosen.size()) <= n; ++c) {
      chosen.push_back(c);
      if (rec(c + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace causalgames::testing
