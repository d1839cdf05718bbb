#include "causalgames/lp.hpp"

#include <cassert>
#include <stdexcept>

#include "causalgames/errors.hpp"

namespace causalgames {

const char* lp_status_name(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Standard-form tableau: rows over [real vars | slacks | artificials],
/// all right-hand sides nonnegative, one basic column per row.
struct Tableau {
  std::size_t num_real = 0;
  std::size_t slack_begin = 0;
  std::size_t art_begin = 0;
  std::size_t num_cols = 0;

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;     // basic column per row
  std::vector<std::size_t> init_col;  // initial identity column per row
  std::vector<int> row_sign;          // +1/-1 applied to the original row
  std::vector<std::size_t> row_origin;  // index into [eq rows ++ le rows]

  std::vector<Rational> reduced;  // c_j - y.A_j per column
  Rational value = 0;             // current objective value

  bool is_artificial(std::size_t col) const { return col >= art_begin; }

  void pivot(std::size_t p, std::size_t q) {
    const Rational inv = 1 / rows[p][q];
    for (auto& v : rows[p]) v *= inv;
    rhs[p] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == p || rows[i][q] == 0) continue;
      const Rational f = rows[i][q];
      for (std::size_t j = 0; j < num_cols; ++j) rows[i][j] -= f * rows[p][j];
      rows[i][q] = 0;  // cancel exactly
      rhs[i] -= f * rhs[p];
    }
    if (reduced[q] != 0) {
      const Rational f = reduced[q];
      for (std::size_t j = 0; j < num_cols; ++j) reduced[j] -= f * rows[p][j];
      reduced[q] = 0;
      value += f * rhs[p];
    }
    basis[p] = q;
  }

  /// Prices the given cost vector against the current basis.
  void load_objective(const std::vector<Rational>& costs) {
    reduced = costs;
    value = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational cb = costs[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < num_cols; ++j) reduced[j] -= cb * rows[i][j];
      value += cb * rhs[i];
    }
    for (std::size_t i = 0; i < rows.size(); ++i) reduced[basis[i]] = 0;
  }

  /// Bland's rule: entering column is the least index with positive
  /// reduced cost, the leaving row breaks ratio ties by least basic
  /// column. Returns the entering column of an unbounded direction, or
  /// kNone at optimality.
  std::size_t run_simplex(bool allow_artificial_entering) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < num_cols; ++j) {
        if (!allow_artificial_entering && is_artificial(j)) continue;
        if (reduced[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;

      std::size_t leave = kNone;
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == kNone) return enter;  // unbounded in this direction
      pivot(leave, enter);
    }
  }
};

Tableau build_tableau(const RationalLP& lp) {
  const std::size_t m_eq = lp.eq_rows.size();
  const std::size_t m_le = lp.le_rows.size();
  const std::size_t m = m_eq + m_le;

  Tableau t;
  t.num_real = lp.num_vars;
  t.slack_begin = lp.num_vars;
  t.art_begin = lp.num_vars + m_le;
  t.num_cols = t.art_begin;  // artificials appended below

  t.rows.assign(m, std::vector<Rational>(t.art_begin, Rational(0)));
  t.rhs.assign(m, Rational(0));
  t.basis.assign(m, kNone);
  t.init_col.assign(m, kNone);
  t.row_sign.assign(m, 1);
  t.row_origin.resize(m);

  for (std::size_t i = 0; i < m; ++i) {
    t.row_origin[i] = i;
    const bool is_eq = i < m_eq;
    const auto& src = is_eq ? lp.eq_rows[i] : lp.le_rows[i - m_eq];
    if (src.size() != lp.num_vars) {
      throw std::invalid_argument("lp row has wrong width");
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) t.rows[i][j] = src[j];
    t.rhs[i] = is_eq ? lp.eq_rhs[i] : lp.le_rhs[i - m_eq];
    if (!is_eq) t.rows[i][t.slack_begin + (i - m_eq)] = 1;
    if (t.rhs[i] < 0) {
      t.row_sign[i] = -1;
      for (auto& v : t.rows[i]) v = -v;
      t.rhs[i] = -t.rhs[i];
    }
    if (!is_eq && t.row_sign[i] == 1) {
      t.basis[i] = t.init_col[i] = t.slack_begin + (i - m_eq);
    }
  }

  // Artificial columns for equality rows and negated inequality rows.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] != kNone) continue;
    for (auto& row : t.rows) row.push_back(Rational(0));
    t.rows[i][t.num_cols] = 1;
    t.basis[i] = t.init_col[i] = t.num_cols;
    ++t.num_cols;
  }
  return t;
}

std::vector<Rational> padded_objective(const RationalLP& lp, const Tableau& t) {
  std::vector<Rational> costs(t.num_cols, Rational(0));
  for (std::size_t j = 0; j < lp.objective.size() && j < lp.num_vars; ++j) {
    costs[j] = lp.objective[j];
  }
  return costs;
}

/// Multipliers on the original rows, read off the reduced-cost entries of
/// each row's initial identity column.
void extract_duals(const RationalLP& lp, const Tableau& t,
                   const std::vector<Rational>& costs, LPResult& out) {
  out.dual_eq.assign(lp.eq_rows.size(), Rational(0));
  out.dual_le.assign(lp.le_rows.size(), Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const std::size_t k = t.init_col[i];
    Rational y = costs[k] - t.reduced[k];
    y *= t.row_sign[i];
    const std::size_t origin = t.row_origin[i];
    if (origin < lp.eq_rows.size()) {
      out.dual_eq[origin] = y;
    } else {
      out.dual_le[origin - lp.eq_rows.size()] = y;
    }
  }
}

}  // namespace

LPResult solve(const RationalLP& lp) {
  if (lp.eq_rows.size() != lp.eq_rhs.size() || lp.le_rows.size() != lp.le_rhs.size()) {
    throw std::invalid_argument("lp rhs length mismatch");
  }

  Tableau t = build_tableau(lp);
  LPResult result;

  // Phase 1: maximize minus the sum of artificials.
  if (t.num_cols > t.art_begin) {
    std::vector<Rational> phase1(t.num_cols, Rational(0));
    for (std::size_t j = t.art_begin; j < t.num_cols; ++j) phase1[j] = -1;
    t.load_objective(phase1);
    std::size_t dir = t.run_simplex(/*allow_artificial_entering=*/true);
    assert(dir == kNone);  // phase-1 objective is bounded above by zero
    (void)dir;
    if (t.value != 0) {
      result.status = LPStatus::infeasible;
      extract_duals(lp, t, phase1, result);
      if (!verify_certificate(lp, result)) {
        throw std::logic_error("lp: infeasibility certificate failed verification");
      }
      return result;
    }

    // Drive artificials out of the basis; an all-zero row is a redundant
    // constraint and is dropped.
    for (std::size_t i = t.rows.size(); i-- > 0;) {
      if (!t.is_artificial(t.basis[i])) continue;
      std::size_t q = kNone;
      for (std::size_t j = 0; j < t.art_begin; ++j) {
        if (t.rows[i][j] != 0) {
          q = j;
          break;
        }
      }
      if (q != kNone) {
        t.pivot(i, q);
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        t.init_col.erase(t.init_col.begin() + static_cast<std::ptrdiff_t>(i));
        t.row_sign.erase(t.row_sign.begin() + static_cast<std::ptrdiff_t>(i));
        t.row_origin.erase(t.row_origin.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  // Phase 2.
  std::vector<Rational> costs = padded_objective(lp, t);
  t.load_objective(costs);
  std::size_t dir = t.run_simplex(/*allow_artificial_entering=*/false);

  result.primal.assign(lp.num_vars, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < lp.num_vars) result.primal[t.basis[i]] = t.rhs[i];
  }

  if (dir != kNone) {
    result.status = LPStatus::unbounded;
    result.ray.assign(lp.num_vars, Rational(0));
    if (dir < lp.num_vars) result.ray[dir] = 1;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basis[i] < lp.num_vars) result.ray[t.basis[i]] = -t.rows[i][dir];
    }
  } else {
    result.status = LPStatus::optimal;
    result.objective_value = t.value;
    extract_duals(lp, t, costs, result);
  }

  if (!verify_certificate(lp, result)) {
    throw std::logic_error("lp: certificate failed verification");
  }
  return result;
}

bool verify_certificate(const RationalLP& lp, const LPResult& result) {
  const std::size_t n = lp.num_vars;

  auto primal_feasible = [&](const std::vector<Rational>& x) {
    if (x.size() != n) return false;
    for (const auto& v : x) {
      if (v < 0) return false;
    }
    for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += lp.eq_rows[i][j] * x[j];
      if (lhs != lp.eq_rhs[i]) return false;
    }
    for (std::size_t i = 0; i < lp.le_rows.size(); ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += lp.le_rows[i][j] * x[j];
      if (lhs > lp.le_rhs[i]) return false;
    }
    return true;
  };

  auto objective_of = [&](const std::vector<Rational>& x) {
    Rational v = 0;
    for (std::size_t j = 0; j < lp.objective.size() && j < n; ++j) v += lp.objective[j] * x[j];
    return v;
  };

  auto dual_row = [&](std::size_t j) {
    // (u.A + v.G) entry for variable j
    Rational v = 0;
    for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) v += result.dual_eq[i] * lp.eq_rows[i][j];
    for (std::size_t i = 0; i < lp.le_rows.size(); ++i) v += result.dual_le[i] * lp.le_rows[i][j];
    return v;
  };

  auto dual_rhs = [&]() {
    Rational v = 0;
    for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) v += result.dual_eq[i] * lp.eq_rhs[i];
    for (std::size_t i = 0; i < lp.le_rows.size(); ++i) v += result.dual_le[i] * lp.le_rhs[i];
    return v;
  };

  if (result.status != LPStatus::unbounded &&
      (result.dual_eq.size() != lp.eq_rows.size() || result.dual_le.size() != lp.le_rows.size())) {
    return false;
  }

  switch (result.status) {
    case LPStatus::optimal: {
      if (!primal_feasible(result.primal)) return false;
      if (objective_of(result.primal) != result.objective_value) return false;
      for (const auto& v : result.dual_le) {
        if (v < 0) return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        Rational cj = j < lp.objective.size() ? lp.objective[j] : Rational(0);
        if (dual_row(j) < cj) return false;
      }
      return dual_rhs() == result.objective_value;
    }
    case LPStatus::infeasible: {
      for (const auto& v : result.dual_le) {
        if (v < 0) return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (dual_row(j) < 0) return false;
      }
      return dual_rhs() < 0;
    }
    case LPStatus::unbounded: {
      if (!primal_feasible(result.primal)) return false;
      if (result.ray.size() != n) return false;
      Rational gain = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (result.ray[j] < 0) return false;
        if (j < lp.objective.size()) gain += lp.objective[j] * result.ray[j];
      }
      for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += lp.eq_rows[i][j] * result.ray[j];
        if (lhs != 0) return false;
      }
      for (std::size_t i = 0; i < lp.le_rows.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += lp.le_rows[i][j] * result.ray[j];
        if (lhs > 0) return false;
      }
      return gain > 0;
    }
  }
  return false;
}

}  // namespace causalgames
