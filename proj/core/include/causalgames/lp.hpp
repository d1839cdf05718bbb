#pragma once

#include <cstddef>
#include <vector>

#include "causalgames/rational.hpp"

namespace causalgames {

/// maximize objective . x
/// subject to eq_rows . x = eq_rhs, le_rows . x <= le_rhs, x >= 0,
/// everything an exact rational. An empty objective means a pure
/// feasibility problem.
struct RationalLP {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> eq_rows;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> le_rows;
  std::vector<Rational> le_rhs;
};

enum class LPStatus { optimal, infeasible, unbounded };

const char* lp_status_name(LPStatus s);

/// Every outcome carries an exactly verifiable certificate:
///  - optimal: primal solution plus dual multipliers (dual_eq free,
///    dual_le >= 0) with matching objective values;
///  - infeasible: Farkas multipliers u, v >= 0 with u.A + v.G >= 0
///    componentwise and u.b + v.h < 0;
///  - unbounded: a feasible point plus an improving ray.
struct LPResult {
  LPStatus status = LPStatus::infeasible;
  std::vector<Rational> primal;
  Rational objective_value = 0;
  std::vector<Rational> dual_eq;
  std::vector<Rational> dual_le;
  std::vector<Rational> ray;
};

/// Dense two-phase primal simplex over big rationals with Bland's rule
/// throughout, so every solve terminates. The returned certificate is
/// re-verified before the result is handed back.
LPResult solve(const RationalLP& lp);

/// Re-derives the certificate inequalities by exact arithmetic.
bool verify_certificate(const RationalLP& lp, const LPResult& result);

}  // namespace causalgames
