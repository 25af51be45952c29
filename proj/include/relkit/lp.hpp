#ifndef RELKIT_LP_HPP
#define RELKIT_LP_HPP

#include <cstddef>
#include <variant>

#include "relkit/rational.hpp"

namespace relkit {

enum class Sense { maximize, minimize };

/// Linear program over free variables x:
///   optimize objective . x  subject to  A x <= b,  E x = d.
/// Empty constraint blocks are allowed (whole space).
struct LPProblem {
  RatVector objective;
  Sense sense = Sense::maximize;
  RatMatrix A;
  RatVector b;
  RatMatrix E;
  RatVector d;

  std::size_t num_vars() const { return objective.size(); }

  /// Pure feasibility problem in `n` variables (zero objective).
  static LPProblem feasibility(std::size_t n);
  void add_le(RatVector row, Rational rhs);
  void add_eq(RatVector row, Rational rhs);
};

/// Multipliers combining the rows of an infeasible system into the
/// contradiction 0 . x <= c with c < 0:
///   y >= 0,  A^T y + E^T z = 0,  b . y + d . z < 0.
struct FarkasCertificate {
  RatVector multipliers_ineq;
  RatVector multipliers_eq;
};

struct LPOptimal {
  RatVector point;
  Rational value;
  /// Dual solution of the maximization form. With s = +1 for maximize and
  /// s = -1 for minimize: y >= 0, A^T y + E^T z = s * objective and
  /// b . y + d . z = s * value.
  RatVector dual_ineq;
  RatVector dual_eq;
};

struct LPInfeasible {
  FarkasCertificate certificate;
};

/// `point` is feasible; `ray` satisfies A ray <= 0, E ray = 0 and strictly
/// improves the objective.
struct LPUnbounded {
  RatVector point;
  RatVector ray;
};

struct LPOutcome {
  std::variant<LPOptimal, LPInfeasible, LPUnbounded> result;
  std::size_t pivots = 0;

  bool optimal() const { return std::holds_alternative<LPOptimal>(result); }
  bool infeasible() const { return std::holds_alternative<LPInfeasible>(result); }
  bool unbounded() const { return std::holds_alternative<LPUnbounded>(result); }
  const LPOptimal& as_optimal() const { return std::get<LPOptimal>(result); }
  const LPInfeasible& as_infeasible() const { return std::get<LPInfeasible>(result); }
  const LPUnbounded& as_unbounded() const { return std::get<LPUnbounded>(result); }
};

/// Two-phase primal simplex over exact rationals with Bland's rule (lowest
/// entering index, ties in the ratio test broken by lowest basic index).
/// Deterministic; throws InputError on inconsistent dimensions.
LPOutcome lp_solve(const LPProblem& p);

/// True iff `cert` is a valid infeasibility proof for `p`. Malformed
/// certificates (wrong lengths, negative inequality multipliers) give false.
bool verify_farkas(const LPProblem& p, const FarkasCertificate& cert);

/// Re-checks every invariant of an outcome against `p`: feasibility and
/// value for Optimal (including the dual certificate), Farkas validity for
/// Infeasible, feasibility and improving ray for Unbounded.
bool verify_outcome(const LPProblem& p, const LPOutcome& outcome);

/// Checks dimensions; throws InputError.
void validate(const LPProblem& p);

}  // namespace relkit

#endif  // RELKIT_LP_HPP
