#include "relkit/lp.hpp"

#include <limits>
#include <optional>

#include "relkit/errors.hpp"

namespace relkit {

LPProblem LPProblem::feasibility(std::size_t n) {
  LPProblem p;
  p.objective = zeros(n);
  p.A = RatMatrix(n);
  p.E = RatMatrix(n);
  return p;
}

void LPProblem::add_le(RatVector row, Rational rhs) {
  A.append_row(std::move(row));
  b.push_back(std::move(rhs));
}

void LPProblem::add_eq(RatVector row, Rational rhs) {
  E.append_row(std::move(row));
  d.push_back(std::move(rhs));
}

void validate(const LPProblem& p) {
  const std::size_t n = p.num_vars();
  require_dim(p.A.ncols(), n, "inequality matrix width");
  require_dim(p.E.ncols(), n, "equality matrix width");
  require_dim(p.b.size(), p.A.nrows(), "inequality right-hand side");
  require_dim(p.d.size(), p.E.nrows(), "equality right-hand side");
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau in standard form  M w = r, w >= 0, r >= 0 where
// w = (x+, x-, slacks, artificials). The columns that formed the initial
// identity basis are remembered so B^-1 can be read off the tableau.
class Tableau {
public:
  explicit Tableau(const LPProblem& p) : n_(p.num_vars()), p_(p.A.nrows()), q_(p.E.nrows()) {
    const std::size_t m = p_ + q_;
    sigma_.assign(m, 1);
    idcol_.assign(m, 0);
    std::size_t nart = 0;
    for (std::size_t i = 0; i < p_; ++i)
      if (sgn(p.b[i]) < 0) ++nart;
    nart += q_;
    first_art_ = 2 * n_ + p_;
    width_ = first_art_ + nart;
    rows_.assign(m, RatVector(width_ + 1));
    basis_.assign(m, 0);

    std::size_t art = first_art_;
    for (std::size_t i = 0; i < m; ++i) {
      const bool is_eq = i >= p_;
      const RatVector& coef = is_eq ? p.E.row(i - p_) : p.A.row(i);
      const Rational& rhs = is_eq ? p.d[i - p_] : p.b[i];
      const int s = sgn(rhs) < 0 ? -1 : 1;
      sigma_[i] = s;
      RatVector& row = rows_[i];
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(coef[j]) == 0) continue;
        row[j] = s * coef[j];
        row[n_ + j] = -row[j];
      }
      if (!is_eq) row[2 * n_ + i] = s;
      row[width_] = s * rhs;
      if (is_eq || s < 0) {
        row[art] = 1;
        idcol_[i] = art;
        basis_[i] = art;
        ++art;
      } else {
        idcol_[i] = 2 * n_ + i;
        basis_[i] = 2 * n_ + i;
      }
    }
  }

  bool has_artificials() const { return width_ > first_art_; }
  std::size_t pivots() const { return pivots_; }

  // Sets the reduced-cost row for cost vector `cost` (length width_).
  void set_costs(const RatVector& cost) {
    cost_ = cost;
    obj_.assign(width_ + 1, Rational(0));
    for (std::size_t j = 0; j < width_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(rows_[i][j]) != 0) obj_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland's rule over columns [0, allowed). Returns npos at optimality
  // or the entering column that proves unboundedness.
  std::size_t run(std::size_t allowed) {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return npos;
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][width_] / rows_[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == npos) return enter;
      pivot(leave, enter);
    }
  }

  Rational artificial_total() const {
    Rational s = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] >= first_art_) s += rows_[i][width_];
    return s;
  }

  // Pivots zero-level artificials out of the basis where a structural
  // column allows it; rows with no such column are redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // pi = c_B^T B^-1, mapped to multipliers on the original rows.
  void duals(RatVector& ineq, RatVector& eq) const {
    ineq.assign(p_, Rational(0));
    eq.assign(q_, Rational(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Rational pi = 0;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& cb = cost_[basis_[i]];
        if (sgn(cb) != 0) pi += cb * rows_[i][idcol_[k]];
      }
      Rational y = -pi * sigma_[k];
      if (k < p_)
        ineq[k] = std::move(y);
      else
        eq[k - p_] = std::move(y);
    }
  }

  RatVector point() const {
    RatVector w(width_);
    for (std::size_t i = 0; i < rows_.size(); ++i) w[basis_[i]] = rows_[i][width_];
    return to_x(w);
  }

  RatVector ray(std::size_t enter) const {
    RatVector w(width_);
    w[enter] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) w[basis_[i]] = -rows_[i][enter];
    return to_x(w);
  }

  std::size_t structural_width() const { return first_art_; }
  std::size_t width() const { return width_; }
  std::size_t n() const { return n_; }

private:
  RatVector to_x(const RatVector& w) const {
    RatVector x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = w[j] - w[n_ + j];
    return x;
  }

  void pivot(std::size_t r, std::size_t c) {
    RatVector& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    auto eliminate = [&](RatVector& row) {
      if (sgn(row[c]) == 0) return;
      const Rational f = row[c];
      for (auto j : nz) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(obj_);
    basis_[r] = c;
    ++pivots_;
  }

  std::size_t n_, p_, q_;
  std::size_t first_art_ = 0, width_ = 0;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> basis_;
  std::vector<int> sigma_;
  std::vector<std::size_t> idcol_;
  RatVector cost_;
  RatVector obj_;
  std::size_t pivots_ = 0;
};

bool feasible(const LPProblem& p, const RatVector& x) {
  for (std::size_t i = 0; i < p.A.nrows(); ++i)
    if (dot(p.A.row(i), x) > p.b[i]) return false;
  for (std::size_t i = 0; i < p.E.nrows(); ++i)
    if (dot(p.E.row(i), x) != p.d[i]) return false;
  return true;
}

int sense_sign(Sense s) { return s == Sense::maximize ? 1 : -1; }

}  // namespace

LPOutcome lp_solve(const LPProblem& p) {
  validate(p);
  Tableau t(p);
  const std::size_t n = p.num_vars();

  if (t.has_artificials()) {
    RatVector phase1(t.width());
    for (std::size_t j = t.structural_width(); j < t.width(); ++j) phase1[j] = 1;
    t.set_costs(phase1);
    t.run(t.width());
    if (sgn(t.artificial_total()) > 0) {
      LPInfeasible inf;
      t.duals(inf.certificate.multipliers_ineq, inf.certificate.multipliers_eq);
      return LPOutcome{std::move(inf), t.pivots()};
    }
    t.drive_out_artificials();
  }

  const int s = sense_sign(p.sense);
  RatVector phase2(t.width());
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = -s * p.objective[j];
    phase2[n + j] = s * p.objective[j];
  }
  t.set_costs(phase2);
  const std::size_t enter = t.run(t.structural_width());
  if (enter != npos) return LPOutcome{LPUnbounded{t.point(), t.ray(enter)}, t.pivots()};

  LPOptimal opt;
  opt.point = t.point();
  opt.value = dot(p.objective, opt.point);
  t.duals(opt.dual_ineq, opt.dual_eq);
  return LPOutcome{std::move(opt), t.pivots()};
}

bool verify_farkas(const LPProblem& p, const FarkasCertificate& cert) {
  const std::size_t n = p.num_vars();
  if (p.A.ncols() != n || p.E.ncols() != n || p.b.size() != p.A.nrows() || p.d.size() != p.E.nrows())
    return false;
  if (cert.multipliers_ineq.size() != p.A.nrows() || cert.multipliers_eq.size() != p.E.nrows()) return false;
  for (const auto& y : cert.multipliers_ineq)
    if (sgn(y) < 0) return false;
  RatVector combo = zeros(n);
  Rational rhs = 0;
  for (std::size_t i = 0; i < p.A.nrows(); ++i) {
    combo = combo + cert.multipliers_ineq[i] * p.A.row(i);
    rhs += cert.multipliers_ineq[i] * p.b[i];
  }
  for (std::size_t i = 0; i < p.E.nrows(); ++i) {
    combo = combo + cert.multipliers_eq[i] * p.E.row(i);
    rhs += cert.multipliers_eq[i] * p.d[i];
  }
  return is_zero(combo) && sgn(rhs) < 0;
}

bool verify_outcome(const LPProblem& p, const LPOutcome& outcome) {
  const int s = sense_sign(p.sense);
  if (outcome.infeasible()) return verify_farkas(p, outcome.as_infeasible().certificate);
  if (outcome.unbounded()) {
    const auto& u = outcome.as_unbounded();
    if (!feasible(p, u.point)) return false;
    for (std::size_t i = 0; i < p.A.nrows(); ++i)
      if (sgn(dot(p.A.row(i), u.ray)) > 0) return false;
    for (std::size_t i = 0; i < p.E.nrows(); ++i)
      if (sgn(dot(p.E.row(i), u.ray)) != 0) return false;
    return s * sgn(dot(p.objective, u.ray)) > 0;
  }
  const auto& o = outcome.as_optimal();
  if (!feasible(p, o.point) || o.value != dot(p.objective, o.point)) return false;
  if (o.dual_ineq.size() != p.A.nrows() || o.dual_eq.size() != p.E.nrows()) return false;
  RatVector combo = zeros(p.num_vars());
  Rational dual_value = 0;
  for (std::size_t i = 0; i < p.A.nrows(); ++i) {
    if (sgn(o.dual_ineq[i]) < 0) return false;
    combo = combo + o.dual_ineq[i] * p.A.row(i);
    dual_value += o.dual_ineq[i] * p.b[i];
  }
  for (std::size_t i = 0; i < p.E.nrows(); ++i) {
    combo = combo + o.dual_eq[i] * p.E.row(i);
    dual_value += o.dual_eq[i] * p.d[i];
  }
  return combo == Rational(s) * p.objective && dual_value == s * o.value;
}

}  // namespace relkit
