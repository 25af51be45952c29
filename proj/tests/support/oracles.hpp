// Test-only helpers: literal builders, brute-force oracles that do not go
// through the simplex or double-description code, and random instance
// generators shared by the property and acceptance suites.
#ifndef RELKIT_TESTS_ORACLES_HPP
#define RELKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "relkit/linalg.hpp"
#include "relkit/lp.hpp"
#include "relkit/polyhedron.hpp"
#include "relkit/rational.hpp"
#include "relkit/sampling.hpp"
#include "relkit/seqspace.hpp"
#include "relkit/setmaps.hpp"

namespace relkit::testing {

inline Rational Q(const char* s) { return parse_rational(s); }

inline RatVector V(std::initializer_list<const char*> xs) {
  RatVector v;
  for (auto s : xs) v.push_back(parse_rational(s));
  return v;
}

inline RatMatrix M(std::initializer_list<std::initializer_list<const char*>> rows, std::size_t ncols) {
  RatMatrix m(ncols);
  for (auto r : rows) m.append_row(V(r));
  return m;
}

/// [0,1]^2 as {-x <= 0, -y <= 0, x <= 1, y <= 1}.
inline HPolyhedron unit_square() {
  HPolyhedron P(2);
  P.add_le(V({"-1", "0"}), 0);
  P.add_le(V({"0", "-1"}), 0);
  P.add_le(V({"1", "0"}), 1);
  P.add_le(V({"0", "1"}), 1);
  return P;
}

/// [0,1] x {0} with the second coordinate fixed by an equality row.
inline HPolyhedron unit_segment() {
  HPolyhedron P(2);
  P.add_le(V({"1", "0"}), 1);
  P.add_le(V({"-1", "0"}), 0);
  P.add_eq(V({"0", "1"}), 0);
  return P;
}

inline HPolyhedron interval(const char* lo, const char* hi) {
  HPolyhedron P(1);
  P.add_le(V({"1"}), Q(hi));
  P.add_le(V({"-1"}), -Q(lo));
  return P;
}

/// {x >= 0, y >= 0, x + y <= 1}.
inline HPolyhedron unit_triangle() {
  HPolyhedron P(2);
  P.add_le(V({"-1", "0"}), 0);
  P.add_le(V({"0", "-1"}), 0);
  P.add_le(V({"1", "1"}), 1);
  return P;
}

inline std::set<RatVector> as_set(const std::vector<RatVector>& vs) { return {vs.begin(), vs.end()}; }

/// Calls f on every k-subset of {0..n-1}.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// Vertices of {A x <= b, E x = d} by enumerating every choice of active
/// inequality rows that, together with E, pins down a unique point. Only
/// meaningful for pointed polyhedra.
inline std::vector<RatVector> brute_force_vertices(const HPolyhedron& P) {
  std::set<RatVector> found;
  const std::size_t n = P.dim;
  const std::size_t eq_rank = P.E.nrows() == 0 ? 0 : rank(P.E);
  if (eq_rank > n) return {};
  const std::size_t need = n - eq_rank;
  for_each_subset(P.A.nrows(), need, [&](const std::vector<std::size_t>& rows) {
    RatMatrix S = P.E;
    RatVector rhs = P.d;
    for (auto r : rows) {
      S.append_row(P.A.row(r));
      rhs.push_back(P.b[r]);
    }
    auto sol = solve_linear_system(S, rhs);
    if (!sol || !sol->nullspace_basis.empty()) return;
    if (contains(P, sol->particular)) found.insert(sol->particular);
  });
  return {found.begin(), found.end()};
}

/// Max of c.x over a list of points.
inline Rational max_over(const std::vector<RatVector>& pts, const RatVector& c) {
  Rational best = dot(c, pts.at(0));
  for (const auto& p : pts) best = std::max(best, dot(c, p));
  return best;
}

/// Affine dimension of a point cloud via the rank of differences.
inline std::size_t affine_dim(const std::vector<RatVector>& pts) {
  if (pts.size() < 2) return 0;
  RatMatrix diffs(pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.append_row(pts[i] - pts[0]);
  return rank(diffs);
}

/// Random rational with |numerator| <= 20 and 1 <= denominator <= 20, or an
/// integer in [-bound, bound] when `integral`.
inline Rational random_rational(SplitMix64& rng, long bound = 20, bool integral = false) {
  const long num = rng.uniform(-bound, bound);
  if (integral) return Rational(num);
  const long den = rng.uniform(1, 20);
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline RatVector random_vector(SplitMix64& rng, std::size_t n, long bound = 20, bool integral = false) {
  RatVector v(n);
  for (auto& x : v) x = random_rational(rng, bound, integral);
  return v;
}

/// Nonempty random polyhedron: rows are anchored at a random point x0 with
/// zero or positive slack; opposite row pairs and equality rows create
/// lower-dimensional sets. Coefficients are rationals with numerator and
/// denominator bounded by 20.
inline HPolyhedron random_polyhedron(SplitMix64& rng, std::size_t max_dim, std::size_t max_rows) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_dim)));
  const RatVector x0 = random_vector(rng, n, 5, true);
  HPolyhedron P(n);
  const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_rows)));
  while (P.A.nrows() + P.E.nrows() < rows) {
    RatVector a = random_vector(rng, n, 5, rng.uniform(0, 1) == 0);
    if (is_zero(a)) continue;
    const long kind = rng.uniform(0, 9);
    if (kind == 0) {
      P.add_eq(a, dot(a, x0));
    } else if (kind == 1 && P.A.nrows() + P.E.nrows() + 2 <= rows) {
      const Rational c = dot(a, x0);
      P.add_le(a, c);
      P.add_le(-a, -c);
    } else {
      Rational slack = kind <= 3 ? Rational(0) : abs(random_rational(rng, 20));
      P.add_le(a, dot(a, x0) + slack);
    }
  }
  return P;
}

/// Random bounded full- or lower-dimensional polytope given by points.
inline HPolyhedron random_polytope(SplitMix64& rng, std::size_t max_dim, std::size_t max_points) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_dim)));
  VPolyhedron V;
  V.dim = n;
  const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_points)));
  for (std::size_t i = 0; i < k; ++i) V.points.push_back(random_vector(rng, n, 4, rng.uniform(0, 2) != 0));
  return v_to_h(V);
}

inline HybridSeq random_sequence(SplitMix64& rng) {
  HybridSeq x;
  const std::size_t len = static_cast<std::size_t>(rng.uniform(0, 4));
  for (std::size_t i = 0; i < len; ++i) x.prefix.push_back(random_rational(rng, 6));
  if (rng.uniform(0, 2) != 0) {
    GeometricTail t;
    t.c = random_rational(rng, 6);
    const long qd = rng.uniform(2, 8);
    const long qn = rng.uniform(1, qd - 1);
    t.q = Rational{mpz_class(qn), mpz_class(qd)};
    t.q.canonicalize();
    t.start = x.prefix.size() + 1 + static_cast<std::size_t>(rng.uniform(0, 2));
    x.tail = t;
  }
  // Bias toward the unit sphere so boundary cases occur often.
  if (rng.uniform(0, 2) == 0) {
    const Rational n1 = l1_norm(x);
    if (sgn(n1) != 0) x = x.scaled(1 / n1);
  }
  return x;
}

inline PLConvexFunction random_pl_function(SplitMix64& rng, std::size_t max_dim, std::size_t max_pieces) {
  PLConvexFunction f;
  HPolyhedron dom = random_polyhedron(rng, max_dim, 6);
  f.domain = dom;
  const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_pieces)));
  for (std::size_t i = 0; i < k; ++i) f.pieces.push_back({random_vector(rng, dom.dim, 5), random_rational(rng, 10)});
  return f;
}

inline PolyhedralMap random_map(SplitMix64& rng, std::size_t max_m, std::size_t max_n) {
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_m)));
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_n)));
  HPolyhedron G = random_polyhedron(rng, m + n, 8);
  if (G.dim != m + n) {
    // Pad to the requested dimension with a box in the missing coordinates.
    const std::size_t extra = m + n - G.dim;
    G = product(G, HPolyhedron::box(zeros(extra), RatVector(extra, Rational(1))));
  }
  return PolyhedralMap{G, m, n};
}

// Dual of  max c.x s.t. A x <= b, E x = d  in (y, z):
//   min b.y + d.z  s.t.  A^T y + E^T z = c,  y >= 0.
inline LPProblem dual_of(const LPProblem& p) {
  const std::size_t k = p.A.nrows(), l = p.E.nrows(), n = p.num_vars();
  LPProblem dual = LPProblem::feasibility(k + l);
  dual.sense = Sense::minimize;
  dual.objective = concat(p.b, p.d);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector row(k + l);
    for (std::size_t i = 0; i < k; ++i) row[i] = p.A(i, j);
    for (std::size_t i = 0; i < l; ++i) row[k + i] = p.E(i, j);
    dual.add_eq(std::move(row), p.objective[j]);
  }
  for (std::size_t i = 0; i < k; ++i) dual.add_le(-unit_vector(k + l, i), 0);
  return dual;
}

}  // namespace relkit::testing

#endif  // RELKIT_TESTS_ORACLES_HPP
