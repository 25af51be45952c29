// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "relkit/relint.hpp"
#include "relkit/separation.hpp"
#include "support/oracles.hpp"

using namespace relkit;
using namespace relkit::testing;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
};

int g_failures = 0;

void report(const std::string& name, const Tally& t, const std::string& extra,
            std::chrono::steady_clock::time_point start) {
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const bool ok = t.failed == 0 && t.checked > 0;
  if (!ok) ++g_failures;
  std::cout << (ok ? "PASS " : "FAIL ") << name << " checks=" << t.checked << " failures=" << t.failed;
  if (!extra.empty()) std::cout << " " << extra;
  std::cout << " time=" << ms << "ms";
  if (!ok && !t.first_failure.empty()) std::cout << " first=" << t.first_failure;
  std::cout << "\n";
}

std::string where(const char* label, int it) { return std::string(label) + "#" + std::to_string(it); }

// Random nonempty polyhedron of exactly dimension n.
HPolyhedron random_polyhedron_in(SplitMix64& rng, std::size_t n, std::size_t max_rows, bool bounded) {
  for (;;) {
    HPolyhedron P = bounded ? random_polytope(rng, n, 5) : random_polyhedron(rng, n, max_rows);
    if (P.dim == n) return P;
  }
}

void characterization_suite_criterion() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(kDefaultSeed);
  Tally t;
  std::size_t points = 0, interior = 0;
  for (int it = 0; it < 200; ++it) {
    const HPolyhedron P = random_polyhedron(rng, 5, 10);
    const PreparedPolyhedron prep = prepare(P);
    t.expect(!prep.empty(), where("empty", it));
    std::vector<RatVector> xs = sample_points(prep);
    while (xs.size() < 5) xs.push_back(random_vector(rng, P.dim, 6));
    for (const auto& x : xs) {
      const MembershipReport r = characterization_suite(prep, x);
      t.expect(r.all_agree() && r.chain_holds(), where("polyhedron", it));
      ++points;
      interior += r.ri_def;
    }
  }
  report("characterization-suite", t,
         "polyhedra=200 points=" + std::to_string(points) + " interior=" + std::to_string(interior), start);
}

void separation_criterion() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(kDefaultSeed + 1);
  Tally t;
  std::size_t separated = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const bool bounded = rng.uniform(0, 1) == 0;
    const HPolyhedron P1 = random_polyhedron_in(rng, n, 6, bounded);
    const HPolyhedron P2 = random_polyhedron_in(rng, n, 6, bounded);
    const PreparedPolyhedron A = prepare(P1), B = prepare(P2);
    const SeparationEquivalenceReport r = separation_iff_ri_disjoint(A, B);
    t.expect(r.equivalent() && r.certificate_valid, where("pair", it));
    if (r.separation.separated()) {
      ++separated;
      t.expect(verify_separation(r.separation.certificate(), A.v, B.v), where("certificate", it));
    } else {
      const RatVector& z = r.separation.witness().common_point;
      t.expect(ri_membership(A, z).member && ri_membership(B, z).member, where("witness", it));
    }
  }
  report("separation-equivalence", t,
         "pairs=200 separated=" + std::to_string(separated) + " overlapping=" + std::to_string(200 - separated),
         start);
}

void graph_criterion() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(kDefaultSeed + 2);
  Tally t;
  std::size_t points = 0;
  for (int it = 0; it < 150; ++it) {
    const MapContext ctx = prepare_map(random_map(rng, 3, 3));
    for (const auto& z : graph_samples(ctx)) {
      const RatVector x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(ctx.map.m));
      const RatVector y(z.begin() + static_cast<std::ptrdiff_t>(ctx.map.m), z.end());
      t.expect(graph_ri_check(ctx, x, y).holds(), where("graph", it));
      ++points;
    }
  }

  // F(x) = [0, x] on [0, 1] at (0, 0).
  HPolyhedron G(2);
  G.add_le(V({"-1", "0"}), 0);
  G.add_le(V({"1", "0"}), 1);
  G.add_le(V({"0", "-1"}), 0);
  G.add_le(V({"-1", "1"}), 0);
  const PolyhedralMap F{G, 1, 1};
  const GraphRIReport d = graph_ri_check(F, V({"0"}), V({"0"}));
  t.expect(!d.lhs && !d.rhs && d.holds(), "degenerate sides");
  t.expect(ri_membership(image_at(F, V({"0"})), V({"0"})).member, "degenerate slice");
  t.expect(!ri_membership(map_domain(F), V({"0"})).member, "degenerate domain");
  report("graph-ri", t, "maps=150 points=" + std::to_string(points) + " degenerate=checked", start);
}

void epigraph_criterion() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(kDefaultSeed + 3);
  Tally t;
  std::size_t boundary = 0;
  for (int it = 0; it < 100; ++it) {
    const FunctionContext ctx = prepare_function(random_pl_function(rng, 3, 4));
    const RatVector x0 = ri_point(ctx.domain);
    const EpiRelintReport inner = epi_relint_report(ctx, x0, ctx.f(x0) + 1);
    t.expect(inner.holds() && inner.lhs_ri, where("interior", it));
    for (const auto& x : sample_points(ctx.domain)) {
      const EpiRelintReport on = epi_relint_report(ctx, x, ctx.f(x));
      t.expect(on.holds() && !on.lhs_ri, where("boundary", it));
      t.expect(epi_relint_report(ctx, x, ctx.f(x) + 1).holds(), where("above", it));
      ++boundary;
    }
    t.expect(epi_quasireg_implies_dom(ctx.f).implication_holds(), where("quasireg", it));
  }
  report("epigraph-ri", t, "functions=100 boundary_samples=" + std::to_string(boundary), start);
}

void commutation_criterion() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(kDefaultSeed + 4);
  Tally t;
  for (int it = 0; it < 100; ++it) {
    const HPolyhedron P = random_polyhedron(rng, 4, 8);
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
    RatMatrix A(0, P.dim);
    for (std::size_t i = 0; i < k; ++i) A.append_row(random_vector(rng, P.dim, 4, true));
    t.expect(linear_image_ri_commutes(A, P).holds(), where("image", it));
  }
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const bool bounded = rng.uniform(0, 1) == 0;
    const HPolyhedron P1 = random_polyhedron_in(rng, n, 6, bounded);
    const HPolyhedron P2 = random_polyhedron_in(rng, n, 6, bounded);
    t.expect(set_difference_ri_commutes(P1, P2).holds(), where("difference", it));
  }
  report("ri-commutation", t, "images=100 differences=100", start);
}

void sequence_criterion() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  const L1BallClassification e1 = classify_l1ball(HybridSeq{{Rational(1)}, std::nullopt});
  t.expect(e1.in_set && !e1.in_iri && !e1.in_qri, "e1");
  const L1BallClassification gap = classify_l1ball(HybridSeq{{}, GeometricTail{Q("1/2"), Q("1/2"), 1}});
  t.expect(gap.in_set && gap.in_qri && !gap.in_iri, "geometric tail");
  const L1BallClassification half = classify_l1ball(HybridSeq{{Q("1/2")}, std::nullopt});
  t.expect(half.in_set && half.in_iri && half.in_qri, "half");
  t.expect(is_gap_witness(quasi_regularity_gap_witness().point), "gap witness");

  SplitMix64 rng(kDefaultSeed + 5);
  for (int it = 0; it < 500; ++it) {
    const HybridSeq x = random_sequence(rng);
    const L1BallClassification c = classify_l1ball(x);
    const Rational norm = l1_norm(x);
    const bool boundary_qri = norm == 1 && !x.finite_support();
    t.expect(c.chain_holds(), where("chain", it));
    t.expect(c.in_set == (norm <= 1) && c.in_iri == (norm < 1) && c.in_qri == (c.in_iri || boundary_qri),
             where("norm oracle", it));
  }
  report("l1-ball-classification", t, "examples=3 sequences=500", start);
}

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void lp_criterion() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(kDefaultSeed + 6);
  Tally t;
  int bounded = 0, infeasible = 0, tries = 0;
  std::size_t max_pivots = 0;
  while (bounded < 100 && tries < 5000) {
    ++tries;
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    LPProblem p = LPProblem::feasibility(n);
    p.objective = random_vector(rng, n);
    p.sense = rng.uniform(0, 1) ? Sense::maximize : Sense::minimize;
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 8));
    for (std::size_t i = 0; i < k; ++i) p.add_le(random_vector(rng, n), random_rational(rng));
    if (rng.uniform(0, 3) == 0) p.add_eq(random_vector(rng, n, 5, true), random_rational(rng, 5));
    if (rng.uniform(0, 1) == 0)
      for (std::size_t j = 0; j < n; ++j) {
        p.add_le(unit_vector(n, j), 10);
        p.add_le(-unit_vector(n, j), 10);
      }

    const LPOutcome out = lp_solve(p);
    const std::size_t rows = p.A.nrows() + p.E.nrows();
    const std::size_t width = 2 * n + 2 * p.A.nrows() + p.E.nrows();
    const mpz_class bound = 2 * binomial(width, rows) + rows;
    t.expect(mpz_class(static_cast<unsigned long>(out.pivots)) <= bound, where("pivots", tries));
    max_pivots = std::max(max_pivots, out.pivots);
    t.expect(verify_outcome(p, out), where("outcome", tries));
    if (out.infeasible()) {
      ++infeasible;
      t.expect(verify_farkas(p, out.as_infeasible().certificate), where("farkas", tries));
    }
    if (!out.optimal()) continue;
    ++bounded;
    LPProblem maxform = p;
    if (p.sense == Sense::minimize) maxform.objective = -p.objective;
    maxform.sense = Sense::maximize;
    const Rational primal = p.sense == Sense::maximize ? out.as_optimal().value : -out.as_optimal().value;
    const LPOutcome dual = lp_solve(dual_of(maxform));
    t.expect(dual.optimal() && dual.as_optimal().value == primal, where("duality", tries));
  }
  t.expect(bounded == 100, "too few bounded instances");
  t.expect(infeasible > 0, "no infeasible instances");
  report("lp-core", t,
         "bounded=" + std::to_string(bounded) + " infeasible=" + std::to_string(infeasible) +
             " max_pivots=" + std::to_string(max_pivots),
         start);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_corpus(const std::filesystem::path& out) {
  const std::string cmd = std::string("\"") + RELKIT_CLI_PATH + "\" verify-corpus \"" + RELKIT_CORPUS_DIR +
                          "\" --out \"" + out.string() + "\" > /dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void cli_criterion() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "relkit-acceptance-1.json", second = dir / "relkit-acceptance-2.json";
  t.expect(run_corpus(first) == 0, "first run exit");
  t.expect(run_corpus(second) == 0, "second run exit");
  const std::string a = slurp(first), b = slurp(second);
  t.expect(!a.empty() && a == b, "reports differ");
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  report("cli-determinism", t, "bytes=" + std::to_string(a.size()), start);
}

}  // namespace

int main() {
  characterization_suite_criterion();
  separation_criterion();
  graph_criterion();
  epigraph_criterion();
  commutation_criterion();
  sequence_criterion();
  lp_criterion();
  cli_criterion();
  std::cout << (g_failures == 0 ? "ALL PASS" : std::to_string(g_failures) + " criteria failed") << "\n";
  return g_failures == 0 ? 0 : 1;
}
