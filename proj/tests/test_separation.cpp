#include <doctest.h>

#include "relkit/errors.hpp"
#include "relkit/relint.hpp"
#include "relkit/separation.hpp"
#include "support/oracles.hpp"

using namespace relkit;
using namespace relkit::testing;

namespace {

AffineFlat x_axis() { return AffineFlat{zeros(2), {V({"1", "0"})}, 2}; }
AffineFlat plane() { return AffineFlat{zeros(2), {V({"1", "0"}), V({"0", "1"})}, 2}; }

HPolyhedron half_line_le(const char* c) {
  HPolyhedron P(1);
  P.add_le(V({"1"}), Q(c));
  return P;
}

HPolyhedron half_line_ge(const char* c) {
  HPolyhedron P(1);
  P.add_le(V({"-1"}), -Q(c));
  return P;
}

}  // namespace

TEST_CASE("properly_separate examples") {
  SUBCASE("segment against the square containing it") {
    const SeparationResult r = properly_separate(unit_segment(), unit_square());
    REQUIRE(r.separated());
    const SeparationCertificate& c = r.certificate();
    CHECK(c.functional == V({"0", "1"}));
    CHECK(c.sup1 == Rational(0));
    CHECK(c.inf2 == Rational(0));
    CHECK(dot(c.functional, c.strict_witness_1) == 0);
    CHECK(dot(c.functional, c.strict_witness_2) == 1);
    CHECK(verify_separation(c, unit_segment(), unit_square()));
  }
  SUBCASE("identical squares") {
    const SeparationResult r = properly_separate(unit_square(), unit_square());
    REQUIRE_FALSE(r.separated());
    CHECK(r.witness().common_point == V({"1/2", "1/2"}));
    CHECK(verify_disjointness_witness(r.witness(), unit_square(), unit_square()));
  }
  SUBCASE("opposite half-lines") {
    const SeparationResult r = properly_separate(half_line_le("0"), half_line_ge("1"));
    REQUIRE(r.separated());
    CHECK(r.certificate().functional == V({"1"}));
    CHECK(r.certificate().sup1 == Rational(0));
    CHECK(r.certificate().inf2 == Rational(1));
    CHECK(verify_separation(r.certificate(), half_line_le("0"), half_line_ge("1")));
  }
  SUBCASE("half-line against its endpoint needs the ray in the objective") {
    const SeparationResult r = properly_separate(half_line_le("0"), HPolyhedron::point(V({"0"})));
    REQUIRE(r.separated());
    CHECK(verify_separation(r.certificate(), half_line_le("0"), HPolyhedron::point(V({"0"}))));
  }
  SUBCASE("singletons") {
    const auto p = HPolyhedron::point(V({"1", "1"})), q = HPolyhedron::point(V({"2", "1"}));
    CHECK(properly_separate(p, q).separated());
    const SeparationResult same = properly_separate(p, p);
    REQUIRE_FALSE(same.separated());
    CHECK(same.witness().common_point == V({"1", "1"}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(properly_separate(interval("1", "0"), interval("0", "1")), PreconditionError);
    CHECK_THROWS_AS(properly_separate(unit_square(), interval("0", "1")), InputError);
  }
}

TEST_CASE("verify_separation rejects bad certificates") {
  SeparationCertificate c{V({"0", "1"}), Rational(0), Rational(0), V({"0", "0"}), V({"0", "1"})};
  CHECK(verify_separation(c, unit_segment(), unit_square()));
  SeparationCertificate wrong_sign = c;
  wrong_sign.functional = V({"0", "-1"});
  CHECK_FALSE(verify_separation(wrong_sign, unit_segment(), unit_square()));
  SeparationCertificate no_strict = c;
  no_strict.strict_witness_2 = V({"1", "0"});
  CHECK_FALSE(verify_separation(no_strict, unit_segment(), unit_square()));
  SeparationCertificate unbounded = c;
  unbounded.sup1.reset();
  CHECK_FALSE(verify_separation(unbounded, unit_segment(), unit_square()));
  SeparationCertificate outside = c;
  outside.strict_witness_2 = V({"0", "2"});
  CHECK_FALSE(verify_separation(outside, unit_segment(), unit_square()));
  CHECK_FALSE(verify_disjointness_witness({V({"0", "0"})}, unit_segment(), unit_square()));
}

TEST_CASE("qri_nonmembership_via_separation examples") {
  const QriSeparationReport vertex = qri_nonmembership_via_separation(unit_square(), V({"0", "0"}));
  CHECK(vertex.outside_qri);
  REQUIRE(vertex.certificate);
  // Certificate for the pair ({x}, P): sup over {x} <= inf over P. Its
  // negation (-1, -1) is the outward normal at the vertex.
  CHECK(vertex.certificate->functional == V({"1", "1"}));
  CHECK(cone_contains(normal_cone(unit_square(), V({"0", "0"})), -vertex.certificate->functional));
  CHECK(verify_separation(*vertex.certificate, HPolyhedron::point(V({"0", "0"})), unit_square()));
  CHECK(vertex.normal_cone_subspace == false);
  CHECK(vertex.consistent());

  const QriSeparationReport centre = qri_nonmembership_via_separation(unit_square(), V({"1/2", "1/2"}));
  CHECK_FALSE(centre.outside_qri);
  CHECK_FALSE(centre.certificate);
  CHECK(centre.consistent());

  const QriSeparationReport seg = qri_nonmembership_via_separation(unit_segment(), V({"1/2", "0"}));
  CHECK_FALSE(seg.outside_qri);
  CHECK(seg.normal_cone_subspace == true);

  const QriSeparationReport far = qri_nonmembership_via_separation(unit_square(), V({"5", "5"}));
  CHECK(far.outside_qri);
  CHECK_FALSE(far.normal_cone_subspace);
}

TEST_CASE("strict_separate_in_flat examples") {
  const HPolyhedron half_seg = product(interval("0", "1/2"), HPolyhedron::point(V({"0"})));
  const RatVector u1 = strict_separate_in_flat(x_axis(), half_seg, V({"1", "0"}));
  CHECK(u1 == V({"1", "0"}));
  CHECK(verify_strict_in_flat(x_axis(), half_seg, V({"1", "0"}), u1));

  const RatVector u2 = strict_separate_in_flat(plane(), unit_square(), V({"2", "2"}));
  CHECK(u2 == V({"1", "1"}));
  CHECK(verify_strict_in_flat(plane(), unit_square(), V({"2", "2"}), u2));

  const RatVector u3 = strict_separate_in_flat(x_axis(), HPolyhedron::point(zeros(2)), V({"1", "0"}));
  CHECK(u3 == V({"1", "0"}));

  CHECK_FALSE(verify_strict_in_flat(x_axis(), half_seg, V({"1", "0"}), V({"0", "1"})));
  CHECK_FALSE(verify_strict_in_flat(x_axis(), half_seg, V({"1", "0"}), V({"0", "0"})));
  CHECK_THROWS_AS(strict_separate_in_flat(x_axis(), unit_square(), V({"2", "0"})), PreconditionError);
  CHECK_THROWS_AS(strict_separate_in_flat(x_axis(), half_seg, V({"1", "1"})), PreconditionError);
  CHECK_THROWS_AS(strict_separate_in_flat(x_axis(), half_seg, V({"1/4", "0"})), PreconditionError);
  const AffineFlat shifted{V({"0", "1"}), {V({"1", "0"})}, 2};
  CHECK_THROWS_AS(strict_separate_in_flat(shifted, half_seg, V({"1", "1"})), PreconditionError);
}

TEST_CASE("separation_iff_ri_disjoint examples") {
  const HPolyhedron left = unit_square();
  const HPolyhedron right = HPolyhedron::box(V({"1", "0"}), V({"2", "1"}));
  const auto touching = separation_iff_ri_disjoint(left, right);
  CHECK(touching.separated);
  CHECK(touching.ri_disjoint);
  CHECK(touching.certificate_valid);
  CHECK(touching.equivalent());

  const auto overlap = separation_iff_ri_disjoint(HPolyhedron::box(V({"0", "0"}), V({"2", "2"})),
                                                  HPolyhedron::box(V({"1", "1"}), V({"3", "3"})));
  CHECK_FALSE(overlap.separated);
  CHECK_FALSE(overlap.ri_disjoint);
  REQUIRE_FALSE(overlap.separation.separated());
  CHECK(overlap.separation.witness().common_point == V({"3/2", "3/2"}));
  CHECK(overlap.equivalent());

  const auto nested = separation_iff_ri_disjoint(unit_segment(), unit_square());
  CHECK(nested.separated);
  CHECK(nested.ri_disjoint);
  CHECK(nested.qri_structural);
  CHECK(nested.equivalent());
}

TEST_CASE("property: verdicts match ri-disjointness, certificates validate, symmetry") {
  SplitMix64 rng(4711);
  int separated = 0, joint = 0;
  for (int it = 0; it < 80; ++it) {
    const HPolyhedron P1 = random_polyhedron(rng, 3, 5);
    HPolyhedron P2 = random_polyhedron(rng, 3, 5);
    if (P2.dim != P1.dim) P2 = random_polytope(rng, 1, 3);
    if (P2.dim != P1.dim) continue;
    const PreparedPolyhedron A = prepare(P1), B = prepare(P2);
    const auto rep = separation_iff_ri_disjoint(A, B);
    CHECK(rep.equivalent());
    CHECK(rep.certificate_valid);
    if (rep.separated) {
      ++separated;
      CHECK(verify_separation(rep.separation.certificate(), A.v, B.v));
      const SeparationResult back = properly_separate(B, A);
      REQUIRE(back.separated());
      CHECK(verify_separation(back.certificate(), P2, P1));
    } else {
      ++joint;
      CHECK(ri_membership(A, rep.separation.witness().common_point).member);
      CHECK(ri_membership(B, rep.separation.witness().common_point).member);
      CHECK_FALSE(properly_separate(B, A).separated());
    }
  }
  CHECK(separated > 5);
  CHECK(joint > 2);
}

TEST_CASE("property: qri separation agrees with the normal-cone predicate") {
  SplitMix64 rng(1313);
  for (int it = 0; it < 30; ++it) {
    const PreparedPolyhedron P = prepare(random_polyhedron(rng, 3, 6));
    for (const auto& x : sample_points(P, SamplingPolicy{kDefaultSeed, 3, 8})) {
      const QriSeparationReport r = qri_nonmembership_via_separation(P, x);
      CHECK(r.consistent());
      CHECK(r.outside_qri == !characterization_suite(P, x).normal_cone_subspace);
      if (r.certificate) CHECK(verify_separation(*r.certificate, HPolyhedron::point(x), P.h));
    }
  }
}

TEST_CASE("property: strict separation in a flat") {
  SplitMix64 rng(2);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    // L = span of the first k axes in R^n, P a polytope inside L.
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    AffineFlat L{zeros(n), {}, n};
    for (std::size_t i = 0; i < k; ++i) L.directions.push_back(unit_vector(n, i));
    VPolyhedron G;
    G.dim = n;
    for (int j = 0; j < 3; ++j) {
      RatVector p = zeros(n);
      for (std::size_t i = 0; i < k; ++i) p[i] = random_rational(rng, 4);
      G.points.push_back(p);
    }
    const HPolyhedron P = v_to_h(G);
    RatVector x = zeros(n);
    for (std::size_t i = 0; i < k; ++i) x[i] = random_rational(rng, 6);
    if (contains(P, x)) continue;
    const RatVector u = strict_separate_in_flat(L, P, x);
    CHECK(L.contains(u));
    CHECK_FALSE(is_zero(u));
    CHECK(verify_strict_in_flat(L, P, x, u));
    ++checked;
  }
  CHECK(checked > 20);
}
