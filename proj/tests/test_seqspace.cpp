#include <doctest.h>

#include "relkit/errors.hpp"
#include "relkit/relint.hpp"
#include "relkit/seqspace.hpp"
#include "support/oracles.hpp"

using namespace relkit;
using namespace relkit::testing;

namespace {

HybridSeq seq(std::initializer_list<const char*> prefix) {
  HybridSeq x;
  x.prefix = V(prefix);
  return x;
}

HybridSeq tail_seq(const char* c, const char* q, std::size_t start) {
  HybridSeq x;
  x.tail = GeometricTail{Q(c), Q(q), start};
  return x;
}

// The l^1 unit ball of R^n: sum s_i x_i <= 1 for every sign vector s.
HPolyhedron cross_polytope(std::size_t n) {
  HPolyhedron P(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1 ? -1 : 1;
    P.add_le(std::move(a), 1);
  }
  return P;
}

}  // namespace

TEST_CASE("l1_norm examples") {
  CHECK(l1_norm(seq({"1"})) == 1);
  CHECK(l1_norm(tail_seq("1/2", "1/2", 1)) == 1);
  HybridSeq mixed = seq({"1/4"});
  mixed.tail = GeometricTail{Q("1/4"), Q("1/2"), 2};
  CHECK(l1_norm(mixed) == Q("3/4"));
  CHECK(l1_norm(tail_seq("-1/2", "1/2", 1)) == 1);
  CHECK(l2_norm_squared(tail_seq("1/2", "1/2", 1)) == Q("1/3"));
  CHECK_THROWS_AS(l1_norm(tail_seq("1", "1", 1)), InputError);
  CHECK_THROWS_AS(l1_norm(tail_seq("1", "0", 1)), InputError);
  HybridSeq overlap = seq({"1", "2"});
  overlap.tail = GeometricTail{Q("1"), Q("1/2"), 2};
  CHECK_THROWS_AS(l1_norm(overlap), InputError);
}

TEST_CASE("entries and truncation") {
  HybridSeq x = seq({"1/4"});
  x.tail = GeometricTail{Q("1/4"), Q("1/2"), 3};
  CHECK(x.truncate(5) == V({"1/4", "0", "1/4", "1/8", "1/16"}));
  CHECK_THROWS_AS(x.at(0), InputError);
}

TEST_CASE("classify_l1ball examples") {
  const auto e1 = classify_l1ball(seq({"1"}));
  CHECK(e1.in_set);
  CHECK_FALSE(e1.in_iri);
  CHECK_FALSE(e1.in_qri);
  CHECK(e1.finite_support);

  const auto gap = classify_l1ball(tail_seq("1/2", "1/2", 1));
  CHECK(gap.in_set);
  CHECK_FALSE(gap.in_iri);
  CHECK(gap.in_qri);
  CHECK_FALSE(gap.finite_support);

  const auto half = classify_l1ball(seq({"1/2"}));
  CHECK(half.in_set);
  CHECK(half.in_iri);
  CHECK(half.in_qri);

  const auto zero = classify_l1ball(HybridSeq{});
  CHECK(zero.in_set);
  CHECK(zero.in_iri);
  CHECK(zero.in_qri);

  const auto outside = classify_l1ball(seq({"1", "1/2"}));
  CHECK_FALSE(outside.in_set);
  CHECK_FALSE(outside.in_qri);

  // A zero tail coefficient is finite support.
  HybridSeq dead = seq({"1"});
  dead.tail = GeometricTail{Q("0"), Q("1/2"), 2};
  CHECK_FALSE(classify_l1ball(dead).in_qri);
}

TEST_CASE("gap witness") {
  const GapWitness w = quasi_regularity_gap_witness();
  CHECK(w.classification.in_qri);
  CHECK_FALSE(w.classification.in_iri);
  CHECK(is_gap_witness(w.point));
  CHECK(l1_norm(w.point) == 1);
  CHECK_FALSE(is_gap_witness(seq({"1"})));
  CHECK_FALSE(is_gap_witness(seq({"1/2", "-1/2"})));
  CHECK(is_gap_witness(tail_seq("1/4", "3/4", 1)));
  CHECK(l1_norm(tail_seq("1/4", "3/4", 1)) == 1);
}

TEST_CASE("property: chain, scaling and gap stability on random sequences") {
  SplitMix64 rng(321);
  int boundary = 0;
  for (int it = 0; it < 500; ++it) {
    const HybridSeq x = random_sequence(rng);
    const auto c = classify_l1ball(x);
    CHECK(c.chain_holds());
    const Rational t = random_rational(rng, 5);
    CHECK(l1_norm(x.scaled(t)) == abs(t) * l1_norm(x));
    if (l1_norm(x) == 1) {
      ++boundary;
      CHECK(c.in_qri == !c.finite_support);
      CHECK(is_gap_witness(x) == !c.finite_support);
    }
  }
  CHECK(boundary > 50);
}

TEST_CASE("property: truncated interior points are interior to the finite l1 ball") {
  SplitMix64 rng(77);
  int checked = 0;
  for (int it = 0; it < 80 && checked < 25; ++it) {
    const HybridSeq x = random_sequence(rng);
    if (!classify_l1ball(x).in_iri) continue;
    const std::size_t n = 4;
    const RatVector v = x.truncate(n);
    Rational s = 0;
    for (const auto& e : v) s += abs(e);
    REQUIRE(s < 1);
    const MembershipReport r = characterization_suite(cross_polytope(n), v);
    CHECK(r.ri_def);
    CHECK(r.all_agree());
    ++checked;
  }
  CHECK(checked >= 10);
}
