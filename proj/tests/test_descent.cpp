#include "cnforge/descent.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace cnforge;

namespace {

AdmissibleInput input_753() { return theorem_inputs(Int(7)).at(0); }

AdmissibleInput input_row1() {
  for (AdmissibleInput& in : theorem_inputs(Int(889))) {
    if (in.solution.n == 561) return in;
  }
  throw std::runtime_error("row-1 input not found");
}

std::set<Int> reprs(const std::vector<SquareClass>& classes) {
  std::set<Int> out;
  for (const SquareClass& c : classes) out.insert(c.repr());
  return out;
}

}  // namespace

TEST_CASE("b1_of_point: examples") {
  CHECK(b1_of_point(Point(Rat(1176), Rat(28224))).repr() == 6);     // kl
  CHECK(b1_of_point(Point(Rat(5040), Rat(352800))).repr() == 35);   // mn
  CHECK(b1_of_point(Point(Rat(-600), Rat(-14400))).repr() == -6);   // -kl
  CHECK_THROWS_AS(b1_of_point(Point(Rat(0), Rat(0))), ZeroX);
  CHECK_THROWS_AS(b1_of_point(Point::at_infinity()), ZeroX);
}

TEST_CASE("fourteen_classes: the (7,5,3) table") {
  const ClassTable table = fourteen_classes(input_753());
  REQUIRE(table.points.size() == 14);
  REQUIRE(table.classes.size() == 14);

  const std::set<Int> expected = {6,  10,  15,  35,  21,  14,  210,
                                  -6, -10, -15, -35, -21, -14, -210};
  CHECK(reprs(table.classes) == expected);

  // Table order matches the class formulas kl, kn, nl, mn, ml, mk, their
  // negatives, then +-klmn.
  const std::vector<SquareClass> formulas =
      expected_class_formulas(input_753().solution);
  REQUIRE(formulas.size() == 14);
  for (std::size_t i = 0; i < 14; ++i) REQUIRE(table.classes[i] == formulas[i]);

  const Curve curve((Int(840)));
  for (const Point& p : table.points) REQUIRE(curve.contains(p));

  // First three points are the integral points of the solution.
  const auto integral = integral_points_from_solution(input_753().solution);
  CHECK(table.points[0] == integral[0]);
  CHECK(table.points[1] == integral[1]);
  CHECK(table.points[2] == integral[2]);
  CHECK(table.points[12] == Point(Rat(840), Rat(0)));
  CHECK(table.points[13] == Point(Rat(-840), Rat(0)));
}

TEST_CASE("fourteen_classes: distinct for the large table row") {
  const ClassTable table = fourteen_classes(input_row1());
  CHECK(reprs(table.classes).size() == 14);
}

TEST_CASE("subgroup_closure: examples") {
  std::set<SquareClass> gens;
  for (int v : {6, 10, 35, -6}) gens.insert(square_class(Int(v)));
  CHECK(subgroup_closure(gens).size() == 16);

  std::set<SquareClass> trivial{square_class(Int(1))};
  CHECK(subgroup_closure(trivial).size() == 1);

  std::set<SquareClass> sign{square_class(Int(-1))};
  const auto closed = subgroup_closure(sign);
  CHECK(closed.size() == 2);
  CHECK(closed.count(square_class(Int(1))) == 1);

  CHECK_THROWS_AS(subgroup_closure(std::set<SquareClass>{}), std::invalid_argument);
}

TEST_CASE("subgroup_closure: power-of-two order on random generating sets") {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(2718ul);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<SquareClass> gens;
    const int count = 1 + static_cast<int>(Int(rng.get_z_range(Int(5))).get_ui());
    for (int i = 0; i < count; ++i) {
      const Int v = rng.get_z_range(Int(300)) + 1;
      gens.insert(square_class(rng.get_z_range(Int(2)) == 0 ? v : Int(-v)));
    }
    const auto closure = subgroup_closure(gens);
    const std::size_t order = closure.size();
    REQUIRE((order & (order - 1)) == 0);
    // Closed under the operation.
    for (const SquareClass& u : closure)
      for (const SquareClass& v : closure)
        REQUIRE(closure.count(class_mul(u, v)) == 1);
  }
}

TEST_CASE("rank2_certificate: (7,5,3)") {
  const RankCertificate cert = rank2_certificate(input_753());
  CHECK(cert.area == 840);
  CHECK(cert.scaling_q == 1);
  CHECK(cert.closure.size() == 16);
  CHECK(cert.witness == Point(Rat(1176), Rat(28224)));
  CHECK(cert.rank_lower_bound == 2);
  CHECK(Curve(cert.area).has_infinite_order(cert.witness));
}

TEST_CASE("rank2_certificate: large inputs") {
  const RankCertificate row1 = rank2_certificate(input_row1());
  CHECK(row1.area == Int("237195512400"));
  CHECK(row1.closure.size() >= 16);

  for (const AdmissibleInput& input : theorem_inputs(Int(91))) {
    const RankCertificate cert = rank2_certificate(input);
    if (input.solution.l == 19) CHECK(cert.area == 13693680);
    CHECK(cert.closure.size() >= 16);
  }
}

TEST_CASE("rank2_certificate: inadmissible inputs are rejected") {
  // (91, 56, 49) solves 91^2 = n^2+nl+l^2 but gcd(56,49) = 7.
  AdmissibleInput bad{NormFormSolution::create(Int(91), Int(56), Int(49)),
                      factorize(Int(91)), false};
  CHECK_THROWS_AS(rank2_certificate(bad), NotAdmissible);

  // Factorization that does not match m.
  AdmissibleInput mismatched{NormFormSolution::create(Int(7), Int(5), Int(3)),
                             factorize(Int(13)), true};
  CHECK_THROWS_AS(rank2_certificate(mismatched), NotAdmissible);
}

TEST_CASE("scaled_certificate: corollary scaling") {
  const RankCertificate base = rank2_certificate(input_753());

  const RankCertificate doubled = scaled_certificate(base, Int(2));
  CHECK(doubled.area == 13440);  // 840 * 2^4
  CHECK(doubled.scaling_q == 2);
  CHECK(doubled.solution.m == 14);
  CHECK(doubled.solution.n == 10);
  CHECK(doubled.solution.l == 6);
  CHECK(doubled.closure.size() == 16);
  // Scaling by q^2 per product leaves every square class unchanged.
  CHECK(reprs(doubled.table.classes) == reprs(base.table.classes));
  CHECK(Curve(doubled.area).contains(doubled.witness));

  const RankCertificate same = scaled_certificate(base, Int(1));
  CHECK(same.area == base.area);
  CHECK(same.solution == base.solution);

  const RankCertificate negative = scaled_certificate(base, Int(-3));
  CHECK(negative.area == 68040);  // 840 * 81, sign of q irrelevant
  CHECK(negative.scaling_q == 3);

  CHECK_THROWS_AS(scaled_certificate(base, Int(0)), ZeroScale);
}

TEST_CASE("quartic_witness: examples") {
  const DescentParams params840 = DescentParams::for_area(Int(840));
  CHECK(params840.b == -705600);
  CHECK(params840.b_bar == 2822400);

  const QuarticWitness w1 = quartic_witness(params840, Point(Rat(1176), Rat(28224)));
  CHECK(w1.b1.repr() == 6);
  CHECK(w1.big_m == 14);
  CHECK(w1.e == 1);
  CHECK(w1.n == 336);
  // 336^2 = 6*14^4 - 117600*1
  CHECK(w1.n * w1.n == Int(6) * pow_int(Int(14), 4) + Int(-117600));

  const DescentParams params6 = DescentParams::for_area(Int(6));
  const QuarticWitness w2 = quartic_witness(params6, Point(Rat(18), Rat(72)));
  CHECK(w2.b1.repr() == 2);
  CHECK(w2.big_m == 3);
  CHECK(w2.e == 1);
  CHECK(w2.n == 12);

  const QuarticWitness w3 = quartic_witness(params840, Point(Rat(-600), Rat(-14400)));
  CHECK(w3.b1.repr() == -6);
  CHECK(w3.big_m == 10);
  CHECK(w3.e == 1);
  CHECK(w3.n == 240);

  // Fractional coordinates: 2*(18, 72) = (25/4, 35/8) on the A = 6 curve.
  const Point doubled(parse_rat("25/4"), parse_rat("35/8"));
  const QuarticWitness w4 = quartic_witness(params6, doubled);
  CHECK(point_from_witness(w4) == doubled);
  CHECK(w4.b1 == square_class(doubled.x()));

  CHECK_THROWS_AS(quartic_witness(params6, Point(Rat(0), Rat(0))), ZeroX);
  CHECK_THROWS_AS(quartic_witness(params6, Point(Rat(6), Rat(0))), NotInvertibleHere);
  CHECK_THROWS_AS(quartic_witness(params6, Point(Rat(5), Rat(5))), NotOnCurve);
}

TEST_CASE("quartic_witness: reconstructs all 12 non-torsion certificate points") {
  for (const AdmissibleInput& input : {input_753(), input_row1()}) {
    const RankCertificate cert = rank2_certificate(input);
    const DescentParams params = DescentParams::for_area(cert.area);
    for (int i = 0; i < 12; ++i) {
      const Point& p = cert.table.points[i];
      const QuarticWitness w = quartic_witness(params, p);
      REQUIRE(w.e >= 1);
      REQUIRE(w.big_m >= 1);
      REQUIRE(w.n * w.n ==
              w.b1.repr() * pow_int(w.big_m, 4) +
                  (params.b / w.b1.repr()) * pow_int(w.e, 4));
      REQUIRE(point_from_witness(w) == p);
      REQUIRE(w.b1 == cert.table.classes[i]);
    }
  }
}

TEST_CASE("collinearity_check: examples") {
  const auto r753 = collinearity_check(NormFormSolution::create(Int(7), Int(5), Int(3)));
  CHECK(r753.slope == Rat(64));
  CHECK(r753.ok);

  const auto r91 = collinearity_check(NormFormSolution::create(Int(91), Int(85), Int(11)));
  CHECK(r91.slope == Rat(9216));  // 96^2
  CHECK(r91.ok);

  const auto row1 = collinearity_check(NormFormSolution::create(Int(889), Int(561), Int(464)));
  CHECK(row1.slope == Rat(Int(1025) * 1025));
  CHECK(row1.ok);
}

TEST_CASE("descent scan over admissible m <= 500") {
  for (const Int& m : admissible_moduli(Int(500), 2)) {
    for (const AdmissibleInput& input : theorem_inputs(m)) {
      const NormFormSolution& s = input.solution;
      CAPTURE(s.m.get_str());
      CAPTURE(s.l.get_str());

      const ClassTable table = fourteen_classes(input);
      REQUIRE(reprs(table.classes).size() == 14);
      const std::vector<SquareClass> formulas = expected_class_formulas(s);
      REQUIRE(std::equal(formulas.begin(), formulas.end(), table.classes.begin()));

      std::set<SquareClass> gens(table.classes.begin(), table.classes.end());
      REQUIRE(subgroup_closure(gens).size() == 16);

      REQUIRE(collinearity_check(s).ok);

      // Every non-torsion point yields a quartic witness that reconstructs it.
      const DescentParams params = DescentParams::for_area(s.area());
      for (int i = 0; i < 12; ++i) {
        const QuarticWitness w = quartic_witness(params, table.points[i]);
        REQUIRE(point_from_witness(w) == table.points[i]);
      }

      // At most one of k, l, n is a perfect square.
      int squares = 0;
      for (const Int& v : {s.k, s.l, s.n}) {
        if (is_perfect_square(v)) ++squares;
      }
      REQUIRE(squares <= 1);
    }
  }
}
