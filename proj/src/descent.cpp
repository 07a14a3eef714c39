#include "cnforge/descent.hpp"

#include <stdexcept>

namespace cnforge {

SquareClass b1_of_point(const Point& p) {
  if (p.is_infinity() || p.x() == 0)
    throw ZeroX("no square class at x = 0 or infinity");
  return square_class(p.x());
}

namespace {

// Shared by the admissible and the scaled paths; the class pattern only
// depends on the solution, not on the coprimality hypotheses.
ClassTable fourteen_classes_of(const NormFormSolution& s) {
  const TripleFamily family = three_triples(s);
  const std::array<PythTriple, 6> six = {
      family.t1,
      family.t2,
      family.t3,
      swap_catheti(family.t1),
      swap_catheti(family.t2),
      swap_catheti(family.t3),
  };

  ClassTable table;
  table.points.reserve(14);
  for (const PythTriple& t : six) table.points.push_back(psi(t));
  for (const PythTriple& t : six) table.points.push_back(psi(negate_hypotenuse(t)));
  const Int a = s.area();
  table.points.emplace_back(Rat(a), Rat(0));
  table.points.emplace_back(Rat(-a), Rat(0));

  table.classes.reserve(14);
  for (int i = 0; i < 12; ++i) table.classes.push_back(b1_of_point(table.points[i]));
  table.classes.push_back(square_class(a));
  table.classes.push_back(square_class(Int(-a)));

  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < table.classes.size(); ++j) {
      if (table.classes[i] == table.classes[j])
        throw DistinctnessFailure(
            "square classes " + std::to_string(i) + " and " + std::to_string(j) +
            " coincide: " + table.classes[i].repr().get_str());
    }
  }
  return table;
}

void require_theorem_hypotheses(const AdmissibleInput& input) {
  const NormFormSolution& s = input.solution;
  if (s.m < 7 || input.m_factors.distinct_primes() == 0)
    throw NotAdmissible("m must be a nonempty product of primes = 1 mod 6");
  if (input.m_factors.value() != s.m)
    throw NotAdmissible("stored factorization does not recompose to m");
  if (!input.m_factors.is_squarefree())
    throw NotAdmissible("m = " + s.m.get_str() + " is not squarefree");
  for (const FactorEntry& f : input.m_factors.factors()) {
    if (f.prime % 6 != 1)
      throw NotAdmissible("m has prime factor " + f.prime.get_str() + " != 1 mod 6");
  }
  if (gcd(s.n, s.l) != 1 || gcd(s.n, s.m) != 1 || gcd(s.l, s.m) != 1)
    throw NotAdmissible("m, n, l are not pairwise coprime");
  if (s.m * s.m != s.n * s.n + s.n * s.l + s.l * s.l)
    throw NotAdmissible("norm-form identity fails");
}

RankCertificate assemble(AdmissibleInput input, Int scaling_q, NormFormSolution solution) {
  ClassTable table = fourteen_classes_of(solution);

  std::set<SquareClass> generators(table.classes.begin(), table.classes.end());
  std::set<SquareClass> closure = subgroup_closure(generators);
  // 14 distinct classes plus the identity force order exactly 16 here; the
  // proof only needs #alpha >= 9.
  if (closure.size() < 16)
    throw Error("subgroup closure has order " + std::to_string(closure.size()) +
                ", expected >= 16");

  const Int area = solution.area();
  Point witness = integral_points_from_solution(solution)[0];
  if (!Curve(area).has_infinite_order(witness))
    throw Error("witness point unexpectedly has finite order");

  return RankCertificate{std::move(input), std::move(scaling_q), std::move(solution),
                         area,             std::move(table),     std::move(closure),
                         std::move(witness), 2};
}

}  // namespace

ClassTable fourteen_classes(const AdmissibleInput& input) {
  require_theorem_hypotheses(input);
  return fourteen_classes_of(input.solution);
}

std::vector<SquareClass> expected_class_formulas(const NormFormSolution& s) {
  const Int products[6] = {s.k * s.l, s.k * s.n, s.n * s.l,
                           s.m * s.n, s.m * s.l, s.m * s.k};
  std::vector<SquareClass> out;
  out.reserve(14);
  for (const Int& v : products) out.push_back(square_class(v));
  for (const Int& v : products) out.push_back(square_class(Int(-v)));
  out.push_back(square_class(s.area()));
  out.push_back(square_class(Int(-s.area())));
  return out;
}

std::set<SquareClass> subgroup_closure(const std::set<SquareClass>& classes) {
  if (classes.empty())
    throw std::invalid_argument("subgroup_closure: empty generating set");
  std::set<SquareClass> closure = classes;
  closure.insert(square_class(Int(1)));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<SquareClass> snapshot(closure.begin(), closure.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (closure.insert(class_mul(snapshot[i], snapshot[j])).second) grew = true;
      }
    }
  }
  // Q*/(Q*)^2 has exponent 2, so any finite subgroup has 2-power order.
  const auto order = closure.size();
  if ((order & (order - 1)) != 0)
    throw Error("subgroup closure order is not a power of 2");
  return closure;
}

RankCertificate rank2_certificate(const AdmissibleInput& input) {
  require_theorem_hypotheses(input);
  return assemble(input, Int(1), input.solution);
}

RankCertificate scaled_certificate(const RankCertificate& certificate, const Int& q) {
  if (q == 0) throw ZeroScale("scaling factor q must be nonzero");
  const Int factor = abs(q);  // q enters as q^4; the sign never matters
  if (factor == 1) return certificate;
  const NormFormSolution& base = certificate.solution;
  NormFormSolution scaled =
      NormFormSolution::create(base.m * factor, base.n * factor, base.l * factor);
  RankCertificate out =
      assemble(certificate.input, certificate.scaling_q * factor, std::move(scaled));
  if (out.area != certificate.area * pow_int(factor, 4))
    throw Error("scaled certificate area mismatch");
  return out;
}

QuarticWitness quartic_witness(const DescentParams& params, const Point& p) {
  if (p.is_infinity() || p.x() == 0)
    throw ZeroX("quartic witness requires x != 0");
  if (p.y() == 0)
    throw NotInvertibleHere("quartic witness requires y != 0");
  const Rat& x = p.x();
  const Rat& y = p.y();
  if (y * y != x * x * x + Rat(params.b) * x)
    throw NotOnCurve("point is not on y^2 = x^3 + Bx with B = " + params.b.get_str());

  // x = p/q in lowest terms; with p = sp tp^2, q = sq tq^2 (sp, sq squarefree)
  // we get b1 = sp sq, M = tp, e = sq tq, and x = b1 M^2 / e^2 identically.
  const auto [sp, tp] = square_free_part(Int(x.get_num()));
  const auto [sq, tq] = square_free_part(Int(x.get_den()));
  const Int b1 = sp * sq;
  const Int big_m = tp;
  const Int e = sq * tq;

  if (make_rat(b1 * big_m * big_m, e * e) != x)
    throw NonIntegralWitness("x does not reconstruct from b1 M^2 / e^2");
  if (params.b % b1 != 0)
    throw NonIntegralWitness("square class " + b1.get_str() + " does not divide B");
  const Int b2 = params.b / b1;

  const Rat n_rat = y * Rat(e * e * e) / Rat(b1 * big_m);
  if (n_rat.get_den() != 1)
    throw NonIntegralWitness("N = y e^3 / (b1 M) is not integral");
  const Int n = Int(n_rat.get_num());
  if (n * n != b1 * pow_int(big_m, 4) + b2 * pow_int(e, 4))
    throw NonIntegralWitness("N^2 = b1 M^4 + b2 e^4 fails");

  return QuarticWitness{SquareClass(b1), big_m, e, n};
}

Point point_from_witness(const QuarticWitness& w) {
  const Int& b1 = w.b1.repr();
  return Point(make_rat(b1 * w.big_m * w.big_m, w.e * w.e),
               make_rat(b1 * w.big_m * w.n, w.e * w.e * w.e));
}

CollinearityReport collinearity_check(const NormFormSolution& s) {
  const std::array<Point, 3> pts = integral_points_from_solution(s);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (pts[i] == pts[j] || pts[i].x() == pts[j].x())
        throw DegenerateGeometry("integral points coincide or share an x-coordinate");
    }
  }
  const Rat slope_12 = (pts[1].y() - pts[0].y()) / (pts[1].x() - pts[0].x());
  const Rat slope_13 = (pts[2].y() - pts[0].y()) / (pts[2].x() - pts[0].x());
  const Rat k_squared(s.k * s.k);

  const Curve curve(s.area());
  const bool group_identity = curve.add(pts[0], pts[1]) == neg(pts[2]);

  const bool ok = slope_12 == slope_13 && slope_12 == k_squared && group_identity;
  return CollinearityReport{slope_12, ok};
}

}  // namespace cnforge
