#include "cnforge/triples.hpp"

#include <stdexcept>

namespace cnforge {

PythTriple::PythTriple(Rat a, Rat b, Rat c, Int area)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), area_(std::move(area)) {
  if (a_ == 0 || b_ == 0 || c_ == 0)
    throw std::invalid_argument("PythTriple: sides must be nonzero");
  if (a_ * a_ + b_ * b_ != c_ * c_)
    throw std::invalid_argument("PythTriple: a^2 + b^2 = c^2 fails");
  if (area_ <= 0)
    throw std::invalid_argument("PythTriple: area must be a positive integer");
  Rat half_ab = a_ * b_ / 2;
  if (abs(half_ab.get_num()) != area_ * half_ab.get_den())
    throw std::invalid_argument("PythTriple: |ab/2| does not equal the stated area");
}

PythTriple PythTriple::from_sides(Rat a, Rat b, Rat c) {
  Rat half_ab = a * b / 2;
  if (half_ab.get_den() != 1)
    throw std::invalid_argument("PythTriple: |ab/2| is not an integer");
  Int area = abs(half_ab.get_num());
  return PythTriple(std::move(a), std::move(b), std::move(c), std::move(area));
}

Point psi(const PythTriple& t) {
  const Rat sum = t.b() + t.c();
  if (sum == 0)
    throw DegenerateTriple("psi undefined at b + c = 0");
  return Point(t.b() * sum / 2, t.b() * t.b() * sum / 2);
}

PythTriple psi_inv(const Curve& curve, const Point& p) {
  if (p.is_infinity() || p.y() == 0)
    throw NotInvertibleHere("psi_inv requires an affine point with y != 0");
  const Rat& x = p.x();
  const Rat& y = p.y();
  const Rat a2(curve.A() * curve.A());
  return PythTriple(2 * x * Rat(curve.A()) / y, (x * x - a2) / y, (x * x + a2) / y,
                    curve.A());
}

PythTriple triple_from_mn(const Int& m, const Int& n) {
  if (!(m > n && n > 0))
    throw BadOrder("triple_from_mn requires m > n > 0");
  const Int a = 2 * m * n;
  const Int b = m * m - n * n;
  const Int c = m * m + n * n;
  return PythTriple(Rat(a), Rat(b), Rat(c), m * n * (m * m - n * n));
}

TripleFamily three_triples(const NormFormSolution& s) {
  // k > m since k^2 = m^2 + nl, and m > n > l by the norm-form identity.
  PythTriple t1 = triple_from_mn(s.m, s.n);
  PythTriple t2 = triple_from_mn(s.m, s.l);
  PythTriple t3 = triple_from_mn(s.k, s.m);
  const Int a = s.area();
  if (t1.area() != a || t2.area() != a || t3.area() != a)
    throw Error("three_triples: family areas disagree with klmn");
  return TripleFamily{s, std::move(t1), std::move(t2), std::move(t3)};
}

PythTriple swap_catheti(const PythTriple& t) {
  return PythTriple(t.b(), t.a(), t.c(), t.area());
}

PythTriple negate_hypotenuse(const PythTriple& t) {
  return PythTriple(t.a(), t.b(), -t.c(), t.area());
}

std::array<Point, 3> integral_points_from_solution(const NormFormSolution& s) {
  const Int mm = s.m * s.m;
  const Int kk = s.k * s.k;
  const Int x1 = mm * (mm - s.n * s.n);
  const Int x2 = mm * (mm - s.l * s.l);
  const Int x3 = kk * (kk - mm);
  return {Point(Rat(x1), Rat(mm * (mm - s.n * s.n) * (mm - s.n * s.n))),
          Point(Rat(x2), Rat(mm * (mm - s.l * s.l) * (mm - s.l * s.l))),
          Point(Rat(x3), Rat(kk * (kk - mm) * (kk - mm)))};
}

}  // namespace cnforge
