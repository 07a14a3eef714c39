#pragma once

#include <array>

#include "cnforge/curve.hpp"
#include "cnforge/normform.hpp"

namespace cnforge {

// A rational Pythagorean triple with prescribed area: a^2 + b^2 = c^2 with
// a, b, c nonzero rationals (negative values allowed) and |a*b/2| equal to
// the positive integer `area`. The area is stored redundantly and validated;
// it is the key joining triples to curves.
class PythTriple {
 public:
  PythTriple(Rat a, Rat b, Rat c, Int area);

  // Derives the area from the sides; requires it to be a positive integer.
  static PythTriple from_sides(Rat a, Rat b, Rat c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Int& area() const { return area_; }

  friend bool operator==(const PythTriple& s, const PythTriple& t) {
    return s.a_ == t.a_ && s.b_ == t.b_ && s.c_ == t.c_;
  }
  friend bool operator!=(const PythTriple& s, const PythTriple& t) { return !(s == t); }

 private:
  Rat a_, b_, c_;
  Int area_;
};

// The triple-to-point map (a,b,c) -> (b(b+c)/2, b^2(b+c)/2) onto the curve
// with A = area. Undefined at b + c = 0 (unreachable from a valid triple,
// guarded anyway with DegenerateTriple); the image always has y != 0.
Point psi(const PythTriple& t);

// Inverse map (x,y) -> (2xA/y, (x^2-A^2)/y, (x^2+A^2)/y). Requires an affine
// point with y != 0; throws NotInvertibleHere otherwise.
PythTriple psi_inv(const Curve& curve, const Point& p);

// (2mn, m^2-n^2, m^2+n^2) with area mn(m^2-n^2); requires m > n > 0.
PythTriple triple_from_mn(const Int& m, const Int& n);

// The three triples generated by a norm-form solution, all sharing the area
// A = klmn: (2mn, m^2-n^2, m^2+n^2), (2ml, m^2-l^2, m^2+l^2),
// (2mk, k^2-m^2, k^2+m^2).
struct TripleFamily {
  NormFormSolution input;
  PythTriple t1, t2, t3;
};

TripleFamily three_triples(const NormFormSolution& s);

// (a,b,c) -> (b,a,c). Same area, but generally a different psi-image.
PythTriple swap_catheti(const PythTriple& t);

// (a,b,c) -> (a,b,-c). Same area; moves the psi-image to a negative-x point.
PythTriple negate_hypotenuse(const PythTriple& t);

// The integral points (m^2(m^2-n^2), m^2(m^2-n^2)^2), (m^2(m^2-l^2), ...),
// (k^2(k^2-m^2), ...) on the curve with A = klmn. Equal to the psi-images of
// the family triples; all three have positive y.
std::array<Point, 3> integral_points_from_solution(const NormFormSolution& s);

}  // namespace cnforge
