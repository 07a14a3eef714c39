#pragma once

#include <array>

#include "cnforge/arith.hpp"

namespace cnforge {

// A rational point on a congruent-number curve: either the point at infinity
// (the neutral element, projectively (0,1,0)) or an affine pair (x, y).
class Point {
 public:
  Point(Rat x, Rat y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  static Point at_infinity() { return Point(); }

  bool is_infinity() const { return infinity_; }
  const Rat& x() const { return coord(x_); }
  const Rat& y() const { return coord(y_); }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

 private:
  Point() : infinity_(true) {}
  const Rat& coord(const Rat& c) const {
    if (infinity_) throw std::logic_error("coordinate of the point at infinity");
    return c;
  }

  bool infinity_;
  Rat x_, y_;
};

// Reflection across the x-axis; the group inverse.
Point neg(const Point& p);

// The curve y^2 = x^3 - A^2 x for a fixed positive integer A, with the
// chord-tangent group law.
class Curve {
 public:
  explicit Curve(Int a);  // A > 0

  const Int& A() const { return a_; }
  Int coeff_b() const { return -(a_ * a_); }  // B in the y^2 = x^3 + Bx form

  bool contains(const Point& p) const;

  // Complete affine case analysis: chord for distinct x, tangent for a
  // doubled point, infinity for a vertical chord or tangent, and infinity
  // neutral on both sides. `validate` re-checks both operands against the
  // curve equation (quadratic cost in operand size; inner loops opt out).
  Point add(const Point& p, const Point& q, bool validate = true) const;
  Point dbl(const Point& p, bool validate = true) const;

  // t*p by double-and-add; 0*p is infinity, negative t via neg.
  Point mul(const Int& t, const Point& p, bool validate = true) const;

  // (0,0), (A,0), (-A,0): the full 2-torsion apart from infinity.
  std::array<Point, 3> two_torsion() const;

  // True iff p is affine with y != 0. On these curves every such rational
  // point has infinite order; the torsion is exactly {O, (0,0), (+-A,0)}.
  bool has_infinite_order(const Point& p) const;

 private:
  void require_on_curve(const Point& p) const;

  Int a_;
};

}  // namespace cnforge
