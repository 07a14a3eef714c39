#include "cnforge/curve.hpp"

#include <stdexcept>

namespace cnforge {

Point neg(const Point& p) {
  if (p.is_infinity()) return p;
  return Point(p.x(), -p.y());
}

Curve::Curve(Int a) : a_(std::move(a)) {
  if (a_ <= 0) throw std::invalid_argument("Curve: A must be positive");
}

bool Curve::contains(const Point& p) const {
  if (p.is_infinity()) return true;
  const Rat& x = p.x();
  const Rat& y = p.y();
  return y * y == x * x * x - Rat(a_ * a_) * x;
}

void Curve::require_on_curve(const Point& p) const {
  if (!contains(p)) {
    const std::string where =
        p.is_infinity() ? "infinity"
                        : "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
    throw NotOnCurve("point " + where + " is not on the curve with A = " + a_.get_str());
  }
}

Point Curve::add(const Point& p, const Point& q, bool validate) const {
  if (validate) {
    require_on_curve(p);
    require_on_curve(q);
  }
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;

  const Rat& x0 = p.x();
  const Rat& y0 = p.y();
  const Rat& x1 = q.x();
  const Rat& y1 = q.y();

  if (x0 == x1) {
    // Same x-coordinate: either a vertical chord/tangent (including the
    // 2-torsion doublings with y = 0), or a genuine doubling.
    if (y0 == -y1) return Point::at_infinity();
    const Rat lambda = (3 * x0 * x0 - Rat(a_ * a_)) / (2 * y0);
    const Rat x2 = lambda * lambda - 2 * x0;
    const Rat y2 = 3 * x0 * lambda - lambda * lambda * lambda - y0;
    return Point(x2, y2);
  }

  const Rat lambda = (y1 - y0) / (x1 - x0);
  const Rat x2 = lambda * lambda - x0 - x1;
  const Rat y2 = lambda * (x0 - x2) - y0;
  return Point(x2, y2);
}

Point Curve::dbl(const Point& p, bool validate) const {
  return add(p, p, validate);
}

Point Curve::mul(const Int& t, const Point& p, bool validate) const {
  if (validate) require_on_curve(p);
  if (t == 0 || p.is_infinity()) return Point::at_infinity();

  const Int count = abs(t);
  Point acc = Point::at_infinity();
  const unsigned long bits = mpz_sizeinbase(count.get_mpz_t(), 2);
  for (unsigned long i = bits; i-- > 0;) {
    acc = dbl(acc, false);
    if (mpz_tstbit(count.get_mpz_t(), i)) acc = add(acc, p, false);
  }
  return t < 0 ? neg(acc) : acc;
}

std::array<Point, 3> Curve::two_torsion() const {
  return {Point(Rat(0), Rat(0)), Point(Rat(a_), Rat(0)), Point(Rat(-a_), Rat(0))};
}

bool Curve::has_infinite_order(const Point& p) const {
  require_on_curve(p);
  return !p.is_infinity() && p.y() != 0;
}

}  // namespace cnforge
