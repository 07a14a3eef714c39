#pragma once

#include <set>
#include <vector>

#include "cnforge/triples.hpp"

namespace cnforge {

// Parameters of a curve y^2 = x^3 + Bx and its companion y^2 = x^3 - 4Bx.
// For congruent-number use B = -A^2, so the companion has coefficient 4A^2.
struct DescentParams {
  Int b;      // B
  Int b_bar;  // -4B

  static DescentParams for_area(const Int& a) {
    const Int b = -(a * a);
    return DescentParams{b, -4 * b};
  }
};

// A rational point with y != 0 on y^2 = x^3 + Bx determines integers
// (M, e, N) with x = b1 M^2 / e^2, y = b1 M N / e^3 and
// N^2 = b1 M^4 + b2 e^4, where b1 is the square class of x and b2 = B / b1.
struct QuarticWitness {
  SquareClass b1;
  Int big_m;  // M >= 1
  Int e;      // e >= 1
  Int n;      // N, sign matching y / (b1 M)
};

// The square class of a point's x-coordinate; this is the b1 of the quartic
// equation the point solves. Requires x != 0 (ZeroX otherwise; the torsion
// point (0,0) never enters: the classes +-klmn come from (+-A, 0)).
SquareClass b1_of_point(const Point& p);

// The fourteen points and square classes witnessing rank >= 2, in a fixed
// order: psi-images of the three family triples, of their cathetus-swapped
// versions, of all six with negated hypotenuse, then (A, 0) and (-A, 0).
// Classes are pairwise distinct for admissible inputs; a collision is a
// fatal DistinctnessFailure.
struct ClassTable {
  std::vector<Point> points;        // 14
  std::vector<SquareClass> classes; // 14, same order
};

ClassTable fourteen_classes(const AdmissibleInput& input);

// The class formulas the table must reproduce, in table order: squarefree
// parts of kl, kn, nl, mn, ml, mk, their negatives, then +-klmn.
std::vector<SquareClass> expected_class_formulas(const NormFormSolution& s);

// Subgroup of Q*/(Q*)^2 generated by the given classes (identity adjoined),
// computed as a fixpoint under class_mul. The result size is a power of 2.
std::set<SquareClass> subgroup_closure(const std::set<SquareClass>& classes);

// Everything needed to certify rank >= 2 for the curve of `solution`:
// fourteen pairwise-distinct square classes of rational points plus an
// infinite-order witness. `input` keeps the unscaled admissible solution;
// `solution` is its scaling_q-multiple (identical for scaling_q = 1).
struct RankCertificate {
  AdmissibleInput input;
  Int scaling_q;            // >= 1
  NormFormSolution solution;
  Int area;                 // A = klmn of `solution`
  ClassTable table;
  std::set<SquareClass> closure;
  Point witness;            // first integral point; affine with y > 0
  int rank_lower_bound;     // always 2
};

// Re-verifies every hypothesis (squarefree m with prime factors = 1 mod 6,
// pairwise coprimality, the norm-form identity), then assembles the
// certificate. Positive rank comes from the witness; fourteen distinct
// classes give #alpha >= 14 >= 9, hence rank >= 2.
RankCertificate rank2_certificate(const AdmissibleInput& input);

// Certificate for the curve with area A * q^4, built from the scaled
// solution (mq, nq, lq). The scaled solution is no longer pairwise coprime;
// the certificate carries the scaling provenance instead of re-checking the
// hypotheses. q != 0; the sign of q is irrelevant.
RankCertificate scaled_certificate(const RankCertificate& certificate, const Int& q);

// Extracts (b1, M, e, N) from an affine point with x, y != 0 on the curve
// y^2 = x^3 + Bx and verifies N^2 = b1 M^4 + b2 e^4 exactly.
QuarticWitness quartic_witness(const DescentParams& params, const Point& p);

// Rebuilds the point (b1 M^2/e^2, b1 M N/e^3) encoded by a witness.
Point point_from_witness(const QuarticWitness& w);

struct CollinearityReport {
  Rat slope;  // common slope of the three integral points
  bool ok;    // both slopes equal k^2 and P1 + P2 + P3 = infinity
};

// Checks that the three integral points of a solution lie on one line of
// slope k^2, and the group-law consequence P1 + P2 = -P3.
CollinearityReport collinearity_check(const NormFormSolution& s);

}  // namespace cnforge
