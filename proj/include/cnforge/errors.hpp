#pragma once

#include <stdexcept>
#include <string>

namespace cnforge {

// Base class for all library errors. Precondition violations on plain
// arguments (bad strings, negative limits, ...) throw std::invalid_argument
// instead; everything domain-specific derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cofactor resisted splitting within the configured effort bound.
class Unfactored : public Error {
 public:
  using Error::Error;
};

// Input fails the admissibility hypotheses (m not a squarefree product of
// primes = 1 mod 6, or m,n,l not pairwise coprime, or not a solution).
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

// A point handed to a curve operation does not satisfy the curve equation.
class NotOnCurve : public Error {
 public:
  using Error::Error;
};

// The triple-to-point map is undefined at b + c = 0.
class DegenerateTriple : public Error {
 public:
  using Error::Error;
};

// The point-to-triple map is undefined at infinity and at y = 0.
class NotInvertibleHere : public Error {
 public:
  using Error::Error;
};

// triple_from_mn requires m > n > 0.
class BadOrder : public Error {
 public:
  using Error::Error;
};

// No square class can be read off a point with x = 0.
class ZeroX : public Error {
 public:
  using Error::Error;
};

// Two of the fourteen square classes coincided. Cannot happen for admissible
// inputs; treated as a fatal internal error, never recovered from.
class DistinctnessFailure : public Error {
 public:
  using Error::Error;
};

// Quartic witness reconstruction failed integrality. Signals a bug, not a
// property of valid curve points.
class NonIntegralWitness : public Error {
 public:
  using Error::Error;
};

// Two of the three collinear points coincide.
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

// Scaling factor q = 0.
class ZeroScale : public Error {
 public:
  using Error::Error;
};

}  // namespace cnforge
