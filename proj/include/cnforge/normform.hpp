#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cnforge/arith.hpp"

namespace cnforge {

// A positive integral solution of m^2 = n^2 + n*l + l^2, canonicalized to
// 0 < l < n, with k = n + l.
struct NormFormSolution {
  Int m;
  Int n;
  Int l;
  Int k;

  // Validates positivity, l < n and the norm-form identity exactly.
  static NormFormSolution create(Int m, Int n, Int l);

  Int area() const { return k * l * m * n; }  // A = klmn

  friend bool operator==(const NormFormSolution& a, const NormFormSolution& b) {
    return a.m == b.m && a.n == b.n && a.l == b.l;
  }
};

// A solution meeting the rank-theorem hypotheses: m a squarefree product of
// primes = 1 (mod 6) and m, n, l pairwise coprime. Built only through
// theorem_inputs / checked constructors, never assumed.
struct AdmissibleInput {
  NormFormSolution solution;
  Factorization m_factors;
  bool coprime;  // always true; recorded because it is verified, not assumed
};

// All (n, l) with 0 < l < n and n^2 + n*l + l^2 = m, ascending in l. Uses an
// exact discriminant square test for n given l; no floating point.
std::vector<std::pair<Int, Int>> solve_m(const Int& m);  // m >= 1

// Same for n^2 + n*l + l^2 = m^2.
std::vector<std::pair<Int, Int>> solve_m_squared(const Int& m);  // m >= 1

struct CountReport {
  Int m;
  unsigned j;                    // number of prime factors of m
  std::size_t count_m;           // |solve_m(m)|
  Int expected_m;                // 2^(j-1)
  std::size_t count_m_squared;   // |solve_m_squared(m)|
  Int expected_m_squared;        // (3^j - 1)/2
  std::size_t coprime_count;     // measured gcd(n,l)=1 count among m^2 solutions
  Int claimed_coprime;           // 2^(j+1): recorded only, never asserted --
                                 // measured counts are 1 (j=1) and 2 (j=2)
  bool count_m_ok;
  bool count_m_squared_ok;
};

// Checks the precondition (m is a product of exactly j distinct primes, all
// = 1 mod 6), then measures both solution counts against the expected
// formulas. The coprime count is reported without assertion; see
// CountReport::claimed_coprime.
CountReport verify_fact1_counts(const Int& m, unsigned j);

// Ascending squarefree products of 1..max_j distinct primes = 1 (mod 6),
// each <= limit.
std::vector<Int> admissible_moduli(const Int& limit, unsigned max_j);

// For each solution of m^2 = n^2 + nl + l^2 with gcd(n, l) = 1, an
// AdmissibleInput with full pairwise coprimality verified. Ascending in l.
// Throws NotAdmissible when m itself fails the hypothesis on its factors.
std::vector<AdmissibleInput> theorem_inputs(const Int& m);

}  // namespace cnforge
