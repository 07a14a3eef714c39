#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cnforge/errors.hpp"

namespace cnforge {

// Every number in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms with a
// positive denominator (0 is stored as 0/1). There is no floating point
// anywhere.
using Int = mpz_class;
using Rat = mpq_class;

Int gcd(const Int& a, const Int& b);
Int isqrt(const Int& n);  // floor of the square root, n >= 0
bool is_perfect_square(const Int& n);
Int pow_int(const Int& base, unsigned long exp);

Rat make_rat(const Int& num, const Int& den);

// Strict base-10 parsers: optional sign, digits, nothing else. parse_rat
// additionally accepts "p/q" with a nonzero q.
Int parse_int(const std::string& text);
Rat parse_rat(const std::string& text);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);  // "p" or "p/q"

struct PrimalityResult {
  bool prime;
  // True when the verdict is proven: any composite verdict, and prime
  // verdicts below the 13-base Miller-Rabin bound (~3.3e24). Above that
  // bound a prime verdict uses 64 rounds, error < 2^-128.
  bool deterministic;
};

PrimalityResult check_prime(const Int& n);  // n >= 0
bool is_prime(const Int& n);

struct FactorEntry {
  Int prime;
  unsigned exponent;
};

// sign * product(prime^exponent) with primes strictly increasing. The
// constructor re-verifies ordering and primality of every entry.
class Factorization {
 public:
  Factorization(int sign, std::vector<FactorEntry> factors);

  int sign() const { return sign_; }
  const std::vector<FactorEntry>& factors() const { return factors_; }
  Int value() const;
  bool is_squarefree() const;
  unsigned distinct_primes() const { return static_cast<unsigned>(factors_.size()); }

 private:
  int sign_;
  std::vector<FactorEntry> factors_;
};

struct FactorConfig {
  // Trial division by primes below this bound (capped at 100000).
  unsigned long trial_bound = 100000;
  // Total modular-squaring steps granted to the rho splitter for one
  // factorize() call. Exhausting it raises Unfactored, never a wrong answer.
  unsigned long long rho_budget = 50'000'000;
};

// Default config; the environment variable CNFORGE_FACTOR_EFFORT, when set
// to a positive integer, overrides rho_budget.
FactorConfig default_factor_config();

Factorization factorize(const Int& n);  // n != 0
Factorization factorize(const Int& n, const FactorConfig& config);

// n = s * t^2 with s squarefree carrying the sign of n and t >= 1.
std::pair<Int, Int> square_free_part(const Int& n);

// An element of Q*/(Q*)^2, stored as its unique representative: a signed
// squarefree integer. Two rationals x, y land in the same class iff x/y is
// the square of a rational.
class SquareClass {
 public:
  explicit SquareClass(const Int& value);  // reduces value != 0 to its squarefree part

  const Int& repr() const { return repr_; }

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.repr_ == b.repr_;
  }
  friend bool operator!=(const SquareClass& a, const SquareClass& b) {
    return !(a == b);
  }
  friend bool operator<(const SquareClass& a, const SquareClass& b) {
    return a.repr_ < b.repr_;
  }

 private:
  struct AlreadyReduced {};
  SquareClass(Int repr, AlreadyReduced) : repr_(std::move(repr)) {}

  Int repr_;

  friend SquareClass class_mul(const SquareClass& u, const SquareClass& v);
};

SquareClass square_class(const Int& x);  // x != 0
SquareClass square_class(const Rat& x);  // class of num*den, valid since den^2 is a square

// Group law of Q*/(Q*)^2: squarefree part of u*v. Identity 1, every element
// its own inverse.
SquareClass class_mul(const SquareClass& u, const SquareClass& v);

// All primes p <= limit with p = 1 (mod 6), ascending. Empty for limit < 7.
std::vector<Int> primes_1_mod_6(const Int& limit);

}  // namespace cnforge
