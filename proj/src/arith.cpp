#include "cnforge/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace cnforge {

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num);
  r /= Rat(den);
  return r;  // gmp division canonicalizes: lowest terms, positive denominator
}

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Int parse_int(const std::string& text) {
  std::string body = text;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) body = body.substr(1);
  if (!digits_only(body))
    throw std::invalid_argument("parse_int: not a decimal integer: '" + text + "'");
  return Int(text, 10);
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return make_rat(num, den);
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

// ---------------------------------------------------------------------------
// Primality

namespace {

constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                     29, 31, 37, 41, 43, 47, 53, 59, 61,
                                     67, 71, 73, 79, 83, 89, 97};

// Below this bound the 13 bases 2..41 are a proven deterministic test
// (Sorenson-Webster); it comfortably covers 2^64.
const Int& deterministic_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

constexpr unsigned kDeterministicBases[] = {2,  3,  5,  7,  11, 13, 17,
                                            19, 23, 29, 31, 37, 41};

// True if `a` proves n composite. n odd, n > max(base)^2 is not required;
// caller filters small n first.
bool mr_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

PrimalityResult check_prime(const Int& n) {
  if (n < 0) throw std::invalid_argument("check_prime: negative argument");
  if (n < 2) return {false, true};
  for (unsigned p : kSmallPrimes) {
    if (n == p) return {true, true};
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, true};
  }
  if (n < 101 * 101) return {true, true};  // no prime factor <= 97 and n < 101^2

  Int d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  const bool in_det_range = n < deterministic_bound();
  for (unsigned a : kDeterministicBases) {
    if (mr_witness(n, Int(a), d, s)) return {false, true};
  }
  if (in_det_range) return {true, true};

  // 51 further rounds (64 total) with bases derived deterministically from n.
  gmp_randstate_t state;
  gmp_randinit_mt(state);
  gmp_randseed(state, n.get_mpz_t());
  Int a;
  bool composite = false;
  for (int round = 0; round < 51 && !composite; ++round) {
    mpz_urandomm(a.get_mpz_t(), state, Int(n - 3).get_mpz_t());
    a += 2;  // a in [2, n-2]
    composite = mr_witness(n, a, d, s);
  }
  gmp_randclear(state);
  if (composite) return {false, true};
  return {true, false};
}

bool is_prime(const Int& n) { return check_prime(n).prime; }

// ---------------------------------------------------------------------------
// Factorization

Factorization::Factorization(int sign, std::vector<FactorEntry> factors)
    : sign_(sign), factors_(std::move(factors)) {
  if (sign_ != 1 && sign_ != -1)
    throw std::invalid_argument("Factorization: sign must be +1 or -1");
  const Int* prev = nullptr;
  for (const FactorEntry& f : factors_) {
    if (f.exponent == 0)
      throw std::invalid_argument("Factorization: zero exponent");
    if (prev && !(*prev < f.prime))
      throw std::invalid_argument("Factorization: primes not strictly increasing");
    if (!is_prime(f.prime))
      throw std::invalid_argument("Factorization: listed factor " +
                                  f.prime.get_str() + " is not prime");
    prev = &f.prime;
  }
}

Int Factorization::value() const {
  Int v = sign_;
  for (const FactorEntry& f : factors_) v *= pow_int(f.prime, f.exponent);
  return v;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const FactorEntry& f) { return f.exponent == 1; });
}

namespace {

const std::vector<unsigned long>& trial_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kBound = 100000;
    std::vector<bool> sieve(kBound + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kBound; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle-finding variant of Pollard rho with batched gcds. Returns a
// nontrivial factor of the odd composite n (no factors below the trial
// bound). Decrements `budget` per squaring step; throws Unfactored when it
// runs out.
Int brent_split(const Int& n, gmp_randclass& rng, unsigned long long& budget) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return isqrt(n);
  constexpr unsigned long kBatch = 128;
  for (;;) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 2) + 1;
    Int x, ys, diff;
    Int q = 1, g = 1;
    unsigned long r = 1;
    auto spend = [&budget](unsigned long steps) {
      if (budget < steps)
        throw Unfactored("factorization effort bound exhausted");
      budget -= steps;
    };
    auto step = [&n, &c](Int& v) { v = (v * v + c) % n; };
    while (g == 1) {
      x = y;
      spend(r);
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(kBatch, r - k);
        spend(lim);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          q = (q * abs(diff)) % n;
        }
        g = gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // gcd collapsed inside a batch; replay one step at a time.
      do {
        spend(1);
        step(ys);
        diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
    // Whole cycle shared every factor; retry with fresh parameters.
  }
}

}  // namespace

FactorConfig default_factor_config() {
  static const FactorConfig config = [] {
    FactorConfig c;
    if (const char* env = std::getenv("CNFORGE_FACTOR_EFFORT")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) c.rho_budget = v;
    }
    return c;
  }();
  return config;
}

Factorization factorize(const Int& n) { return factorize(n, default_factor_config()); }

Factorization factorize(const Int& n, const FactorConfig& config) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  const int sign = sgn(n) < 0 ? -1 : 1;
  Int v = abs(n);
  std::map<Int, unsigned> found;

  for (unsigned long p : trial_primes()) {
    if (p > config.trial_bound) break;
    if (v == 1) break;
    if (Int(p) * p > v) break;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      v /= p;
      ++found[Int(p)];
    }
  }
  if (v > 1 && v <= Int(config.trial_bound) * config.trial_bound) {
    // Cofactor below the square of the trial bound is prime.
    ++found[v];
    v = 1;
  }

  if (v > 1) {
    unsigned long long budget = config.rho_budget;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0xC0FFEEul);  // fixed seed: factorize is deterministic
    std::vector<Int> pending{v};
    while (!pending.empty()) {
      Int c = pending.back();
      pending.pop_back();
      if (is_prime(c)) {
        ++found[c];
        continue;
      }
      Int d = brent_split(c, rng, budget);
      if (d <= 1 || d >= c)
        throw Unfactored("rho splitter failed on " + c.get_str());
      pending.push_back(d);
      pending.push_back(c / d);
    }
  }

  std::vector<FactorEntry> entries;
  entries.reserve(found.size());
  for (const auto& [p, e] : found) entries.push_back({p, e});
  return Factorization(sign, std::move(entries));
}

std::pair<Int, Int> square_free_part(const Int& n) {
  if (n == 0) throw std::invalid_argument("square_free_part: zero");
  const Factorization f = factorize(n);
  Int s = f.sign();
  Int t = 1;
  for (const FactorEntry& e : f.factors()) {
    if (e.exponent % 2 == 1) s *= e.prime;
    t *= pow_int(e.prime, e.exponent / 2);
  }
  return {s, t};
}

SquareClass::SquareClass(const Int& value)
    : repr_(square_free_part(value).first) {}

SquareClass square_class(const Int& x) {
  if (x == 0) throw std::invalid_argument("square_class: zero");
  return SquareClass(x);
}

SquareClass square_class(const Rat& x) {
  if (x == 0) throw std::invalid_argument("square_class: zero");
  return SquareClass(Int(x.get_num() * x.get_den()));
}

SquareClass class_mul(const SquareClass& u, const SquareClass& v) {
  // With u, v squarefree the squarefree part of u*v is u*v / gcd(u,v)^2;
  // no factorization needed.
  const Int g = gcd(abs(u.repr_), abs(v.repr_));
  Int r = (u.repr_ * v.repr_) / (g * g);
  return SquareClass(std::move(r), SquareClass::AlreadyReduced{});
}

std::vector<Int> primes_1_mod_6(const Int& limit) {
  std::vector<Int> out;
  if (limit < 7) return out;
  if (!limit.fits_slong_p() || limit > 100'000'000)
    throw std::invalid_argument("primes_1_mod_6: limit too large for the sieve");
  const unsigned long bound = limit.get_ui();
  std::vector<bool> sieve(bound + 1, true);
  for (unsigned long i = 2; i * i <= bound; ++i) {
    if (!sieve[i]) continue;
    for (unsigned long j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  for (unsigned long p = 7; p <= bound; ++p) {
    if (sieve[p] && p % 6 == 1) out.push_back(Int(p));
  }
  return out;
}

}  // namespace cnforge
