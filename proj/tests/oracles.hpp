// Independent brute-force oracles for the test suites. Everything here is
// deliberately naive and kept free of the library's solver/factorizer code
// paths: plain loops over machine integers.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace oracles {

// All 0 < l < n with n^2 + n*l + l^2 = target, by double loop.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> norm_solutions(
    std::uint64_t target) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t l = 1; l * l * 3 < target; ++l) {
    for (std::uint64_t n = l + 1;; ++n) {
      const std::uint64_t value = n * n + n * l + l * l;
      if (value == target) out.emplace_back(n, l);
      if (value >= target) break;
    }
  }
  return out;
}

// Plain sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Squarefree part by trial division; n != 0, |n| small.
inline std::int64_t squarefree_part_trial(std::int64_t n) {
  std::int64_t s = n < 0 ? -1 : 1;
  std::uint64_t v = static_cast<std::uint64_t>(n < 0 ? -n : n);
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    unsigned exp = 0;
    while (v % p == 0) {
      v /= p;
      ++exp;
    }
    if (exp % 2 == 1) s *= static_cast<std::int64_t>(p);
  }
  return s * static_cast<std::int64_t>(v);
}

}  // namespace oracles
