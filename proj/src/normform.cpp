#include "cnforge/normform.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnforge {

NormFormSolution NormFormSolution::create(Int m, Int n, Int l) {
  if (m <= 0 || n <= 0 || l <= 0)
    throw std::invalid_argument("NormFormSolution: m, n, l must be positive");
  if (!(l < n))
    throw std::invalid_argument("NormFormSolution: requires l < n");
  if (m * m != n * n + n * l + l * l)
    throw std::invalid_argument("NormFormSolution: m^2 = n^2 + nl + l^2 fails for (" +
                                m.get_str() + ", " + n.get_str() + ", " + l.get_str() + ")");
  Int k = n + l;
  return NormFormSolution{std::move(m), std::move(n), std::move(l), std::move(k)};
}

namespace {

// All 0 < l < n with n^2 + n*l + l^2 = target, ascending in l. For fixed l
// the equation is quadratic in n with discriminant 4*target - 3*l^2; n is
// integral iff that is a perfect square of matching parity.
std::vector<std::pair<Int, Int>> solve_target(const Int& target) {
  std::vector<std::pair<Int, Int>> out;
  // n > l forces target = n^2 + nl + l^2 > 3*l^2.
  for (Int l = 1; 3 * l * l < target; ++l) {
    const Int disc = 4 * target - 3 * l * l;
    const Int root = isqrt(disc);
    if (root * root != disc) continue;
    const Int numerator = root - l;
    if (numerator <= 0 || numerator % 2 != 0) continue;
    const Int n = numerator / 2;
    if (n > l) out.emplace_back(n, l);
  }
  return out;
}

void require_admissible_m(const Int& m, const Factorization& f) {
  if (m < 7 || !f.is_squarefree())
    throw NotAdmissible("m = " + m.get_str() +
                        " is not a squarefree product of primes = 1 mod 6");
  for (const FactorEntry& e : f.factors()) {
    if (e.prime % 6 != 1)
      throw NotAdmissible("m = " + m.get_str() + " has prime factor " +
                          e.prime.get_str() + " != 1 mod 6");
  }
}

}  // namespace

std::vector<std::pair<Int, Int>> solve_m(const Int& m) {
  if (m < 1) throw std::invalid_argument("solve_m: m must be >= 1");
  return solve_target(m);
}

std::vector<std::pair<Int, Int>> solve_m_squared(const Int& m) {
  if (m < 1) throw std::invalid_argument("solve_m_squared: m must be >= 1");
  return solve_target(m * m);
}

CountReport verify_fact1_counts(const Int& m, unsigned j) {
  const Factorization f = factorize(m);
  require_admissible_m(m, f);
  if (f.distinct_primes() != j)
    throw NotAdmissible("m = " + m.get_str() + " has " +
                        std::to_string(f.distinct_primes()) +
                        " prime factors, expected " + std::to_string(j));

  CountReport report;
  report.m = m;
  report.j = j;

  const auto sols_m = solve_m(m);
  const auto sols_m2 = solve_m_squared(m);
  report.count_m = sols_m.size();
  report.expected_m = pow_int(2, j - 1);
  report.count_m_squared = sols_m2.size();
  report.expected_m_squared = (pow_int(3, j) - 1) / 2;
  report.coprime_count = static_cast<std::size_t>(
      std::count_if(sols_m2.begin(), sols_m2.end(), [](const auto& nl) {
        return gcd(nl.first, nl.second) == 1;
      }));
  report.claimed_coprime = pow_int(2, j + 1);
  report.count_m_ok = Int(report.count_m) == report.expected_m;
  report.count_m_squared_ok = Int(report.count_m_squared) == report.expected_m_squared;
  return report;
}

std::vector<Int> admissible_moduli(const Int& limit, unsigned max_j) {
  std::vector<Int> out;
  if (limit < 7 || max_j == 0) return out;
  const std::vector<Int> primes = primes_1_mod_6(limit);

  // Depth-first products of up to max_j distinct primes, then sort.
  auto enumerate = [&](auto&& self, std::size_t start, const Int& product,
                       unsigned count) -> void {
    if (count > 0) out.push_back(product);
    if (count == max_j) return;
    for (std::size_t i = start; i < primes.size(); ++i) {
      const Int next = product * primes[i];
      if (next > limit) break;
      self(self, i + 1, next, count + 1);
    }
  };
  enumerate(enumerate, 0, Int(1), 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AdmissibleInput> theorem_inputs(const Int& m) {
  const Factorization f = factorize(m);
  require_admissible_m(m, f);

  std::vector<AdmissibleInput> out;
  for (const auto& [n, l] : solve_m_squared(m)) {
    if (gcd(n, l) != 1) continue;
    // Pairwise coprimality is a consequence of gcd(n, l) = 1 here, but the
    // hypothesis is verified rather than assumed.
    if (gcd(n, m) != 1 || gcd(l, m) != 1)
      throw NotAdmissible("solution (" + n.get_str() + ", " + l.get_str() +
                          ") of m = " + m.get_str() + " is not coprime to m");
    out.push_back(AdmissibleInput{NormFormSolution::create(m, n, l), f, true});
  }
  return out;
}

}  // namespace cnforge
