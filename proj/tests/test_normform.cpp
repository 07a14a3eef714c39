#include "cnforge/normform.hpp"

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

using namespace cnforge;

namespace {

std::vector<std::pair<Int, Int>> to_int_pairs(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& v) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& [n, l] : v) out.emplace_back(Int(n), Int(l));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

}  // namespace

TEST_CASE("NormFormSolution::create validates") {
  const NormFormSolution s = NormFormSolution::create(Int(7), Int(5), Int(3));
  CHECK(s.k == 8);
  CHECK(s.area() == 840);
  CHECK_THROWS_AS(NormFormSolution::create(Int(7), Int(3), Int(5)), std::invalid_argument);
  CHECK_THROWS_AS(NormFormSolution::create(Int(7), Int(5), Int(4)), std::invalid_argument);
  CHECK_THROWS_AS(NormFormSolution::create(Int(7), Int(-5), Int(-3)), std::invalid_argument);
}

TEST_CASE("solve_m: examples") {
  const auto s7 = solve_m(Int(7));
  REQUIRE(s7.size() == 1);
  CHECK(s7[0].first == 2);
  CHECK(s7[0].second == 1);

  const auto s91 = solve_m(Int(91));
  REQUIRE(s91.size() == 2);  // 2^(j-1) with j = 2
  CHECK(s91[0] == std::pair<Int, Int>(Int(9), Int(1)));
  CHECK(s91[1] == std::pair<Int, Int>(Int(6), Int(5)));

  CHECK(solve_m(Int(5)).empty());
  CHECK(solve_m(Int(1)).empty());
  CHECK(solve_m(Int(2)).empty());
  CHECK(solve_m(Int(3)).empty());
  CHECK_THROWS_AS(solve_m(Int(0)), std::invalid_argument);
}

TEST_CASE("solve_m_squared: examples") {
  const auto s7 = solve_m_squared(Int(7));
  REQUIRE(s7.size() == 1);
  CHECK(s7[0].first == 5);
  CHECK(s7[0].second == 3);

  const auto s91 = solve_m_squared(Int(91));
  REQUIRE(s91.size() == 4);  // (3^2 - 1)/2
  // Ascending in l.
  CHECK(s91[0] == std::pair<Int, Int>(Int(85), Int(11)));
  CHECK(s91[1] == std::pair<Int, Int>(Int(80), Int(19)));
  CHECK(s91[2] == std::pair<Int, Int>(Int(65), Int(39)));
  CHECK(s91[3] == std::pair<Int, Int>(Int(56), Int(49)));

  CHECK(solve_m_squared(Int(1)).empty());
}

TEST_CASE("solve results satisfy the identity and the canonical order") {
  for (int m = 1; m <= 200; ++m) {
    for (const auto& [n, l] : solve_m_squared(Int(m))) {
      REQUIRE(l > 0);
      REQUIRE(n > l);
      REQUIRE(Int(m) * m == n * n + n * l + l * l);
    }
  }
}

TEST_CASE("solve_m and solve_m_squared match the naive double loop up to 500") {
  for (std::uint64_t m = 1; m <= 500; ++m) {
    CAPTURE(m);
    REQUIRE(solve_m(Int(m)) == to_int_pairs(oracles::norm_solutions(m)));
    REQUIRE(solve_m_squared(Int(m)) == to_int_pairs(oracles::norm_solutions(m * m)));
  }
}

TEST_CASE("verify_fact1_counts: examples") {
  const CountReport r7 = verify_fact1_counts(Int(7), 1);
  CHECK(r7.count_m == 1);
  CHECK(r7.count_m_squared == 1);
  CHECK(r7.count_m_ok);
  CHECK(r7.count_m_squared_ok);
  CHECK(r7.coprime_count == 1);
  CHECK(r7.claimed_coprime == 4);  // recorded only; measured value differs

  const CountReport r91 = verify_fact1_counts(Int(91), 2);
  CHECK(r91.count_m == 2);
  CHECK(r91.count_m_squared == 4);
  CHECK(r91.count_m_ok);
  CHECK(r91.count_m_squared_ok);
  CHECK(r91.coprime_count == 2);
  CHECK(r91.claimed_coprime == 8);

  const CountReport r1729 = verify_fact1_counts(Int(1729), 3);  // 7 * 13 * 19
  CHECK(r1729.count_m == 4);
  CHECK(r1729.count_m_squared == 13);
  CHECK(r1729.count_m_ok);
  CHECK(r1729.count_m_squared_ok);

  CHECK_THROWS_AS(verify_fact1_counts(Int(91), 1), NotAdmissible);   // wrong j
  CHECK_THROWS_AS(verify_fact1_counts(Int(25), 1), NotAdmissible);   // 5 != 1 mod 6
  CHECK_THROWS_AS(verify_fact1_counts(Int(49), 1), NotAdmissible);   // not squarefree
  CHECK_THROWS_AS(verify_fact1_counts(Int(14), 2), NotAdmissible);   // factor 2
}

TEST_CASE("admissible_moduli: examples") {
  const std::vector<Int> singles = admissible_moduli(Int(100), 1);
  const std::vector<Int> expected = {Int(7),  Int(13), Int(19), Int(31),
                                     Int(37), Int(43), Int(61), Int(67),
                                     Int(73), Int(79), Int(97)};
  CHECK(singles == expected);

  const std::vector<Int> pairs = admissible_moduli(Int(91), 2);
  CHECK(std::find(pairs.begin(), pairs.end(), Int(91)) != pairs.end());

  const std::vector<Int> triples = admissible_moduli(Int(89869), 3);
  CHECK(std::find(triples.begin(), triples.end(), Int(89869)) != triples.end());

  CHECK(admissible_moduli(Int(6), 2).empty());
  CHECK(std::is_sorted(singles.begin(), singles.end()));
}

TEST_CASE("theorem_inputs: examples") {
  const auto from7 = theorem_inputs(Int(7));
  REQUIRE(from7.size() == 1);
  CHECK(from7[0].solution.m == 7);
  CHECK(from7[0].solution.n == 5);
  CHECK(from7[0].solution.l == 3);
  CHECK(from7[0].solution.k == 8);
  CHECK(from7[0].coprime);

  const auto from91 = theorem_inputs(Int(91));
  REQUIRE(from91.size() == 2);  // the gcd-1 subset of the 4 solutions
  CHECK(from91[0].solution.n == 85);
  CHECK(from91[0].solution.l == 11);
  CHECK(from91[0].solution.k == 96);
  CHECK(from91[1].solution.n == 80);
  CHECK(from91[1].solution.l == 19);
  CHECK(from91[1].solution.k == 99);

  const auto from889 = theorem_inputs(Int(889));
  const bool has_row1 = std::any_of(from889.begin(), from889.end(), [](const auto& in) {
    return in.solution.n == 561 && in.solution.l == 464 && in.solution.k == 1025;
  });
  CHECK(has_row1);

  CHECK_THROWS_AS(theorem_inputs(Int(10)), NotAdmissible);
  CHECK_THROWS_AS(theorem_inputs(Int(49)), NotAdmissible);
}

TEST_CASE("coprime solutions are coprime to m and k as well") {
  // Algebraic consequence of gcd(n, l) = 1, asserted over a scan.
  for (const Int& m : admissible_moduli(Int(2000), 2)) {
    for (const AdmissibleInput& input : theorem_inputs(m)) {
      const NormFormSolution& s = input.solution;
      REQUIRE(gcd(s.n, s.l) == 1);
      REQUIRE(gcd(s.n, s.m) == 1);
      REQUIRE(gcd(s.l, s.m) == 1);
      REQUIRE(gcd(s.n, s.k) == 1);
      REQUIRE(gcd(s.l, s.k) == 1);
    }
  }
}
