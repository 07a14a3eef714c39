#pragma once

#include <string>
#include <vector>

#include "cnforge/descent.hpp"

namespace cnforge {

// One row of the bundled reference table of certified curves:
// A = klmn, m = product of the listed primes, k = n + l.
struct PaperTableRow {
  Int area;                    // A
  std::vector<Int> m_factors;  // ascending primes
  Int l;
  Int n;
  Int k;

  Int m() const;
};

// The nine bundled rows, in table order. Embedded fixture; nothing is read
// from disk.
const std::vector<PaperTableRow>& paper_table();

struct RowReport {
  bool k_matches = false;          // k = n + l
  bool area_matches = false;       // A = klmn
  bool norm_identity = false;      // m^2 = n^2 + nl + l^2
  bool m_admissible = false;       // factors prime, distinct, = 1 mod 6
  bool pairwise_coprime = false;   // gcd(m,n) = gcd(m,l) = gcd(n,l) = 1
  bool certificate_ok = false;     // rank2_certificate succeeded
  std::string detail;              // first failure, empty when passing

  bool pass() const {
    return k_matches && area_matches && norm_identity && m_admissible &&
           pairwise_coprime && certificate_ok;
  }
};

// Verifies every stated relation of a row with exact arithmetic, then runs
// the rank certificate. Never throws; failures land in the report.
RowReport verify_row(const PaperTableRow& row);

}  // namespace cnforge
