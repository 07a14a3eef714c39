#include "cnforge/table.hpp"

#include <exception>

namespace cnforge {

Int PaperTableRow::m() const {
  Int product = 1;
  for (const Int& p : m_factors) product *= p;
  return product;
}

const std::vector<PaperTableRow>& paper_table() {
  static const std::vector<PaperTableRow> rows = {
      {Int("237195512400"), {7, 127}, Int(464), Int(561), Int(1025)},
      {Int("8813542297560"), {7, 13, 37}, Int(232), Int(3245), Int(3477)},
      {Int("10280171942040"), {37, 67}, Int(741), Int(2024), Int(2765)},
      {Int("81096660783600"), {37, 103}, Int(2139), Int(2261), Int(4400)},
      {Int("225722120463840"), {13, 19, 31}, Int(505), Int(7392), Int(7897)},
      {Int("457485316904280"), {7, 31, 37}, Int(895), Int(7544), Int(8439)},
      {Int("5117352889729080"), {67, 223}, Int(1551), Int(14105), Int(15656)},
      {Int("281692457452791000"), {79, 409}, Int(9064), Int(26811), Int(35875)},
      {Int("24666188870481576600"), {13, 31, 223}, Int(46169), Int(57400), Int(103569)},
  };
  return rows;
}

RowReport verify_row(const PaperTableRow& row) {
  RowReport report;
  try {
    const Int m = row.m();
    report.k_matches = row.k == row.n + row.l;
    report.area_matches = row.area == row.k * row.l * m * row.n;
    report.norm_identity = m * m == row.n * row.n + row.n * row.l + row.l * row.l;

    report.m_admissible = !row.m_factors.empty();
    const Int* prev = nullptr;
    for (const Int& p : row.m_factors) {
      if (!is_prime(p) || p % 6 != 1 || (prev && !(*prev < p))) {
        report.m_admissible = false;
        break;
      }
      prev = &p;
    }

    report.pairwise_coprime =
        gcd(m, row.n) == 1 && gcd(m, row.l) == 1 && gcd(row.n, row.l) == 1;

    if (!report.pass() && report.detail.empty()) {
      if (!report.k_matches) report.detail = "k != n + l";
      else if (!report.area_matches) report.detail = "A != klmn";
      else if (!report.norm_identity) report.detail = "m^2 != n^2 + nl + l^2";
      else if (!report.m_admissible) report.detail = "m factors inadmissible";
      else if (!report.pairwise_coprime) report.detail = "m, n, l not pairwise coprime";
    }
    if (report.k_matches && report.area_matches && report.norm_identity &&
        report.m_admissible && report.pairwise_coprime) {
      std::vector<FactorEntry> entries;
      for (const Int& p : row.m_factors) entries.push_back({p, 1});
      AdmissibleInput input{NormFormSolution::create(m, row.n, row.l),
                            Factorization(1, std::move(entries)), true};
      rank2_certificate(input);
      report.certificate_ok = true;
    }
  } catch (const std::exception& e) {
    report.detail = e.what();
  }
  return report;
}

}  // namespace cnforge
