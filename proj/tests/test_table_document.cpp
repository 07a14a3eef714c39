#include "cnforge/document.hpp"
#include "cnforge/table.hpp"

#include "doctest.h"

using namespace cnforge;

TEST_CASE("the bundled table has nine exact rows") {
  const auto& rows = paper_table();
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].area == Int("237195512400"));
  CHECK(rows[0].m() == 889);
  CHECK(rows[0].n == 561);
  CHECK(rows[0].l == 464);
  CHECK(rows[0].k == 1025);
  CHECK(rows[8].area == Int("24666188870481576600"));
  CHECK(rows[8].m() == 89869);  // 13 * 31 * 223
  CHECK(rows[8].k == 103569);
}

TEST_CASE("verify_row passes every bundled row") {
  for (const PaperTableRow& row : paper_table()) {
    const RowReport report = verify_row(row);
    CAPTURE(row.area.get_str());
    CAPTURE(report.detail);
    REQUIRE(report.pass());
  }
}

TEST_CASE("verify_row rejects tampered rows") {
  PaperTableRow off_by_one = paper_table()[0];
  off_by_one.area += 1;
  const RowReport r1 = verify_row(off_by_one);
  CHECK_FALSE(r1.pass());
  CHECK_FALSE(r1.area_matches);

  PaperTableRow bad_k = paper_table()[2];
  bad_k.k += 1;
  CHECK_FALSE(verify_row(bad_k).pass());

  PaperTableRow bad_n = paper_table()[4];
  bad_n.n -= 1;
  const RowReport r3 = verify_row(bad_n);
  CHECK_FALSE(r3.pass());
  CHECK_FALSE(r3.norm_identity);

  PaperTableRow composite_factor = paper_table()[0];
  composite_factor.m_factors = {Int(7), Int(128)};
  CHECK_FALSE(verify_row(composite_factor).m_admissible);
}

TEST_CASE("build_document: (7,5,3) certificate document") {
  const RankCertificate cert = rank2_certificate(theorem_inputs(Int(7)).at(0));
  const CertificateDocument doc = build_document(cert);

  CHECK(doc.schema_version == "1");
  CHECK(doc.area == "840");
  CHECK(doc.m == "7");
  CHECK(doc.n == "5");
  CHECK(doc.l == "3");
  CHECK(doc.k == "8");
  CHECK(doc.q == "1");
  CHECK(doc.triples[0][0] == "70");
  CHECK(doc.triples[2][2] == "113");
  REQUIRE(doc.points.size() == 14);
  CHECK(doc.points[0][0] == "1176");
  CHECK(doc.points[0][1] == "28224");
  REQUIRE(doc.classes.size() == 14);
  CHECK(doc.classes.front() == "-210");
  CHECK(doc.classes.back() == "210");
  CHECK(std::is_sorted(doc.classes.begin(), doc.classes.end(),
                       [](const std::string& a, const std::string& b) {
                         return parse_int(a) < parse_int(b);
                       }));
  CHECK(doc.closure_order == 16);
  CHECK(doc.collinear_slope == "64");
  CHECK(doc.all_checks_pass());
  CHECK(doc.checks.at("rank_lower_bound_two"));
}

TEST_CASE("document JSON round-trips and reverifies to itself") {
  const RankCertificate cert = rank2_certificate(theorem_inputs(Int(7)).at(0));
  const CertificateDocument doc = build_document(cert);

  const std::string serialized = doc.to_json().dump(2);
  const CertificateDocument parsed =
      CertificateDocument::from_json(nlohmann::ordered_json::parse(serialized));
  CHECK(parsed.to_json().dump(2) == serialized);

  const CertificateDocument rebuilt = reverify(parsed);
  CHECK(rebuilt.to_json().dump(2) == serialized);
}

TEST_CASE("scaled documents carry q and reverify") {
  const RankCertificate base = rank2_certificate(theorem_inputs(Int(7)).at(0));
  const CertificateDocument doc = build_document(scaled_certificate(base, Int(2)));
  CHECK(doc.area == "13440");
  CHECK(doc.q == "2");
  CHECK(doc.m == "7");  // document records the unscaled solution plus q
  CHECK(doc.collinear_slope == "256");
  CHECK(doc.all_checks_pass());

  const CertificateDocument rebuilt = reverify(doc);
  CHECK(rebuilt.to_json() == doc.to_json());
}

TEST_CASE("CSV rendering") {
  const RankCertificate cert = rank2_certificate(theorem_inputs(Int(7)).at(0));
  const CertificateDocument doc = build_document(cert);
  CHECK(CertificateDocument::csv_header() ==
        "schema_version,A,m,n,l,k,q,closure_order,collinear_slope,classes,checks_pass");
  CHECK(doc.to_csv_row() ==
        "1,840,7,5,3,8,1,16,64,"
        "-210;-35;-21;-15;-14;-10;-6;6;10;14;15;21;35;210,true");
}

TEST_CASE("documents for every bundled row pass all checks") {
  for (const PaperTableRow& row : paper_table()) {
    const Int m = row.m();
    bool found = false;
    for (const AdmissibleInput& input : theorem_inputs(m)) {
      if (input.solution.n != row.n || input.solution.l != row.l) continue;
      found = true;
      const CertificateDocument doc = build_document(rank2_certificate(input));
      CAPTURE(row.area.get_str());
      REQUIRE(doc.all_checks_pass());
      REQUIRE(parse_int(doc.area) == row.area);
    }
    REQUIRE(found);
  }
}
