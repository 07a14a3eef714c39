#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cnforge/descent.hpp"

#include "json.hpp"

namespace cnforge {

// Machine-readable certificate, schema_version "1". Every number is an
// exact decimal string (areas and classes overflow doubles and int64),
// except closure_order which is small by construction. `checks` holds the
// named verification outcomes; an emitted document has all of them true.
struct CertificateDocument {
  std::string schema_version;
  std::string area;                                  // A of the certified curve
  std::string m, n, l, k;                            // unscaled solution
  std::string q;                                     // scaling factor, "1" if none
  std::array<std::array<std::string, 3>, 3> triples; // (a, b, c) each
  std::vector<std::array<std::string, 2>> points;    // 14 x (x, y)
  std::vector<std::string> classes;                  // 14, ascending numerically
  long closure_order;
  std::string collinear_slope;
  std::map<std::string, bool> checks;

  nlohmann::ordered_json to_json() const;
  static CertificateDocument from_json(const nlohmann::ordered_json& j);

  static std::string csv_header();
  std::string to_csv_row() const;

  bool all_checks_pass() const;
};

// Runs the full battery of verifications against a certificate and records
// the outcomes; nothing is assumed true.
CertificateDocument build_document(const RankCertificate& certificate);

// Rebuilds a certificate from the document's (m, n, l, q) through the
// library and re-emits it; a faithful document round-trips to itself.
CertificateDocument reverify(const CertificateDocument& doc);

}  // namespace cnforge
