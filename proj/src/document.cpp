#include "cnforge/document.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace cnforge {

namespace {

std::array<std::string, 3> triple_strings(const PythTriple& t) {
  return {to_string(t.a()), to_string(t.b()), to_string(t.c())};
}

bool points_match_integral_formulas(const RankCertificate& cert) {
  const auto expected = integral_points_from_solution(cert.solution);
  for (int i = 0; i < 3; ++i) {
    if (cert.table.points[i] != expected[i]) return false;
    if (expected[i].x().get_den() != 1 || expected[i].y().get_den() != 1) return false;
    if (expected[i].y() <= 0) return false;
  }
  return true;
}

bool quartic_witnesses_reconstruct(const RankCertificate& cert) {
  const DescentParams params = DescentParams::for_area(cert.area);
  for (int i = 0; i < 12; ++i) {
    const Point& p = cert.table.points[i];
    try {
      const QuarticWitness w = quartic_witness(params, p);
      if (point_from_witness(w) != p) return false;
      if (w.b1 != cert.table.classes[i]) return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

}  // namespace

CertificateDocument build_document(const RankCertificate& cert) {
  CertificateDocument doc;
  doc.schema_version = "1";
  doc.area = to_string(cert.area);
  doc.m = to_string(cert.input.solution.m);
  doc.n = to_string(cert.input.solution.n);
  doc.l = to_string(cert.input.solution.l);
  doc.k = to_string(cert.input.solution.k);
  doc.q = to_string(cert.scaling_q);

  const TripleFamily family = three_triples(cert.solution);
  doc.triples = {triple_strings(family.t1), triple_strings(family.t2),
                 triple_strings(family.t3)};

  for (const Point& p : cert.table.points)
    doc.points.push_back({to_string(p.x()), to_string(p.y())});

  std::vector<Int> sorted_classes;
  for (const SquareClass& c : cert.table.classes) sorted_classes.push_back(c.repr());
  std::sort(sorted_classes.begin(), sorted_classes.end());
  for (const Int& c : sorted_classes) doc.classes.push_back(to_string(c));

  doc.closure_order = static_cast<long>(cert.closure.size());

  const CollinearityReport collinearity = collinearity_check(cert.solution);
  doc.collinear_slope = to_string(collinearity.slope);

  // Verification outcomes, all recomputed here.
  const NormFormSolution& s = cert.solution;
  const Curve curve(cert.area);
  auto& checks = doc.checks;
  checks["norm_form_identity"] = s.m * s.m == s.n * s.n + s.n * s.l + s.l * s.l;
  checks["k_equals_n_plus_l"] = s.k == s.n + s.l;
  checks["area_equals_klmn"] = cert.area == s.area();
  checks["scaling_consistent"] =
      s.m == cert.input.solution.m * cert.scaling_q &&
      s.n == cert.input.solution.n * cert.scaling_q &&
      s.l == cert.input.solution.l * cert.scaling_q &&
      cert.area == cert.input.solution.area() * pow_int(cert.scaling_q, 4);

  bool base_admissible = cert.input.m_factors.is_squarefree() &&
                         cert.input.m_factors.value() == cert.input.solution.m;
  for (const FactorEntry& f : cert.input.m_factors.factors())
    base_admissible = base_admissible && f.prime % 6 == 1;
  checks["base_m_admissible"] = base_admissible;
  checks["base_pairwise_coprime"] =
      gcd(cert.input.solution.n, cert.input.solution.l) == 1 &&
      gcd(cert.input.solution.n, cert.input.solution.m) == 1 &&
      gcd(cert.input.solution.l, cert.input.solution.m) == 1;

  bool triples_share_area = family.t1.area() == cert.area &&
                            family.t2.area() == cert.area &&
                            family.t3.area() == cert.area;
  checks["triples_valid"] = triples_share_area;

  checks["points_on_curve"] =
      std::all_of(cert.table.points.begin(), cert.table.points.end(),
                  [&curve](const Point& p) { return curve.contains(p); });
  checks["points_match_integral_formulas"] = points_match_integral_formulas(cert);

  bool distinct = true;
  for (std::size_t i = 0; i < cert.table.classes.size() && distinct; ++i)
    for (std::size_t j = i + 1; j < cert.table.classes.size(); ++j)
      if (cert.table.classes[i] == cert.table.classes[j]) { distinct = false; break; }
  checks["classes_distinct"] = distinct && cert.table.classes.size() == 14;

  const std::vector<SquareClass> expected = expected_class_formulas(s);
  checks["classes_match_formulas"] =
      expected.size() == cert.table.classes.size() &&
      std::equal(expected.begin(), expected.end(), cert.table.classes.begin());

  const auto order = cert.closure.size();
  checks["closure_power_of_two"] = order > 0 && (order & (order - 1)) == 0;
  checks["closure_order_at_least_16"] = order >= 16;

  checks["infinite_order_witness"] =
      curve.contains(cert.witness) && curve.has_infinite_order(cert.witness);

  checks["collinear_slope_k_squared"] = collinearity.slope == Rat(s.k * s.k);
  checks["collinear_points_sum_to_zero"] = collinearity.ok;

  checks["quartic_witnesses_reconstruct"] = quartic_witnesses_reconstruct(cert);

  bool everything = cert.rank_lower_bound == 2;
  for (const auto& [name, value] : checks) everything = everything && value;
  checks["rank_lower_bound_two"] = everything;
  return doc;
}

bool CertificateDocument::all_checks_pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return kv.second; });
}

nlohmann::ordered_json CertificateDocument::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["A"] = area;
  j["m"] = m;
  j["n"] = n;
  j["l"] = l;
  j["k"] = k;
  j["q"] = q;
  nlohmann::ordered_json triples_json = nlohmann::ordered_json::array();
  for (const auto& t : triples)
    triples_json.push_back({{"a", t[0]}, {"b", t[1]}, {"c", t[2]}});
  j["triples"] = std::move(triples_json);
  nlohmann::ordered_json points_json = nlohmann::ordered_json::array();
  for (const auto& p : points) points_json.push_back({{"x", p[0]}, {"y", p[1]}});
  j["points"] = std::move(points_json);
  j["classes"] = classes;
  j["closure_order"] = closure_order;
  j["collinear_slope"] = collinear_slope;
  j["checks"] = checks;
  return j;
}

CertificateDocument CertificateDocument::from_json(const nlohmann::ordered_json& j) {
  CertificateDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  if (doc.schema_version != "1")
    throw std::invalid_argument("unsupported schema_version " + doc.schema_version);
  doc.area = j.at("A").get<std::string>();
  doc.m = j.at("m").get<std::string>();
  doc.n = j.at("n").get<std::string>();
  doc.l = j.at("l").get<std::string>();
  doc.k = j.at("k").get<std::string>();
  doc.q = j.at("q").get<std::string>();
  const auto& triples_json = j.at("triples");
  if (triples_json.size() != 3) throw std::invalid_argument("expected 3 triples");
  for (std::size_t i = 0; i < 3; ++i) {
    doc.triples[i] = {triples_json[i].at("a").get<std::string>(),
                      triples_json[i].at("b").get<std::string>(),
                      triples_json[i].at("c").get<std::string>()};
  }
  for (const auto& p : j.at("points"))
    doc.points.push_back({p.at("x").get<std::string>(), p.at("y").get<std::string>()});
  doc.classes = j.at("classes").get<std::vector<std::string>>();
  doc.closure_order = j.at("closure_order").get<long>();
  doc.collinear_slope = j.at("collinear_slope").get<std::string>();
  doc.checks = j.at("checks").get<std::map<std::string, bool>>();
  return doc;
}

std::string CertificateDocument::csv_header() {
  return "schema_version,A,m,n,l,k,q,closure_order,collinear_slope,classes,checks_pass";
}

std::string CertificateDocument::to_csv_row() const {
  std::ostringstream out;
  out << schema_version << ',' << area << ',' << m << ',' << n << ',' << l << ','
      << k << ',' << q << ',' << closure_order << ',' << collinear_slope << ',';
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out << ';';
    out << classes[i];
  }
  out << ',' << (all_checks_pass() ? "true" : "false");
  return out.str();
}

CertificateDocument reverify(const CertificateDocument& doc) {
  const Int m = parse_int(doc.m);
  const Int n = parse_int(doc.n);
  const Int l = parse_int(doc.l);
  const Int q = parse_int(doc.q);
  AdmissibleInput input{NormFormSolution::create(m, n, l), factorize(m), true};
  RankCertificate cert = rank2_certificate(input);
  if (q != 1) cert = scaled_certificate(cert, q);
  return build_document(cert);
}

}  // namespace cnforge
