// cnforge: solve the norm form m^2 = n^2 + nl + l^2, build rank>=2
// certificates for congruent-number curves y^2 = x^3 - A^2 x, verify the
// bundled reference table, and do exact point arithmetic.
//
// Exit codes: 0 all checks pass, 1 a mathematical verification failed,
// 2 usage or parse error. Results go to stdout, diagnostics to stderr.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cnforge/document.hpp"
#include "cnforge/table.hpp"

namespace {

using cnforge::Int;
using cnforge::Point;
using cnforge::Rat;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { kJson, kCsv, kText };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw std::invalid_argument("unknown format '" + name + "'");
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const std::string& m_text, bool squared, Format format) {
  const Int m = cnforge::parse_int(m_text);
  if (m < 1) throw std::invalid_argument("--m must be >= 1");
  const auto solutions = squared ? cnforge::solve_m_squared(m) : cnforge::solve_m(m);

  switch (format) {
    case Format::kJson: {
      json j;
      j["m"] = cnforge::to_string(m);
      j["squared"] = squared;
      j["count"] = solutions.size();
      json list = json::array();
      for (const auto& [n, l] : solutions)
        list.push_back({{"n", cnforge::to_string(n)}, {"l", cnforge::to_string(l)}});
      j["solutions"] = std::move(list);
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "n,l\n";
      for (const auto& [n, l] : solutions)
        std::cout << cnforge::to_string(n) << ',' << cnforge::to_string(l) << '\n';
      break;
    case Format::kText:
      for (const auto& [n, l] : solutions)
        std::cout << '(' << cnforge::to_string(n) << ", " << cnforge::to_string(l)
                  << ")\n";
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// certify

cnforge::AdmissibleInput admissible_input_from(const Int& m, const Int& n, const Int& l) {
  cnforge::NormFormSolution solution = cnforge::NormFormSolution::create(m, n, l);
  cnforge::Factorization factors = cnforge::factorize(m);
  if (!factors.is_squarefree())
    throw cnforge::NotAdmissible("m = " + m.get_str() + " is not squarefree");
  for (const cnforge::FactorEntry& f : factors.factors()) {
    if (f.prime % 6 != 1)
      throw cnforge::NotAdmissible("m has prime factor " + f.prime.get_str() +
                                   " != 1 mod 6");
  }
  if (cnforge::gcd(n, l) != 1 || cnforge::gcd(n, m) != 1 || cnforge::gcd(l, m) != 1)
    throw cnforge::NotAdmissible("m, n, l must be pairwise coprime");
  return cnforge::AdmissibleInput{std::move(solution), std::move(factors), true};
}

void print_document(const cnforge::CertificateDocument& doc, Format format,
                    bool with_csv_header) {
  switch (format) {
    case Format::kJson:
      std::cout << doc.to_json().dump(2) << '\n';
      break;
    case Format::kCsv:
      if (with_csv_header) std::cout << cnforge::CertificateDocument::csv_header() << '\n';
      std::cout << doc.to_csv_row() << '\n';
      break;
    case Format::kText:
      std::cout << "A = " << doc.area << "  (m = " << doc.m << ", n = " << doc.n
                << ", l = " << doc.l << ", k = " << doc.k << ", q = " << doc.q << ")\n"
                << "closure order " << doc.closure_order << ", collinear slope "
                << doc.collinear_slope << "\nchecks: "
                << (doc.all_checks_pass() ? "all pass" : "FAILED") << '\n';
      break;
  }
}

int cmd_certify(const std::string& m_text, const std::string& n_text,
                const std::string& l_text, const std::string& q_text, Format format) {
  const Int m = cnforge::parse_int(m_text);
  const Int n = cnforge::parse_int(n_text);
  const Int l = cnforge::parse_int(l_text);
  const Int q = cnforge::parse_int(q_text);

  cnforge::RankCertificate cert = cnforge::rank2_certificate(admissible_input_from(m, n, l));
  if (q != 1) cert = cnforge::scaled_certificate(cert, q);
  const cnforge::CertificateDocument doc = cnforge::build_document(cert);
  print_document(doc, format, true);
  return doc.all_checks_pass() ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// paper-table

std::vector<cnforge::PaperTableRow> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture file " + path);
  json j;
  in >> j;
  std::vector<cnforge::PaperTableRow> rows;
  for (const auto& row : j) {
    cnforge::PaperTableRow r;
    r.area = cnforge::parse_int(row.at("A").get<std::string>());
    for (const auto& f : row.at("m_factors"))
      r.m_factors.push_back(cnforge::parse_int(f.get<std::string>()));
    r.l = cnforge::parse_int(row.at("l").get<std::string>());
    r.n = cnforge::parse_int(row.at("n").get<std::string>());
    r.k = cnforge::parse_int(row.at("k").get<std::string>());
    rows.push_back(std::move(r));
  }
  return rows;
}

int cmd_paper_table(const std::string& fixture_path, Format format) {
  const std::vector<cnforge::PaperTableRow> rows =
      fixture_path.empty() ? cnforge::paper_table() : load_fixture(fixture_path);

  bool all_pass = true;
  json report = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const cnforge::RowReport r = cnforge::verify_row(rows[i]);
    all_pass = all_pass && r.pass();
    if (format == Format::kJson) {
      report.push_back({{"row", i + 1},
                        {"A", cnforge::to_string(rows[i].area)},
                        {"m", cnforge::to_string(rows[i].m())},
                        {"pass", r.pass()},
                        {"detail", r.detail}});
    } else {
      std::cout << "row " << (i + 1) << ": A = " << cnforge::to_string(rows[i].area)
                << " ... " << (r.pass() ? "PASS" : "FAIL") << '\n';
      if (!r.pass()) {
        std::cout << "  " << (r.detail.empty() ? "certificate failed" : r.detail) << '\n';
        return kExitVerificationFailed;
      }
    }
  }
  if (format == Format::kJson) std::cout << report.dump(2) << '\n';
  return all_pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(const std::string& limit_text, unsigned max_j, unsigned jobs,
               Format format) {
  const Int limit = cnforge::parse_int(limit_text);
  if (jobs == 0) throw std::invalid_argument("--jobs must be >= 1");

  // Deterministic task list: ascending m, then ascending l.
  std::vector<cnforge::AdmissibleInput> tasks;
  for (const Int& m : cnforge::admissible_moduli(limit, max_j)) {
    for (cnforge::AdmissibleInput& input : cnforge::theorem_inputs(m))
      tasks.push_back(std::move(input));
  }

  std::vector<std::optional<std::string>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex emit_mutex;
  std::size_t cursor = 0;
  bool failed = false;

  auto render = [format](const cnforge::AdmissibleInput& input) {
    const cnforge::RankCertificate cert = cnforge::rank2_certificate(input);
    const cnforge::CertificateDocument doc = cnforge::build_document(cert);
    std::string line = format == Format::kCsv ? doc.to_csv_row()
                       : format == Format::kText
                           ? "A=" + doc.area + " m=" + doc.m + " n=" + doc.n +
                                 " l=" + doc.l + " k=" + doc.k +
                                 (doc.all_checks_pass() ? " PASS" : " FAIL")
                           : doc.to_json().dump();
    return std::make_pair(std::move(line), doc.all_checks_pass());
  };

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      auto [line, pass] = render(tasks[i]);
      std::lock_guard<std::mutex> lock(emit_mutex);
      slots[i] = std::move(line);
      failed = failed || !pass;
      while (cursor < slots.size() && slots[cursor].has_value()) {
        std::cout << *slots[cursor] << '\n';
        ++cursor;
      }
    }
  };

  if (format == Format::kCsv) std::cout << cnforge::CertificateDocument::csv_header() << '\n';
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return failed ? kExitVerificationFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// point

Point parse_point(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "O") return Point::at_infinity();
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("point must be 'x,y' or 'inf': '" + text + "'");
  return Point(cnforge::parse_rat(text.substr(0, comma)),
               cnforge::parse_rat(text.substr(comma + 1)));
}

json point_json(const Point& p) {
  if (p.is_infinity()) return json{{"infinity", true}};
  return json{{"x", cnforge::to_string(p.x())}, {"y", cnforge::to_string(p.y())}};
}

int cmd_point(const std::string& a_text, const std::string& op,
              const std::vector<std::string>& args, Format format) {
  const cnforge::Curve curve(cnforge::parse_int(a_text));

  auto expect_args = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("operation '" + op + "' expects " +
                                  std::to_string(count) + " operand(s)");
  };

  Point result = Point::at_infinity();
  if (op == "add") {
    expect_args(2);
    result = curve.add(parse_point(args[0]), parse_point(args[1]));
  } else if (op == "double") {
    expect_args(1);
    result = curve.dbl(parse_point(args[0]));
  } else if (op == "neg") {
    expect_args(1);
    const Point p = parse_point(args[0]);
    if (!curve.contains(p)) throw cnforge::NotOnCurve("operand is not on the curve");
    result = cnforge::neg(p);
  } else if (op == "mul") {
    expect_args(2);
    result = curve.mul(cnforge::parse_int(args[0]), parse_point(args[1]));
  } else {
    throw std::invalid_argument("unknown point operation '" + op + "'");
  }

  if (format == Format::kText) {
    if (result.is_infinity())
      std::cout << "infinity\n";
    else
      std::cout << '(' << cnforge::to_string(result.x()) << ", "
                << cnforge::to_string(result.y()) << ")\n";
  } else {
    std::cout << point_json(result).dump() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// primes / fact1

int cmd_primes(const std::string& limit_text, Format format) {
  const std::vector<Int> primes = cnforge::primes_1_mod_6(cnforge::parse_int(limit_text));
  if (format == Format::kJson) {
    json j = json::array();
    for (const Int& p : primes) j.push_back(cnforge::to_string(p));
    std::cout << j.dump() << '\n';
  } else {
    for (const Int& p : primes) std::cout << cnforge::to_string(p) << '\n';
  }
  return kExitOk;
}

int cmd_fact1(const std::string& m_text, Format format) {
  const Int m = cnforge::parse_int(m_text);
  const unsigned j = cnforge::factorize(m).distinct_primes();
  const cnforge::CountReport report = cnforge::verify_fact1_counts(m, j);

  if (format == Format::kJson) {
    json out;
    out["m"] = cnforge::to_string(report.m);
    out["j"] = report.j;
    out["count_m"] = report.count_m;
    out["expected_m"] = cnforge::to_string(report.expected_m);
    out["count_m_ok"] = report.count_m_ok;
    out["count_m_squared"] = report.count_m_squared;
    out["expected_m_squared"] = cnforge::to_string(report.expected_m_squared);
    out["count_m_squared_ok"] = report.count_m_squared_ok;
    out["coprime_count_measured"] = report.coprime_count;
    out["coprime_count_claimed"] = cnforge::to_string(report.claimed_coprime);
    out["coprime_count_asserted"] = false;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "m = " << cnforge::to_string(report.m) << " (j = " << report.j << ")\n"
              << "solutions of m   = n^2+nl+l^2: " << report.count_m << " (expected "
              << cnforge::to_string(report.expected_m) << ") "
              << (report.count_m_ok ? "ok" : "MISMATCH") << '\n'
              << "solutions of m^2 = n^2+nl+l^2: " << report.count_m_squared
              << " (expected " << cnforge::to_string(report.expected_m_squared) << ") "
              << (report.count_m_squared_ok ? "ok" : "MISMATCH") << '\n'
              << "coprime solutions measured: " << report.coprime_count << " (claimed "
              << cnforge::to_string(report.claimed_coprime)
              << "; reported only, not asserted)\n";
  }
  return report.count_m_ok && report.count_m_squared_ok ? kExitOk
                                                        : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruent-number curve certificates from the norm form "
               "m^2 = n^2 + nl + l^2"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "list solutions (n, l) for a given m");
  std::string solve_m;
  bool solve_squared = false;
  std::string solve_format = "text";
  solve->add_option("--m", solve_m, "modulus m")->required();
  solve->add_flag("--squared", solve_squared, "solve m^2 = n^2+nl+l^2 instead of m = ...");
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"json", "csv", "text"}));

  // certify
  auto* certify = app.add_subcommand("certify", "emit a rank >= 2 certificate document");
  std::string certify_m, certify_n, certify_l, certify_q = "1";
  std::string certify_format = "json";
  certify->add_option("--m", certify_m)->required();
  certify->add_option("--n", certify_n)->required();
  certify->add_option("--l", certify_l)->required();
  certify->add_option("--q", certify_q, "scale the curve area by q^4");
  certify->add_option("--format", certify_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // paper-table
  auto* table = app.add_subcommand("paper-table", "verify the bundled reference table");
  std::string table_fixture;
  std::string table_format = "text";
  table->add_option("--fixture", table_fixture, "verify rows from a JSON file instead");
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "text"}));

  // search
  auto* search = app.add_subcommand(
      "search", "certificates for every admissible m up to a limit");
  std::string search_limit;
  unsigned search_max_j = 2;
  unsigned search_jobs = 1;
  std::string search_format = "json";
  search->add_option("--limit", search_limit)->required();
  search->add_option("--max-j", search_max_j, "maximum number of prime factors of m");
  search->add_option("--jobs", search_jobs, "parallel certification workers");
  search->add_option("--format", search_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // point
  auto* point = app.add_subcommand("point", "exact group-law arithmetic on a curve");
  std::string point_a, point_op;
  std::vector<std::string> point_args;
  std::string point_format = "json";
  point->add_option("--A", point_a, "curve parameter A")->required();
  point->add_option("op", point_op, "add | double | neg | mul")->required();
  point->add_option("operands", point_args, "points 'x,y' (rationals 'p/q') or 'inf'");
  point->add_option("--format", point_format)->check(CLI::IsMember({"json", "text"}));

  // primes
  auto* primes = app.add_subcommand("primes", "primes = 1 (mod 6) up to a limit");
  std::string primes_limit;
  std::string primes_format = "text";
  primes->add_option("--limit", primes_limit)->required();
  primes->add_option("--format", primes_format)->check(CLI::IsMember({"json", "text"}));

  // fact1
  auto* fact1 = app.add_subcommand("fact1", "measure solution counts against the "
                                            "expected formulas");
  std::string fact1_m;
  std::string fact1_format = "text";
  fact1->add_option("--m", fact1_m)->required();
  fact1->add_option("--format", fact1_format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(solve_m, solve_squared, parse_format(solve_format));
    if (*certify)
      return cmd_certify(certify_m, certify_n, certify_l, certify_q,
                         parse_format(certify_format));
    if (*table) return cmd_paper_table(table_fixture, parse_format(table_format));
    if (*search)
      return cmd_search(search_limit, search_max_j, search_jobs,
                        parse_format(search_format));
    if (*point) return cmd_point(point_a, point_op, point_args, parse_format(point_format));
    if (*primes) return cmd_primes(primes_limit, parse_format(primes_format));
    if (*fact1) return cmd_fact1(fact1_m, parse_format(fact1_format));
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cnforge::NotAdmissible& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cnforge::NotOnCurve& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cnforge::BadOrder& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cnforge::NotInvertibleHere& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cnforge::ZeroScale& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cnforge::Error& e) {
    // Unfactored, DistinctnessFailure, NonIntegralWitness, ...: the math
    // could not be verified rather than the input being malformed.
    std::cerr << "verification error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
