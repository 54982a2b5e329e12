#include "qfermi/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfermi/bargmann.hpp"
#include "qfermi/dobinski.hpp"
#include "qfermi/errors.hpp"
#include "qfermi/fock.hpp"
#include "qfermi/point_process.hpp"
#include "qfermi/triangles.hpp"

namespace qfermi::cli {

namespace {

using nlohmann::json;

// Command-line spellings of the triangle kinds.
const std::map<std::string, TriangleKind> kTriangleNames{
    {"stirling2f", TriangleKind::stirling2f},
    {"stirling1f", TriangleKind::stirling1f},
    {"lahf", TriangleKind::lahf},
    {"antinormal-b", TriangleKind::antinormal_boson},
    {"antinormal-f", TriangleKind::antinormal_fermion},
};

const std::vector<std::string> kIdentities{
    "falling",     "first-kind",   "lah",        "rising-b",
    "rising-f",    "fock-algebra", "fock-reorder", "fock-normal",
    "fock-antinormal", "bargmann-normal", "bargmann-antinormal", "infinitesimal"};

struct Result {
  std::string text;
  int code = kExitOk;
};

// "num/den" or a decimal literal.
double parse_number(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rational::parse(text).to_double();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed number '" + text + "'");
  }
  if (used != text.size()) throw ParseError("malformed number '" + text + "'");
  return v;
}

std::string cell(const LaurentPoly& p, const std::optional<Rational>& q) {
  return q ? p.eval_exact(*q).to_string() : p.to_string();
}

json cell_json(const LaurentPoly& p, const std::optional<Rational>& q) {
  return q ? json(p.eval_exact(*q).to_string()) : to_json(p);
}

// ---- table -----------------------------------------------------------------

struct TableArgs {
  std::string triangle;
  int rows = 0;
  std::string eval_q;
  std::string format = "json";
};

Result run_table(const TableArgs& a) {
  const TriangleKind kind = kTriangleNames.at(a.triangle);
  const Triangle t = build_triangle(kind, a.rows);
  std::optional<Rational> q;
  if (!a.eval_q.empty()) q = Rational::parse(a.eval_q);

  std::ostringstream os;
  if (a.format == "json") {
    json rows = json::array();
    for (int r = 1; r <= t.row_count(); ++r) {
      json row = json::array();
      for (const auto& p : t.row(r)) row.push_back(cell_json(p, q));
      rows.push_back(std::move(row));
    }
    json j{{"kind", std::string(to_string(kind))}};
    if (q) j["q"] = q->to_string();
    j["rows"] = std::move(rows);
    os << j.dump() << '\n';
  } else if (a.format == "csv") {
    os << "r,s,value\n";
    for (int r = 1; r <= t.row_count(); ++r) {
      int s = t.first_column();
      for (const auto& p : t.row(r)) os << r << ',' << s++ << ',' << cell(p, q) << '\n';
    }
  } else {
    const int first = t.first_column();
    const int last = t.row_count();
    os << "| r |";
    for (int s = first; s <= last; ++s) os << " s=" << s << " |";
    os << "\n|---|";
    for (int s = first; s <= last; ++s) os << "---|";
    os << '\n';
    for (int r = 1; r <= t.row_count(); ++r) {
      os << "| " << r << " |";
      for (int s = first; s <= last; ++s) {
        const bool stored = s - first < static_cast<int>(t.row(r).size());
        os << ' ' << (stored ? cell(t.at(r, s), q) : std::string()) << " |";
      }
      os << '\n';
    }
  }
  return {os.str(), kExitOk};
}

// ---- bell ------------------------------------------------------------------

Result run_bell(int rows, const std::string& eval_q) {
  const auto bell = bell_numbers(rows);
  json j;
  if (eval_q.empty()) {
    json polys = json::array();
    for (const auto& b : bell) polys.push_back(to_json(b));
    j = {{"bell", std::move(polys)}};
  } else {
    const Rational q = Rational::parse(eval_q);
    json values = json::array();
    for (const auto& b : bell) values.push_back(b.eval_exact(q).to_string());
    j = {{"q", q.to_string()}, {"values", std::move(values)}};
  }
  return {j.dump() + "\n", kExitOk};
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  std::optional<int> max_r;
  std::optional<int> max_n;
  std::optional<std::string> q;
  std::optional<int> dim;
  std::string kind = "both";
  bool complex = false;
};

Result from_report(const IdentityReport& report) {
  return {report.to_json().dump() + "\n",
          report.passed() ? kExitOk : kExitCheckFailed};
}

std::vector<std::pair<QKind, double>> fock_cases(const VerifyArgs& a, bool fermion_only) {
  std::vector<QKind> kinds;
  if (a.kind != "boson") kinds.push_back(QKind::fermion);
  if (a.kind != "fermion" && !fermion_only) kinds.push_back(QKind::boson);
  if (kinds.empty()) throw DomainError("no oscillator kind applies to this identity");
  std::vector<std::pair<QKind, double>> cases;
  for (QKind k : kinds) {
    if (a.q) {
      cases.emplace_back(k, parse_number(*a.q));
    } else {
      for (double q : k == QKind::fermion ? kFermionSampleQ : kBosonSampleQ) {
        cases.emplace_back(k, q);
      }
    }
  }
  return cases;
}

Result run_fock(const VerifyArgs& a) {
  const bool normal = a.identity == "fock-normal";
  const auto cases = fock_cases(a, normal);
  const Amplitudes amps = a.complex ? Amplitudes::complex : Amplitudes::real;

  std::vector<ResidualCheck> checks;
  for (const auto& [kind, q] : cases) {
    if (a.identity == "fock-algebra") {
      const FockRep rep = build_rep(kind, q, a.dim.value_or(12), amps);
      checks.push_back({"fock-algebra", kind, q, rep.dim, 1, algebra_residual(rep),
                        kShortWordTolerance});
    } else if (a.identity == "fock-reorder") {
      const FockRep rep = build_rep(kind, q, a.dim.value_or(12), amps);
      for (int s = 1; s <= a.max_r.value_or(4); ++s) {
        checks.push_back({"fock-reorder", kind, q, rep.dim, s,
                          reorder_residual(rep, s, ReorderForm::lowering_power),
                          kReorderTolerance});
        checks.push_back({"fock-reorder-raising", kind, q, rep.dim, s,
                          reorder_residual(rep, s, ReorderForm::raising_power),
                          kReorderTolerance});
      }
    } else {
      const Ordering mode = normal ? Ordering::normal : Ordering::antinormal;
      const int rmax = a.max_r.value_or(5);
      const Triangle t = build_triangle(*ordering_triangle(kind, mode), rmax);
      const FockRep rep = build_rep(kind, q, a.dim.value_or(16), amps);
      for (int r = 1; r <= rmax; ++r) {
        checks.push_back({a.identity, kind, q, rep.dim, r,
                          ordering_residual(rep, r, mode, t), kOrderingTolerance});
      }
    }
  }
  json list = json::array();
  bool pass = true;
  for (const auto& c : checks) {
    list.push_back(c.to_json());
    pass = pass && c.pass();
  }
  const json j{{"identity", a.identity}, {"checks", std::move(list)}, {"pass", pass}};
  return {j.dump() + "\n", pass ? kExitOk : kExitCheckFailed};
}

Result run_infinitesimal(const VerifyArgs& a) {
  const double q = a.q ? parse_number(*a.q) : 0.7;
  const std::vector<double> ps{0.001, 0.01, 0.1};
  json reports = json::array();
  bool pass = true;
  for (int n = 0; n <= a.max_n.value_or(10); ++n) {
    const auto report = infinitesimal_consistency(n, q, ps, a.max_r.value_or(4));
    pass = pass && report.passed();
    reports.push_back(report.to_json());
  }
  const json j{{"identity", "infinitesimal"},
               {"q", q},
               {"reports", std::move(reports)},
               {"pass", pass}};
  return {j.dump() + "\n", pass ? kExitOk : kExitCheckFailed};
}

Result run_verify(const VerifyArgs& a) {
  const std::string& id = a.identity;
  if (id == "falling") {
    return from_report(verify_falling_identity(a.max_r.value_or(6), a.max_n.value_or(10)));
  }
  if (id == "first-kind") {
    return from_report(
        verify_first_kind_identity(a.max_r.value_or(8), a.max_n.value_or(12)));
  }
  if (id == "lah") {
    return from_report(verify_lah_identity(a.max_n.value_or(8), a.max_r.value_or(12)));
  }
  if (id == "rising-b" || id == "rising-f") {
    const QKind kind = id == "rising-b" ? QKind::boson : QKind::fermion;
    return from_report(
        verify_rising_identity(kind, a.max_r.value_or(8), a.max_n.value_or(12)));
  }
  if (id == "bargmann-normal" || id == "bargmann-antinormal") {
    const Ordering mode = id == "bargmann-normal" ? Ordering::normal : Ordering::antinormal;
    return from_report(
        verify_bargmann_ordering(mode, a.max_r.value_or(6), a.max_n.value_or(12)));
  }
  if (id == "infinitesimal") return run_infinitesimal(a);
  return run_fock(a);
}

// ---- dobinski --------------------------------------------------------------

Result run_dobinski(double q, int r, double tol, int max_terms) {
  return {bell_dobinski(r, q, tol, max_terms).to_json().dump() + "\n", kExitOk};
}

// ---- moments ---------------------------------------------------------------

struct MomentArgs {
  int n = 0;
  int r = 1;
  std::string q;
  std::string density = "uniform";
  std::vector<double> support;
  std::vector<double> subinterval;
  std::optional<double> mode;
  std::string points;
  double quad_tol = 1e-10;
};

std::vector<std::pair<double, double>> parse_points(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("point '" + item + "' is not E:value");
    out.emplace_back(parse_number(item.substr(0, colon)),
                     parse_number(item.substr(colon + 1)));
  }
  return out;
}

Result run_moments(const MomentArgs& a) {
  const auto need_support = [&] {
    if (a.support.size() != 2) throw DomainError("--support a b is required");
  };
  std::optional<BaseDensity> density;
  if (a.density == "uniform") {
    need_support();
    density = BaseDensity::uniform(a.support[0], a.support[1]);
  } else if (a.density == "triangular") {
    need_support();
    density = BaseDensity::triangular(
        a.support[0], a.mode.value_or(0.5 * (a.support[0] + a.support[1])),
        a.support[1]);
  } else {
    if (a.points.empty()) throw DomainError("--points is required for tabulated");
    density = BaseDensity::tabulated(parse_points(a.points));
  }
  MomentQuery query;
  query.n = a.n;
  query.r = a.r;
  query.q = parse_number(a.q);
  if (a.subinterval.size() == 2) {
    query.a = a.subinterval[0];
    query.b = a.subinterval[1];
  } else {
    query.a = density->lo();
    query.b = density->hi();
  }
  return {finite_interval_moment(query, *density, a.quad_tol).to_json().dump() + "\n",
          kExitOk};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-deformed Stirling, Bell, Lah and ordering coefficients", "qfermi"};
  app.require_subcommand(1);

  std::vector<std::string> triangle_names;
  for (const auto& [name, kind] : kTriangleNames) triangle_names.push_back(name);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Emit a coefficient triangle");
  table_cmd->add_option("--triangle", table.triangle, "Triangle kind")
      ->required()
      ->check(CLI::IsMember(triangle_names));
  table_cmd->add_option("--rows", table.rows, "Number of rows")
      ->required()
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--eval-q", table.eval_q, "Evaluate at rational q (num/den)");
  table_cmd->add_option("--format", table.format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));

  int bell_rows = 0;
  std::string bell_q;
  auto* bell_cmd = app.add_subcommand("bell", "Emit q-fermionic Bell numbers");
  bell_cmd->add_option("--rows", bell_rows, "Number of Bell numbers")
      ->required()
      ->check(CLI::PositiveNumber);
  bell_cmd->add_option("--eval-q", bell_q, "Evaluate at rational q (num/den)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity check");
  verify_cmd->add_option("--identity", verify.identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember(kIdentities));
  verify_cmd->add_option("--max-r", verify.max_r, "Largest r (or s)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", verify.max_n, "Largest n")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--q", verify.q, "q for numeric checks (default: sample set)");
  verify_cmd->add_option("--dim", verify.dim, "Fock truncation dimension")
      ->check(CLI::Range(3, 512));
  verify_cmd->add_option("--kind", verify.kind, "boson, fermion or both (Fock checks)")
      ->check(CLI::IsMember({"boson", "fermion", "both"}));
  verify_cmd->add_flag("--complex", verify.complex,
                       "Complex amplitudes (fermion Fock checks at q > 1)");

  double dob_q = 0.0;
  int dob_r = 0;
  double dob_tol = 1e-14;
  int dob_terms = 400;
  auto* dob_cmd = app.add_subcommand("dobinski", "Bell number from the Dobinski series");
  dob_cmd->add_option("--q", dob_q, "q > 1")->required();
  dob_cmd->add_option("--r", dob_r, "Bell index")->required()->check(CLI::PositiveNumber);
  dob_cmd->add_option("--tol", dob_tol, "Relative term tolerance")
      ->check(CLI::PositiveNumber);
  dob_cmd->add_option("--max-terms", dob_terms, "Series cut-off")->check(CLI::Range(2, 100000));

  MomentArgs mom;
  auto* mom_cmd = app.add_subcommand("moments", "Finite-interval moment of [n]_f");
  mom_cmd->add_option("--n", mom.n, "Particle count")->required()->check(CLI::NonNegativeNumber);
  mom_cmd->add_option("--r", mom.r, "Moment order")->required()->check(CLI::PositiveNumber);
  mom_cmd->add_option("--q", mom.q, "q (num/den or decimal)")->required();
  mom_cmd->add_option("--density", mom.density, "uniform, triangular or tabulated")
      ->check(CLI::IsMember({"uniform", "triangular", "tabulated"}));
  mom_cmd->add_option("--support", mom.support, "Support lo hi")->expected(2);
  mom_cmd->add_option("--subinterval", mom.subinterval, "Subinterval c d")->expected(2);
  mom_cmd->add_option("--mode", mom.mode, "Peak of the triangular density");
  mom_cmd->add_option("--points", mom.points, "Tabulated density E:v,E:v,...");
  mom_cmd->add_option("--quad-tol", mom.quad_tol, "Quadrature tolerance")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qfermi: " << e.what() << '\n';
    return kExitUsage;
  }

  Result result;
  try {
    if (*table_cmd) {
      result = run_table(table);
    } else if (*bell_cmd) {
      result = run_bell(bell_rows, bell_q);
    } else if (*verify_cmd) {
      result = run_verify(verify);
    } else if (*dob_cmd) {
      result = run_dobinski(dob_q, dob_r, dob_tol, dob_terms);
    } else {
      result = run_moments(mom);
    }
  } catch (const std::exception& e) {
    err << "qfermi: " << e.what() << '\n';
    return kExitUsage;
  }
  out << result.text;
  return result.code;
}

}  // namespace qfermi::cli
