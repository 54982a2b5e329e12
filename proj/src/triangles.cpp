#include "qfermi/triangles.hpp"

#include <array>
#include <string>
#include <utility>

#include "qfermi/errors.hpp"

namespace qfermi {

namespace {

constexpr std::array<std::pair<TriangleKind, std::string_view>, 5> kNames{{
    {TriangleKind::stirling2f, "stirling2f"},
    {TriangleKind::stirling1f, "stirling1f"},
    {TriangleKind::lahf, "lahf"},
    {TriangleKind::antinormal_boson, "antinormal_boson"},
    {TriangleKind::antinormal_fermion, "antinormal_fermion"},
}};

// (-1)^parity * q^exponent
LaurentPoly signed_q(int parity, int exponent) {
  return LaurentPoly::monomial(parity % 2 == 0 ? 1 : -1, exponent);
}

const LaurentPoly& zero_poly() {
  static const LaurentPoly zero;
  return zero;
}

// Entry s of a stored row whose first column is `first`; zero outside.
const LaurentPoly& entry(const std::vector<LaurentPoly>& row, int first, int s) {
  const int index = s - first;
  if (index < 0 || index >= static_cast<int>(row.size())) return zero_poly();
  return row[static_cast<std::size_t>(index)];
}

// Row r+1 from row r (`prev`).
std::vector<LaurentPoly> next_row(TriangleKind kind,
                                  const std::vector<LaurentPoly>& prev, int r) {
  const int first = kind == TriangleKind::lahf ? 0 : 1;
  const auto at = [&](int /*row*/, int s) -> const LaurentPoly& {
    return entry(prev, first, s);
  };
  std::vector<LaurentPoly> row;
  const auto fq = [](int n) { return qnum(QKind::fermion, n); };
  switch (kind) {
    case TriangleKind::stirling2f:
      for (int s = 1; s <= r + 1; ++s) {
        row.push_back(signed_q(s - 1, s - 1) * at(r, s - 1) + fq(s) * at(r, s));
      }
      break;
    case TriangleKind::stirling1f: {
      const LaurentPoly carry = signed_q(r, -r);
      const LaurentPoly keep = -(fq(r) * carry);
      for (int s = 1; s <= r + 1; ++s) {
        row.push_back(carry * at(r, s - 1) + keep * at(r, s));
      }
      break;
    }
    case TriangleKind::lahf: {
      const int n = r;
      for (int s = 0; s <= n + 1; ++s) {
        row.push_back(signed_q(n + s - 1, n + s - 1) * at(n, s - 1) +
                      fq(s + n) * at(n, s));
      }
      break;
    }
    case TriangleKind::antinormal_boson:
      for (int s = 1; s <= r + 1; ++s) {
        row.push_back(LaurentPoly::q(-(s - 1)) * at(r, s - 1) -
                      qnum(QKind::boson, s) * LaurentPoly::q(-s) * at(r, s));
      }
      break;
    case TriangleKind::antinormal_fermion:
      for (int s = 1; s <= r + 1; ++s) {
        row.push_back(signed_q(s - 1, -(s - 1)) * at(r, s - 1) -
                      signed_q(s, -s) * fq(s) * at(r, s));
      }
      break;
  }
  return row;
}

void require_positive(int v, const char* what) {
  if (v < 1) {
    throw DomainError(std::string(what) + " must be >= 1, got " + std::to_string(v));
  }
}

}  // namespace

std::string_view to_string(TriangleKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<TriangleKind> triangle_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::optional<TriangleKind> ordering_triangle(QKind kind, Ordering ordering) {
  if (ordering == Ordering::antinormal) {
    return kind == QKind::boson ? TriangleKind::antinormal_boson
                                : TriangleKind::antinormal_fermion;
  }
  if (kind == QKind::fermion) return TriangleKind::stirling2f;
  return std::nullopt;
}

Triangle::Triangle(TriangleKind kind, std::vector<std::vector<LaurentPoly>> rows)
    : kind_(kind), rows_(std::move(rows)) {
  const int extra = kind_ == TriangleKind::lahf ? 1 : 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != i + 1 + extra) {
      throw ShapeError("triangle row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows_[i].size()) + " entries");
    }
  }
}

const std::vector<LaurentPoly>& Triangle::row(int r) const {
  if (r < 1 || r > row_count()) {
    throw DomainError("triangle row " + std::to_string(r) + " out of range");
  }
  return rows_[static_cast<std::size_t>(r - 1)];
}

const LaurentPoly& Triangle::at(int r, int s) const {
  if (r < 1 || r > row_count()) return zero_poly();
  return entry(rows_[static_cast<std::size_t>(r - 1)], first_column(), s);
}

nlohmann::json Triangle::to_json() const {
  auto rows = nlohmann::json::array();
  for (const auto& entries : rows_) {
    auto row = nlohmann::json::array();
    for (const auto& p : entries) row.push_back(qfermi::to_json(p));
    rows.push_back(std::move(row));
  }
  return {{"kind", std::string(to_string(kind_))}, {"rows", std::move(rows)}};
}

Triangle build_triangle(TriangleKind kind, int rows) {
  require_positive(rows, "triangle rows");
  std::vector<LaurentPoly> seed;
  if (kind == TriangleKind::lahf) seed.emplace_back(0);
  seed.emplace_back(1);
  std::vector<std::vector<LaurentPoly>> table{std::move(seed)};
  for (int r = 1; r < rows; ++r) table.push_back(next_row(kind, table.back(), r));
  return Triangle(kind, std::move(table));
}

std::vector<LaurentPoly> bell_numbers(int rows) {
  const Triangle t = build_triangle(TriangleKind::stirling2f, rows);
  std::vector<LaurentPoly> out;
  for (int r = 1; r <= rows; ++r) {
    LaurentPoly sum;
    for (const auto& p : t.row(r)) sum += p;
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<long> bell_q1_pattern(int rows) {
  std::vector<long> out;
  for (const auto& b : bell_numbers(rows)) {
    const Rational v = b.eval_exact(1);
    out.push_back(v.numerator().get_si());
  }
  return out;
}

namespace {

void record(IdentityReport& report, int r, int n, const LaurentPoly& lhs,
            const LaurentPoly& rhs) {
  ++report.checked;
  if (lhs != rhs) report.failures.push_back({r, n, to_json(lhs), to_json(rhs)});
}

}  // namespace

IdentityReport verify_falling_identity(int rmax, int nmax) {
  require_positive(rmax, "rmax");
  if (nmax < rmax) throw DomainError("verify_falling_identity requires nmax >= rmax");
  const Triangle t = build_triangle(TriangleKind::stirling2f, rmax);
  IdentityReport report{"falling", 0, {}};
  for (int r = 1; r <= rmax; ++r) {
    for (int n = r; n <= nmax; ++n) {
      const LaurentPoly lhs =
          pow(qnum(QKind::fermion, n), static_cast<unsigned>(r));
      LaurentPoly rhs;
      for (int s = 1; s <= r; ++s) {
        rhs += t.at(r, s) * falling_fact(QKind::fermion, n, s);
      }
      record(report, r, n, lhs, rhs);
    }
  }
  return report;
}

IdentityReport verify_first_kind_identity(int rmax, int nmax) {
  require_positive(rmax, "rmax");
  if (nmax < rmax) {
    throw DomainError("verify_first_kind_identity requires nmax >= rmax");
  }
  const Triangle t = build_triangle(TriangleKind::stirling1f, rmax);
  IdentityReport report{"first-kind", 0, {}};
  for (int r = 1; r <= rmax; ++r) {
    for (int n = r; n <= nmax; ++n) {
      const LaurentPoly lhs = falling_fact(QKind::fermion, n, r);
      const LaurentPoly x = qnum(QKind::fermion, n);
      LaurentPoly rhs;
      for (int s = 1; s <= r; ++s) {
        rhs += t.at(r, s) * pow(x, static_cast<unsigned>(s));
      }
      record(report, r, n, lhs, rhs);
    }
  }
  return report;
}

IdentityReport verify_lah_identity(int nmax, int rmax) {
  require_positive(nmax, "nmax");
  if (rmax < nmax) throw DomainError("verify_lah_identity requires rmax >= nmax");
  const Triangle t = build_triangle(TriangleKind::lahf, nmax);
  IdentityReport report{"lah", 0, {}};
  for (int n = 1; n <= nmax; ++n) {
    for (int r = n; r <= rmax; ++r) {
      const LaurentPoly lhs = rising_fact(QKind::fermion, r - 1, n);
      LaurentPoly rhs;
      for (int s = 0; s <= n; ++s) {
        rhs += t.at(n, s) * falling_fact(QKind::fermion, r, s);
      }
      // Report convention: r is the row index of the triangle.
      record(report, n, r, lhs, rhs);
    }
  }
  return report;
}

IdentityReport verify_rising_identity(QKind kind, int rmax, int nmax) {
  require_positive(rmax, "rmax");
  require_positive(nmax, "nmax");
  const TriangleKind tk = kind == QKind::boson ? TriangleKind::antinormal_boson
                                               : TriangleKind::antinormal_fermion;
  const Triangle t = build_triangle(tk, rmax);
  IdentityReport report{kind == QKind::boson ? "rising-b" : "rising-f", 0, {}};
  for (int r = 1; r <= rmax; ++r) {
    for (int n = 0; n <= nmax; ++n) {
      const LaurentPoly lhs = pow(qnum(kind, n + 1), static_cast<unsigned>(r));
      LaurentPoly rhs;
      for (int s = 1; s <= r; ++s) rhs += t.at(r, s) * rising_fact(kind, n, s);
      record(report, r, n, lhs, rhs);
    }
  }
  return report;
}

}  // namespace qfermi
