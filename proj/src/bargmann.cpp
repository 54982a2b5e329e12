#include "qfermi/bargmann.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qfermi/errors.hpp"
#include "qfermi/qnumbers.hpp"

namespace qfermi {

PsiSeries::PsiSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

PsiSeries PsiSeries::monomial(int degree, LaurentPoly coefficient) {
  if (degree < 0) throw DomainError("negative psi degree");
  std::vector<LaurentPoly> c(static_cast<std::size_t>(degree + 1));
  c.back() = std::move(coefficient);
  return PsiSeries(std::move(c));
}

LaurentPoly PsiSeries::coeff(int n) const {
  if (n < 0 || n > degree()) return LaurentPoly();
  return coeffs_[static_cast<std::size_t>(n)];
}

void PsiSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PsiSeries& PsiSeries::operator+=(const PsiSeries& other) {
  coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

PsiSeries& PsiSeries::operator-=(const PsiSeries& other) {
  coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

PsiSeries operator*(const LaurentPoly& scalar, const PsiSeries& s) {
  std::vector<LaurentPoly> c;
  c.reserve(s.coeffs_.size());
  for (const auto& p : s.coeffs_) c.push_back(scalar * p);
  return PsiSeries(std::move(c));
}

nlohmann::json PsiSeries::to_json() const {
  auto out = nlohmann::json::array();
  for (const auto& p : coeffs_) out.push_back(qfermi::to_json(p));
  return out;
}

PsiSeries PsiSeries::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("psi series must be a JSON array");
  std::vector<LaurentPoly> c;
  for (const auto& p : j) c.push_back(poly_from_json(p));
  return PsiSeries(std::move(c));
}

PsiSeries psi_multiply(const PsiSeries& phi) {
  if (phi.is_zero()) return phi;
  std::vector<LaurentPoly> c;
  c.reserve(phi.coeffs().size() + 1);
  c.emplace_back();
  c.insert(c.end(), phi.coeffs().begin(), phi.coeffs().end());
  return PsiSeries(std::move(c));
}

PsiSeries q_derivative(const PsiSeries& phi) {
  std::vector<LaurentPoly> c;
  for (int n = 1; n <= phi.degree(); ++n) {
    c.push_back(qnum(QKind::fermion, n) * phi.coeff(n));
  }
  return PsiSeries(std::move(c));
}

PsiSeries rescale_argument(const PsiSeries& phi, const LaurentPoly& factor) {
  std::vector<LaurentPoly> c;
  LaurentPoly power(1);
  for (const auto& p : phi.coeffs()) {
    c.push_back(power * p);
    power *= factor;
  }
  return PsiSeries(std::move(c));
}

PsiSeries q_derivative_difference(const PsiSeries& phi) {
  const PsiSeries numerator = phi - rescale_argument(phi, -LaurentPoly::q());
  const LaurentPoly one_plus_q = LaurentPoly(1) + LaurentPoly::q();
  if (!numerator.coeff(0).is_zero()) {
    throw InexactDivisionError("difference quotient has a constant term");
  }
  std::vector<LaurentPoly> c;
  for (int n = 1; n <= numerator.degree(); ++n) {
    c.push_back(exact_quotient(numerator.coeff(n), one_plus_q));
  }
  return PsiSeries(std::move(c));
}

IdentityReport verify_bargmann_ordering(Ordering mode, int rmax, int nmax) {
  if (rmax < 1) throw DomainError("verify_bargmann_ordering requires rmax >= 1");
  if (nmax < 2 * rmax) {
    throw DomainError("verify_bargmann_ordering requires nmax >= 2 rmax");
  }
  const bool normal = mode == Ordering::normal;
  const Triangle t = build_triangle(
      normal ? TriangleKind::stirling2f : TriangleKind::antinormal_fermion, rmax);

  // psi D for normal ordering, D psi for anti-normal.
  const auto step = [normal](const PsiSeries& s) {
    return normal ? psi_multiply(q_derivative(s)) : q_derivative(psi_multiply(s));
  };
  const auto word = [normal](const PsiSeries& s, int k) {
    PsiSeries out = s;
    for (int i = 0; i < k; ++i) out = normal ? q_derivative(out) : psi_multiply(out);
    for (int i = 0; i < k; ++i) out = normal ? psi_multiply(out) : q_derivative(out);
    return out;
  };

  IdentityReport report{normal ? "bargmann-normal" : "bargmann-antinormal", 0, {}};
  for (int n = 0; n <= nmax; ++n) {
    const PsiSeries phi = PsiSeries::monomial(n);
    PsiSeries lhs = phi;
    for (int r = 1; r <= rmax; ++r) {
      lhs = step(lhs);
      PsiSeries rhs;
      for (int s = 1; s <= r; ++s) rhs += t.at(r, s) * word(phi, s);
      ++report.checked;
      if (lhs != rhs) report.failures.push_back({r, n, lhs.to_json(), rhs.to_json()});
    }
  }
  return report;
}

}  // namespace qfermi
