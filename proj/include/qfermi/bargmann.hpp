#pragma once

#include <vector>

#include "json.hpp"
#include "qfermi/laurent_poly.hpp"
#include "qfermi/report.hpp"
#include "qfermi/triangles.hpp"

namespace qfermi {

/// Finite series phi(psi) = sum_n c_n psi^n in the quasi-Grassmann variable,
/// with Laurent polynomial coefficients. Trailing zeros are trimmed, so the
/// zero series has no coefficients.
class PsiSeries {
 public:
  PsiSeries() = default;
  explicit PsiSeries(std::vector<LaurentPoly> coeffs);

  static PsiSeries monomial(int degree, LaurentPoly coefficient = 1);

  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero series.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  LaurentPoly coeff(int n) const;

  PsiSeries& operator+=(const PsiSeries& other);
  PsiSeries& operator-=(const PsiSeries& other);
  friend PsiSeries operator+(PsiSeries a, const PsiSeries& b) { return a += b; }
  friend PsiSeries operator-(PsiSeries a, const PsiSeries& b) { return a -= b; }
  friend PsiSeries operator*(const LaurentPoly& scalar, const PsiSeries& s);
  friend bool operator==(const PsiSeries&, const PsiSeries&) = default;

  nlohmann::json to_json() const;
  static PsiSeries from_json(const nlohmann::json& j);

 private:
  void trim();
  std::vector<LaurentPoly> coeffs_;
};

/// Representation of the creation operator: phi(psi) -> psi * phi(psi).
PsiSeries psi_multiply(const PsiSeries& phi);

/// Representation of the annihilation operator: psi^n -> [n]_f psi^{n-1}.
PsiSeries q_derivative(const PsiSeries& phi);

/// The same operator from its difference quotient
/// (phi(psi) - phi(-q psi)) / (psi (1 + q)), divided exactly.
PsiSeries q_derivative_difference(const PsiSeries& phi);

/// phi(c * psi), i.e. c^n scaling of the n-th coefficient.
PsiSeries rescale_argument(const PsiSeries& phi, const LaurentPoly& c);

/// Checks (psi D)^r = sum_s F^r_s psi^s D^s (normal) or
/// (D psi)^r = sum_s B^r_s D^s psi^s (antinormal) on every monomial psi^n,
/// n <= nmax, for r <= rmax. Requires nmax >= 2 rmax.
IdentityReport verify_bargmann_ordering(Ordering mode, int rmax, int nmax);

}  // namespace qfermi
