#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qfermi/rational.hpp"

namespace qfermi {

/// Normalised single-particle density on a finite support [lo, hi].
class BaseDensity {
 public:
  enum class Kind { uniform, triangular, tabulated };

  static BaseDensity uniform(double lo, double hi);
  /// Peak at `mode`, linear to zero at both ends.
  static BaseDensity triangular(double lo, double mode, double hi);
  /// Piecewise-linear through sorted (E, value) points, zero outside.
  /// Values must be non-negative and integrate to 1 within 1e-9.
  static BaseDensity tabulated(std::vector<std::pair<double, double>> points);

  Kind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double operator()(double e) const;
  /// Points where the density has a kink; quadrature splits there.
  std::vector<double> breakpoints() const;

 private:
  BaseDensity(Kind kind, double lo, double hi) : kind_(kind), lo_(lo), hi_(hi) {}

  Kind kind_;
  double lo_;
  double hi_;
  double mode_ = 0.0;
  std::vector<std::pair<double, double>> points_;
};

std::string_view to_string(BaseDensity::Kind kind);

/// Adaptive Simpson with interval bisection.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

/// Probability mass of [a, b]. Throws DomainError if [a, b] leaves the support.
double interval_mass(const BaseDensity& d, double a, double b, double quad_tol = 1e-10);

/// Mass of [a, b] x [a, b] by direct nested quadrature of the product
/// density. Cross-check for the p^2 factorisation.
double pair_mass_2d(const BaseDensity& d, double a, double b, double quad_tol = 1e-8);

/// [n]_f! / [n-m]_f! at q, computed as a product. Requires 0 <= m <= n.
Rational joint_density_coefficient(int n, int m, const Rational& q);

struct MomentQuery {
  int n = 0;
  int r = 1;
  double a = 0.0;
  double b = 1.0;
  double q = 1.0;
};

struct MomentTerm {
  int s = 0;
  double coefficient = 0.0;   // F^r_s [n]_f!/[n-s]_f! at q
  double contribution = 0.0;  // coefficient * p^s
};

struct MomentResult {
  double p = 0.0;
  double moment = 0.0;
  std::vector<MomentTerm> terms;

  nlohmann::json to_json() const;
};

/// r-th moment of the q-number of particles in [a, b]:
///   sum_s F^r_s [n]_f!/[n-s]_f! p^s,  p = interval mass.
/// Terms with s > n vanish and are omitted.
MomentResult finite_interval_moment(const MomentQuery& query, const BaseDensity& d,
                                    double quad_tol = 1e-10);

/// Same sum for a given mass p, in binary64.
MomentResult moment_from_mass(int n, int r, double q, double p);

/// Same sum in exact rational arithmetic.
Rational finite_interval_moment_exact(int n, int r, const Rational& q,
                                      const Rational& p);

struct InfinitesimalCase {
  int r = 0;
  double p = 0.0;
  double moment = 0.0;
  double first_order = 0.0;  // [n]_f p
  double bound = 0.0;        // C p^2
  bool pass = false;
};

struct InfinitesimalReport {
  int n = 0;
  double q = 0.0;
  std::vector<InfinitesimalCase> cases;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// For each r <= rmax and each p: |moment(r, p) - [n]_f p| <= C p^2 with
/// C = sum_s |F^r_s [n]_f!/[n-s]_f!|. Requires 0 <= p <= 1.
InfinitesimalReport infinitesimal_consistency(int n, double q,
                                              std::span<const double> p_values,
                                              int rmax = 4);

}  // namespace qfermi
