#include "qfermi/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qfermi/errors.hpp"
#include "qfermi/qnumbers.hpp"
#include "qfermi/triangles.hpp"

namespace qfermi {

namespace {

constexpr double kNormalisationTol = 1e-9;

void check_support(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("density support must be a finite interval lo < hi");
  }
}

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Quadrature over [a, b] split at the density's kinks.
double piecewise_integral(const std::function<double(double)>& f,
                          const std::vector<double>& kinks, double a, double b,
                          double tol) {
  std::vector<double> cuts{a};
  for (double k : kinks) {
    if (k > a && k < b) cuts.push_back(k);
  }
  cuts.push_back(b);
  const double per_piece = tol / static_cast<double>(cuts.size() - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    sum += adaptive_simpson(f, cuts[i], cuts[i + 1], per_piece);
  }
  return sum;
}

void check_subinterval(const BaseDensity& d, double a, double b) {
  if (!(a <= b) || a < d.lo() || b > d.hi()) {
    throw DomainError("interval [" + std::to_string(a) + ", " + std::to_string(b) +
                      "] is not inside the density support");
  }
}

}  // namespace

BaseDensity BaseDensity::uniform(double lo, double hi) {
  check_support(lo, hi);
  return BaseDensity(Kind::uniform, lo, hi);
}

BaseDensity BaseDensity::triangular(double lo, double mode, double hi) {
  check_support(lo, hi);
  if (mode < lo || mode > hi) throw DomainError("triangular mode outside support");
  BaseDensity d(Kind::triangular, lo, hi);
  d.mode_ = mode;
  return d;
}

BaseDensity BaseDensity::tabulated(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) throw DomainError("tabulated density needs >= 2 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].second >= 0.0)) {
      throw DomainError("tabulated density must be non-negative");
    }
    if (i > 0 && !(points[i].first > points[i - 1].first)) {
      throw DomainError("tabulated density abscissae must be strictly increasing");
    }
  }
  // Trapezoid rule is exact for a piecewise-linear density.
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    total += 0.5 * (points[i].first - points[i - 1].first) *
             (points[i].second + points[i - 1].second);
  }
  if (std::abs(total - 1.0) > kNormalisationTol) {
    throw DomainError("tabulated density integrates to " + std::to_string(total) +
                      ", not 1");
  }
  BaseDensity d(Kind::tabulated, points.front().first, points.back().first);
  d.points_ = std::move(points);
  return d;
}

double BaseDensity::operator()(double e) const {
  if (e < lo_ || e > hi_) return 0.0;
  switch (kind_) {
    case Kind::uniform:
      return 1.0 / (hi_ - lo_);
    case Kind::triangular: {
      const double peak = 2.0 / (hi_ - lo_);
      if (e < mode_) return peak * (e - lo_) / (mode_ - lo_);
      if (e > mode_) return peak * (hi_ - e) / (hi_ - mode_);
      return peak;
    }
    case Kind::tabulated: {
      const auto it = std::upper_bound(
          points_.begin(), points_.end(), e,
          [](double x, const auto& pt) { return x < pt.first; });
      if (it == points_.end()) return points_.back().second;
      const auto& [x1, y1] = *it;
      const auto& [x0, y0] = *(it - 1);
      return y0 + (y1 - y0) * (e - x0) / (x1 - x0);
    }
  }
  return 0.0;
}

std::vector<double> BaseDensity::breakpoints() const {
  switch (kind_) {
    case Kind::uniform: return {};
    case Kind::triangular: return {mode_};
    case Kind::tabulated: {
      std::vector<double> out;
      for (const auto& pt : points_) out.push_back(pt.first);
      return out;
    }
  }
  return {};
}

std::string_view to_string(BaseDensity::Kind kind) {
  switch (kind) {
    case BaseDensity::Kind::uniform: return "uniform";
    case BaseDensity::Kind::triangular: return "triangular";
    case BaseDensity::Kind::tabulated: return "tabulated";
  }
  return "unknown";
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double interval_mass(const BaseDensity& d, double a, double b, double quad_tol) {
  check_subinterval(d, a, b);
  if (!(quad_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  return piecewise_integral([&d](double e) { return d(e); }, d.breakpoints(), a, b,
                            quad_tol);
}

double pair_mass_2d(const BaseDensity& d, double a, double b, double quad_tol) {
  check_subinterval(d, a, b);
  const auto kinks = d.breakpoints();
  const auto inner = [&](double e1) {
    const double f1 = d(e1);
    return piecewise_integral([&](double e2) { return f1 * d(e2); }, kinks, a, b,
                              quad_tol);
  };
  return piecewise_integral(inner, kinks, a, b, quad_tol);
}

Rational joint_density_coefficient(int n, int m, const Rational& q) {
  if (m < 0 || m > n) {
    throw DomainError("joint_density_coefficient requires 0 <= m <= n");
  }
  return falling_fact(QKind::fermion, n, m).eval_exact(q);
}

nlohmann::json MomentResult::to_json() const {
  auto t = nlohmann::json::array();
  for (const auto& term : terms) {
    t.push_back({{"s", term.s},
                 {"coefficient", term.coefficient},
                 {"contribution", term.contribution}});
  }
  return {{"p", p}, {"moment", moment}, {"terms", std::move(t)}};
}

MomentResult moment_from_mass(int n, int r, double q, double p) {
  if (r < 1) throw DomainError("moment order r must be >= 1");
  if (n < 0) throw DomainError("particle count n must be >= 0");
  const Triangle f = build_triangle(TriangleKind::stirling2f, r);
  MomentResult result;
  result.p = p;
  for (int s = 1; s <= std::min(r, n); ++s) {
    MomentTerm term;
    term.s = s;
    term.coefficient =
        f.at(r, s).eval_float(q) * falling_fact(QKind::fermion, n, s).eval_float(q);
    term.contribution = term.coefficient * std::pow(p, s);
    result.moment += term.contribution;
    result.terms.push_back(term);
  }
  return result;
}

MomentResult finite_interval_moment(const MomentQuery& query, const BaseDensity& d,
                                    double quad_tol) {
  if (!(query.a < query.b)) throw DomainError("moment subinterval needs a < b");
  const double p = interval_mass(d, query.a, query.b, quad_tol);
  return moment_from_mass(query.n, query.r, query.q, p);
}

Rational finite_interval_moment_exact(int n, int r, const Rational& q,
                                      const Rational& p) {
  if (r < 1) throw DomainError("moment order r must be >= 1");
  if (n < 0) throw DomainError("particle count n must be >= 0");
  const Triangle f = build_triangle(TriangleKind::stirling2f, r);
  Rational sum;
  for (int s = 1; s <= std::min(r, n); ++s) {
    sum += f.at(r, s).eval_exact(q) * joint_density_coefficient(n, s, q) * pow(p, s);
  }
  return sum;
}

bool InfinitesimalReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
}

nlohmann::json InfinitesimalReport::to_json() const {
  auto c = nlohmann::json::array();
  for (const auto& k : cases) {
    c.push_back({{"r", k.r},
                 {"p", k.p},
                 {"moment", k.moment},
                 {"first_order", k.first_order},
                 {"bound", k.bound},
                 {"pass", k.pass}});
  }
  return {{"identity", "infinitesimal"}, {"n", n}, {"q", q},
          {"cases", std::move(c)},       {"pass", passed()}};
}

InfinitesimalReport infinitesimal_consistency(int n, double q,
                                              std::span<const double> p_values,
                                              int rmax) {
  InfinitesimalReport report;
  report.n = n;
  report.q = q;
  const double first = qnum(QKind::fermion, n).eval_float(q);
  for (int r = 1; r <= rmax; ++r) {
    for (double p : p_values) {
      if (!(p >= 0.0 && p <= 1.0)) throw DomainError("interval mass p must be in [0, 1]");
      const MomentResult m = moment_from_mass(n, r, q, p);
      double c = 0.0;
      for (const auto& term : m.terms) c += std::abs(term.coefficient);
      InfinitesimalCase k;
      k.r = r;
      k.p = p;
      k.moment = m.moment;
      k.first_order = first * p;
      k.bound = c * p * p;
      // Rounding slack proportional to the magnitudes involved.
      const double slack = 64.0 * std::numeric_limits<double>::epsilon() * c * p;
      k.pass = std::abs(k.moment - k.first_order) <= k.bound + slack;
      report.cases.push_back(k);
    }
  }
  return report;
}

}  // namespace qfermi
