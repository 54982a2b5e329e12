#include "qfermi/dobinski.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qfermi/errors.hpp"
#include "qfermi/qnumbers.hpp"

namespace qfermi {

namespace {

void check_args(double q, double tol, int max_terms) {
  if (!(q > 0.0)) throw DomainError("q-exponential requires q > 0");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (max_terms < 2) throw DomainError("max_terms must be >= 2");
}

// [n]_f at q in binary64. Closed form is fine numerically and avoids
// building polynomials of degree n inside the summation loop.
double fermion_number(int n, double q) {
  return (1.0 - std::pow(-q, n)) / (1.0 + q);
}

// Last term small relative to the sum and no longer growing.
bool settled(double term, double previous, double sum, double tol) {
  return std::abs(term) <= tol * std::abs(sum) && std::abs(term) <= std::abs(previous);
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::convergent: return "convergent";
    case Regime::divergent: return "divergent";
    case Regime::boundary: return "boundary";
  }
  return "unknown";
}

nlohmann::json SeriesResult::to_json() const {
  nlohmann::json j{{"terms_used", terms_used},
                   {"converged", converged},
                   {"regime", std::string(qfermi::to_string(regime))}};
  j["value"] = std::isfinite(value) ? nlohmann::json(value) : nlohmann::json(nullptr);
  return j;
}

Regime classify_qexp_regime(double x, double q) {
  if (!(q > 0.0)) throw DomainError("q-exponential requires q > 0");
  if (x == 0.0) return Regime::convergent;
  if (q == 1.0) return Regime::boundary;
  if (q > 1.0) return Regime::convergent;
  const double limit = std::abs(x) * (1.0 + q);
  if (limit > 1.0) return Regime::divergent;
  if (limit < 1.0) return Regime::convergent;
  return Regime::boundary;
}

SeriesResult qexp_f(double x, double q, double tol, int max_terms) {
  check_args(q, tol, max_terms);
  SeriesResult result;
  result.regime = classify_qexp_regime(x, q);
  if (x == 0.0) {
    result.value = 1.0;
    result.terms_used = 1;
    result.converged = true;
    return result;
  }
  if (q == 1.0) {
    // [2]_f! = 0 at q = 1; the series is not defined beyond n = 1.
    result.value = std::numeric_limits<double>::quiet_NaN();
    result.terms_used = 2;
    result.converged = false;
    return result;
  }

  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < max_terms; ++n) {
    const double previous = term;
    term = term * x / fermion_number(n, q);
    sum += term;
    result.terms_used = n + 1;
    if (result.regime != Regime::divergent && settled(term, previous, sum, tol)) {
      result.converged = true;
      break;
    }
  }
  result.value = sum;
  return result;
}

SeriesResult bell_dobinski(int r, double q, double tol, int max_terms) {
  if (r < 1) throw DomainError("Bell index must be >= 1");
  check_args(q, tol, max_terms);
  if (!(q > 1.0)) {
    throw RegimeError("Dobinski series for q = " + std::to_string(q) +
                      " is " + std::string(to_string(classify_qexp_regime(1.0, q))) +
                      "; only q > 1 converges");
  }
  SeriesResult result;
  result.regime = Regime::convergent;

  double inv_fact = 1.0;     // 1 / [n]_f!
  double denominator = 1.0;  // n = 0 term of e_q^(f)(1)
  double numerator = 0.0;    // n = 0 term vanishes since [0]_f = 0
  double prev_num = 0.0;
  double prev_den = 1.0;
  for (int n = 1; n < max_terms; ++n) {
    const double bracket = fermion_number(n, q);
    inv_fact /= bracket;
    const double den_term = inv_fact;
    const double num_term = std::pow(bracket, r) * inv_fact;
    numerator += num_term;
    denominator += den_term;
    result.terms_used = n + 1;
    if (n > 1 && settled(num_term, prev_num, numerator, tol) &&
        settled(den_term, prev_den, denominator, tol)) {
      result.converged = true;
      break;
    }
    prev_num = num_term;
    prev_den = den_term;
  }
  result.value = numerator / denominator;
  return result;
}

}  // namespace qfermi
