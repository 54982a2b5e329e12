#pragma once

#include <string_view>

#include "json.hpp"

namespace qfermi {

enum class Regime { convergent, divergent, boundary };

std::string_view to_string(Regime regime);

struct SeriesResult {
  double value = 0.0;  // NaN when the regime is boundary
  int terms_used = 0;
  bool converged = false;
  Regime regime = Regime::convergent;

  nlohmann::json to_json() const;
};

/// Regime of sum x^n / [n]_f! from the ratio test |x| / |[n+1]_f|:
/// limit |x|(1+q) for q < 1, 0 for q > 1; q = 1 is a boundary because
/// [n]_f! vanishes for n >= 2.
Regime classify_qexp_regime(double x, double q);

/// Partial sums of e_q^(f)(x) = sum_n x^n / [n]_f!, factorials accumulated
/// multiplicatively. Stops once a term past the peak is below tol relative
/// to the partial sum.
SeriesResult qexp_f(double x, double q, double tol = 1e-14, int max_terms = 400);

/// Fermionic Bell number from the Dobinski series
///   B_r = (sum_{n>=1} [n]_f^r / [n]_f!) / e_q^(f)(1),
/// both series cut at the same index. Only q > 1 converges; throws
/// RegimeError otherwise.
SeriesResult bell_dobinski(int r, double q, double tol = 1e-14, int max_terms = 400);

}  // namespace qfermi
