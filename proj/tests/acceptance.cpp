// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qfermi/bargmann.hpp"
#include "qfermi/dobinski.hpp"
#include "qfermi/errors.hpp"
#include "qfermi/fock.hpp"
#include "qfermi/point_process.hpp"
#include "qfermi/qnumbers.hpp"
#include "qfermi/triangles.hpp"
#include "random_poly.hpp"

using namespace qfermi;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

LaurentPoly qp(int e) { return LaurentPoly::q(e); }
LaurentPoly fq(int n) { return qnum(QKind::fermion, n); }

// ---------------------------------------------------------------------------

Outcome bell_reproduction() {
  Outcome out;
  const LaurentPoly q = qp(1);
  const LaurentPoly f2 = fq(2);
  const LaurentPoly f3 = fq(3);
  const LaurentPoly f4 = fq(4);
  const std::vector<LaurentPoly> printed{
      1,
      1 - q,
      1 - q - q * f2 - qp(3),
      1 - q - q * f2 - q * f2 * f2 - qp(3) - qp(3) * f2 - qp(3) * f3 + qp(6),
      1 - q + (-q - q * f2 - q * f2 * f2) * (f2 + qp(2)) +
          (-qp(3) - qp(3) * f2 - qp(3) * f3) * (f3 - qp(3)) + qp(6) * f4 + qp(10),
  };
  const auto bell = bell_numbers(5);
  for (std::size_t r = 0; r < printed.size(); ++r) {
    out.require(bell[r] == printed[r], "B_" + std::to_string(r + 1) + " = " +
                                           bell[r].to_string() + " vs " +
                                           printed[r].to_string());
  }
  return out;
}

long expected_bell_at_one(int r) {
  if (r == 1) return 1;
  if (r == 2) return 0;
  switch (r % 3) {
    case 0: return r % 2 == 0 ? 1 : -1;
    case 1: return (r + 1) % 2 == 0 ? 1 : -1;
    default: return 0;
  }
}

Outcome bell_at_one() {
  Outcome out;
  const auto values = bell_q1_pattern(30);
  for (int r = 1; r <= 30; ++r) {
    const long got = values[static_cast<std::size_t>(r - 1)];
    out.require(got == expected_bell_at_one(r),
                "r=" + std::to_string(r) + " gave " + std::to_string(got));
  }
  return out;
}

void require_report(Outcome& out, const IdentityReport& report) {
  std::string what = report.identity;
  if (!report.passed()) {
    what += " failed at r=" + std::to_string(report.failures.front().r) +
            " n=" + std::to_string(report.failures.front().n);
  }
  out.require(report.passed() && report.checked > 0, what);
}

Outcome falling_identity() {
  Outcome out;
  require_report(out, verify_falling_identity(10, 14));
  return out;
}

Outcome inverse_identities() {
  Outcome out;
  require_report(out, verify_first_kind_identity(8, 12));
  require_report(out, verify_lah_identity(8, 12));
  require_report(out, verify_rising_identity(QKind::boson, 8, 12));
  require_report(out, verify_rising_identity(QKind::fermion, 8, 12));
  return out;
}

Outcome fock_oracle() {
  Outcome out;
  const auto check = [&out](const char* what, QKind kind, double q, int k, double residual,
                            double tol) {
    out.require(residual < tol, std::string(what) + " " + std::string(to_string(kind)) +
                                    " q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                    " residual=" + std::to_string(residual));
  };
  const Triangle f = build_triangle(TriangleKind::stirling2f, 5);
  const Triangle b = build_triangle(TriangleKind::antinormal_fermion, 5);
  const Triangle a = build_triangle(TriangleKind::antinormal_boson, 5);
  for (QKind kind : {QKind::fermion, QKind::boson}) {
    for (double q : kind == QKind::fermion ? kFermionSampleQ : kBosonSampleQ) {
      const FockRep small = build_rep(kind, q, 12);
      check("algebra", kind, q, 1, algebra_residual(small), 1e-12);
      for (int s = 1; s <= 4; ++s) {
        check("reorder", kind, q, s, reorder_residual(small, s, ReorderForm::lowering_power),
              1e-10);
        check("reorder-raising", kind, q, s,
              reorder_residual(small, s, ReorderForm::raising_power), 1e-10);
      }
      const FockRep big = build_rep(kind, q, 16);
      for (int r = 1; r <= 5; ++r) {
        if (kind == QKind::fermion) {
          check("normal", kind, q, r, ordering_residual(big, r, Ordering::normal, f), 1e-9);
          check("antinormal", kind, q, r, ordering_residual(big, r, Ordering::antinormal, b),
                1e-9);
        } else {
          check("antinormal", kind, q, r, ordering_residual(big, r, Ordering::antinormal, a),
                1e-9);
        }
      }
    }
  }
  return out;
}

Outcome bargmann_equivalence() {
  Outcome out;
  require_report(out, verify_bargmann_ordering(Ordering::normal, 6, 12));
  require_report(out, verify_bargmann_ordering(Ordering::antinormal, 6, 12));
  std::mt19937 rng(45);
  std::uniform_int_distribution<int> degree(0, 20);
  const LaurentPoly q = qp(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LaurentPoly> c(static_cast<std::size_t>(degree(rng) + 1));
    for (auto& p : c) p = testing::random_poly(rng, -3, 5, 4);
    const PsiSeries phi(std::move(c));
    out.require(q_derivative(psi_multiply(phi)) + q * psi_multiply(q_derivative(phi)) == phi,
                "representation identity, trial " + std::to_string(trial));
  }
  return out;
}

Outcome dobinski() {
  Outcome out;
  const auto bell = bell_numbers(6);
  for (double q : {1.2, 1.5, 2.0, 3.0}) {
    for (int r = 1; r <= 6; ++r) {
      const double exact = bell[static_cast<std::size_t>(r - 1)].eval_float(q);
      const SeriesResult s = bell_dobinski(r, q);
      const double rel = std::abs(s.value - exact) / std::abs(exact);
      out.require(s.converged && rel < 1e-8, "q=" + std::to_string(q) + " r=" +
                                                 std::to_string(r) +
                                                 " rel=" + std::to_string(rel));
    }
  }
  for (double q : {0.3, 0.5, 0.9}) {
    out.require(classify_qexp_regime(1.0, q) == Regime::divergent,
                "classifier at q=" + std::to_string(q));
    out.require(qexp_f(1.0, q).regime == Regime::divergent, "qexp regime");
    bool refused = false;
    try {
      bell_dobinski(3, q);
    } catch (const RegimeError&) {
      refused = true;
    }
    out.require(refused, "bell_dobinski accepted q=" + std::to_string(q));
  }
  return out;
}

Outcome point_process() {
  Outcome out;
  for (const Rational& q : {Rational(1, 3), Rational(7, 10), Rational(1), Rational(3, 2)}) {
    for (int n = 0; n <= 10; ++n) {
      for (int r = 1; r <= 6; ++r) {
        const Rational moment = finite_interval_moment_exact(n, r, q, 1);
        const Rational power = pow(fq(n), static_cast<unsigned>(r)).eval_exact(q);
        out.require(moment == power, "p=1 moment n=" + std::to_string(n) +
                                         " r=" + std::to_string(r) + " q=" + q.to_string());
      }
    }
  }
  const std::vector<double> ps{0.001, 0.01, 0.1};
  for (double q : {0.3, 0.7, 0.9, 1.0}) {
    for (int n = 0; n <= 10; ++n) {
      out.require(infinitesimal_consistency(n, q, ps).passed(),
                  "first-order collapse n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  }
  return out;
}

Outcome qnumber_regimes() {
  Outcome out;
  const std::vector<Rational> below{Rational(1, 10), Rational(1, 3), Rational(1, 2),
                                    Rational(2, 3), Rational(9, 10)};
  const std::vector<Rational> above{Rational(11, 10), Rational(3, 2), Rational(2),
                                    Rational(5, 2), Rational(7)};
  for (int n = 0; n <= 200; ++n) {
    const LaurentPoly f = fq(n);
    const std::string at = "n=" + std::to_string(n);
    for (const auto& q : below) {
      const Rational v = f.eval_exact(q);
      out.require(v >= Rational(0) && v <= Rational(1), "bounded " + at);
      out.require(abs(v - Rational(1) / (Rational(1) + q)) <= pow(q, n), "limit " + at);
    }
    if (n >= 1) {
      for (const auto& q : above) {
        out.require(f.eval_exact(q).sign() == (n % 2 == 0 ? -1 : 1), "sign " + at);
      }
    }
    out.require(f.eval_exact(1) == Rational(n % 2), "q=1 value " + at);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Bell polynomials B_1..B_5 equal the printed expansions", 1.0, bell_reproduction},
      {2, "Bell numbers at q = 1 follow the period-3 pattern, r <= 30", 1.0, bell_at_one},
      {3, "falling-factorial expansion exact, r <= 10, n <= 14", 10.0, falling_identity},
      {4, "first-kind, Lah and rising-factorial expansions exact", 10.0, inverse_identities},
      {5, "Fock oracle residuals (1e-12 / 1e-10 / 1e-9)", 5.0, fock_oracle},
      {6, "Bargmann ordering and representation identity exact", 5.0, bargmann_equivalence},
      {7, "Dobinski series within 1e-8; divergent regime detected", 2.0, dobinski},
      {8, "point-process moments: p = 1 recovery and first-order collapse", 2.0,
       point_process},
      {9, "q-number regime properties over n <= 200", 1.0, qnumber_regimes},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds >= c.budget_seconds) {
      outcome.ok = false;
      outcome.detail = "over time budget of " + std::to_string(c.budget_seconds) + " s";
    }
    if (!outcome.ok) ++failed;
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), seconds, outcome.ok ? "" : " -- ", outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
