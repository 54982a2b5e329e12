#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "qfermi/qnumbers.hpp"
#include "qfermi/triangles.hpp"

namespace qfermi {

enum class Amplitudes {
  real,     // sqrt of non-negative q-numbers only
  complex,  // principal complex sqrt; needed for fermions at q > 1
};

/// Truncated Fock-space matrices of one deformed oscillator at a fixed q.
/// Basis |0>..|dim-1>. `raising` is the plain transpose of `lowering`
/// (never the conjugate transpose), so raising*lowering has [n] on the
/// diagonal in both amplitude modes.
struct FockRep {
  QKind kind = QKind::fermion;
  double q = 0.0;
  int dim = 0;
  Amplitudes amplitudes = Amplitudes::real;
  Eigen::MatrixXcd lowering;
  Eigen::MatrixXcd raising;
  std::vector<int> number_diag;

  Eigen::MatrixXcd number() const;
};

/// Throws DomainError for q <= 0 or dim < 3, and for a fermion at q > 1
/// when amplitudes are real.
FockRep build_rep(QKind kind, double q, int dim,
                  Amplitudes amplitudes = Amplitudes::real);

// Every residual below is max|LHS - RHS| / max(1, max|LHS|) over a leading
// block that excludes the rows and columns corrupted by truncation. `block`
// narrows that further, e.g. to compare reps of different dim on the same
// states.

/// Defining relation: LR + qRL = 1 (fermion) or LR - qRL = 1 (boson).
double algebra_residual(const FockRep& rep, std::optional<int> block = {});
/// Same relation over the whole matrix, including the truncated edge.
double algebra_residual_uncut(const FockRep& rep);
/// [N, L] = -L and [N, R] = R.
double number_commutator_residual(const FockRep& rep);

enum class ReorderForm {
  lowering_power,  // L^s R = [s] L^{s-1} + (-1)^s q^s R L^s  (boson: no sign)
  raising_power,   // R^s L = (-1)^s q^-s L R^s - (-1)^s q^-s [s] R^{s-1}
};

/// Requires 1 <= s <= dim - 2.
double reorder_residual(const FockRep& rep, int s,
                        ReorderForm form = ReorderForm::lowering_power,
                        std::optional<int> block = {});

/// (RL)^r or (LR)^r against sum_s T^r_s R^s L^s or T^r_s L^s R^s.
/// Throws ShapeError if the triangle does not belong to (rep.kind, mode),
/// has fewer than r rows, or dim <= 2r.
double ordering_residual(const FockRep& rep, int r, Ordering mode,
                         const Triangle& triangle,
                         std::optional<int> block = {});

/// Numeric check record as emitted by `verify`.
struct ResidualCheck {
  std::string identity;
  QKind kind = QKind::fermion;
  double q = 0.0;
  int dim = 0;
  int r_or_s = 0;
  double residual = 0.0;
  double tolerance = 0.0;

  bool pass() const { return residual < tolerance; }
  nlohmann::json to_json() const;
};

// Tolerances by word length.
inline constexpr double kShortWordTolerance = 1e-12;
inline constexpr double kReorderTolerance = 1e-10;
inline constexpr double kOrderingTolerance = 1e-9;

// q values used when no explicit q is requested.
inline const std::vector<double> kFermionSampleQ{0.3, 0.7, 0.9};
inline const std::vector<double> kBosonSampleQ{0.5, 1.0, 2.0};

}  // namespace qfermi
