#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qfermi/laurent_poly.hpp"
#include "qfermi/qnumbers.hpp"
#include "qfermi/report.hpp"

namespace qfermi {

enum class TriangleKind {
  stirling2f,          // F^r_s: (F†F)^r in normal-ordered words
  stirling1f,          // S^r_s: inverse of F
  lahf,                // L^n_s: rising factorials in falling factorials
  antinormal_boson,    // A^r_s: (AA†)^r in anti-normal words
  antinormal_fermion,  // B^r_s: (FF†)^r in anti-normal words
};

enum class Ordering { normal, antinormal };

std::string_view to_string(TriangleKind kind);
std::optional<TriangleKind> triangle_kind_from_string(std::string_view name);

/// Triangle of the ordering expansion for (kind, ordering), if one exists.
/// The q-bosonic normal-ordering triangle is not provided.
std::optional<TriangleKind> ordering_triangle(QKind kind, Ordering ordering);

/// Lower-triangular table of Laurent polynomial coefficients.
///
/// Rows are 1-indexed. Row r covers s = 1..r, except lahf where row n
/// covers s = 0..n. Entries outside a row read as zero.
class Triangle {
 public:
  Triangle(TriangleKind kind, std::vector<std::vector<LaurentPoly>> rows);

  TriangleKind kind() const { return kind_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int first_column() const { return kind_ == TriangleKind::lahf ? 0 : 1; }
  const std::vector<LaurentPoly>& row(int r) const;
  /// Entry (r, s); zero outside the stored range of row r.
  const LaurentPoly& at(int r, int s) const;

  nlohmann::json to_json() const;

 private:
  TriangleKind kind_;
  std::vector<std::vector<LaurentPoly>> rows_;
};

Triangle build_triangle(TriangleKind kind, int rows);

/// q-fermionic Bell numbers: row sums of the stirling2f triangle.
std::vector<LaurentPoly> bell_numbers(int rows);

/// Bell numbers at q = 1. All values are integers.
std::vector<long> bell_q1_pattern(int rows);

// Exhaustive exact checks of the expansions the triangles encode.
IdentityReport verify_falling_identity(int rmax, int nmax);
IdentityReport verify_first_kind_identity(int rmax, int nmax);
IdentityReport verify_lah_identity(int nmax, int rmax);
IdentityReport verify_rising_identity(QKind kind, int rmax, int nmax);

}  // namespace qfermi
