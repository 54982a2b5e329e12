#include "qfermi/fock.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qfermi/errors.hpp"

namespace qfermi {

namespace {

using Matrix = Eigen::MatrixXcd;

Matrix power(const Matrix& m, int k) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

int clamp_block(int valid, std::optional<int> block) {
  const int size = block ? std::min(valid, *block) : valid;
  if (size < 1) throw DomainError("residual block is empty");
  return size;
}

double scaled_residual(const Matrix& lhs, const Matrix& rhs, int size) {
  const auto l = lhs.topLeftCorner(size, size);
  const auto r = rhs.topLeftCorner(size, size);
  const double diff = (l - r).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
  return diff / scale;
}

double sign_power(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

Matrix FockRep::number() const {
  Matrix n = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) n(i, i) = number_diag[static_cast<std::size_t>(i)];
  return n;
}

FockRep build_rep(QKind kind, double q, int dim, Amplitudes amplitudes) {
  if (!(q > 0.0)) throw DomainError("Fock representation requires q > 0");
  if (dim < 3) throw DomainError("Fock representation requires dim >= 3");
  if (kind == QKind::fermion && q > 1.0 && amplitudes == Amplitudes::real) {
    throw DomainError(
        "fermion Fock representation at q > 1 needs complex amplitudes");
  }
  FockRep rep;
  rep.kind = kind;
  rep.q = q;
  rep.dim = dim;
  rep.amplitudes = amplitudes;
  rep.lowering = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    double value = qnum(kind, n).eval_float(q);
    if (amplitudes == Amplitudes::real) {
      // Exact zeros (fermion, q = 1) may round to tiny negatives.
      value = std::max(value, 0.0);
      rep.lowering(n - 1, n) = std::sqrt(value);
    } else {
      rep.lowering(n - 1, n) = std::sqrt(std::complex<double>(value, 0.0));
    }
  }
  rep.raising = rep.lowering.transpose();
  rep.number_diag.resize(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n) rep.number_diag[static_cast<std::size_t>(n)] = n;
  return rep;
}

namespace {

Matrix algebra_lhs(const FockRep& rep) {
  const double sign = rep.kind == QKind::fermion ? 1.0 : -1.0;
  return rep.lowering * rep.raising + sign * rep.q * rep.raising * rep.lowering;
}

}  // namespace

double algebra_residual(const FockRep& rep, std::optional<int> block) {
  return scaled_residual(algebra_lhs(rep), Matrix::Identity(rep.dim, rep.dim),
                         clamp_block(rep.dim - 1, block));
}

double algebra_residual_uncut(const FockRep& rep) {
  return scaled_residual(algebra_lhs(rep), Matrix::Identity(rep.dim, rep.dim),
                         rep.dim);
}

double number_commutator_residual(const FockRep& rep) {
  const Matrix n = rep.number();
  const int size = rep.dim - 1;
  return std::max(
      scaled_residual(n * rep.lowering - rep.lowering * n, -rep.lowering, size),
      scaled_residual(n * rep.raising - rep.raising * n, rep.raising, size));
}

double reorder_residual(const FockRep& rep, int s, ReorderForm form,
                        std::optional<int> block) {
  if (s < 1 || s > rep.dim - 2) {
    throw DomainError("reorder_residual requires 1 <= s <= dim - 2, got s=" +
                      std::to_string(s));
  }
  const double qs = std::pow(rep.q, s);
  const double bracket = qnum(rep.kind, s).eval_float(rep.q);
  const double sign = rep.kind == QKind::fermion ? sign_power(s) : 1.0;
  const Matrix& l = rep.lowering;
  const Matrix& r = rep.raising;
  Matrix lhs;
  Matrix rhs;
  if (form == ReorderForm::lowering_power) {
    lhs = power(l, s) * r;
    rhs = bracket * power(l, s - 1) + sign * qs * r * power(l, s);
  } else {
    lhs = power(r, s) * l;
    rhs = (sign / qs) * l * power(r, s) - (sign / qs) * bracket * power(r, s - 1);
  }
  return scaled_residual(lhs, rhs, clamp_block(rep.dim - s - 1, block));
}

double ordering_residual(const FockRep& rep, int r, Ordering mode,
                         const Triangle& triangle, std::optional<int> block) {
  const auto expected = ordering_triangle(rep.kind, mode);
  if (!expected || *expected != triangle.kind()) {
    throw ShapeError("triangle " + std::string(to_string(triangle.kind())) +
                     " does not expand this ordering for a " +
                     std::string(to_string(rep.kind)));
  }
  if (r < 1 || r > triangle.row_count()) {
    throw ShapeError("ordering_residual: r outside the triangle rows");
  }
  if (rep.dim <= 2 * r) throw ShapeError("ordering_residual requires dim > 2r");

  const Matrix& l = rep.lowering;
  const Matrix& c = rep.raising;
  const Matrix x = mode == Ordering::normal ? Matrix(c * l) : Matrix(l * c);
  const Matrix lhs = power(x, r);
  Matrix rhs = Matrix::Zero(rep.dim, rep.dim);
  for (int s = 1; s <= r; ++s) {
    const double coeff = triangle.at(r, s).eval_float(rep.q);
    const Matrix word = mode == Ordering::normal ? Matrix(power(c, s) * power(l, s))
                                                 : Matrix(power(l, s) * power(c, s));
    rhs += coeff * word;
  }
  return scaled_residual(lhs, rhs, clamp_block(rep.dim - r - 1, block));
}

nlohmann::json ResidualCheck::to_json() const {
  return {{"identity", identity},   {"kind", std::string(qfermi::to_string(kind))},
          {"q", q},                 {"dim", dim},
          {"r_or_s", r_or_s},       {"residual", residual},
          {"tolerance", tolerance}, {"pass", pass()}};
}

}  // namespace qfermi
