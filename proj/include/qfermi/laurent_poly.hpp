#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "qfermi/rational.hpp"

namespace qfermi {

/// Laurent polynomial in q with rational coefficients.
///
/// Canonical form: zero coefficients are never stored, so structural
/// equality is mathematical equality. Values are immutable in practice;
/// every arithmetic operation returns a fresh canonical polynomial.
class LaurentPoly {
 public:
  using Exponent = int;
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  /// coefficient * q^exponent
  static LaurentPoly monomial(Rational coefficient, Exponent exponent);
  /// q^exponent
  static LaurentPoly q(Exponent exponent = 1) { return monomial(1, exponent); }
  /// Builds a canonical polynomial from arbitrary terms (zeros dropped).
  static LaurentPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Undefined for the zero polynomial.
  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }
  Rational coefficient(Exponent exponent) const;

  /// this * q^shift
  LaurentPoly shifted(Exponent shift) const;

  /// Exact value at q0. Throws ZeroBaseError if q0 = 0 and a negative
  /// exponent is present.
  Rational eval_exact(const Rational& q0) const;
  /// Binary64 value at q0 > 0, accumulated in ascending exponent order.
  double eval_float(double q0) const;

  /// Human-readable form such as "1 - 2q + q^2" or "-q^-1".
  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// Quotient a / b when b divides a in the Laurent ring. Throws
/// InexactDivisionError on a nonzero remainder and DomainError for b = 0.
LaurentPoly exact_quotient(const LaurentPoly& dividend,
                           const LaurentPoly& divisor);

/// Term-list form: [[exponent, "num/den"], ...] in ascending exponent order.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

std::string serialize(const LaurentPoly& p);
/// Inverse of serialize. Throws ParseError on malformed input.
LaurentPoly parse_poly(std::string_view text);

}  // namespace qfermi
