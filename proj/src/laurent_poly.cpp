#include "qfermi/laurent_poly.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "qfermi/errors.hpp"

namespace qfermi {

LaurentPoly::LaurentPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Rational coefficient, Exponent exponent) {
  LaurentPoly p;
  if (!coefficient.is_zero()) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& t) { return t.second.is_zero(); });
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Rational LaurentPoly::coefficient(Exponent exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

Rational LaurentPoly::eval_exact(const Rational& q0) const {
  if (is_zero()) return Rational();
  if (q0.is_zero()) {
    if (min_exponent() < 0) {
      throw ZeroBaseError("Laurent polynomial with negative exponent at q = 0");
    }
    return coefficient(0);
  }
  // Walk exponents in order, carrying the current power of q0.
  Rational sum;
  Exponent at = min_exponent();
  Rational power = pow(q0, at);
  for (const auto& [e, c] : terms_) {
    if (e != at) {
      power *= pow(q0, e - at);
      at = e;
    }
    sum += c * power;
  }
  return sum;
}

double LaurentPoly::eval_float(double q0) const {
  if (!(q0 > 0.0)) throw DomainError("float evaluation requires q > 0");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.to_double() * std::pow(q0, e);
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string magnitude = mag.is_integer() ? mag.numerator().get_str()
                                             : mag.to_string();
    if (e == 0) {
      out += magnitude;
      continue;
    }
    if (magnitude != "1") out += mag.is_integer() ? magnitude : "(" + magnitude + ")";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::Terms acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  return LaurentPoly::from_terms(std::move(acc));
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result(1);
  LaurentPoly square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

LaurentPoly exact_quotient(const LaurentPoly& dividend,
                           const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (dividend.is_zero()) return LaurentPoly();

  // Monomials are units, so normalise both sides to ordinary polynomials with
  // nonzero constant term and run schoolbook long division from the top.
  const int shift = dividend.min_exponent() - divisor.min_exponent();
  LaurentPoly remainder = dividend.shifted(-dividend.min_exponent());
  const LaurentPoly d = divisor.shifted(-divisor.min_exponent());
  const int d_top = d.max_exponent();
  const Rational& lead = d.terms().rbegin()->second;

  LaurentPoly::Terms quotient;
  while (!remainder.is_zero() && remainder.max_exponent() >= d_top) {
    const int e = remainder.max_exponent() - d_top;
    const Rational c = remainder.terms().rbegin()->second / lead;
    quotient.emplace(e, c);
    remainder -= LaurentPoly::monomial(c, e) * d;
  }
  if (!remainder.is_zero()) {
    throw InexactDivisionError("(" + dividend.to_string() + ") / (" +
                               divisor.to_string() +
                               ") is not a Laurent polynomial");
  }
  return LaurentPoly::from_terms(std::move(quotient)).shifted(shift);
}

nlohmann::json to_json(const LaurentPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c.to_string()});
  return out;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  LaurentPoly::Terms terms;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 ||
        !term[0].is_number_integer() || !term[1].is_string()) {
      throw ParseError("polynomial term must be [exponent, \"num/den\"]");
    }
    const auto e = term[0].get<long long>();
    if (e < std::numeric_limits<int>::min() ||
        e > std::numeric_limits<int>::max()) {
      throw ParseError("exponent out of range");
    }
    const auto [it, inserted] = terms.emplace(
        static_cast<int>(e), Rational::parse(term[1].get<std::string>()));
    if (!inserted) throw ParseError("duplicate exponent in polynomial");
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string serialize(const LaurentPoly& p) { return to_json(p).dump(); }

LaurentPoly parse_poly(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
  return poly_from_json(j);
}

}  // namespace qfermi
