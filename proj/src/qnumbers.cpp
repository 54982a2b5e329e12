#include "qfermi/qnumbers.hpp"

#include <string>

#include "qfermi/errors.hpp"

namespace qfermi {

namespace {

void require_non_negative(int n, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + " requires a non-negative argument, got " +
                      std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(QKind kind) {
  return kind == QKind::boson ? "boson" : "fermion";
}

LaurentPoly qnum(QKind kind, int n) {
  require_non_negative(n, "qnum");
  LaurentPoly::Terms terms;
  for (int k = 0; k < n; ++k) {
    terms.emplace(k, (kind == QKind::fermion && k % 2 != 0) ? -1 : 1);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qfact(QKind kind, int n) {
  require_non_negative(n, "qfact");
  return falling_fact(kind, n, n);
}

LaurentPoly falling_fact(QKind kind, int n, int s) {
  require_non_negative(n, "falling_fact");
  require_non_negative(s, "falling_fact");
  if (s > n) {
    throw DomainError("falling_fact requires s <= n (s=" + std::to_string(s) +
                      ", n=" + std::to_string(n) + ")");
  }
  LaurentPoly out(1);
  for (int k = n; k > n - s; --k) out *= qnum(kind, k);
  return out;
}

LaurentPoly rising_fact(QKind kind, int n, int s) {
  require_non_negative(n, "rising_fact");
  require_non_negative(s, "rising_fact");
  LaurentPoly out(1);
  for (int k = n + 1; k <= n + s; ++k) out *= qnum(kind, k);
  return out;
}

LaurentPoly qbinom(QKind kind, int n, int k) {
  return exact_quotient(falling_fact(kind, n, k), qfact(kind, k));
}

bool shift_identity_check(int n, int r) {
  if (r < 0 || r > n) {
    throw DomainError("shift_identity_check requires 0 <= r <= n");
  }
  const LaurentPoly lhs = qnum(QKind::fermion, n) - qnum(QKind::fermion, r);
  const LaurentPoly rhs =
      LaurentPoly::monomial(r % 2 == 0 ? 1 : -1, r) * qnum(QKind::fermion, n - r);
  return lhs == rhs;
}

}  // namespace qfermi
