#pragma once

#include <string_view>

#include "qfermi/laurent_poly.hpp"

namespace qfermi {

enum class QKind { boson, fermion };

std::string_view to_string(QKind kind);

/// [n]_b = 1 + q + ... + q^{n-1}, or [n]_f = 1 - q + ... + (-q)^{n-1}.
/// Built as a geometric sum, so no division is ever performed.
LaurentPoly qnum(QKind kind, int n);

/// [n]! = [1][2]...[n], with [0]! = 1.
LaurentPoly qfact(QKind kind, int n);

/// [n][n-1]...[n-s+1] as a product. Requires 0 <= s <= n.
LaurentPoly falling_fact(QKind kind, int n, int s);

/// [n+1][n+2]...[n+s] as a product.
LaurentPoly rising_fact(QKind kind, int n, int s);

/// q-binomial falling_fact(n, k) / [k]!, by exact division.
LaurentPoly qbinom(QKind kind, int n, int k);

/// True iff [n]_f - [r]_f == (-1)^r q^r [n-r]_f holds exactly.
bool shift_identity_check(int n, int r);

}  // namespace qfermi
