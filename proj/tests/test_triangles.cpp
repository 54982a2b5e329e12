#include <map>
#include <vector>

#include "doctest.h"
#include "qfermi/errors.hpp"
#include "qfermi/triangles.hpp"

using namespace qfermi;

namespace {

const LaurentPoly q = LaurentPoly::q();
LaurentPoly qp(int e) { return LaurentPoly::q(e); }
const LaurentPoly f2 = qnum(QKind::fermion, 2);
const LaurentPoly f3 = qnum(QKind::fermion, 3);
const LaurentPoly f4 = qnum(QKind::fermion, 4);

// Operator words over {L, R} (annihilator, creator), rewritten with the
// algebra relation alone. Independent of every recurrence in the library.
using Word = std::vector<bool>;  // true = creator R
using Combination = std::map<Word, LaurentPoly>;

// Normal order using L R = 1 + sigma q R L (sigma = -1 fermion, +1 boson),
// or anti-normal order using R L = q^-1 (sigma' (L R - 1)).
Combination reorder(QKind kind, Ordering mode, Combination expr) {
  const int sigma = kind == QKind::fermion ? -1 : 1;
  for (;;) {
    Combination next;
    bool changed = false;
    for (const auto& [word, coeff] : expr) {
      std::size_t i = 0;
      for (; i + 1 < word.size(); ++i) {
        const bool out_of_order = mode == Ordering::normal ? (!word[i] && word[i + 1])
                                                           : (word[i] && !word[i + 1]);
        if (out_of_order) break;
      }
      if (i + 1 >= word.size()) {
        next[word] += coeff;
        continue;
      }
      changed = true;
      Word shortened(word.begin(), word.begin() + static_cast<long>(i));
      shortened.insert(shortened.end(), word.begin() + static_cast<long>(i) + 2, word.end());
      Word swapped = word;
      swapped[i] = !swapped[i];
      swapped[i + 1] = !swapped[i + 1];
      if (mode == Ordering::normal) {
        // L R = 1 + sigma q R L
        next[shortened] += coeff;
        next[swapped] += LaurentPoly(sigma) * q * coeff;
      } else if (kind == QKind::fermion) {
        // R L = q^-1 (1 - L R)
        next[shortened] += qp(-1) * coeff;
        next[swapped] -= qp(-1) * coeff;
      } else {
        // R L = q^-1 (L R - 1)
        next[shortened] -= qp(-1) * coeff;
        next[swapped] += qp(-1) * coeff;
      }
    }
    std::erase_if(next, [](const auto& t) { return t.second.is_zero(); });
    expr = std::move(next);
    if (!changed) return expr;
  }
}

// Coefficients of R^s L^s (normal) or L^s R^s (anti-normal) in (X)^r.
std::vector<LaurentPoly> brute_force_row(QKind kind, Ordering mode, int r) {
  Word word;
  for (int i = 0; i < r; ++i) {
    if (mode == Ordering::normal) {
      word.push_back(true);
      word.push_back(false);
    } else {
      word.push_back(false);
      word.push_back(true);
    }
  }
  const Combination ordered = reorder(kind, mode, {{word, LaurentPoly(1)}});
  std::vector<LaurentPoly> row(static_cast<std::size_t>(r));
  for (const auto& [w, coeff] : ordered) {
    const int s = static_cast<int>(w.size()) / 2;
    REQUIRE(w.size() % 2 == 0);
    REQUIRE(s >= 1);
    for (int i = 0; i < 2 * s; ++i) {
      const bool creator_first = mode == Ordering::normal;
      REQUIRE(w[static_cast<std::size_t>(i)] == (i < s ? creator_first : !creator_first));
    }
    row[static_cast<std::size_t>(s - 1)] = coeff;
  }
  return row;
}

}  // namespace

TEST_CASE("build_triangle examples") {
  const Triangle f = build_triangle(TriangleKind::stirling2f, 3);
  CHECK(f.row(2) == std::vector<LaurentPoly>{1, -q});
  CHECK(f.row(3) == std::vector<LaurentPoly>{1, -2 * q + qp(2), -qp(3)});

  CHECK(build_triangle(TriangleKind::antinormal_boson, 2).row(2) ==
        std::vector<LaurentPoly>{-qp(-1), qp(-1)});
  CHECK(build_triangle(TriangleKind::antinormal_fermion, 2).row(2) ==
        std::vector<LaurentPoly>{qp(-1), -qp(-1)});
  CHECK(build_triangle(TriangleKind::stirling1f, 2).row(2) ==
        std::vector<LaurentPoly>{qp(-1), -qp(-1)});
  CHECK(build_triangle(TriangleKind::stirling1f, 3).row(3) ==
        std::vector<LaurentPoly>{-(1 - q) * qp(-3), (2 - q) * qp(-3), -qp(-3)});

  const Triangle lah = build_triangle(TriangleKind::lahf, 2);
  CHECK(lah.row(1) == std::vector<LaurentPoly>{0, 1});
  CHECK(lah.row(2) == std::vector<LaurentPoly>{0, 1 - q, qp(2)});

  CHECK_THROWS_AS(build_triangle(TriangleKind::stirling2f, 0), DomainError);
  CHECK(f.at(3, 0).is_zero());
  CHECK(f.at(3, 4).is_zero());
  CHECK(f.at(9, 1).is_zero());
}

TEST_CASE("row shapes and seeds") {
  for (auto kind : {TriangleKind::stirling2f, TriangleKind::stirling1f, TriangleKind::lahf,
                    TriangleKind::antinormal_boson, TriangleKind::antinormal_fermion}) {
    const Triangle t = build_triangle(kind, 7);
    const int extra = kind == TriangleKind::lahf ? 1 : 0;
    for (int r = 1; r <= 7; ++r) CHECK(static_cast<int>(t.row(r).size()) == r + extra);
    CHECK(t.at(1, 1) == LaurentPoly(1));
    CHECK(triangle_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_FALSE(triangle_kind_from_string("stirling2b").has_value());
}

TEST_CASE("normal and anti-normal triangles match brute-force operator reordering") {
  for (int r = 1; r <= 6; ++r) {
    CHECK(build_triangle(TriangleKind::stirling2f, r).row(r) ==
          brute_force_row(QKind::fermion, Ordering::normal, r));
    CHECK(build_triangle(TriangleKind::antinormal_fermion, r).row(r) ==
          brute_force_row(QKind::fermion, Ordering::antinormal, r));
    CHECK(build_triangle(TriangleKind::antinormal_boson, r).row(r) ==
          brute_force_row(QKind::boson, Ordering::antinormal, r));
  }
}

TEST_CASE("diagonal and first-column invariants") {
  const Triangle f = build_triangle(TriangleKind::stirling2f, 12);
  const Triangle a = build_triangle(TriangleKind::antinormal_boson, 12);
  for (int r = 1; r <= 12; ++r) {
    const int tri = r * (r - 1) / 2;
    CHECK(f.at(r, 1) == LaurentPoly(1));
    CHECK(f.at(r, r) == LaurentPoly::monomial(tri % 2 == 0 ? 1 : -1, tri));
    CHECK(a.at(r, r) == qp(-tri));
  }
}

TEST_CASE("bell numbers") {
  const auto bell = bell_numbers(5);
  CHECK(bell[0] == LaurentPoly(1));
  CHECK(bell[1] == 1 - q);
  CHECK(bell[2] == 1 - q - q * f2 - qp(3));
  CHECK(bell[2] == 1 - 2 * q + qp(2) - qp(3));
  CHECK(bell[3] == 1 - q - q * f2 - q * f2 * f2 - qp(3) - qp(3) * f2 - qp(3) * f3 + qp(6));
  for (const auto& b : bell_numbers(15)) CHECK(b.eval_exact(0) == Rational(1));
}

TEST_CASE("bell at q = 1") {
  const auto v = bell_q1_pattern(12);
  CHECK(v == std::vector<long>{1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1});
}

TEST_CASE("falling-factorial identity") {
  const LaurentPoly lhs = f3 * f3;
  const LaurentPoly rhs = f3 - q * f3 * f2;
  CHECK(lhs == rhs);
  const auto report = verify_falling_identity(6, 9);
  CHECK(report.passed());
  CHECK(report.checked == 6 * 9 - 15);
  CHECK_THROWS_AS(verify_falling_identity(5, 4), DomainError);
}

TEST_CASE("first-kind identity") {
  const auto report = verify_first_kind_identity(6, 10);
  CHECK(report.passed());
  CHECK(report.checked > 0);
  CHECK_THROWS_AS(verify_first_kind_identity(0, 4), DomainError);
}

TEST_CASE("Lah identity with falling factorials in r") {
  // n = 2: [r][r+1] = [2][r] + q^2 [r][r-1]
  for (int r = 2; r <= 8; ++r) {
    const LaurentPoly fr = qnum(QKind::fermion, r);
    CHECK(fr * qnum(QKind::fermion, r + 1) ==
          f2 * fr + qp(2) * fr * qnum(QKind::fermion, r - 1));
  }
  CHECK(verify_lah_identity(5, 8).passed());
  CHECK_THROWS_AS(verify_lah_identity(6, 5), DomainError);
}

TEST_CASE("Lah identity fails under the printed [n-s] denominator") {
  // Sum_s L^n_s [r]!/[n-s]! differs from [r+n-1]!/[r-1]! already at n=1, r=3.
  const Triangle t = build_triangle(TriangleKind::lahf, 1);
  const int n = 1;
  const int r = 3;
  LaurentPoly printed;
  for (int s = 0; s <= n; ++s) {
    printed += t.at(n, s) * exact_quotient(qfact(QKind::fermion, r),
                                           qfact(QKind::fermion, n - s));
  }
  CHECK(printed != rising_fact(QKind::fermion, r - 1, n));
}

TEST_CASE("rising-factorial identities") {
  for (int n = 0; n <= 6; ++n) {
    const LaurentPoly b1 = qnum(QKind::boson, n + 1);
    const LaurentPoly b2 = qnum(QKind::boson, n + 2);
    CHECK(b1 * b1 == -qp(-1) * b1 + qp(-1) * b1 * b2);
    const LaurentPoly g1 = qnum(QKind::fermion, n + 1);
    const LaurentPoly g2 = qnum(QKind::fermion, n + 2);
    CHECK(g1 * g1 == qp(-1) * g1 - qp(-1) * g1 * g2);
  }
  CHECK(verify_rising_identity(QKind::boson, 6, 8).passed());
  CHECK(verify_rising_identity(QKind::fermion, 6, 8).passed());
}

TEST_CASE("report lists failures as data") {
  IdentityReport report{"demo", 3, {{2, 5, to_json(q), to_json(1 - q)}}};
  const auto j = report.to_json();
  CHECK(j["pass"] == false);
  CHECK(j["failures"][0]["r"] == 2);
  CHECK(j["failures"][0]["rhs"].dump() == R"([[0,"1/1"],[1,"-1/1"]])");
}

TEST_CASE("ordering triangle lookup") {
  CHECK(ordering_triangle(QKind::fermion, Ordering::normal) == TriangleKind::stirling2f);
  CHECK(ordering_triangle(QKind::fermion, Ordering::antinormal) ==
        TriangleKind::antinormal_fermion);
  CHECK(ordering_triangle(QKind::boson, Ordering::antinormal) ==
        TriangleKind::antinormal_boson);
  CHECK_FALSE(ordering_triangle(QKind::boson, Ordering::normal).has_value());
}
