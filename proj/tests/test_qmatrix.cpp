#include <random>

#include "doctest.h"
#include "qca/errors.hpp"
#include "qca/qmatrix.hpp"

using namespace qca;

namespace {
const QCoeff Q1 = QCoeff::q_half_power(2);
const QCoeff Qm1 = QCoeff::q_half_power(-2);
}  // namespace

TEST_CASE("straightening matches the defining relations") {
  MatShape m22{2, 2};
  MatElement a = MatElement::generator(m22, 1, 1);
  MatElement b = MatElement::generator(m22, 1, 2);
  MatElement c = MatElement::generator(m22, 2, 1);
  MatElement d = MatElement::generator(m22, 2, 2);

  CHECK(normal_form(m22, {{1, 2}, {1, 1}}) == mat_mul(a, b) * Qm1);
  CHECK(normal_form(m22, {{2, 2}, {1, 1}}) ==
        mat_mul(a, d) - mat_mul(b, c) * (Q1 - Qm1));
  CHECK(normal_form(m22, {{2, 1}, {1, 2}}) == mat_mul(b, c));

  // ad - da = (q - q^{-1}) bc on every 2x2 submatrix of a 3x3 grid
  MatShape m33{3, 3};
  for (int r1 = 1; r1 <= 3; ++r1)
    for (int r2 = r1 + 1; r2 <= 3; ++r2)
      for (int c1 = 1; c1 <= 3; ++c1)
        for (int c2 = c1 + 1; c2 <= 3; ++c2) {
          MatElement ad = normal_form(m33, {{r1, c1}, {r2, c2}});
          MatElement da = normal_form(m33, {{r2, c2}, {r1, c1}});
          MatElement bc = normal_form(m33, {{r1, c2}, {r2, c1}});
          CHECK(ad - da == bc * (Q1 - Qm1));
        }
}

TEST_CASE("rewriting confluence: two strategies agree on random words") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> kk(1, 3), nn(1, 4);
  for (int it = 0; it < 200; ++it) {
    MatShape shape{kk(rng), nn(rng)};
    std::uniform_int_distribution<int> ri(1, shape.rows), ci(1, shape.cols);
    std::vector<std::pair<int, int>> word;
    int L = len(rng);
    for (int p = 0; p < L; ++p) word.push_back({ri(rng), ci(rng)});
    CHECK(normal_form(shape, word) == normal_form(shape, word, QCoeff::one(), true));
  }
}

TEST_CASE("quantum minors") {
  MatShape m24{2, 4};
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      MatElement expect =
          mat_mul(MatElement::generator(m24, 1, i),
                  MatElement::generator(m24, 2, j)) -
          mat_mul(MatElement::generator(m24, 1, j),
                  MatElement::generator(m24, 2, i)) * Q1;
      CHECK(quantum_minor(m24, {1, 2}, {i, j}) == expect);
    }
  MatShape m22{2, 2};
  CHECK(quantum_minor(m22, {1}, {2}) == MatElement::generator(m22, 1, 2));

  // the quantum determinant is central
  for (int m = 2; m <= 3; ++m) {
    MatShape sq{m, m};
    std::vector<int> all;
    for (int i = 1; i <= m; ++i) all.push_back(i);
    MatElement det = quantum_minor(sq, all, all);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        CHECK(qm_quasi_exponent(det, MatElement::generator(sq, i, j)) == 0);
  }
}

TEST_CASE("quasi-commutation exponents") {
  MatShape m22{2, 2};
  CHECK(qm_quasi_exponent(MatElement::generator(m22, 2, 1),
                          MatElement::generator(m22, 2, 2)) == 1);
  CHECK_THROWS_AS(qm_quasi_exponent(MatElement::generator(m22, 1, 1),
                                    MatElement::generator(m22, 2, 2)),
                  NotQuasiCommuting);
  MatShape m24{2, 4};
  CHECK(qm_quasi_exponent(plucker(m24, {1, 2}), plucker(m24, {1, 3})) == 1);
}

TEST_CASE("PBW division") {
  MatShape m36{3, 6};
  MatElement p123 = plucker(m36, {1, 2, 3});
  MatElement p124 = plucker(m36, {1, 2, 4});
  MatElement P = mat_mul(p123, p124);
  MatElement Q = qm_divide_right(P, p123);
  CHECK(mat_mul(Q, p123) == P);
  long long lam = qm_quasi_exponent(p123, p124);
  CHECK(Q == p124 * QCoeff::q_half_power(2 * lam));

  CHECK(qm_divide_right(p124, p124) ==
        MatElement::constant(m36, QCoeff::one()));
  MatShape m22{2, 2};
  CHECK_THROWS_AS(qm_divide_right(MatElement::generator(m22, 1, 1),
                                  MatElement::generator(m22, 1, 2)),
                  NotDivisible);

  MatElement P2 = mat_mul(p124, p123);
  MatElement Q2 = qm_divide_left(P2, p124);
  CHECK(mat_mul(p124, Q2) == P2);
}

TEST_CASE("plucker coordinates are homogeneous of degree k") {
  MatShape m36{3, 6};
  std::vector<std::vector<int>> subsets;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) subsets.push_back({a, b, c});
  CHECK(subsets.size() == 20);
  for (const auto& J : subsets) {
    MatElement p = plucker(m36, J);
    for (const auto& [mono, coeff] : p.terms()) {
      long long total = 0;
      for (long long e : mono) total += e;
      CHECK(total == 3);
    }
    // the localizing minor quasi-commutes with every coordinate
    CHECK_NOTHROW(qm_quasi_exponent(plucker(m36, {1, 2, 3}), p));
  }
}

TEST_CASE("localized elements") {
  MatShape m36{3, 6};
  MatElement p123 = plucker(m36, {1, 2, 3});
  MatElement p124 = plucker(m36, {1, 2, 4});

  LocElement unit = loc_normalize({p123, 1});
  CHECK(unit.denom_exp == 0);
  CHECK(unit.num == MatElement::constant(m36, QCoeff::one()));

  LocElement kept = loc_normalize({p124, 1});
  CHECK(kept.denom_exp == 1);
  CHECK(kept.num == p124);

  LocElement stripped = loc_normalize({mat_mul(p124, p123), 2});
  CHECK(stripped.denom_exp == 1);
  CHECK(stripped.num == p124);
  CHECK(loc_eq(stripped, {mat_mul(p124, p123), 2}));

  MatShape m24{2, 4};
  LocElement A{plucker(m24, {1, 3}), 1};
  LocElement B{plucker(m24, {2, 4}), 1};
  LocElement C = loc_mul(A, B);
  CHECK(C.denom_exp == 2);
  LocElement back = loc_divide_right(C, B);
  CHECK(loc_eq(back, A));
  LocElement S = loc_add(A, B);
  CHECK(loc_eq(loc_add(S, loc_scale(A, -QCoeff::one())), B));
}
