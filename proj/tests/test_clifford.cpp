#include "doctest.h"
#include "lsurf/clifford.hpp"
#include "support.hpp"

using namespace lsurf;
using lsurf::test::throws_code;

namespace {

void check_entry(const BasisTable& t, int j, int k, int sign, int index) {
  CAPTURE(j);
  CAPTURE(k);
  CHECK(t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].sign == sign);
  CHECK(t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].index == index);
}

}  // namespace

TEST_CASE("basis tables match hand-derived products") {
  // even basis (1, iI, J, iK), odd basis (i1, I, iJ, K), i^2 = -1
  const BasisTable& ee = table_h0_h0();
  check_entry(ee, 0, 0, 1, 0);
  check_entry(ee, 1, 1, 1, 0);   // (iI)(iI) = i^2 I^2 = 1
  check_entry(ee, 2, 2, -1, 0);  // J J = -1
  check_entry(ee, 3, 3, 1, 0);   // (iK)(iK) = 1
  check_entry(ee, 1, 2, 1, 3);   // (iI) J = iK
  check_entry(ee, 2, 3, 1, 1);   // J (iK) = iI
  check_entry(ee, 3, 1, -1, 2);  // (iK)(iI) = -KI = -J

  const BasisTable& eo = table_h0_h1();
  check_entry(eo, 1, 0, -1, 1);  // (iI)(i1) = -I
  check_entry(eo, 2, 1, -1, 3);  // J I = -K
  check_entry(eo, 0, 2, 1, 2);

  const BasisTable& oo = table_h1_h1();
  check_entry(oo, 0, 0, -1, 0);  // (i1)(i1) = -1
  check_entry(oo, 1, 1, -1, 0);  // I I = -1
  check_entry(oo, 2, 2, 1, 0);   // (iJ)(iJ) = 1
  check_entry(oo, 3, 3, -1, 0);  // K K = -1
  check_entry(oo, 1, 2, 1, 3);   // I (iJ) = iK
}

TEST_CASE("basis products agree with the tables") {
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      const BasisProduct e = table_h1_h0()[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      const H1Elem want = LorentzNum{static_cast<double>(e.sign)} * h1_basis(e.index);
      CHECK(h1_basis(j) * h0_basis(k) == want);
    }
}

TEST_CASE("gamma and vec_of are inverse") {
  const Vec22 x{1.0, -2.0, 0.5, 3.0};
  const H1Elem g = gamma(x);
  CHECK(g.q[0] == kSigma * 1.0);
  CHECK(g.q[1] == LorentzNum{-2.0});
  CHECK(vec_of(g) == x);
}

TEST_CASE("Clifford square of a fixed vector") {
  const Vec22 x{1.0, 2.0, 3.0, 4.0};  // <x, x> = -1 + 4 - 9 + 16 = 10
  REQUIRE(scalar(x, x) == 10.0);
  const CliffordSquare sq = clifford_square(x);
  const H0Elem want{{LorentzNum{-10.0}, 0.0, 0.0, 0.0}};
  CHECK(test::max_abs_diff(sq.upper, want) < 1e-14);
  CHECK(test::max_abs_diff(sq.lower, want) < 1e-14);
}

TEST_CASE("spin_to_so") {
  SUBCASE("the unit spinor acts as the identity") {
    CHECK(max_abs_diff(spin_to_so(h0_basis(0)), Mat4::identity()) < 1e-15);
  }
  SUBCASE("non-unit spinors are rejected") {
    const H0Elem twice = LorentzNum{2.0} * h0_basis(0);
    CHECK(throws_code([&] { (void)spin_to_so(twice); }, ErrorCode::NotUnitSpinor));
  }
  SUBCASE("a boost in iI keeps the (2,2) product") {
    const H0Elem p{{std::cosh(0.4), std::sinh(0.4), 0.0, 0.0}};
    const Mat4 M = spin_to_so(p);
    const Vec22 x{0.3, -1.0, 2.0, 0.7}, y{1.0, 0.5, -0.2, 0.1};
    CHECK(std::fabs(scalar(M * x, M * y) - scalar(x, y)) < 1e-13);
  }
}

TEST_CASE("2x2 matrices over A") {
  const Mat2A m{{2.0, 1.0}, {0.5, 0.0}, {1.0, -1.0}, {3.0, 0.5}};
  const Mat2A inv = inverse(m);
  CHECK(max_abs_diff(m * inv, Mat2A::identity()) < 1e-14);
  CHECK(max_abs_diff(inv * m, Mat2A::identity()) < 1e-14);
  CHECK(m.star().star() == m);
  const Mat2A null{{1.0, 1.0}, {}, {}, {1.0}};
  CHECK(throws_code([&] { (void)inverse(null); }, ErrorCode::NullDivisor));

  const Mat2Split sp = to_split(m);
  CHECK(max_abs_diff(from_split(sp.plus, sp.minus), m) < 1e-15);
  CHECK(std::fabs(sp.plus.det() - to_split(m.det()).plus) < 1e-14);
}

TEST_CASE("Hermitian model of R^{2,2}") {
  const Vec22 x{0.5, 1.0, -2.0, 0.25};
  const Mat2A X = vec_to_herm(x);
  CHECK(is_hermitian(X));
  CHECK(std::fabs(X.det().u + scalar(x, x)) < 1e-14);
  CHECK(std::fabs(X.det().v) < 1e-14);
  CHECK(test::max_abs_diff(herm_to_vec(X), x) < 1e-15);

  const Mat2R C = herm_to_real(X);
  CHECK(max_abs_diff(real_to_herm(C), X) < 1e-15);

  const Mat2A skew{{0.0, 1.0}, {1.0}, {2.0}, {1.0}};
  CHECK_FALSE(is_hermitian(skew));
  CHECK(throws_code([&] { (void)herm_to_vec(skew); }, ErrorCode::NotHermitian));
}

TEST_CASE("A0 and A1 isomorphisms on basis elements") {
  for (int k = 0; k < 4; ++k) {
    CAPTURE(k);
    const H0Elem p = h0_basis(k);
    CHECK(test::rel_err(bilinear_H(p, p), A0(p).det()) < 1e-15);
    const H1Elem q = h1_basis(k);
    CHECK(test::rel_err(bilinear_H(q, q), -A1(q).det()) < 1e-15);
  }
  CHECK(max_abs_diff(A0(h0_basis(0)), Mat2A::identity()) == 0.0);
}
