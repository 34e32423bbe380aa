#include "doctest.h"

#include <random>

#include "densityforge/sexp.hpp"
#include "densityforge/srat.hpp"

using namespace df;

namespace {
SExp random_sexp(std::mt19937& rng) {
  SExp e;
  for (int k = 0; k < 4; ++k)
    e = e + SExp::monomial(2 * (int(rng() % 5) - 2), int(rng() % 5) - 2,
                           Rational(int(rng() % 7) - 3));
  return e;
}
}  // namespace

TEST_CASE("rational function reduction") {
  // (x^2 - 1)/(x - 1) reduces to x + 1.
  const QPoly x2m1 = QPoly::monomial(2, 1) - QPoly::constant(1);
  const QPoly xm1 = QPoly::monomial(1, 1) - QPoly::constant(1);
  const QRatFun f(x2m1, xm1);
  CHECK(f == QRatFun(QPoly::monomial(1, 1) + QPoly::constant(1)));
  CHECK(f.is_laurent());
  // Denominator stored monic, ordinary, nonzero constant term.
  const QRatFun g(QPoly::constant(1),
                  QPoly::monomial(2, 3) - QPoly::monomial(1, 3));
  CHECK(g.den().coeff(g.den().max_exp()) == 1);
  CHECK(g.den().coeff(0) != 0);
  CHECK((g * QRatFun(QPoly::monomial(1, 3) *
                     (QPoly::monomial(1, 1) - QPoly::constant(1)))) ==
        QRatFun(QPoly::constant(1)));
}

TEST_CASE("s-exponential arithmetic") {
  // q^{(a2 + b2 s)/2} as a monomial in w = q^{s/2}, x = q^{1/2}.
  CHECK(SExp::q_power(2, 0) == SExp::monomial(0, 2, 1));
  CHECK(SExp::q_power(0, 2) == SExp::monomial(2, 0, 1));
  CHECK(SExp::q_power(1, -4) * SExp::q_power(1, 4) == SExp::q_power(2, 0));
  // D(q^{as}) = a q^{as}.
  const SExp f = SExp::q_power(0, 6);  // q^{3s}
  CHECK(f.derivative() == SExp::monomial(6, 0, 3));
  CHECK(f.negate_s() == SExp::monomial(-6, 0, 1));
  CHECK(f.shift_s_half() == SExp::monomial(6, 3, 1));
  CHECK_THROWS_AS(SExp::monomial(1, 0, 1).shift_s_half(),
                  PreconditionViolated);
  CHECK(f.eval_w1() == QPoly::constant(1));
}

TEST_CASE("derivation product rule") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const SExp a = random_sexp(rng);
    const SExp b = random_sexp(rng);
    CHECK((a * b).derivative() ==
          a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("density substitution") {
  const IntPoly2 one_plus_T =
      IntPoly2::constant(1) + IntPoly2::monomial(0, 1, 1);
  // T -> q^{1-2s}: 1 + T becomes 1 + q q^{-2s}.
  CHECK(from_density(one_plus_T, 2, -4) ==
        SExp::constant(1) + SExp::monomial(-4, 2, 1));
  // T -> q^{-2s} on 1 - T + T^2.
  const IntPoly2 p = IntPoly2::constant(1) - IntPoly2::monomial(0, 1, 1) +
                     IntPoly2::monomial(0, 2, 1);
  CHECK(from_density(p, 0, -4) == SExp::constant(1) -
                                      SExp::monomial(-4, 0, 1) +
                                      SExp::monomial(-8, 0, 1));
  // T -> q^{1/2} on qT gives x^3.
  CHECK(from_density(IntPoly2::monomial(1, 1, 1), 1, 0) ==
        SExp::monomial(0, 3, 1));
}

TEST_CASE("normalized derivatives") {
  // f = q^{3s}: every normalized derivative is 3^r.
  for (int r = 0; r <= 4; ++r) {
    BigInt want = 1;
    for (int k = 0; k < r; ++k) want *= 3;
    CHECK(normalized_derivative(SRat(SExp::q_power(0, 6)), r) ==
          QRatFun(QPoly::constant(Rational(want))));
  }
  // f = q^{2s}(1 + a q^{-2s} + q q^{-4s}), r = 2: the middle term dies.
  const SExp f = SExp::monomial(4, 0, 1) + SExp::monomial(0, 0, 5) +
                 SExp::monomial(-4, 2, 1);
  CHECK(normalized_derivative(SRat(f), 2) ==
        QRatFun(QPoly::constant(4) + QPoly::monomial(2, 4)));
  // f = 1/(1 - q^{-2s-2}), r = 0: exact geometric value q^2/(q^2-1).
  const SRat g = SRat(SExp::constant(1)) /
                 SRat(SExp::constant(1) - SExp::monomial(-4, -4, 1));
  CHECK(normalized_derivative(g, 0) ==
        QRatFun(QPoly::monomial(4, 1),
                QPoly::monomial(4, 1) - QPoly::constant(1)));
}

TEST_CASE("pole detection at the center") {
  const SRat f =
      SRat(SExp::constant(1)) /
      SRat(SExp::constant(1) - SExp::monomial(-4, 0, 1));  // 1/(1 - q^{-2s})
  CHECK_THROWS_AS(normalized_derivative(f, 0), PoleAtCenter);
  // But a cancelling numerator zero makes the value finite:
  // (1 - q^{-4s})/(1 - q^{-2s}) = 1 + q^{-2s} -> 2.
  const SRat g = SRat(SExp::constant(1) - SExp::monomial(-8, 0, 1)) /
                 SRat(SExp::constant(1) - SExp::monomial(-4, 0, 1));
  CHECK(normalized_derivative(g, 0) == QRatFun(QPoly::constant(2)));
}

TEST_CASE("SRat structure") {
  const SRat a(SExp::q_power(0, 2));   // q^s
  const SRat b(SExp::q_power(0, -2));  // q^{-s}
  CHECK(a * b == SRat(SExp::constant(1)));
  CHECK((a + b).is_even());
  CHECK(!(a - b).is_even());
  CHECK((a + b).negate_s() == a + b);
  // Quotient-rule derivative agrees with the SExp derivation on polynomials.
  const SExp e = SExp::monomial(4, 2, 3) + SExp::monomial(-2, 0, 1);
  CHECK(SRat(e).derivative() == SRat(e.derivative()));
  // Odd normalized derivatives of even functions vanish.
  for (int r : {1, 3, 5})
    CHECK(normalized_derivative(a + b, r).is_zero());
}
