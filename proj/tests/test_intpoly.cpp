#include "doctest.h"

#include <random>

#include "densityforge/chainmodule.hpp"
#include "densityforge/intpoly.hpp"

using namespace df;

namespace {
IntPoly2 T() { return IntPoly2::monomial(0, 1, 1); }
IntPoly2 Q() { return IntPoly2::monomial(1, 0, 1); }
IntPoly2 one() { return IntPoly2::constant(1); }

IntPoly2 random_poly(std::mt19937& rng) {
  IntPoly2 p;
  for (int k = 0; k < 6; ++k)
    p = p + IntPoly2::monomial(int(rng() % 4), int(rng() % 4),
                               int(rng() % 7) - 3);
  return p;
}
}  // namespace

TEST_CASE("ring operations") {
  CHECK((one() + T()) * (one() - T()) ==
        one() - IntPoly2::monomial(0, 2, 1));
  const IntPoly2 p = one() + Q() * T();
  CHECK(p + IntPoly2() == p);
  CHECK((one() - T()) * (one() + Q() * T()) ==
        one() + (Q() - one()) * T() - IntPoly2::monomial(1, 2, 1));
}

TEST_CASE("substitutions") {
  const IntPoly2 p =
      one() + (Q() - one()) * T() + IntPoly2::monomial(0, 2, 1);
  CHECK(subst_T_neg(subst_q_neg(p)) ==
        one() + (Q() + one()) * T() + IntPoly2::monomial(0, 2, 1));
  CHECK(subst_T_pow(one() + T(), 2) == one() + IntPoly2::monomial(0, 2, 1));
  CHECK(subst_T_qpow_T(one() + T(), 1) == one() + Q() * T());
  CHECK(subst_T_neg(subst_T_neg(p)) == p);
}

TEST_CASE("substitutions are ring homomorphisms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const IntPoly2 a = random_poly(rng);
    const IntPoly2 b = random_poly(rng);
    CHECK(subst_T_neg(a * b) == subst_T_neg(a) * subst_T_neg(b));
    CHECK(subst_q_neg(a * b) == subst_q_neg(a) * subst_q_neg(b));
    CHECK(subst_T_qpow_T(a * b, 2) ==
          subst_T_qpow_T(a, 2) * subst_T_qpow_T(b, 2));
    CHECK(subst_T_pow(a * b, 3) == subst_T_pow(a, 3) * subst_T_pow(b, 3));
    CHECK(subst_q_pow(a * b, 2) == subst_q_pow(a, 2) * subst_q_pow(b, 2));
  }
}

TEST_CASE("reverse_T") {
  const IntPoly2 p = one() - T() + IntPoly2::monomial(0, 2, 1);
  CHECK(reverse_T(p, 2) == p);
  CHECK(reverse_T(one() + Q() * T(), 1) == Q() + T());
  CHECK(reverse_T(one(), 3) == IntPoly2::monomial(0, 3, 1));
  CHECK(reverse_T(reverse_T(one() + Q() * T(), 3), 3) == one() + Q() * T());
  CHECK_THROWS_AS(reverse_T(IntPoly2::monomial(0, 3, 1), 2),
                  PreconditionViolated);
}

TEST_CASE("eval_q") {
  const IntPoly2 p = one() + (Q() - one()) * T() + IntPoly2::monomial(0, 2, 1);
  IntPoly1 want = IntPoly1::constant(1) + IntPoly1::monomial(1, 2) +
                  IntPoly1::monomial(2, 1);
  CHECK(eval_q(p, 3) == want);
  CHECK(eval_q(one() - T(), 17) ==
        IntPoly1::constant(1) - IntPoly1::monomial(1, 1));
  CHECK(eval_q(Q() * T(), -3) == IntPoly1::monomial(1, -3));
}

TEST_CASE("interpolation with surplus checks") {
  const IntPoly1 line = interpolate({{3, 4}, {5, 6}, {7, 8}}, 1);
  CHECK(line == IntPoly1::constant(1) + IntPoly1::monomial(1, 1));
  CHECK(interpolate({{3, 1}, {5, 1}}, 0) == IntPoly1::constant(1));
  // Counts of lines in a two-dimensional space interpolate to t + 1.
  std::vector<std::pair<BigInt, BigInt>> pts;
  for (int q : {3, 5, 7})
    pts.push_back({q, brute_sub_count(q, Partition({1, 1}), 1)});
  CHECK(interpolate(pts, 1) == line);
  CHECK_THROWS_AS(interpolate({{2, 1}, {4, 2}}, 0), ExtraPointMismatch);
  CHECK_THROWS_AS(interpolate({{2, 0}, {4, 1}}, 1), NonIntegralCoefficient);
}

TEST_CASE("canonical text form") {
  const IntPoly2 p = one() + (Q() - one()) * T() + IntPoly2::monomial(0, 2, 1);
  CHECK(p.to_string() == "1 + (q-1)*T + T^2");
}
