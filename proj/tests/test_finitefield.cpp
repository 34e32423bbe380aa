#include "doctest.h"

#include "densityforge/finitefield.hpp"

using namespace df;

TEST_CASE("prime field arithmetic") {
  FiniteField f(5, 1);
  CHECK(f.order() == 5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.mul(3, 4) == 2);
  CHECK(f.neg(2) == 3);
  for (int a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.pow(2, 4) == 1);
}

TEST_CASE("quadratic extension field") {
  FiniteField f(3, 2);
  CHECK(f.order() == 9);
  // Associativity and distributivity on the full table.
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c) {
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
  for (int a = 1; a < 9; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
    // Multiplicative order divides 8.
    CHECK(f.pow(a, 8) == 1);
  }
}

TEST_CASE("conjugation of the quadratic extension") {
  FiniteField f(3, 2);
  for (int a = 0; a < 9; ++a) {
    CHECK(f.conj(f.conj(a)) == a);           // involution
    CHECK(f.conj(a) == f.pow(a, 3));         // Frobenius
    const int norm = f.mul(a, f.conj(a));    // norm lands in GF(3)
    CHECK(f.conj(norm) == norm);
    CHECK(norm < 3);
  }
  // Fixed field is exactly the prime field.
  int fixed = 0;
  for (int a = 0; a < 9; ++a) fixed += f.conj(a) == a;
  CHECK(fixed == 3);
}

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9));
  CHECK(!is_prime(91));
}
