#ifndef DENSITYFORGE_INTPOLY_HPP
#define DENSITYFORGE_INTPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "densityforge/numbers.hpp"

namespace df {

/// Exact univariate integer polynomial, sparse exponent map, no stored zeros.
class IntPoly1 {
 public:
  IntPoly1() = default;
  static IntPoly1 constant(BigInt c);
  static IntPoly1 monomial(int exp, BigInt c);

  const std::map<int, BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const;
  BigInt coeff(int exp) const;

  IntPoly1 operator+(const IntPoly1&) const;
  IntPoly1 operator-(const IntPoly1&) const;
  IntPoly1 operator*(const IntPoly1&) const;
  bool operator==(const IntPoly1&) const = default;

  BigInt eval(const BigInt& x) const;

  /// Canonical text, ascending exponents, e.g. "1 + 2*t + t^3".
  std::string to_string(const std::string& var = "t") const;
  /// JSON-ready pairs [exp, coeff], ascending exponent.
  std::vector<std::pair<int, BigInt>> terms() const;

  void set(int exp, BigInt c);  // drops zeros

 private:
  std::map<int, BigInt> coeffs_;
};

/// Exact bivariate integer polynomial in (q, T); exponents nonnegative.
class IntPoly2 {
 public:
  using Key = std::pair<int, int>;  // (e_q, e_T)

  IntPoly2() = default;
  static IntPoly2 constant(BigInt c);
  static IntPoly2 monomial(int e_q, int e_T, BigInt c);
  /// Lift a polynomial in T alone (e_q = 0 everywhere).
  static IntPoly2 from_T_poly(const IntPoly1& p);
  /// Lift a polynomial in q alone.
  static IntPoly2 from_q_poly(const IntPoly1& p);

  const std::map<Key, BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree_T() const;  // -1 for zero
  int degree_q() const;
  BigInt coeff(int e_q, int e_T) const;

  IntPoly2 operator+(const IntPoly2&) const;
  IntPoly2 operator-(const IntPoly2&) const;
  IntPoly2 operator*(const IntPoly2&) const;
  bool operator==(const IntPoly2&) const = default;

  void set(int e_q, int e_T, BigInt c);

  /// Canonical text: terms sorted by (e_T, e_q) ascending, factored per
  /// T-power, e.g. "1 + (q-1)*T + T^2".
  std::string to_string() const;
  /// Triples [e_q, e_T, coeff] sorted by (e_T, e_q).
  std::vector<std::tuple<int, int, BigInt>> terms() const;

 private:
  std::map<Key, BigInt> coeffs_;
};

// Substitutions.  Each is an exact ring homomorphism.
IntPoly2 subst_T_neg(const IntPoly2& p);                // T -> -T
IntPoly2 subst_q_neg(const IntPoly2& p);                // q -> -q
IntPoly2 subst_T_qpow_T(const IntPoly2& p, int j);      // T -> q^j T, j >= 0
IntPoly2 subst_T_pow(const IntPoly2& p, int e);         // T -> T^e, e >= 1
IntPoly2 subst_q_pow(const IntPoly2& p, int e);         // q -> q^e, e >= 1

/// T^d * P(1/T).  Errors if degree_T(P) > d.
IntPoly2 reverse_T(const IntPoly2& p, int d);

/// Specialize q, leaving a polynomial in T.
IntPoly1 eval_q(const IntPoly2& p, const BigInt& q0);

/// Unique polynomial of degree <= degree_bound through the first
/// degree_bound+1 points (exact, over rationals); surplus points are checked
/// against the result.  Throws NonIntegralCoefficient / ExtraPointMismatch.
IntPoly1 interpolate(const std::vector<std::pair<BigInt, BigInt>>& points,
                     int degree_bound);

}  // namespace df

#endif
