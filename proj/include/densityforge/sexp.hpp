#ifndef DENSITYFORGE_SEXP_HPP
#define DENSITYFORGE_SEXP_HPP

#include <map>
#include <string>
#include <utility>

#include "densityforge/intpoly.hpp"
#include "densityforge/numbers.hpp"

namespace df {

/// Laurent polynomial in x over the rationals (x stands for q^{1/2}).
class QPoly {
 public:
  QPoly() = default;
  static QPoly constant(const Rational& c);
  static QPoly monomial(int exp, const Rational& c);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const;  // 0 for the zero polynomial
  int max_exp() const;
  Rational coeff(int exp) const;
  void set(int exp, const Rational& c);

  QPoly operator+(const QPoly&) const;
  QPoly operator-(const QPoly&) const;
  QPoly operator*(const QPoly&) const;
  bool operator==(const QPoly&) const = default;

  /// Multiplication by x^k.
  QPoly shifted(int k) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::map<int, Rational> coeffs_;
};

/// Rational function in x over Q, stored reduced with the denominator an
/// ordinary polynomial with nonzero constant term, made monic.
class QRatFun {
 public:
  QRatFun();  // zero
  explicit QRatFun(QPoly num);
  QRatFun(QPoly num, QPoly den);  // den must be nonzero

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1 (the value is a Laurent polynomial).
  bool is_laurent() const;

  QRatFun operator+(const QRatFun&) const;
  QRatFun operator-(const QRatFun&) const;
  QRatFun operator*(const QRatFun&) const;
  QRatFun operator/(const QRatFun&) const;  // divisor must be nonzero
  bool operator==(const QRatFun&) const = default;

  QRatFun scaled(const Rational& c) const;
  QRatFun times_x_pow(int k) const;

  std::string to_string() const;

 private:
  void reduce();
  QPoly num_, den_;
};

/// Finite sum of rational multiples of w^{w_exp} x^{x_exp}, where
/// w = q^{s/2} and x = q^{1/2}; every exponent of the form a + b s with a, b
/// half-integers is expressible this way.
class SExp {
 public:
  SExp() = default;
  static SExp constant(const Rational& c);
  static SExp monomial(int w_exp, int x_exp, const Rational& c);
  /// q^{(a2 + b2 s)/2}  (a2, b2 are the doubled half-integer exponents).
  static SExp q_power(int a2, int b2);

  const std::map<std::pair<int, int>, Rational>& coeffs() const {
    return coeffs_;
  }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int w_exp, int x_exp) const;
  void set(int w_exp, int x_exp, const Rational& c);

  SExp operator+(const SExp&) const;
  SExp operator-(const SExp&) const;
  SExp operator*(const SExp&) const;
  bool operator==(const SExp&) const = default;

  /// The derivation (1/log q) d/ds: each term is scaled by w_exp/2.
  SExp derivative() const;
  /// s -> -s.
  SExp negate_s() const;
  /// s -> s + 1/2 (requires every w-exponent to be even).
  SExp shift_s_half() const;
  /// Evaluation at s = 0 (w = 1).
  QPoly eval_w1() const;

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Rational> coeffs_;
};

/// Substitute T -> q^{(a2 + b2 s)/2} into a polynomial in (q, T), keeping q
/// symbolic through x = q^{1/2}.
SExp from_density(const IntPoly2& p, int a2, int b2);

}  // namespace df

#endif
