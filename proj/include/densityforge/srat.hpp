#ifndef DENSITYFORGE_SRAT_HPP
#define DENSITYFORGE_SRAT_HPP

#include <map>
#include <string>

#include "densityforge/sexp.hpp"

namespace df {

/// Laurent polynomial in w over the field of rational functions in x.
class WPoly {
 public:
  WPoly() = default;
  static WPoly constant(QRatFun c);
  static WPoly monomial(int w_exp, QRatFun c);
  static WPoly from_sexp(const SExp& e);

  const std::map<int, QRatFun>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const;
  int max_exp() const;
  QRatFun coeff(int w_exp) const;
  void set(int w_exp, QRatFun c);

  WPoly operator+(const WPoly&) const;
  WPoly operator-(const WPoly&) const;
  WPoly operator*(const WPoly&) const;
  bool operator==(const WPoly&) const = default;

  WPoly scaled(const QRatFun& c) const;
  /// The derivation (1/log q) d/ds: coefficient of w^k scaled by k/2.
  WPoly derivative() const;
  /// w -> w^{-1}  (s -> -s).
  WPoly negate_s() const;
  /// s -> s + 1/2: coefficient of w^k picks up x^{k/2}; k must be even.
  WPoly shift_s_half() const;
  QRatFun eval_w1() const;

  std::string to_string() const;

 private:
  std::map<int, QRatFun> coeffs_;
};

/// Ratio of w-Laurent-polynomials, stored with a monic denominator of
/// minimal w-exponent 0.  Common factors are not cancelled eagerly;
/// normalized_derivative removes them via truncated Taylor expansion at the
/// center, so construction never fails on poles and only evaluation at s = 0
/// can (PoleAtCenter).
class SRat {
 public:
  SRat();  // zero
  SRat(WPoly num, WPoly den);
  explicit SRat(const SExp& e);
  static SRat one();

  const WPoly& num() const { return num_; }
  const WPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  SRat operator+(const SRat&) const;
  SRat operator-(const SRat&) const;
  SRat operator*(const SRat&) const;
  SRat operator/(const SRat&) const;
  /// Mathematical equality (cross-multiplied).
  bool operator==(const SRat&) const;

  SRat derivative() const;  // quotient rule, reduced
  SRat negate_s() const;
  SRat shift_s_half() const;
  /// Structural evenness: invariant under s -> -s.
  bool is_even() const;

  std::string to_string() const;

 private:
  void reduce();
  WPoly num_, den_;
};

/// (1/log q)^r (d/ds)^r at s = 0, exact; the result is a rational function
/// in x (it is a Laurent polynomial whenever no zeta factors survive).
QRatFun normalized_derivative(SRat f, int r);

}  // namespace df

#endif
