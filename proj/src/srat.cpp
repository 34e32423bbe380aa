#include "densityforge/srat.hpp"

#include <vector>

namespace df {

// ---------------------------------------------------------------- WPoly

WPoly WPoly::constant(QRatFun c) { return monomial(0, std::move(c)); }

WPoly WPoly::monomial(int w_exp, QRatFun c) {
  WPoly out;
  out.set(w_exp, std::move(c));
  return out;
}

WPoly WPoly::from_sexp(const SExp& e) {
  std::map<int, QPoly> groups;
  for (const auto& [k, c] : e.coeffs()) {
    auto& g = groups[k.first];
    g.set(k.second, g.coeff(k.second) + c);
  }
  WPoly out;
  for (auto& [w, g] : groups) out.set(w, QRatFun(std::move(g)));
  return out;
}

int WPoly::min_exp() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int WPoly::max_exp() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

QRatFun WPoly::coeff(int w_exp) const {
  const auto it = coeffs_.find(w_exp);
  return it == coeffs_.end() ? QRatFun() : it->second;
}

void WPoly::set(int w_exp, QRatFun c) {
  if (c.is_zero())
    coeffs_.erase(w_exp);
  else
    coeffs_[w_exp] = std::move(c);
}

WPoly WPoly::operator+(const WPoly& o) const {
  WPoly out = *this;
  for (const auto& [e, c] : o.coeffs_) out.set(e, out.coeff(e) + c);
  return out;
}

WPoly WPoly::operator-(const WPoly& o) const {
  WPoly out = *this;
  for (const auto& [e, c] : o.coeffs_) out.set(e, out.coeff(e) - c);
  return out;
}

WPoly WPoly::operator*(const WPoly& o) const {
  WPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_)
      out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
  return out;
}

WPoly WPoly::scaled(const QRatFun& c) const {
  WPoly out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : coeffs_) out.set(e, v * c);
  return out;
}

WPoly WPoly::derivative() const {
  WPoly out;
  for (const auto& [e, c] : coeffs_)
    out.set(e, c.scaled(Rational(e, 2)));
  return out;
}

WPoly WPoly::negate_s() const {
  WPoly out;
  for (const auto& [e, c] : coeffs_) out.set(-e, c);
  return out;
}

WPoly WPoly::shift_s_half() const {
  WPoly out;
  for (const auto& [e, c] : coeffs_) {
    if (e % 2 != 0)
      throw PreconditionViolated(
          "s -> s + 1/2 needs even w-exponents (integer s-slopes)");
    out.set(e, c.times_x_pow(e / 2));
  }
  return out;
}

QRatFun WPoly::eval_w1() const {
  QRatFun out;
  for (const auto& [e, c] : coeffs_) out = out + c;
  return out;
}

std::string WPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out += " + ";
    out += "(" + c.to_string() + ")*w^" + std::to_string(e);
    first = false;
  }
  return out;
}

// ----------------------------------------------------------------- SRat

SRat::SRat() : num_(), den_(WPoly::constant(QRatFun(QPoly::constant(1)))) {}

SRat::SRat(WPoly num, WPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw PreconditionViolated("SRat with zero denominator");
  reduce();
}

SRat::SRat(const SExp& e) : SRat(WPoly::from_sexp(e), WPoly::constant(QRatFun(QPoly::constant(1)))) {}

SRat SRat::one() { return SRat(SExp::constant(1)); }

void SRat::reduce() {
  if (num_.is_zero()) {
    den_ = WPoly::constant(QRatFun(QPoly::constant(1)));
    return;
  }
  // Normalize only: shift the denominator's lowest w-exponent to 0 and make
  // its leading coefficient 1.  Common w-factors of numerator and denominator
  // are not cancelled here; evaluation at the center removes them by working
  // with truncated Taylor expansions.
  const int sd = den_.min_exp();
  const QRatFun lead = den_.coeff(den_.max_exp());
  WPoly num, den;
  for (const auto& [e, c] : num_.coeffs()) num.set(e - sd, c / lead);
  for (const auto& [e, c] : den_.coeffs()) den.set(e - sd, c / lead);
  num_ = std::move(num);
  den_ = std::move(den);
}

SRat SRat::operator+(const SRat& o) const {
  return SRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SRat SRat::operator-(const SRat& o) const {
  return SRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

SRat SRat::operator*(const SRat& o) const {
  return SRat(num_ * o.num_, den_ * o.den_);
}

SRat SRat::operator/(const SRat& o) const {
  if (o.is_zero()) throw PreconditionViolated("division by zero SRat");
  return SRat(num_ * o.den_, den_ * o.num_);
}

bool SRat::operator==(const SRat& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

SRat SRat::derivative() const {
  return SRat(num_.derivative() * den_ - num_ * den_.derivative(),
              den_ * den_);
}

SRat SRat::negate_s() const { return SRat(num_.negate_s(), den_.negate_s()); }

SRat SRat::shift_s_half() const {
  return SRat(num_.shift_s_half(), den_.shift_s_half());
}

bool SRat::is_even() const { return *this == negate_s(); }

std::string SRat::to_string() const {
  return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
}

namespace {

/// Taylor coefficients of p(w) at the center, in the variable u = s * log q
/// (so w^k contributes exp(k u / 2)): entry m is the coefficient of u^m.
std::vector<QRatFun> center_series(const WPoly& p, int order) {
  std::vector<QRatFun> out(static_cast<size_t>(order) + 1);
  for (const auto& [k, c] : p.coeffs()) {
    const Rational base = Rational(k) / 2;
    Rational term = 1;  // base^m / m!
    for (int m = 0; m <= order; ++m) {
      if (m > 0) term = term * base / m;
      out[static_cast<size_t>(m)] = out[static_cast<size_t>(m)] + c.scaled(term);
    }
  }
  return out;
}

}  // namespace

QRatFun normalized_derivative(SRat f, int r) {
  if (f.num().is_zero()) return QRatFun();
  // The denominator's series is nonzero by valuation at most the number of
  // distinct w-exponents (a Vandermonde argument over Q(x)).
  const int max_val = static_cast<int>(f.den().coeffs().size()) - 1;
  const std::vector<QRatFun> ds = center_series(f.den(), r + max_val);
  int v = 0;
  while (ds[static_cast<size_t>(v)].is_zero()) ++v;
  const std::vector<QRatFun> ns = center_series(f.num(), r + v);
  for (int m = 0; m < v; ++m)
    if (!ns[static_cast<size_t>(m)].is_zero())
      throw PoleAtCenter("denominator vanishes at s = 0 after reduction");
  // Divide the shifted series: quotient coefficients up to order r.
  std::vector<QRatFun> qs(static_cast<size_t>(r) + 1);
  for (int m = 0; m <= r; ++m) {
    QRatFun acc = ns[static_cast<size_t>(m + v)];
    for (int j = 1; j <= m; ++j)
      acc = acc - ds[static_cast<size_t>(j + v)] * qs[static_cast<size_t>(m - j)];
    qs[static_cast<size_t>(m)] = acc / ds[static_cast<size_t>(v)];
  }
  Rational fact = 1;
  for (int m = 2; m <= r; ++m) fact *= m;
  return qs[static_cast<size_t>(r)].scaled(fact);
}

}  // namespace df
