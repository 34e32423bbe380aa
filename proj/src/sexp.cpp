#include "densityforge/sexp.hpp"

#include <sstream>
#include <vector>

namespace df {

namespace {

// Dense ordinary polynomials over Q, used only inside reduction.
using Dense = std::vector<Rational>;

Dense to_dense(const QPoly& p, int shift) {
  Dense out(size_t(p.max_exp() - shift) + 1, Rational(0));
  for (const auto& [e, c] : p.coeffs()) out[size_t(e - shift)] = c;
  return out;
}

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_rem(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Dense dense_div_exact(const Dense& a, const Dense& b) {
  Dense quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Dense rem = a;
  while (rem.size() >= b.size() && !rem.empty()) {
    const Rational factor = rem.back() / b.back();
    const size_t off = rem.size() - b.size();
    quot[off] = factor;
    for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= factor * b[i];
    trim(rem);
  }
  return quot;
}

QPoly from_dense(const Dense& p, int shift) {
  QPoly out;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out.set(int(i) + shift, p[i]);
  return out;
}

std::string rational_str(const Rational& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly QPoly::constant(const Rational& c) { return monomial(0, c); }

QPoly QPoly::monomial(int exp, const Rational& c) {
  QPoly out;
  out.set(exp, c);
  return out;
}

int QPoly::min_exp() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int QPoly::max_exp() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

Rational QPoly::coeff(int exp) const {
  const auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void QPoly::set(int exp, const Rational& c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = c;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly out = *this;
  for (const auto& [e, c] : o.coeffs_) out.set(e, out.coeff(e) + c);
  return out;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly out = *this;
  for (const auto& [e, c] : o.coeffs_) out.set(e, out.coeff(e) - c);
  return out;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_)
      out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
  return out;
}

QPoly QPoly::shifted(int k) const {
  QPoly out;
  for (const auto& [e, c] : coeffs_) out.set(e + k, c);
  return out;
}

std::string QPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Rational mag = c;
    if (first) {
      if (c < 0) { out += "-"; mag = -c; }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) mag = -c;
    }
    const bool unit = (mag == 1);
    if (e == 0) {
      out += rational_str(mag);
    } else {
      if (!unit) out += rational_str(mag) + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    first = false;
  }
  return out;
}

// -------------------------------------------------------------- QRatFun

QRatFun::QRatFun() : num_(), den_(QPoly::constant(1)) {}

QRatFun::QRatFun(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}

QRatFun::QRatFun(QPoly num, QPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw PreconditionViolated("rational function with zero denominator");
  reduce();
}

void QRatFun::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  const int sn = num_.min_exp(), sd = den_.min_exp();
  Dense n = to_dense(num_, sn), d = to_dense(den_, sd);
  const Dense g = dense_gcd(n, d);
  if (g.size() > 1) {
    n = dense_div_exact(n, g);
    d = dense_div_exact(d, g);
  }
  // Make the denominator monic; carry the net Laurent shift on the numerator.
  const Rational lead = d.back();
  for (auto& c : n) c /= lead;
  for (auto& c : d) c /= lead;
  num_ = from_dense(n, sn - sd);
  den_ = from_dense(d, 0);
}

bool QRatFun::is_laurent() const { return den_ == QPoly::constant(1); }

QRatFun QRatFun::operator+(const QRatFun& o) const {
  return QRatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRatFun QRatFun::operator-(const QRatFun& o) const {
  return QRatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRatFun QRatFun::operator*(const QRatFun& o) const {
  return QRatFun(num_ * o.num_, den_ * o.den_);
}

QRatFun QRatFun::operator/(const QRatFun& o) const {
  if (o.is_zero()) throw PreconditionViolated("division by zero");
  return QRatFun(num_ * o.den_, den_ * o.num_);
}

QRatFun QRatFun::scaled(const Rational& c) const {
  QPoly n;
  for (const auto& [e, v] : num_.coeffs()) n.set(e, v * c);
  return QRatFun(std::move(n), den_);
}

QRatFun QRatFun::times_x_pow(int k) const {
  return QRatFun(num_.shifted(k), den_);
}

std::string QRatFun::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ----------------------------------------------------------------- SExp

SExp SExp::constant(const Rational& c) { return monomial(0, 0, c); }

SExp SExp::monomial(int w_exp, int x_exp, const Rational& c) {
  SExp out;
  out.set(w_exp, x_exp, c);
  return out;
}

SExp SExp::q_power(int a2, int b2) { return monomial(b2, a2, 1); }

Rational SExp::coeff(int w_exp, int x_exp) const {
  const auto it = coeffs_.find({w_exp, x_exp});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SExp::set(int w_exp, int x_exp, const Rational& c) {
  if (c == 0)
    coeffs_.erase({w_exp, x_exp});
  else
    coeffs_[{w_exp, x_exp}] = c;
}

SExp SExp::operator+(const SExp& o) const {
  SExp out = *this;
  for (const auto& [k, c] : o.coeffs_)
    out.set(k.first, k.second, out.coeff(k.first, k.second) + c);
  return out;
}

SExp SExp::operator-(const SExp& o) const {
  SExp out = *this;
  for (const auto& [k, c] : o.coeffs_)
    out.set(k.first, k.second, out.coeff(k.first, k.second) - c);
  return out;
}

SExp SExp::operator*(const SExp& o) const {
  SExp out;
  for (const auto& [k1, c1] : coeffs_)
    for (const auto& [k2, c2] : o.coeffs_) {
      const int w = k1.first + k2.first, x = k1.second + k2.second;
      out.set(w, x, out.coeff(w, x) + c1 * c2);
    }
  return out;
}

SExp SExp::derivative() const {
  SExp out;
  for (const auto& [k, c] : coeffs_)
    out.set(k.first, k.second, c * Rational(k.first, 2));
  return out;
}

SExp SExp::negate_s() const {
  SExp out;
  for (const auto& [k, c] : coeffs_) out.set(-k.first, k.second, c);
  return out;
}

SExp SExp::shift_s_half() const {
  SExp out;
  for (const auto& [k, c] : coeffs_) {
    if (k.first % 2 != 0)
      throw PreconditionViolated(
          "s -> s + 1/2 needs even w-exponents (integer s-slopes)");
    out.set(k.first, k.second + k.first / 2, c);
  }
  return out;
}

QPoly SExp::eval_w1() const {
  QPoly out;
  for (const auto& [k, c] : coeffs_) out.set(k.second, out.coeff(k.second) + c);
  return out;
}

std::string SExp::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) out += " + ";
    out += rational_str(c) + "*w^" + std::to_string(k.first) + "*x^" +
           std::to_string(k.second);
    first = false;
  }
  return out;
}

SExp from_density(const IntPoly2& p, int a2, int b2) {
  SExp out;
  for (const auto& [eq, eT, c] : p.terms()) {
    const int w = b2 * eT, x = 2 * eq + a2 * eT;
    out.set(w, x, out.coeff(w, x) + Rational(c));
  }
  return out;
}

}  // namespace df
