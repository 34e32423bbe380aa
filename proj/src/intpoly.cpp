#include "densityforge/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace df {

namespace {
BigInt bigint_pow(BigInt base, int exp) {
  BigInt out = 1;
  while (exp-- > 0) out *= base;
  return out;
}
}  // namespace

IntPoly1 IntPoly1::constant(BigInt c) {
  IntPoly1 p;
  p.set(0, std::move(c));
  return p;
}

IntPoly1 IntPoly1::monomial(int exp, BigInt c) {
  IntPoly1 p;
  p.set(exp, std::move(c));
  return p;
}

int IntPoly1::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

BigInt IntPoly1::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void IntPoly1::set(int exp, BigInt c) {
  if (exp < 0) throw std::invalid_argument("IntPoly1: negative exponent");
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

IntPoly1 IntPoly1::operator+(const IntPoly1& o) const {
  IntPoly1 out = *this;
  for (const auto& [e, c] : o.coeffs_) out.set(e, out.coeff(e) + c);
  return out;
}

IntPoly1 IntPoly1::operator-(const IntPoly1& o) const {
  IntPoly1 out = *this;
  for (const auto& [e, c] : o.coeffs_) out.set(e, out.coeff(e) - c);
  return out;
}

IntPoly1 IntPoly1::operator*(const IntPoly1& o) const {
  IntPoly1 out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_)
      out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
  return out;
}

BigInt IntPoly1::eval(const BigInt& x) const {
  BigInt out = 0;
  // Horner over the sparse map, highest exponent first.
  int prev_exp = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev_exp >= 0) out *= bigint_pow(x, prev_exp - it->first);
    out += it->second;
    prev_exp = it->first;
  }
  if (prev_exp > 0) out *= bigint_pow(x, prev_exp);
  return out;
}

std::string IntPoly1::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << abs_c.str();
    } else {
      if (abs_c != 1) os << abs_c.str() << "*";
      os << var;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::vector<std::pair<int, BigInt>> IntPoly1::terms() const {
  return {coeffs_.begin(), coeffs_.end()};
}

IntPoly2 IntPoly2::constant(BigInt c) {
  IntPoly2 p;
  p.set(0, 0, std::move(c));
  return p;
}

IntPoly2 IntPoly2::monomial(int e_q, int e_T, BigInt c) {
  IntPoly2 p;
  p.set(e_q, e_T, std::move(c));
  return p;
}

IntPoly2 IntPoly2::from_T_poly(const IntPoly1& p) {
  IntPoly2 out;
  for (const auto& [e, c] : p.coeffs()) out.set(0, e, c);
  return out;
}

IntPoly2 IntPoly2::from_q_poly(const IntPoly1& p) {
  IntPoly2 out;
  for (const auto& [e, c] : p.coeffs()) out.set(e, 0, c);
  return out;
}

int IntPoly2::degree_T() const {
  int deg = -1;
  for (const auto& [key, c] : coeffs_) deg = std::max(deg, key.second);
  return deg;
}

int IntPoly2::degree_q() const {
  int deg = -1;
  for (const auto& [key, c] : coeffs_) deg = std::max(deg, key.first);
  return deg;
}

BigInt IntPoly2::coeff(int e_q, int e_T) const {
  auto it = coeffs_.find({e_q, e_T});
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void IntPoly2::set(int e_q, int e_T, BigInt c) {
  if (e_q < 0 || e_T < 0)
    throw std::invalid_argument("IntPoly2: negative exponent");
  Key key{e_q, e_T};
  if (c == 0)
    coeffs_.erase(key);
  else
    coeffs_[key] = std::move(c);
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const {
  IntPoly2 out = *this;
  for (const auto& [k, c] : o.coeffs_)
    out.set(k.first, k.second, out.coeff(k.first, k.second) + c);
  return out;
}

IntPoly2 IntPoly2::operator-(const IntPoly2& o) const {
  IntPoly2 out = *this;
  for (const auto& [k, c] : o.coeffs_)
    out.set(k.first, k.second, out.coeff(k.first, k.second) - c);
  return out;
}

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const {
  IntPoly2 out;
  for (const auto& [k1, c1] : coeffs_)
    for (const auto& [k2, c2] : o.coeffs_) {
      int e_q = k1.first + k2.first, e_T = k1.second + k2.second;
      out.set(e_q, e_T, out.coeff(e_q, e_T) + c1 * c2);
    }
  return out;
}

std::vector<std::tuple<int, int, BigInt>> IntPoly2::terms() const {
  std::vector<std::tuple<int, int, BigInt>> out;
  for (const auto& [k, c] : coeffs_) out.emplace_back(k.first, k.second, c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(std::get<1>(a), std::get<0>(a)) <
           std::pair(std::get<1>(b), std::get<0>(b));
  });
  return out;
}

std::string IntPoly2::to_string() const {
  if (coeffs_.empty()) return "0";
  // Group by T-power; each group is a polynomial in q.
  std::map<int, IntPoly1> by_T;
  for (const auto& [k, c] : coeffs_) by_T[k.second].set(k.first, c);
  // Print a q-polynomial with descending exponents, e.g. "q-1".
  const auto q_poly_text = [](const IntPoly1& qp) {
    std::ostringstream os;
    bool first = true;
    for (auto it = qp.coeffs().rbegin(); it != qp.coeffs().rend(); ++it) {
      const auto& [exp, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? "-" : "+");
      }
      if (mag != 1 || exp == 0) os << mag.str();
      if (exp >= 1) {
        if (mag != 1) os << "*";
        os << "q";
        if (exp > 1) os << "^" << exp;
      }
    }
    return os.str();
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e_T, qp] : by_T) {
    std::string q_text = q_poly_text(qp);
    bool single_term = qp.coeffs().size() == 1;
    bool negated = false;
    if (single_term && qp.coeffs().begin()->second < 0) {
      negated = true;
      IntPoly1 pos;
      pos.set(qp.coeffs().begin()->first, -qp.coeffs().begin()->second);
      q_text = q_poly_text(pos);
    }
    if (first) {
      if (negated) os << "-";
      first = false;
    } else {
      os << (negated ? " - " : " + ");
    }
    if (e_T == 0) {
      os << q_text;
    } else {
      if (q_text != "1") {
        if (single_term)
          os << q_text << "*";
        else
          os << "(" << q_text << ")*";
      }
      os << "T";
      if (e_T > 1) os << "^" << e_T;
    }
  }
  return os.str();
}

IntPoly2 subst_T_neg(const IntPoly2& p) {
  IntPoly2 out;
  for (const auto& [k, c] : p.coeffs())
    out.set(k.first, k.second, (k.second % 2) ? BigInt(-c) : c);
  return out;
}

IntPoly2 subst_q_neg(const IntPoly2& p) {
  IntPoly2 out;
  for (const auto& [k, c] : p.coeffs())
    out.set(k.first, k.second, (k.first % 2) ? BigInt(-c) : c);
  return out;
}

IntPoly2 subst_T_qpow_T(const IntPoly2& p, int j) {
  if (j < 0) throw std::invalid_argument("subst_T_qpow_T: j < 0");
  IntPoly2 out;
  for (const auto& [k, c] : p.coeffs())
    out.set(k.first + j * k.second, k.second, c);
  return out;
}

IntPoly2 subst_T_pow(const IntPoly2& p, int e) {
  if (e < 1) throw std::invalid_argument("subst_T_pow: e < 1");
  IntPoly2 out;
  for (const auto& [k, c] : p.coeffs()) out.set(k.first, k.second * e, c);
  return out;
}

IntPoly2 subst_q_pow(const IntPoly2& p, int e) {
  if (e < 1) throw std::invalid_argument("subst_q_pow: e < 1");
  IntPoly2 out;
  for (const auto& [k, c] : p.coeffs()) out.set(k.first * e, k.second, c);
  return out;
}

IntPoly2 reverse_T(const IntPoly2& p, int d) {
  if (p.degree_T() > d)
    throw PreconditionViolated("reverse_T: T-degree exceeds d");
  IntPoly2 out;
  for (const auto& [k, c] : p.coeffs()) out.set(k.first, d - k.second, c);
  return out;
}

IntPoly1 eval_q(const IntPoly2& p, const BigInt& q0) {
  IntPoly1 out;
  for (const auto& [k, c] : p.coeffs())
    out.set(k.second, out.coeff(k.second) + c * bigint_pow(q0, k.first));
  return out;
}

IntPoly1 interpolate(const std::vector<std::pair<BigInt, BigInt>>& points,
                     int degree_bound) {
  if (degree_bound < 0)
    throw std::invalid_argument("interpolate: negative degree bound");
  size_t need = static_cast<size_t>(degree_bound) + 1;
  if (points.size() < need)
    throw std::invalid_argument("interpolate: not enough points");
  for (size_t i = 0; i < need; ++i)
    for (size_t j = i + 1; j < need; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: repeated x value");

  // Newton divided differences over exact rationals.
  std::vector<Rational> coef(need);
  std::vector<Rational> column(need);
  for (size_t i = 0; i < need; ++i) column[i] = Rational(points[i].second);
  coef[0] = column[0];
  for (size_t level = 1; level < need; ++level) {
    for (size_t i = 0; i + level < need; ++i) {
      Rational dx(points[i + level].first - points[i].first);
      column[i] = (column[i + 1] - column[i]) / dx;
    }
    coef[level] = column[0];
  }

  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> mono(need, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // product (x - x_0)...(x - x_{k-1})
  for (size_t level = 0; level < need; ++level) {
    for (size_t j = 0; j < basis.size(); ++j) mono[j] += coef[level] * basis[j];
    if (level + 1 < need) {
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      Rational x_l(points[level].first);
      for (size_t j = 0; j < basis.size(); ++j) {
        next[j + 1] += basis[j];
        next[j] -= x_l * basis[j];
      }
      basis = std::move(next);
    }
  }

  IntPoly1 result;
  for (size_t j = 0; j < mono.size(); ++j) {
    if (boost::multiprecision::denominator(mono[j]) != 1)
      throw NonIntegralCoefficient("interpolate: coefficient of exponent " +
                                   std::to_string(j) + " is not an integer");
    result.set(static_cast<int>(j),
               BigInt(boost::multiprecision::numerator(mono[j])));
  }
  for (size_t i = need; i < points.size(); ++i) {
    if (result.eval(points[i].first) != points[i].second)
      throw ExtraPointMismatch("interpolate: surplus point at x = " +
                               points[i].first.str() + " disagrees");
  }
  return result;
}

}  // namespace df
