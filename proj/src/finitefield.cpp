#include "densityforge/finitefield.hpp"

#include <stdexcept>

namespace df {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(std::move(a));
  Poly mm = trim(m);
  while (a.size() >= mm.size() && !mm.empty()) {
    int lead = a.back();
    // mm is monic in every use below.
    size_t shift = a.size() - mm.size();
    for (size_t i = 0; i < mm.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * mm[i]) % p + p * p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

bool has_factor_of_degree(const Poly& m, int p, int deg) {
  // Brute trial division by all monic polynomials of the given degree;
  // fields here are tiny.
  long long count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly cand(static_cast<size_t>(deg) + 1, 0);
    long long c = code;
    for (int i = 0; i < deg; ++i) {
      cand[static_cast<size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    cand[static_cast<size_t>(deg)] = 1;
    if (poly_mod(m, cand, p).empty()) return true;
  }
  return false;
}

bool is_irreducible(const Poly& m, int p) {
  int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d)
    if (has_factor_of_degree(m, p, d)) return false;
  return true;
}

Poly smallest_irreducible(int p, int e) {
  if (e == 1) return {0, 1};  // x itself is unused; any degree-1 works
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    // Lexicographic order on (c_0, ..., c_{e-1}): c_0 is the most
    // significant position.
    Poly cand(static_cast<size_t>(e) + 1, 0);
    long long c = code;
    for (int i = e - 1; i >= 0; --i) {
      cand[static_cast<size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    cand[static_cast<size_t>(e)] = 1;
    if (is_irreducible(cand, p)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Poly decode(int code, int p, int e) {
  Poly out(static_cast<size_t>(e), 0);
  for (int i = 0; i < e; ++i) {
    out[static_cast<size_t>(i)] = code % p;
    code /= p;
  }
  return trim(std::move(out));
}

int encode(const Poly& a, int p, int e) {
  int out = 0;
  for (int i = e - 1; i >= 0; --i) {
    int c = static_cast<size_t>(i) < a.size() ? a[static_cast<size_t>(i)] : 0;
    out = out * p + c;
  }
  return out;
}

}  // namespace

FiniteField::FiniteField(int p, int e) : p_(p), e_(e) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("FiniteField: p must be an odd prime");
  if (e < 1) throw std::invalid_argument("FiniteField: e < 1");
  long long order = 1;
  for (int i = 0; i < e; ++i) order *= p;
  if (order > 1024)
    throw std::invalid_argument("FiniteField: order too large for tables");
  order_ = static_cast<int>(order);
  modulus_ = smallest_irreducible(p, e);

  add_.resize(static_cast<size_t>(order_) * order_);
  mul_.resize(static_cast<size_t>(order_) * order_);
  neg_.resize(static_cast<size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    Poly pa = decode(a, p, e);
    Poly na(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
    neg_[static_cast<size_t>(a)] = encode(na, p, e);
    for (int b = 0; b < order_; ++b) {
      Poly pb = decode(b, p, e);
      Poly sum(static_cast<size_t>(e), 0);
      for (int i = 0; i < e; ++i) {
        int ca = static_cast<size_t>(i) < pa.size() ? pa[static_cast<size_t>(i)] : 0;
        int cb = static_cast<size_t>(i) < pb.size() ? pb[static_cast<size_t>(i)] : 0;
        sum[static_cast<size_t>(i)] = (ca + cb) % p;
      }
      add_[idx(a, b)] = encode(sum, p, e);
      mul_[idx(a, b)] = encode(poly_mul_mod(pa, pb, modulus_, p), p, e);
    }
  }

  if (e % 2 == 0) {
    conj_.resize(static_cast<size_t>(order_));
    long long exp = 1;
    for (int i = 0; i < e / 2; ++i) exp *= p;
    for (int a = 0; a < order_; ++a)
      conj_[static_cast<size_t>(a)] = pow(a, exp);
  }
}

int FiniteField::pow(int a, long long n) const {
  if (n < 0) throw std::invalid_argument("FiniteField::pow: negative");
  int out = 1;
  int base = a;
  while (n > 0) {
    if (n & 1) out = mul(out, base);
    base = mul(base, base);
    n >>= 1;
  }
  return out;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::invalid_argument("FiniteField::inv: zero");
  return pow(a, static_cast<long long>(order_) - 2);
}

int FiniteField::conj(int a) const {
  if (conj_.empty())
    throw std::logic_error("FiniteField::conj: extension degree is odd");
  return conj_[static_cast<size_t>(a)];
}

}  // namespace df
