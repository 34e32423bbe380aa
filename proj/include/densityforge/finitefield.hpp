#ifndef DENSITYFORGE_FINITEFIELD_HPP
#define DENSITYFORGE_FINITEFIELD_HPP

#include <cstdint>
#include <vector>

namespace df {

/// GF(p^e) for an odd prime p, elements encoded as 0..p^e-1 (base-p digits
/// are the coefficients of the residue polynomial, constant term first).
/// The modulus is the lexicographically smallest monic irreducible of
/// degree e over GF(p), compared by coefficient sequence (c_0,...,c_{e-1}).
class FiniteField {
 public:
  FiniteField(int p, int e);

  int p() const { return p_; }
  int extension_degree() const { return e_; }
  int order() const { return order_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int inv(int a) const;
  int pow(int a, long long n) const;
  /// x -> x^{p^{e/2}}; the conjugation of the quadratic extension.
  /// Requires even extension degree.
  int conj(int a) const;

 private:
  size_t idx(int a, int b) const {
    return static_cast<size_t>(a) * order_ + b;
  }

  int p_, e_, order_;
  std::vector<int> modulus_;  // coefficients c_0..c_e of the monic modulus
  std::vector<int> add_, mul_, neg_, conj_;
};

bool is_prime(int n);

}  // namespace df

#endif
