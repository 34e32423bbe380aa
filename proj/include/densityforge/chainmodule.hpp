#ifndef DENSITYFORGE_CHAINMODULE_HPP
#define DENSITYFORGE_CHAINMODULE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "densityforge/finitefield.hpp"
#include "densityforge/intpoly.hpp"
#include "densityforge/numbers.hpp"
#include "densityforge/partition.hpp"

namespace df {

inline constexpr uint64_t kDefaultEnumBound = 20000;

/// A submodule, canonically represented by its sorted element codes plus the
/// generator list discovered during the closure search.
struct Submodule {
  std::vector<uint64_t> elements;
  std::vector<uint64_t> generators;
  size_t card() const { return elements.size(); }
  bool contains(uint64_t x) const;
};

/// Torsion module of Jordan type lambda over the truncated chain ring
/// F[pi]/(pi^{lambda_1}), F = GF(q) (plain) or GF(q^2) (Hermitian).
/// Elements are encoded as mixed-radix codes over F-digits; coordinate i
/// holds the pi-adic coefficients of a series of length lambda_i.
///
/// The Hermitian flavor carries the diagonal pairing <e_i, e_j> =
/// delta_ij pi^{-lambda_i}, stored in O/pi^{lambda_1} via the identification
/// v -> pi^{lambda_1} v.
class ChainModule {
 public:
  static ChainModule plain(int q, const Partition& lambda);
  static ChainModule hermitian(int q, const Partition& lambda);

  const FiniteField& field() const { return *field_; }
  const Partition& type() const { return lambda_; }
  bool is_hermitian() const { return hermitian_; }
  /// Residue cardinality q of the base ring (field order is q or q^2).
  int base_q() const { return base_q_; }
  int dim() const { return dim_; }  // F-dimension = |lambda|
  uint64_t element_count() const { return size_; }

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t scalar_mul(int c, uint64_t a) const;
  uint64_t pi_mul(uint64_t a) const;
  /// True iff a = pi*x has a solution; writes one solution to *pre.
  bool pi_preimage(uint64_t a, uint64_t* pre) const;

  /// Pairing value as coefficients of O/pi^{lambda_1} (length lambda_1,
  /// constant term first).  Hermitian modules only.
  std::vector<int> pairing(uint64_t a, uint64_t b) const;
  bool pairing_is_zero(uint64_t a, uint64_t b) const;

  /// O-span of the given generators, sorted element codes.
  std::vector<uint64_t> span(const std::vector<uint64_t>& gens) const;
  /// Length over the module's own chain ring: log_{|F|} of a cardinality.
  int length_of(size_t card) const;

  /// Every submodule exactly once, sorted by (length, element codes).
  /// Throws SizeBound when the module exceeds the bound.
  std::vector<Submodule> enumerate_submodules(
      uint64_t bound = kDefaultEnumBound) const;

  /// Jordan type: conjugate of (dim I/pi I, dim pi I/pi^2 I, ...).
  Partition submodule_type(const Submodule& sub) const;
  /// Jordan type of outer/inner (inner must be contained in outer).
  Partition quotient_type(const Submodule& inner,
                          const Submodule& outer) const;
  /// Number of parts of the type of outer/inner, i.e. dim of
  /// outer / (inner + pi*outer).
  int t_of_quotient(const Submodule& inner, const Submodule& outer) const;

  Submodule perp(const Submodule& sub) const;
  bool is_isotropic(const Submodule& sub) const;

  /// Elements killed by pi, sorted.
  std::vector<uint64_t> socle_elements() const;

 private:
  ChainModule(std::shared_ptr<const FiniteField> field, Partition lambda,
              int base_q, bool hermitian);
  void decode(uint64_t code, int* digits) const;
  uint64_t encode(const int* digits) const;

  std::shared_ptr<const FiniteField> field_;
  Partition lambda_;
  int base_q_;
  bool hermitian_;
  int dim_;
  uint64_t size_;
  std::vector<int> offset_;  // digit offset per coordinate
};

/// Count of length-a submodules in the type-lambda module over GF(q).
/// Routes between full enumeration, echelon-pattern counting for
/// lambda = (1^n), and a layered closure count (with the self-duality of
/// the submodule lattice for a > |lambda|/2) when the module is too large
/// to enumerate in full.
BigInt count_submodules_of_length(int q, const Partition& lambda, int a,
                                  uint64_t full_bound = kDefaultEnumBound);

/// Number of length-a submodules, per the counting definition.
BigInt brute_sub_count(int q, const Partition& lambda, int a,
                       uint64_t bound = kDefaultEnumBound);

/// m^eps(q, t, T) = prod_{i=0}^{t-1} (1 - (eps*q)^i T), specialized at an
/// integer q.
IntPoly1 m_factor_at(const BigInt& q0, int epsilon, int t);

/// Split density polynomial at a concrete q: sum over chains I1 <= I2 of
/// T^{len(I1)+len(Q/I2)} m^+(q, t(I2/I1), T).
IntPoly1 brute_den_split(int q, const Partition& lambda,
                         uint64_t bound = kDefaultEnumBound);

/// Inert density polynomial at a concrete q: sum over isotropic I of
/// T^{2 len(I)} m^-(q, t(Iperp/I), T), over the Hermitian module.
IntPoly1 brute_den_inert(int q, const Partition& lambda,
                         uint64_t bound = kDefaultEnumBound);

/// Count of submodules of type mu in the type-lambda module (Hall number).
BigInt brute_hall(int q, const Partition& lambda, const Partition& mu,
                  uint64_t bound = kDefaultEnumBound);

}  // namespace df

#endif
