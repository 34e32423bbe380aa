#ifndef DENSITYFORGE_DENSITY_HPP
#define DENSITYFORGE_DENSITY_HPP

#include <string>
#include <vector>

#include "densityforge/intpoly.hpp"
#include "densityforge/partition.hpp"

namespace df {

enum class PlaceKind { Split, Inert };

/// One local factor of a global datum: a place of residue degree deg
/// (residue cardinality q^deg) carrying a torsion module of type lambda.
struct LocalDatum {
  PlaceKind kind = PlaceKind::Split;
  int deg = 1;
  Partition lambda;
};

/// Global input: base residue cardinality q plus the finitely many places
/// where the module is nontrivial.
struct GlobalPlaceData {
  int q = 0;
  std::vector<LocalDatum> places;

  static GlobalPlaceData parse_json(const std::string& text);
  std::string to_json() const;
};

/// m^eps(q, t, T) = prod_{i=0}^{t-1} (1 - (eps q)^i T) as a polynomial in
/// (q, T); epsilon is +1 or -1.
IntPoly2 m_factor(int epsilon, int t);

/// Split local density: Den^+(q, lambda, T) = sum_a Sub_{a,lambda}(q) T^a.
IntPoly2 den_split(const Partition& lambda);

/// Inert local density: Den^-(q, lambda, T)
///   = sum_a (-1)^a Sub_{a,lambda}(-q) T^a.
IntPoly2 den_inert(const Partition& lambda);

IntPoly2 den_local(PlaceKind kind, const Partition& lambda);

/// Twisted local density: T -> -T applied at inert places only; split
/// places are untouched.
IntPoly2 den_eta_local(PlaceKind kind, const Partition& lambda);

/// Global density: product over places of the local density with
/// q -> q^{deg} and T -> T^{deg}.
IntPoly2 den_global(const GlobalPlaceData& data, bool eta_twist = false);

/// Sign (-1)^{sum of |lambda_v| over inert places} entering the functional
/// equation of the global density.
int functional_defect(const GlobalPlaceData& data);

/// Induction in the largest part, split case (requires m >= lambda_1):
///   Den^+((m,lambda), T) = T Den^+((m-1,lambda), T) + Den^+(lambda, qT).
IntPoly2 den_split_induction(int m, const Partition& lambda);

/// Induction in the largest part, inert case (requires m >= lambda_1):
///   Den^-((m,lambda), T) = -T Den^-((m-1,lambda), T) + Den^-(lambda, -qT).
IntPoly2 den_inert_induction(int m, const Partition& lambda);

/// Weak inert induction (requires m >= lambda_1 + 1):
///   Den^-((m,lambda), T)
///     = T^2 Den^-((m-2,lambda), T) + (1 - T) Den^-(lambda, -qT).
IntPoly2 den_inert_weak_induction(int m, const Partition& lambda);

}  // namespace df

#endif
