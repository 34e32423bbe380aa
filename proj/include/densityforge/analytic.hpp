#ifndef DENSITYFORGE_ANALYTIC_HPP
#define DENSITYFORGE_ANALYTIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "densityforge/density.hpp"
#include "densityforge/srat.hpp"

namespace df {

/// L-function and zeta data of the double cover: L(s, eta) = P_eta(q^{-s})
/// with coefficient sequence L_eta of length deg_omega + 1, and
/// zeta_X(s) = P_X(q^{-s}) / ((1 - q^{-s})(1 - q^{1-s})).
struct CurveData {
  int q = 0;
  int deg_omega = 0;
  std::vector<BigInt> L_eta;
  std::vector<BigInt> zeta_num;

  static CurveData parse_json(const std::string& text);
  std::string to_json() const;
  /// Checks q, evenness of deg_omega, l_0 = 1, and the coefficient
  /// functional equation l_{d-j} q^j = l_j q^{d/2}; throws
  /// std::invalid_argument with a diagnostic.
  void validate() const;
};

/// A Hermitian bundle datum: rank and degree, with the cokernel of its
/// Hermitian map described by places.  d(E) = rank*deg_omega - deg.
struct BundleData {
  int rank = 1;
  int deg = 0;
  GlobalPlaceData places;  // may have an empty place list

  int d(const CurveData& curve) const { return rank * curve.deg_omega - deg; }
  /// Computes deg from the requirement d(E) = sum_v |lambda_v| deg_v.
  static BundleData from_places(const CurveData& curve, int rank,
                                GlobalPlaceData places);
  static BundleData parse_json(const CurveData& curve,
                               const std::string& text);
  /// Consistency: place data q matches the curve and d(E) equals the total
  /// cokernel degree.
  void validate(const CurveData& curve) const;
};

/// Which character pattern the chain of L-factors follows: chi0 = eta^m or
/// chi0 = eta^{m+1} relative to the rank m at hand.
enum class Parity { EtaM, EtaM1 };

/// L(slope*s + c, eta) = sum_j l_j q^{-j(slope*s + c)}.
SExp L_eta_shift(const CurveData& curve, int c, int slope);

/// zeta_X(slope*s + c) with its two geometric denominator factors.
SRat zeta_shift(const CurveData& curve, int c, int slope);

/// The completed L-chain: product over i = 1..m of L(2s + i, eta^e) with
/// e = i (Parity::EtaM) or e = i + 1 (Parity::EtaM1); even character
/// exponent resolves to zeta_X, odd to L(., eta).
SRat script_L(const CurveData& curve, int m, Parity parity);

/// Fourier coefficient of the rank-m Eisenstein series attached to E
/// (rank(E) must equal m):
///   q^{(s - m/2) d(E)} q^{-ms deg_omega} / script_L(m, parity)
///   times Den(q^{-2s}) (Parity::EtaM) or Den_eta(q^{-2s}) (Parity::EtaM1).
SRat eisenstein_coeff(const CurveData& curve, const BundleData& bundle, int m,
                      Parity parity);

/// Lambda(s, E) = q^{-s d(E)} L(-2s, eta) Den_eta(q^{2s+1}, E).
SRat lambda_fn(const CurveData& curve, const BundleData& bundle);

/// The Eisenstein-series route to Lambda (with n = rank + 1):
///   q^{(n/2) d} q^{[n/2 + (n+1)s] deg_omega} script_L(n, EtaM)
///   * eisenstein_coeff(bundle, n-1, EtaM1) at s + 1/2.
/// Mathematically equal to lambda_fn via the functional equations.
SRat lambda_eisenstein_route(const CurveData& curve,
                             const BundleData& bundle);

/// 2 * (d/ds normalized)^r at s = 0 of
///   q^{s(d0 + d(E))} L(2s, eta) Den_eta(q^{1-2s}, E);
/// exactly 0 for odd r (the theorem's odd case).
QRatFun key_degree_rhs(const CurveData& curve, const BundleData& bundle,
                       int d0, int r);

/// 2 q^{(n/2)[d(E) + deg_omega]} * (d/ds normalized)^r at s = 0 of
///   q^{ns deg_omega + s E0_deg} script_L(n, EtaM)
///   * eisenstein_coeff(bundle, n-1, EtaM1) at s + 1/2;
/// rank(bundle) must be n - 1; exactly 0 for odd r.
QRatFun off_center_rhs(const CurveData& curve, const BundleData& bundle,
                       int e0_deg, int n, int r);

/// Corank-one singular coefficient, defined through the genus-drop
/// identity: [A(s) + A(-s)] / (q^{ms deg_omega} script_L(m, parity)) with
///   A(s) = q^{(m/2 + s) deg(E0)} q^{ms deg_omega} script_L(m, parity)
///          * eisenstein_coeff(eflat, m-1, flipped parity) at s + 1/2.
SRat singular_coeff_via_genus_drop(const CurveData& curve, int e0_deg,
                                   const BundleData& eflat, int m,
                                   Parity parity);

/// q^{(n/2) d(E)} * (d/ds normalized)^r at s = 0 of
///   q^{ns deg_omega} script_L(n, EtaM) * singular coefficient,
/// where d(E) = (deg_omega - e0_deg) + d(eflat).  Computed genuinely for
/// every r; the integrand is even in s, so odd r yields exactly 0.
QRatFun corank_one_rhs(const CurveData& curve, int e0_deg,
                       const BundleData& eflat, int n, int r);

/// Both sides of the trace identity:
///   lhs = sum_m (-1)^m (deg_N - 2m)^r * 2 e_m  with  e_m = (-1)^m l_m,
///   rhs = 2 * (d/ds normalized)^r at s = 0 of q^{s deg_N} L(2s, eta).
/// Requires the matched parity (-1)^r = eta_N; otherwise ParityMismatch.
std::pair<QRatFun, QRatFun> trace_identity_check(const CurveData& curve,
                                                 int deg_N, int eta_N, int r);

}  // namespace df

#endif
