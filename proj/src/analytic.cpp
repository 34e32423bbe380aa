#include "densityforge/analytic.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace df {

namespace {

BigInt bigint_pow(const BigInt& base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

int cokernel_degree(const GlobalPlaceData& places) {
  int total = 0;
  for (const auto& pl : places.places) total += pl.lambda.size() * pl.deg;
  return total;
}

Parity flipped(Parity p) {
  return p == Parity::EtaM ? Parity::EtaM1 : Parity::EtaM;
}

SExp shifted_L_series(const std::vector<BigInt>& coeffs, int c, int slope) {
  SExp out;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    out.set(-2 * int(j) * slope, -2 * int(j) * c, Rational(coeffs[j]));
  }
  return out;
}

}  // namespace

CurveData CurveData::parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad curve JSON: ") + e.what());
  }
  CurveData out;
  try {
    const auto as_bigint = [](const nlohmann::json& v) {
      if (v.is_string()) return BigInt(v.get<std::string>());
      return BigInt(v.get<long long>());
    };
    out.q = doc.at("q").get<int>();
    out.deg_omega = doc.at("deg_omega").get<int>();
    for (const auto& v : doc.at("L_eta")) out.L_eta.push_back(as_bigint(v));
    for (const auto& v : doc.at("zeta_num"))
      out.zeta_num.push_back(as_bigint(v));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad curve JSON: ") + e.what());
  }
  out.validate();
  return out;
}

std::string CurveData::to_json() const {
  nlohmann::json l = nlohmann::json::array(), z = nlohmann::json::array();
  for (const auto& c : L_eta) l.push_back(c.str());
  for (const auto& c : zeta_num) z.push_back(c.str());
  return nlohmann::json{
      {"q", q}, {"deg_omega", deg_omega}, {"L_eta", l}, {"zeta_num", z}}
      .dump();
}

void CurveData::validate() const {
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("q must be an odd prime power >= 3");
  if (deg_omega < 0 || deg_omega % 2 != 0)
    throw std::invalid_argument("deg_omega must be a nonnegative even integer");
  if (int(L_eta.size()) != deg_omega + 1)
    throw std::invalid_argument("L_eta needs exactly deg_omega + 1 coefficients");
  if (L_eta[0] != 1) throw std::invalid_argument("L_eta must start with 1");
  for (int j = 0; j <= deg_omega; ++j) {
    // l_{d-j} = q^{d/2-j} l_j, cleared of negative exponents.
    const BigInt lhs = L_eta[size_t(deg_omega - j)] * bigint_pow(q, j);
    const BigInt rhs = L_eta[size_t(j)] * bigint_pow(q, deg_omega / 2);
    if (lhs != rhs)
      throw std::invalid_argument(
          "L_eta violates the functional equation at index " +
          std::to_string(j));
  }
  if (zeta_num.empty())
    throw std::invalid_argument("zeta_num must be nonempty");
}

BundleData BundleData::from_places(const CurveData& curve, int rank,
                                   GlobalPlaceData places) {
  BundleData out;
  out.rank = rank;
  out.deg = rank * curve.deg_omega - cokernel_degree(places);
  out.places = std::move(places);
  out.validate(curve);
  return out;
}

BundleData BundleData::parse_json(const CurveData& curve,
                                  const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad bundle JSON: ") + e.what());
  }
  BundleData out;
  try {
    out.rank = doc.at("rank").get<int>();
    if (doc.contains("places")) {
      out.places = GlobalPlaceData::parse_json(doc.at("places").dump());
    } else {
      out.places.q = curve.q;
    }
    if (doc.contains("deg"))
      out.deg = doc.at("deg").get<int>();
    else
      out.deg = out.rank * curve.deg_omega - cokernel_degree(out.places);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad bundle JSON: ") + e.what());
  }
  out.validate(curve);
  return out;
}

void BundleData::validate(const CurveData& curve) const {
  if (rank < 1) throw std::invalid_argument("bundle rank must be >= 1");
  if (places.q != curve.q)
    throw std::invalid_argument("place data q differs from curve q");
  if (d(curve) != cokernel_degree(places))
    throw std::invalid_argument(
        "d(E) = rank*deg_omega - deg must equal the total cokernel degree");
}

SExp L_eta_shift(const CurveData& curve, int c, int slope) {
  return shifted_L_series(curve.L_eta, c, slope);
}

SRat zeta_shift(const CurveData& curve, int c, int slope) {
  const SExp num = shifted_L_series(curve.zeta_num, c, slope);
  const SExp one = SExp::constant(1);
  // (1 - q^{-(slope s + c)}) (1 - q^{1 - (slope s + c)})
  const SExp f1 = one - SExp::q_power(-2 * c, -2 * slope);
  const SExp f2 = one - SExp::q_power(2 - 2 * c, -2 * slope);
  return SRat(WPoly::from_sexp(num), WPoly::from_sexp(f1 * f2));
}

SRat script_L(const CurveData& curve, int m, Parity parity) {
  if (m < 1) throw PreconditionViolated("script_L needs m >= 1");
  SRat out = SRat::one();
  for (int i = 1; i <= m; ++i) {
    const int chi_exp = parity == Parity::EtaM ? i : i + 1;
    if (chi_exp % 2 == 1)
      out = out * SRat(L_eta_shift(curve, i, 2));
    else
      out = out * zeta_shift(curve, i, 2);
  }
  return out;
}

SRat eisenstein_coeff(const CurveData& curve, const BundleData& bundle, int m,
                      Parity parity) {
  if (bundle.rank != m)
    throw PreconditionViolated("eisenstein_coeff needs rank(E) = m");
  bundle.validate(curve);
  const int d = bundle.d(curve);
  // q^{(s - m/2) d(E)} q^{-ms deg_omega}
  const SExp prefactor =
      SExp::monomial(2 * d - 2 * m * curve.deg_omega, -m * d, 1);
  const IntPoly2 den = den_global(bundle.places, parity == Parity::EtaM1);
  const SExp density = from_density(den, 0, -4);  // T -> q^{-2s}
  return SRat(prefactor * density) / script_L(curve, m, parity);
}

SRat lambda_fn(const CurveData& curve, const BundleData& bundle) {
  bundle.validate(curve);
  const int d = bundle.d(curve);
  const SExp density =
      from_density(den_global(bundle.places, true), 2, 4);  // T -> q^{2s+1}
  return SRat(SExp::monomial(-2 * d, 0, 1) * L_eta_shift(curve, 0, -2) *
              density);
}

SRat lambda_eisenstein_route(const CurveData& curve,
                             const BundleData& bundle) {
  const int n = bundle.rank + 1;
  const int d = bundle.d(curve);
  const SExp prefactor =
      SExp::monomial(2 * (n + 1) * curve.deg_omega,
                     n * d + n * curve.deg_omega, 1);
  return SRat(prefactor) * script_L(curve, n, Parity::EtaM) *
         eisenstein_coeff(curve, bundle, n - 1, Parity::EtaM1).shift_s_half();
}

QRatFun key_degree_rhs(const CurveData& curve, const BundleData& bundle,
                       int d0, int r) {
  if (r % 2 == 1) return QRatFun();
  bundle.validate(curve);
  const int d = bundle.d(curve);
  const SExp density =
      from_density(den_global(bundle.places, true), 2, -4);  // T -> q^{1-2s}
  const SExp integrand =
      SExp::monomial(2 * (d0 + d), 0, 1) * L_eta_shift(curve, 0, 2) * density;
  return normalized_derivative(SRat(integrand), r).scaled(2);
}

QRatFun off_center_rhs(const CurveData& curve, const BundleData& bundle,
                       int e0_deg, int n, int r) {
  if (bundle.rank != n - 1)
    throw PreconditionViolated("off_center_rhs needs rank(E) = n - 1");
  if (r % 2 == 1) return QRatFun();
  const int d = bundle.d(curve);
  const SRat integrand =
      SRat(SExp::monomial(2 * (n * curve.deg_omega + e0_deg), 0, 1)) *
      script_L(curve, n, Parity::EtaM) *
      eisenstein_coeff(curve, bundle, n - 1, Parity::EtaM1).shift_s_half();
  return normalized_derivative(integrand, r)
      .times_x_pow(n * (d + curve.deg_omega))
      .scaled(2);
}

SRat singular_coeff_via_genus_drop(const CurveData& curve, int e0_deg,
                                   const BundleData& eflat, int m,
                                   Parity parity) {
  if (eflat.rank != m - 1)
    throw PreconditionViolated("genus drop needs rank(E-flat) = m - 1");
  // A(s) = q^{(m/2 + s) deg(E0)} q^{ms deg_omega} script_L(m, parity)
  //        * E-flat coefficient at s + 1/2.
  const SRat a =
      SRat(SExp::monomial(2 * e0_deg + 2 * m * curve.deg_omega, m * e0_deg,
                          1)) *
      script_L(curve, m, parity) *
      eisenstein_coeff(curve, eflat, m - 1, flipped(parity)).shift_s_half();
  const SRat symmetrized = a + a.negate_s();
  return symmetrized / (SRat(SExp::monomial(2 * m * curve.deg_omega, 0, 1)) *
                        script_L(curve, m, parity));
}

QRatFun corank_one_rhs(const CurveData& curve, int e0_deg,
                       const BundleData& eflat, int n, int r) {
  const int d_total = (curve.deg_omega - e0_deg) + eflat.d(curve);
  const SRat integrand =
      SRat(SExp::monomial(2 * n * curve.deg_omega, 0, 1)) *
      script_L(curve, n, Parity::EtaM) *
      singular_coeff_via_genus_drop(curve, e0_deg, eflat, n, Parity::EtaM);
  return normalized_derivative(integrand, r).times_x_pow(n * d_total);
}

std::pair<QRatFun, QRatFun> trace_identity_check(const CurveData& curve,
                                                 int deg_N, int eta_N,
                                                 int r) {
  const int r_sign = r % 2 == 0 ? 1 : -1;
  if (r_sign != eta_N)
    throw ParityMismatch(
        "the vanishing in the unmatched parity case rests on input this "
        "library does not model");
  Rational lhs = 0;
  for (size_t m = 0; m < curve.L_eta.size(); ++m) {
    Rational power = 1;
    for (int i = 0; i < r; ++i) power *= deg_N - 2 * int(m);
    lhs += 2 * Rational(curve.L_eta[m]) * power;
  }
  const SExp integrand =
      SExp::monomial(2 * deg_N, 0, 1) * L_eta_shift(curve, 0, 2);
  const QRatFun rhs = normalized_derivative(SRat(integrand), r).scaled(2);
  return {QRatFun(QPoly::constant(lhs)), rhs};
}

}  // namespace df
