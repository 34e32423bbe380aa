#include "densityforge/density.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "densityforge/numbers.hpp"
#include "densityforge/subcount.hpp"

namespace df {

GlobalPlaceData GlobalPlaceData::parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad global datum JSON: ") +
                                e.what());
  }
  GlobalPlaceData out;
  try {
    out.q = doc.at("q").get<int>();
    for (const auto& pl : doc.at("places")) {
      LocalDatum d;
      d.deg = pl.value("deg", 1);
      const std::string kind = pl.at("kind").get<std::string>();
      if (kind == "split")
        d.kind = PlaceKind::Split;
      else if (kind == "inert")
        d.kind = PlaceKind::Inert;
      else
        throw std::invalid_argument("place kind must be split or inert");
      d.lambda = Partition::parse(pl.at("type").get<std::string>());
      if (d.deg < 1) throw std::invalid_argument("place degree must be >= 1");
      out.places.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad global datum JSON: ") +
                                e.what());
  }
  if (out.q < 2) throw std::invalid_argument("q must be at least 2");
  return out;
}

std::string GlobalPlaceData::to_json() const {
  nlohmann::json out_places = nlohmann::json::array();
  for (const auto& pl : places) {
    out_places.push_back(
        {{"deg", pl.deg},
         {"kind", pl.kind == PlaceKind::Split ? "split" : "inert"},
         {"type", pl.lambda.to_string()}});
  }
  nlohmann::json doc = {{"q", q}, {"places", std::move(out_places)}};
  return doc.dump();
}

IntPoly2 m_factor(int epsilon, int t) {
  if (epsilon != 1 && epsilon != -1)
    throw PreconditionViolated("epsilon must be +1 or -1");
  IntPoly2 out = IntPoly2::constant(1);
  for (int i = 0; i < t; ++i) {
    const BigInt sign = (epsilon < 0 && i % 2 == 1) ? 1 : -1;
    out = out * (IntPoly2::constant(1) + IntPoly2::monomial(i, 1, sign));
  }
  return out;
}

IntPoly2 den_split(const Partition& lambda) {
  IntPoly2 out;
  for (int a = 0; a <= lambda.size(); ++a) {
    const IntPoly2 coeff = IntPoly2::from_q_poly(sub_poly(a, lambda));
    out = out + coeff * IntPoly2::monomial(0, a, 1);
  }
  return out;
}

IntPoly2 den_inert(const Partition& lambda) {
  IntPoly2 out;
  for (int a = 0; a <= lambda.size(); ++a) {
    IntPoly2 coeff = subst_q_neg(IntPoly2::from_q_poly(sub_poly(a, lambda)));
    if (a % 2 == 1) coeff = IntPoly2() - coeff;
    out = out + coeff * IntPoly2::monomial(0, a, 1);
  }
  return out;
}

IntPoly2 den_local(PlaceKind kind, const Partition& lambda) {
  return kind == PlaceKind::Split ? den_split(lambda) : den_inert(lambda);
}

IntPoly2 den_eta_local(PlaceKind kind, const Partition& lambda) {
  return kind == PlaceKind::Split ? den_split(lambda)
                                  : subst_T_neg(den_inert(lambda));
}

IntPoly2 den_global(const GlobalPlaceData& data, bool eta_twist) {
  IntPoly2 out = IntPoly2::constant(1);
  for (const auto& pl : data.places) {
    IntPoly2 local = eta_twist ? den_eta_local(pl.kind, pl.lambda)
                               : den_local(pl.kind, pl.lambda);
    local = subst_q_pow(subst_T_pow(local, pl.deg), pl.deg);
    out = out * local;
  }
  return out;
}

int functional_defect(const GlobalPlaceData& data) {
  int total = 0;
  for (const auto& pl : data.places)
    if (pl.kind == PlaceKind::Inert) total += pl.lambda.size();
  return total % 2 == 0 ? 1 : -1;
}

IntPoly2 den_split_induction(int m, const Partition& lambda) {
  if (m < lambda.largest())
    throw PreconditionViolated("split induction needs m >= largest part");
  const IntPoly2 lower = den_split(insert_sorted(m - 1, lambda));
  return IntPoly2::monomial(0, 1, 1) * lower +
         subst_T_qpow_T(den_split(lambda), 1);
}

IntPoly2 den_inert_induction(int m, const Partition& lambda) {
  if (m < lambda.largest())
    throw PreconditionViolated("inert induction needs m >= largest part");
  const IntPoly2 lower = den_inert(insert_sorted(m - 1, lambda));
  return (IntPoly2() - IntPoly2::monomial(0, 1, 1)) * lower +
         subst_T_neg(subst_T_qpow_T(den_inert(lambda), 1));
}

IntPoly2 den_inert_weak_induction(int m, const Partition& lambda) {
  if (m < lambda.largest() + 1 || m < 2)
    throw PreconditionViolated(
        "weak inert induction needs m >= max(largest part + 1, 2)");
  const IntPoly2 lower = den_inert(insert_sorted(m - 2, lambda));
  return IntPoly2::monomial(0, 2, 1) * lower +
         (IntPoly2::constant(1) - IntPoly2::monomial(0, 1, 1)) *
             subst_T_neg(subst_T_qpow_T(den_inert(lambda), 1));
}

}  // namespace df
