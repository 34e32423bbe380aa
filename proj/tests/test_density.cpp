#include "doctest.h"

#include "densityforge/density.hpp"

using namespace df;

namespace {
IntPoly2 T() { return IntPoly2::monomial(0, 1, 1); }
IntPoly2 Q() { return IntPoly2::monomial(1, 0, 1); }
IntPoly2 one() { return IntPoly2::constant(1); }
IntPoly2 T2() { return IntPoly2::monomial(0, 2, 1); }
}  // namespace

TEST_CASE("m factors") {
  CHECK(m_factor(1, 0) == one());
  CHECK(m_factor(-1, 2) == one() + (Q() - one()) * T() - Q() * T2());
  CHECK(m_factor(1, 2) == one() - (Q() + one()) * T() + Q() * T2());
}

TEST_CASE("split densities") {
  CHECK(den_split(Partition({1})) == one() + T());
  CHECK(den_split(Partition({1, 1})) == one() + (Q() + one()) * T() + T2());
  CHECK(den_split(Partition({2})) == one() + T() + T2());
  CHECK(den_split(Partition()) == one());
}

TEST_CASE("inert densities") {
  CHECK(den_inert(Partition({1})) == one() - T());
  CHECK(den_inert(Partition({2})) == one() - T() + T2());
  CHECK(den_inert(Partition({1, 1})) == one() + (Q() - one()) * T() + T2());
}

TEST_CASE("twisted local densities") {
  CHECK(den_eta_local(PlaceKind::Inert, Partition({1})) == one() + T());
  CHECK(den_eta_local(PlaceKind::Split, Partition({1})) == one() + T());
  CHECK(den_eta_local(PlaceKind::Inert, Partition({2})) ==
        one() + T() + T2());
}

TEST_CASE("global densities") {
  GlobalPlaceData inert1{3, {{PlaceKind::Inert, 1, Partition({1})}}};
  CHECK(den_global(inert1, false) == one() - T());
  CHECK(den_global(inert1, true) == one() + T());

  GlobalPlaceData mixed{3,
                        {{PlaceKind::Inert, 1, Partition({1})},
                         {PlaceKind::Split, 2, Partition({1})}}};
  CHECK(den_global(mixed, false) == (one() - T()) * (one() + T2()));

  CHECK(den_global(GlobalPlaceData{3, {}}, false) == one());
}

TEST_CASE("functional defect") {
  CHECK(functional_defect(
            GlobalPlaceData{3, {{PlaceKind::Inert, 1, Partition({1})}}}) ==
        -1);
  CHECK(functional_defect(
            GlobalPlaceData{3, {{PlaceKind::Inert, 1, Partition({2})}}}) ==
        1);
  CHECK(functional_defect(
            GlobalPlaceData{3, {{PlaceKind::Split, 1, Partition({2, 1})}}}) ==
        1);
}

TEST_CASE("local functional equations") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& lam : enumerate_partitions(d)) {
      CHECK(reverse_T(den_split(lam), d) == den_split(lam));
      IntPoly2 flipped = den_inert(lam);
      if (d % 2 == 1) flipped = IntPoly2() - flipped;
      CHECK(reverse_T(den_inert(lam), d) == flipped);
    }
  }
}

TEST_CASE("induction formulas on hand values") {
  CHECK(den_inert_induction(1, Partition({1})) ==
        den_inert(Partition({1, 1})));
  CHECK(den_split_induction(2, Partition({1})) ==
        den_split(Partition({2, 1})));
  CHECK(den_split_induction(1, Partition()) == den_split(Partition({1})));
  CHECK(den_inert_weak_induction(2, Partition({1})) ==
        den_inert(Partition({2, 1})));
  CHECK(den_inert_weak_induction(2, Partition()) ==
        den_inert(Partition({2})));
  CHECK(den_inert_weak_induction(3, Partition({1, 1})) ==
        den_inert(Partition({3, 1, 1})));
}

TEST_CASE("induction preconditions") {
  CHECK_THROWS_AS(den_split_induction(1, Partition({2})),
                  PreconditionViolated);
  CHECK_THROWS_AS(den_inert_induction(1, Partition({2})),
                  PreconditionViolated);
  CHECK_THROWS_AS(den_inert_weak_induction(2, Partition({2})),
                  PreconditionViolated);
  CHECK_THROWS_AS(den_inert_weak_induction(1, Partition()),
                  PreconditionViolated);
}

TEST_CASE("constant terms are 1") {
  for (int d = 0; d <= 4; ++d)
    for (const auto& lam : enumerate_partitions(d)) {
      CHECK(den_split(lam).coeff(0, 0) == 1);
      CHECK(den_inert(lam).coeff(0, 0) == 1);
    }
}

TEST_CASE("place data JSON round trip") {
  const std::string text =
      R"({"q":3,"places":[{"deg":1,"kind":"inert","type":"1"},)"
      R"({"deg":2,"kind":"split","type":"2,1"}]})";
  const GlobalPlaceData g = GlobalPlaceData::parse_json(text);
  CHECK(g.q == 3);
  REQUIRE(g.places.size() == 2);
  CHECK(g.places[0].kind == PlaceKind::Inert);
  CHECK(g.places[1].lambda == Partition({2, 1}));
  CHECK(GlobalPlaceData::parse_json(g.to_json()).to_json() == g.to_json());
  CHECK_THROWS_AS(GlobalPlaceData::parse_json("{\"q\":3"),
                  std::invalid_argument);
  CHECK_THROWS_AS(GlobalPlaceData::parse_json(
                      R"({"q":3,"places":[{"deg":0,"kind":"inert","type":"1"}]})"),
                  std::invalid_argument);
}
