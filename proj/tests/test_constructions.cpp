#include "doctest.h"
#include "dualbent/constructions.hpp"

using namespace dualbent;

TEST_CASE("construction ids round trip") {
  auto id = ConstructionId::parse("cor6_composite:p=3;r1=2;r2=2;m=2;L=0,z");
  CHECK(id.tag == "cor6_composite");
  CHECK(id.params.at("L") == "0,z");
  CHECK(ConstructionId::parse(id.to_string()).params == id.params);
  CHECK_THROWS_AS(instantiate(ConstructionId::parse("nope")), PreconditionError);
  CHECK_THROWS_AS(ConstructionId::parse("cor5_quadratic:p"), PreconditionError);
}

TEST_CASE("example 1 satisfies Condition A with eps = +1") {
  auto F = instantiate(example_id(1));
  CHECK(F.n() == 12);
  CHECK(F.m() == 2);
  auto cert = check_condition_a(F);
  CHECK(cert.condition_a);
  CHECK(cert.eps == UnitTag::PlusOne);
  CHECK(expected_properties(example_id(1)).expectations.at("condition_a") == "true");
}

TEST_CASE("example 4 is vectorial dual-bent but not Condition A") {
  auto F = instantiate(example_id(4));
  auto a = analyze_vdb(F);
  CHECK(a.cert.is_vectorial_dual_bent);
  CHECK_FALSE(a.cert.condition_a);
}

TEST_CASE("composite construction at reduced scale") {
  auto id = ConstructionId::parse("cor6_composite:p=3;r1=2;r2=2;m=2;alpha1=0;alpha2=2;alpha3=4;beta=0;gamma=1;L=0");
  auto F = instantiate(id);
  CHECK(F.n() == 6);
  auto a = analyze_vdb(F);
  CHECK(a.cert.is_vectorial_dual_bent);
  // eps_{F_c} = (-1)^{r1-1} xi^{r1} eta(alpha1 c) with r1 = 2, p = 3: eta(c) over GF(9)
  const auto& Fm = F.codomain->field(0);
  for (Index c = 1; c < 9; ++c) {
    REQUIRE(a.cert.component_eps[c]);
    CHECK(*a.cert.component_eps[c] == unit_from_sign(Fm.quadratic_character(c)));
  }
}

TEST_CASE("composite construction rejects bad parameters") {
  CHECK_THROWS_AS(instantiate(ConstructionId::parse("cor6_composite:p=3;r1=2;r2=2;m=2;alpha1=0;alpha2=1;alpha3=0;beta=0;gamma=0;L=0")),
                  PreconditionError);
  CHECK_THROWS_AS(instantiate(ConstructionId::parse("cor6_composite:p=3;r1=2;r2=2;m=2;beta=0;gamma=0;L=z")),
                  PreconditionError);
  CHECK_THROWS_AS(instantiate(ConstructionId::parse("cor5_quadratic:p=3;n=4;m=4")), PreconditionError);
}

TEST_CASE("example 5 is guarded at full scale") {
  CHECK_THROWS_AS(instantiate(example_id(5)), GuardError);
  auto s = expected_properties(example_id(5));
  CHECK(s.feasibility == "verify_reduced_only");
  auto F = instantiate(example5_reduced_id());
  CHECK(F.p() == 5);
  CHECK(F.n() == 6);
  CHECK(expected_properties(example5_reduced_id()).expectations.at("scheme_classes") == "25");
}
