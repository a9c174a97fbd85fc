#include <random>

#include "doctest.h"
#include "dualbent/constructions.hpp"
#include "dualbent/scheme.hpp"

using namespace dualbent;

TEST_CASE("direct and transform routes give the same tensor") {
  for (auto id : {"mm_trace_monomial:p=3;k=2;m=2;d=5", "cor5_quadratic:p=3;n=4;m=2;alpha=1",
                  "mm_trace_monomial:p=2;k=2;m=2;d=1"}) {
    auto F = instantiate(ConstructionId::parse(id));
    auto sets = punctured_preimage_sets(F);
    std::vector<std::vector<Index>> classes;
    for (auto& s : sets)
      if (!s.empty()) classes.push_back(s);
    auto a = build_translation_scheme(*F.domain, classes, SchemeRoute::Direct);
    auto b = build_translation_scheme(*F.domain, classes, SchemeRoute::Transform);
    CHECK(a.is_scheme);
    CHECK(b.is_scheme);
    CHECK(a.tensor == b.tensor);
  }
}

TEST_CASE("Condition A tensor matches the closed form") {
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  auto s = build_scheme_from_function(F);
  REQUIRE(s.is_scheme);
  CHECK(s.d() == 9);
  CHECK(s.tensor == expected_intersection_numbers(3, 4, 2, 1, F.values[0], s.labels));
  auto ev = check_amorphy(*F.domain, s, 1, 10);
  CHECK(ev.pds_typing_uniform);
  CHECK(ev.uniform_type == PdsType::Latin);
  CHECK(ev.fusion_samples_passed == ev.fusion_samples_run);
}

TEST_CASE("two-class scheme from a PDS and its complement") {
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  auto sets = punctured_preimage_sets(F);
  std::vector<Index> rest;
  for (Index i = 1; i < sets.size(); ++i) rest.insert(rest.end(), sets[i].begin(), sets[i].end());
  auto s = build_translation_scheme(*F.domain, {sets[0], rest});
  CHECK(s.is_scheme);
  CHECK_THROWS_AS(check_amorphy(*F.domain, s, 0), PreconditionError);
}

TEST_CASE("random partitions are rejected and malformed partitions throw") {
  auto V = SpaceDesc::dot(2, 4);
  std::mt19937_64 rng(11);
  int accepted = 0;
  for (int t = 0; t < 50; ++t) {
    std::vector<std::vector<Index>> parts(3);
    for (Index x = 1; x < 16; ++x) parts[x % 3 == 0 ? 0 : rng() % 3].push_back(x);
    bool empty = false;
    for (auto& p : parts) empty = empty || p.empty();
    if (empty) continue;
    accepted += build_translation_scheme(*V, parts).is_scheme;
  }
  CHECK(accepted < 5);
  CHECK_THROWS_AS(build_translation_scheme(*V, {{1, 2}, {2, 3}}), PreconditionError);
  auto W = SpaceDesc::standard(3, {2});
  std::vector<Index> rest;
  for (Index x = 2; x < 9; ++x) rest.push_back(x);
  CHECK_THROWS_AS(build_translation_scheme(*W, {{1}, rest}), PreconditionError);
}

TEST_CASE("fiber condition on quadratic and composite constructions") {
  for (auto id : {"cor5_quadratic:p=3;n=6;m=2;alpha=0",
                  "cor6_composite:p=3;r1=2;r2=2;m=2;alpha1=0;alpha2=0;alpha3=0;beta=0;gamma=0;L=0"}) {
    auto F = instantiate(ConstructionId::parse(id));
    auto a = analyze_vdb(F);
    auto r = check_fiber_condition(F, a);
    CHECK(r.holds);
    CHECK(r.scheme.is_scheme);
    CHECK(r.scheme.d() == 9);
  }
}
