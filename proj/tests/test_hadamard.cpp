#include <random>

#include "doctest.h"
#include "dualbent/constructions.hpp"
#include "dualbent/hadamard.hpp"

using namespace dualbent;

namespace {

VFunc gf4_product() {
  auto dom = SpaceDesc::standard(2, {2, 2});
  auto cod = SpaceDesc::standard(2, {2});
  const auto& F = cod->field(0);
  std::vector<std::uint32_t> v(16);
  for (Index x = 0; x < 16; ++x) v[x] = static_cast<std::uint32_t>(F.mul(x & 3, x >> 2));
  return VFunc(dom, cod, std::move(v));
}

PFunc random_function(SpacePtr V, std::mt19937_64& rng) {
  std::vector<std::uint8_t> v(V->size());
  for (auto& x : v) x = static_cast<std::uint8_t>(rng() % V->p());
  return PFunc(V, std::move(v));
}

}  // namespace

TEST_CASE("zero function is not generalized Hadamard, x1 x2 is") {
  auto V = SpaceDesc::dot(2, 2);
  GHMatrix Z{PFunc(V, std::vector<std::uint8_t>(4, 0)), 0};
  auto r = check_generalized_hadamard(Z);
  CHECK_FALSE(r.is_generalized_hadamard);
  CHECK_FALSE(check_gh_by_matrix(Z));
  GHMatrix H{PFunc(V, {0, 0, 0, 1}), 0};
  CHECK(check_generalized_hadamard(H).is_generalized_hadamard);
  CHECK(check_gh_by_matrix(H));
  H.shift = 3;
  CHECK(check_gh_by_matrix(H));
}

TEST_CASE("bent iff generalized Hadamard on random functions") {
  std::mt19937_64 rng(17);
  int bent = 0;
  for (auto V : {SpaceDesc::dot(2, 4), SpaceDesc::standard(3, {2})}) {
    for (int t = 0; t < 100; ++t) {
      GHMatrix H{random_function(V, rng), 0};
      auto r = check_generalized_hadamard(H);
      REQUIRE(r.autocorrelation_route);
      CHECK(*r.autocorrelation_route == r.bent_route);
      bent += r.bent_route;
    }
  }
  MESSAGE("bent among random samples: " << bent);
}

TEST_CASE("GF(4) product: literal and Walsh product identities") {
  auto F = gf4_product();
  auto a = analyze_vdb(F);
  for (Index c = 1; c < 4; ++c) {
    CHECK(check_gh_by_matrix(component_matrix(F, c)));
    for (Index d = 1; d < 4; ++d) {
      if (c == d) {
        CHECK_THROWS_AS(check_product_identity(F, a, c, d), PreconditionError);
        continue;
      }
      auto r = check_product_identity(F, a, c, d);
      REQUIRE(r.matrix_route);
      CHECK(*r.matrix_route);
      CHECK(r.walsh_route);
      CHECK(r.factor == 4);
    }
  }
}

TEST_CASE("product identities over F_3^4 with eps = +1") {
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  auto a = analyze_vdb(F);
  auto u = check_unit_condition(F, a);
  CHECK(u.holds);
  CHECK(u.eps == UnitTag::PlusOne);
  for (Index c = 1; c < 9; ++c)
    for (Index d = 1; d < 9; ++d) {
      if (c == d) continue;
      auto r = check_product_identity(F, a, c, d);
      CHECK(r.holds);
      CHECK(r.factor == 9);
      CHECK(r.matrix_route == std::optional<bool>(true));
    }
}

TEST_CASE("mixed eps breaks the unit condition") {
  auto F = instantiate(example_id(4));
  auto a = analyze_vdb(F);
  CHECK(a.cert.all_weakly_regular);
  CHECK_FALSE(check_unit_condition(F, a).holds);
  auto r = check_product_identity(F, a, 1, 2);
  CHECK_FALSE(r.holds);
}

TEST_CASE("product identities with non-identity sigma fail") {
  // quadratic F = Tr(alpha x^2) on GF(81) -> GF(9) is vectorial dual-bent with sigma(c) = c^{-1}
  auto F = instantiate(ConstructionId::parse("cor5_quadratic:p=3;n=4;m=2;alpha=1"));
  auto a = analyze_vdb(F);
  REQUIRE(a.cert.is_vectorial_dual_bent);
  CHECK_FALSE(a.cert.sigma_identity);
  auto u = check_unit_condition(F, a);
  REQUIRE(u.holds);
  bool all = true;
  for (Index c = 1; c < 9; ++c)
    for (Index d = 1; d < 9; ++d)
      if (c != d) all = all && check_product_identity(F, a, c, d).holds;
  CHECK_FALSE(all);
}
