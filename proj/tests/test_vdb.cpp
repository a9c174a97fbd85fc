#include "doctest.h"
#include "dualbent/constructions.hpp"

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

}  // namespace

TEST_CASE("GF(4) product is vectorial dual-bent with Condition A") {
  auto F = gf4_product();
  auto a = analyze_vdb(F);
  CHECK(a.cert.is_vectorial_bent);
  CHECK(a.cert.is_vectorial_dual_bent);
  REQUIRE(a.vdual);
  for (Index c = 1; c < 4; ++c) CHECK(a.report.spectra[c].dual->values == component(a.vdual->dual, a.vdual->sigma[c]).values);
  auto cert = check_condition_a(F, a);
  CHECK(cert.condition_a);
  CHECK(cert.eps == UnitTag::PlusOne);
  CHECK(check_preimage_identity(F, a));
}

TEST_CASE("a non-bent vectorial function is rejected") {
  auto dom = SpaceDesc::standard(2, {2, 2});
  auto cod = SpaceDesc::standard(2, {2});
  std::vector<std::uint32_t> v(16);
  for (Index x = 0; x < 16; ++x) v[x] = static_cast<std::uint32_t>(x & 3);
  auto a = analyze_vdb(VFunc(dom, cod, v));
  CHECK_FALSE(a.cert.is_vectorial_bent);
  CHECK_FALSE(a.cert.condition_a);
}

TEST_CASE("Condition A shape preconditions") {
  auto dom = SpaceDesc::standard(3, {3});
  auto cod = SpaceDesc::standard(3, {1});
  VFunc F(dom, cod, std::vector<std::uint32_t>(27, 0));
  CHECK_THROWS_AS(check_condition_a(F), PreconditionError);
  CHECK_THROWS_AS(VFunc(dom, cod, std::vector<std::uint32_t>(27, 3)), PreconditionError);
}

TEST_CASE("Maiorana-McFarland trace monomials over F_3^4 satisfy Condition A") {
  for (unsigned d : {5u, 7u}) {
    auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=" + std::to_string(d)));
    auto cert = check_condition_a(F);
    CHECK(cert.condition_a);
    CHECK(cert.sigma_identity);
  }
}

TEST_CASE("quadratic component signs follow the quadratic character of alpha c") {
  for (std::string alpha : {"0", "1"}) {
    auto id = ConstructionId::parse("cor5_quadratic:p=3;n=6;m=2;alpha=" + alpha);
    auto F = instantiate(id);
    auto a = analyze_vdb(F);
    REQUIRE(a.cert.is_vectorial_dual_bent);
    CHECK_FALSE(a.cert.sigma_identity);
    CHECK_FALSE(a.cert.condition_a);
    CHECK(is_even(F));
    CHECK(is_scalar_invariant(F));
    SubfieldMap emb(make_field(3, 6), make_field(3, 2));
    const auto& big = emb.big();
    const Index al = big.exp(std::stoul(alpha));
    for (Index c = 1; c < 9; ++c) {
      // (-1)^{n-1} xi^n = (-1)(i^6) = +1, so eps = eta(alpha c)
      int eta = big.quadratic_character(big.mul(al, emb.to_big(c)));
      REQUIRE(a.cert.component_eps[c]);
      CHECK(*a.cert.component_eps[c] == unit_from_sign(eta));
    }
    CHECK(check_preimage_identity(F, a));
    auto ic = check_image_cardinality(F, a);
    CHECK(ic.holds);
    CHECK(ic.expected == 9);
  }
}

TEST_CASE("image cardinality drops by one when every eps at zero is -1") {
  // p = 3, n = 4, m = 2: (-1)^3 i^4 eta(alpha c) = -1 for alpha a square
  auto F = instantiate(ConstructionId::parse("cor5_quadratic:p=3;n=4;m=2;alpha=0"));
  auto a = analyze_vdb(F);
  REQUIRE(a.cert.is_vectorial_dual_bent);
  auto ic = check_image_cardinality(F, a);
  CHECK(ic.all_eps0_minus_one);
  CHECK(ic.expected == 8);
  CHECK(ic.image_size == 8);
  CHECK(ic.holds);
  auto G = instantiate(ConstructionId::parse("cor5_quadratic:p=3;n=4;m=2;alpha=1"));
  auto ic2 = check_image_cardinality(G);
  CHECK_FALSE(ic2.all_eps0_minus_one);
  CHECK(ic2.expected == 9);
  CHECK(ic2.holds);
}

TEST_CASE("n odd: dual components need not follow a linear sigma") {
  auto F = instantiate(ConstructionId::parse("cor5_quadratic:p=3;n=9;m=3;alpha=0"));
  auto a = analyze_vdb(F);
  REQUIRE(a.vdual);
  CHECK(a.cert.is_vectorial_dual_bent);
  CHECK_FALSE(a.cert.sigma_identity);
  for (Index c = 1; c < 27; ++c) {
    auto G = component(a.vdual->dual, a.vdual->sigma[c]);
    CHECK(G.values == a.report.spectra[c].dual->values);
  }
}
