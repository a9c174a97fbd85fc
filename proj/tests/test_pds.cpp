#include <random>

#include "doctest.h"
#include "dualbent/constructions.hpp"
#include "dualbent/pds.hpp"

using namespace dualbent;

namespace {

std::vector<Index> symmetric_subset(const SpaceDesc& V, std::mt19937_64& rng, bool allow_zero) {
  std::bernoulli_distribution coin(0.5);
  std::vector<char> in(V.size(), 0);
  for (Index x = allow_zero ? 0 : 1; x < V.size(); ++x) {
    if (in[x] || in[V.neg(x)]) continue;
    if (coin(rng)) in[x] = in[V.neg(x)] = 1;
  }
  std::vector<Index> D;
  for (Index x = 0; x < V.size(); ++x)
    if (in[x]) D.push_back(x);
  return D;
}

}  // namespace

TEST_CASE("empty set is a PDS of both Latin types with s = 0") {
  auto V = SpaceDesc::dot(2, 4);
  auto c = check_pds(*V, {});
  REQUIRE(c);
  CHECK(params_of(*c) == PdsParams{16, 0, 0, 0});
  CHECK(c->typing.type == PdsType::Both);
  CHECK(c->typing.s == 0);
  CHECK(check_pds_bruteforce(*V, {}) == c);
}

TEST_CASE("all nonzero vectors of V_2^(2)") {
  auto V = SpaceDesc::dot(2, 2);
  std::vector<Index> D = {1, 2, 3};
  auto c = check_pds(*V, D);
  auto b = check_pds_bruteforce(*V, D);
  REQUIRE(c);
  REQUIRE(b);
  CHECK(c->k == 3);
  CHECK(c->lambda == 2);
  CHECK(*c == *b);
}

TEST_CASE("a pair {a, -a} over V_2^(3)") {
  auto V = SpaceDesc::standard(3, {2});
  std::vector<Index> D = {1, V->neg(1)};
  auto counts = difference_counts_bruteforce(*V, D);
  CHECK(counts[0] == 2);
  CHECK(counts[V->scale(2, 1)] == 1);
  // 2a = -a over F_3, so D is F_3^* a: a (9, 2, 1, 0) PDS
  auto c = check_pds(*V, D);
  REQUIRE(c);
  CHECK(params_of(*c) == PdsParams{9, 2, 1, 0});
  CHECK(*c == *check_pds_bruteforce(*V, D));
}

TEST_CASE("a subspace containing zero is a non-regular PDS") {
  auto V = SpaceDesc::standard(3, {1, 1, 1});
  std::vector<Index> W;
  for (Index x = 0; x < 9; ++x) W.push_back(x);  // first two coordinates
  auto c = check_pds(*V, W);
  REQUIRE(c);
  CHECK_FALSE(c->regular);
  CHECK(c->lambda == 9);
  CHECK(c->mu == 0);
  CHECK(*c == *check_pds_bruteforce(*V, W));
}

TEST_CASE("character route agrees with the double loop on random sets") {
  std::mt19937_64 rng(77);
  std::vector<SpacePtr> spaces = {SpaceDesc::dot(2, 6), SpaceDesc::standard(2, {6}), SpaceDesc::standard(3, {2, 2}),
                                  SpaceDesc::standard(5, {2})};
  for (auto& V : spaces)
    for (int t = 0; t < 200; ++t) {
      auto D = symmetric_subset(*V, rng, t % 4 == 0);
      auto a = check_pds(*V, D);
      auto b = check_pds_bruteforce(*V, D);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(*a == *b);
      CHECK(difference_counts(*V, D) == difference_counts_bruteforce(*V, D));
    }
}

TEST_CASE("preimage classes of a Condition A function match the closed-form parameters") {
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  auto sets = punctured_preimage_sets(F);
  for (Index i = 0; i < sets.size(); ++i) {
    auto c = check_pds(*F.domain, sets[i]);
    REQUIRE(c);
    CHECK(*c == *check_pds_bruteforce(*F.domain, sets[i]));
    CHECK(params_of(*c) == condition_a_pds_parameters(3, 4, 2, 1, i == F.values[0]));
    CHECK(c->typing.type == PdsType::Latin);
    CHECK(satisfies_counting_identity(params_of(*c)));
  }
}

TEST_CASE("Latin typing") {
  PdsCertificate c;
  c.v = 4096, c.k = 1008, c.lambda = 272, c.mu = 240, c.regular = true;
  auto t = classify_pds_type(c);
  CHECK(t.type == PdsType::Latin);
  CHECK(t.N == 64);
  CHECK(t.s == 16);
  c.k = 1071, c.lambda = 302, c.mu = 272;
  t = classify_pds_type(c);
  CHECK(t.type == PdsType::Latin);
  CHECK(t.s == 17);
  c.k = 1071, c.lambda = 318;
  CHECK(classify_pds_type(c).type == PdsType::None);
  // (81, 20, 1, 6) is negative Latin with N = 9, s = 2
  PdsCertificate n{81, 20, 1, 6, true, {}};
  t = classify_pds_type(n);
  CHECK(t.type == PdsType::NegativeLatin);
  CHECK(t.s == 2);
  // half-size sets can satisfy both templates
  PdsCertificate h{81, 40, 19, 20, true, {}};
  t = classify_pds_type(h);
  CHECK(t.type == PdsType::Both);
  CHECK(t.s == 5);
  CHECK(t.s_negative == 4);
}
