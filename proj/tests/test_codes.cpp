#include <random>
#include <set>

#include "doctest.h"
#include "dualbent/codes.hpp"
#include "dualbent/constructions.hpp"

using namespace dualbent;

TEST_CASE("projective reduction") {
  auto B = SpaceDesc::dot(2, 4);
  std::vector<Index> D = {3, 5, 9};
  auto r = projective_reduce(*B, D);
  CHECK(r.reps == D);
  CHECK(r.scalar_closed);
  auto T = SpaceDesc::standard(3, {1, 1});
  const Index a = 5;  // (2, 1)
  std::vector<Index> pair = {a, T->scale(2, a)};
  auto r3 = projective_reduce(*T, pair);
  REQUIRE(r3.reps.size() == 1);
  CHECK(T->digits(r3.reps[0])[0] == 1);
  CHECK(r3.scalar_closed);
  std::vector<Index> single = {a};
  CHECK_FALSE(projective_reduce(*T, single).scalar_closed);
  CHECK_THROWS_AS(projective_reduce(*T, std::vector<Index>{0, 1}), PreconditionError);
  CHECK_THROWS_AS(weight_distribution(*T, pair), PreconditionError);
}

TEST_CASE("code of a 2-dimensional subspace of V_4^(2)") {
  auto V = SpaceDesc::dot(2, 4);
  std::vector<Index> D = {1, 2, 3};
  auto c = check_two_weight_projective(*V, D);
  CHECK(c.length == 3);
  CHECK(c.rank == 2);
  CHECK(c.distribution == WeightDistribution{{0, 4}, {2, 12}});
  CHECK_FALSE(c.two_weight);
}

TEST_CASE("direct and transform weight distributions agree") {
  std::mt19937_64 rng(9);
  for (auto V : {SpaceDesc::dot(2, 8), SpaceDesc::standard(3, {2, 2}), SpaceDesc::standard(5, {3})}) {
    for (int t = 0; t < 20; ++t) {
      std::set<Index> reps;
      for (int j = 0; j < 30; ++j) {
        Index x = 1 + rng() % (V->size() - 1);
        reps.insert(projective_canonical(*V, x));
      }
      std::vector<Index> R(reps.begin(), reps.end());
      CHECK(weight_distribution_direct(*V, R) == weight_distribution_transform(*V, R));
    }
  }
}

TEST_CASE("PDS and two-weight codes agree on scalar-closed sets of V_4^(3)") {
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  const auto& V = *F.domain;
  auto classes = punctured_preimage_sets(F);
  std::mt19937_64 rng(21);
  int tested = 0, positives = 0;
  while (tested < 100) {
    std::vector<Index> D;
    if (tested % 2 == 0) {
      for (auto& cl : classes)
        if (rng() % 2) D.insert(D.end(), cl.begin(), cl.end());
    } else {
      for (Index x = 1; x < V.size(); ++x)
        if (projective_canonical(V, x) == x && rng() % 2)
          for (unsigned a = 1; a < 3; ++a) D.push_back(V.scale(a, x));
    }
    std::sort(D.begin(), D.end());
    if (D.empty() || D.size() == V.size() - 1) continue;
    auto code = check_two_weight_projective(V, D);
    if (code.rank < V.dimension()) continue;  // degenerate codes are outside the equivalence
    ++tested;
    auto pds = check_pds(V, D);
    REQUIRE(pds.has_value() == code.two_weight);
    if (pds) {
      ++positives;
      CHECK(params_of(*pds) ==
            pds_from_two_weight_code(3, 4, code.length, code.nonzero_weights[0], code.nonzero_weights[1]));
    }
  }
  CHECK(positives > 20);
}

TEST_CASE("Condition A code parameters") {
  auto a = condition_a_code_parameters(2, 12, 2, 1, false);
  CHECK(a.length == 1008);
  CHECK(a.w1 == 512);
  CHECK(a.w2 == 480);
  auto b = condition_a_code_parameters(2, 12, 2, 1, true);
  CHECK(b.length == 1071);
  CHECK(b.w1 == 544);
  CHECK(b.w2 == 512);
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=7"));
  auto sets = punctured_preimage_sets(F);
  for (Index i = 0; i < sets.size(); ++i) {
    auto c = check_two_weight_projective(*F.domain, sets[i]);
    auto e = condition_a_code_parameters(3, 4, 2, 1, i == F.values[0]);
    CHECK(c.scalar_closed);
    CHECK(matches_code_parameters(c, e));
    // n = 2m: classes other than F(0) are subspaces minus 0, w2 = 0
    CHECK(c.two_weight == (i == F.values[0]));
  }
}
