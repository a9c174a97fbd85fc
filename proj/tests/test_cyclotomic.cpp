#include <random>

#include "doctest.h"
#include "dualbent/cyclotomic.hpp"

using namespace dualbent;

TEST_CASE("ring reduction for p = 3") {
  CycInt a = CycInt::integer(3, 1) + CycInt::zeta_power(3, 1);
  CycInt b = CycInt::integer(3, 1) + CycInt::zeta_power(3, 2);
  CHECK(a * b == CycInt::integer(3, 1));
  CHECK(a + CycInt(3) == a);
  CHECK(CycInt::zeta_power(3, 3) == CycInt::integer(3, 1));
}

TEST_CASE("p = 2 degenerates to integers") {
  CHECK(CycInt::zeta_power(2, 1) == CycInt::integer(2, -1));
  CHECK((CycInt::integer(2, 3) * CycInt::integer(2, -4)).rational_value() == -12);
}

TEST_CASE("Gauss sums") {
  CycInt g3 = gauss_sum(3);
  CHECK(g3 == CycInt::zeta_power(3, 1) - CycInt::zeta_power(3, 2));
  CHECK(g3 * g3 == CycInt::integer(3, -3));
  for (unsigned p : {3u, 5u, 7u}) {
    CycInt g = gauss_sum(p);
    int eta_m1 = (p % 4 == 1) ? 1 : -1;
    CHECK(g * g == CycInt::integer(p, eta_m1 * static_cast<int>(p)));
    CHECK(g * g.conj() == CycInt::integer(p, p));
    CHECK(g.conj() == g * BigInt(eta_m1));
  }
  CHECK_THROWS_AS(gauss_sum(2), PreconditionError);
}

TEST_CASE("bent value matching") {
  auto m = match_bent_value(CycInt::integer(2, 4), 2, 4);
  REQUIRE(m);
  CHECK(m->tag == UnitTag::PlusOne);
  CHECK(m->j == 0);
  auto m2 = match_bent_value(CycInt::zeta_power(3, 2) * BigInt(3), 3, 2);
  REQUIRE(m2);
  CHECK(*m2 == BentMatch{UnitTag::PlusOne, 2});
  // Gauss sum itself for p = 3 mod 4 carries the square root of -1.
  auto m3 = match_bent_value(gauss_sum(3), 3, 1);
  REQUIRE(m3);
  CHECK(*m3 == BentMatch{UnitTag::PlusI, 0});
  auto m5 = match_bent_value(gauss_sum(5), 5, 1);
  REQUIRE(m5);
  CHECK(*m5 == BentMatch{UnitTag::PlusOne, 0});
  CHECK_FALSE(match_bent_value(CycInt::integer(3, 2), 3, 2));
}

TEST_CASE("bent candidates are distinct and round trip") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned n = 1; n <= 27; ++n) {
      if (p == 2 && n % 2) continue;
      std::vector<CycInt> seen;
      std::vector<UnitTag> tags;
      if (p == 2) tags = {UnitTag::PlusOne};
      else if (n % 2 == 0 || p % 4 == 1) tags = {UnitTag::PlusOne, UnitTag::MinusOne};
      else tags = {UnitTag::PlusI, UnitTag::MinusI};
      for (auto t : tags)
        for (unsigned j = 0; j < p; ++j) {
          CycInt v = bent_value(p, n, t, j);
          for (auto& s : seen) REQUIRE(s != v);
          seen.push_back(v);
          auto m = match_bent_value(v, p, n);
          REQUIRE(m);
          CHECK(*m == BentMatch{t, j});
          if (n <= 13) {
            BentMatcher bm(p, n);
            std::vector<std::int64_t> c;
            for (auto& x : v.coeffs()) c.push_back(x.convert_to<std::int64_t>());
            CHECK(bm.match(c) == m);
          }
        }
    }
  }
}

TEST_CASE("multiplication agrees with complex floating point") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-100, 100);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 250; ++t) {
      std::vector<std::int64_t> a(cyc_width(p)), b(cyc_width(p));
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      CycInt A = CycInt::from_canonical(p, a), B = CycInt::from_canonical(p, b);
      auto z = (A * B).to_complex(), e = A.to_complex() * B.to_complex();
      CHECK(std::abs(z - e) < 1e-9 * (1 + std::abs(e)));
      auto zc = A.conj().to_complex();
      CHECK(std::abs(zc - std::conj(A.to_complex())) < 1e-9 * (1 + std::abs(zc)));
    }
  }
}

TEST_CASE("unit tag algebra") {
  CHECK(unit_inverse(UnitTag::PlusI) == UnitTag::MinusI);
  CHECK(unit_inverse(UnitTag::MinusOne) == UnitTag::MinusOne);
  CHECK(unit_mul(UnitTag::PlusI, UnitTag::PlusI) == UnitTag::MinusOne);
  CHECK(parse_unit_tag("-i") == UnitTag::MinusI);
  CHECK(std::string(to_string(UnitTag::PlusOne)) == "+1");
}
