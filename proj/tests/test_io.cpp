#include "doctest.h"
#include "dualbent/constructions.hpp"
#include "dualbent/io.hpp"
#include "dualbent/report.hpp"

using namespace dualbent;

TEST_CASE("function files round trip") {
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  auto text = format_function(F);
  CHECK(text.starts_with("p=3 n=4 m=2\n"));
  auto G = parse_function(text);
  CHECK(G.values == F.values);
  CHECK(G.domain->header() == F.domain->header());
  CHECK(format_function(G) == text);
}

TEST_CASE("custom codomain header is kept") {
  auto V = SpaceDesc::dot(2, 4);
  std::vector<std::uint32_t> vals(16);
  for (Index x = 0; x < 16; ++x) vals[x] = static_cast<std::uint32_t>(x % 4);
  VFunc F(V, SpaceDesc::dot(2, 2), vals);
  auto text = format_function(F);
  auto G = parse_function(text);
  CHECK(G.codomain->header() == F.codomain->header());
  CHECK(G.values == vals);
  auto P = parse_partition(format_partition(PartitionSpec::from_function(F)));
  CHECK(P.induced.values == vals);
}

TEST_CASE("parse errors carry line and column") {
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  auto text = format_function(F);
  SUBCASE("bad digit") {
    auto bad = text;
    auto at = bad.find('\n', bad.find('\n') + 1) + 1;  // first data row, line 3
    bad[at + 1] = '7';
    try {
      parse_function(bad);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(e.column == 2);
    }
  }
  SUBCASE("truncated") {
    auto bad = text.substr(0, text.size() - 3);
    CHECK_THROWS_AS(parse_function(bad), ParseError);
  }
  SUBCASE("header mismatch") {
    auto bad = "p=3 n=5 m=2\n" + text.substr(text.find('\n') + 1);
    try {
      parse_function(bad);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
  }
  SUBCASE("missing key") { CHECK_THROWS_AS(parse_function("q=3 n=4 m=2\nx\n"), ParseError); }
  SUBCASE("part index out of range") {
    auto P = format_partition(PartitionSpec::from_function(F));
    P.replace(P.rfind('\n', P.size() - 2) + 1, std::string::npos, "9\n");
    CHECK_THROWS_AS(parse_partition(P), ParseError);
  }
}

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("certificates serialize deterministically with integer strings") {
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  auto s1 = build_scheme_from_function(F);
  auto s2 = build_scheme_from_function(F);
  auto j = to_json(s1);
  CHECK(j.dump() == to_json(s2).dump());
  CHECK(j["tensor"][0].is_string());
  CHECK(scheme_classes_from_json(j) == s1.classes);
  CHECK(scheme_tensor_from_json(j) == s1.tensor);
  auto c = to_json(check_condition_a(F));
  CHECK(c["eps"] == "+1");
  CHECK(c["sigma_identity"] == true);
  CHECK(guard_levels()["fast_walsh"] == std::to_string(guard_limit(Guard::FastWalsh)));
}
