// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// (tolerance 0); runtime budgets are printed next to the measured time.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "dualbent/constructions.hpp"
#include "dualbent/reproduce.hpp"

using namespace dualbent;

namespace {

std::int64_t as_int(const json& v) { return std::stoll(v.get<std::string>()); }

const json* find_check(const json& report, const std::string& name) {
  for (auto& c : report.at("checks"))
    if (c.at("name") == name) return &c;
  return nullptr;
}

bool check_passed(const json& report, const std::string& name) {
  auto c = find_check(report, name);
  return c && c->at("passed").get<bool>();
}

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<bool(std::string&)> run;
};

// Parseval, inverse transform and dual-of-dual on every spectrum passed through.
struct Audit {
  std::int64_t spectra = 0, dual_checks = 0, failures = 0;
  void operator()(const PFunc& f) {
    auto w = walsh_fast(f);
    ++spectra;
    if (!check_parseval(w) || !check_inverse_transform(f, w)) ++failures;
    auto s = classify_bent(f);
    if (!s.weakly_regular()) return;
    ++dual_checks;
    auto s2 = classify_bent(*s.dual);
    if (!s2.bent || !s2.weakly_regular() || *s2.global_eps != unit_inverse(*s.global_eps)) {
      ++failures;
      return;
    }
    for (Index x = 0; x < f.space->size(); ++x)
      if (s2.dual->values[x] != f.values[f.space->neg(x)]) {
        ++failures;
        return;
      }
  }
  void components(const VFunc& F) {
    for (Index c = 1; c < F.codomain->size(); ++c) (*this)(component(F, c));
  }
};

Audit audit;

PFunc random_function(SpacePtr V, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, V->p() - 1);
  std::vector<std::uint8_t> v(V->size());
  for (auto& x : v) x = static_cast<std::uint8_t>(d(rng));
  return PFunc(V, std::move(v));
}

// Parts are unions of the Desarguesian spread {(x, a x)}, {(0, y)} of GF(2^k)^2;
// slope a goes to part g[a], the vertical element and 0 to part 0.
PartitionSpec spread_partition(unsigned k, unsigned m, const std::vector<std::uint32_t>& g) {
  auto V = SpaceDesc::standard(2, {k, k});
  const auto& K = V->field(0);
  std::vector<std::uint32_t> vals(V->size());
  for (Index z = 0; z < V->size(); ++z) {
    Index x = V->slice(z, 0), y = V->slice(z, 1);
    vals[z] = x == 0 ? 0 : g[K.mul(y, K.inv(x))];
  }
  return PartitionSpec::from_function(VFunc(V, SpaceDesc::dot(2, m), std::move(vals)));
}

std::vector<std::uint32_t> slope_assignment(unsigned k, unsigned m, std::mt19937_64& rng) {
  const std::uint32_t K = 1u << m, q = 1u << k;
  // q / K slopes per part; part 0 also holds the vertical element
  std::vector<std::uint32_t> g;
  for (std::uint32_t i = 0; i < K; ++i) g.insert(g.end(), q / K, i);
  std::shuffle(g.begin(), g.end(), rng);
  return g;
}

bool c1(std::string& note) {
  auto r = reproduce("example1", 1).to_json();
  bool ok = check_passed(r, "condition_a") && find_check(r, "condition_a")->at("certificate").at("eps") == "+1";
  // (b) PDS parameters, s in {16, 17}, equal to the closed forms
  std::set<std::int64_t> s_values;
  for (auto& e : find_check(r, "pds")->at("certificate")) {
    ok = ok && e.at("is_pds").get<bool>() && e.at("type") == "latin" && e.at("N") == "64";
    s_values.insert(as_int(e.at("s")));
    const bool zero = e.at("class") == "0";
    const std::vector<std::string> want =
        zero ? std::vector<std::string>{"4096", "1071", "302", "272"} : std::vector<std::string>{"4096", "1008", "272", "240"};
    ok = ok && std::vector<std::string>{e.at("v"), e.at("k"), e.at("lambda"), e.at("mu")} == want;
  }
  ok = ok && s_values == std::set<std::int64_t>{16, 17} && check_passed(r, "pds");
  // (c) four classes, uniform Latin typing
  auto& sc = find_check(r, "scheme")->at("certificate");
  ok = ok && check_passed(r, "scheme") && sc.at("scheme").at("d") == "4" && sc.at("amorphy").at("uniform_type") == "latin";
  // (d) codes
  for (auto& e : find_check(r, "codes")->at("certificate")) {
    const bool zero = e.at("class") == "0";
    auto w = e.at("nonzero_weights");
    const std::vector<std::string> want = zero ? std::vector<std::string>{"512", "544"} : std::vector<std::string>{"480", "512"};
    ok = ok && e.at("two_weight").get<bool>() && std::vector<std::string>(w.begin(), w.end()) == want;
  }
  ok = ok && check_passed(r, "codes");
  // (e) three unordered pairs with factor 64
  auto& h = find_check(r, "hadamard")->at("certificate");
  std::size_t pairs = 0;
  for (auto& e : h) pairs += e.at("holds").get<bool>() && e.at("factor") == "64";
  ok = ok && pairs == 3 && h.size() == 3;
  note = "s={16,17}, 4 classes latin, codes {480,512}/{512,544}, " + std::to_string(pairs) + "/3 products x64";
  audit.components(instantiate(example_id(1)));
  return ok;
}

bool c2(std::string& note) {
  auto r = reproduce("example2", 1).to_json();
  bool ok = check_passed(r, "condition_a") && find_check(r, "condition_a")->at("certificate").at("eps") == "+1";
  auto& h = find_check(r, "hadamard")->at("certificate");
  std::size_t good = 0;
  for (auto& e : h) good += e.at("walsh_route").get<bool>() && e.at("factor") == "729";
  ok = ok && h.size() == 56 && good == 56;
  note = std::to_string(good) + "/56 ordered pairs with factor 729 over 3^12 points";
  return ok;
}

bool c3(std::string& note) {
  auto r = reproduce("example3", 1).to_json();
  auto& cert = find_check(r, "bent_partition")->at("certificate");
  std::vector<std::string> spec(cert.at("spectrum").begin(), cert.at("spectrum").end());
  const bool ok = check_passed(r, "bent_partition") && cert.at("is_bent_partition").get<bool>() &&
                  spec == std::vector<std::string>{"-256", "768"};
  note = "spectrum {" + (spec.empty() ? std::string() : spec.front() + "," + spec.back()) + "} over 2^20 points";
  return ok;
}

bool c4(std::string& note) {
  auto r = reproduce("example4", 1).to_json();
  auto& f = find_check(r, "fiber_scheme")->at("certificate").at("fiber");
  const bool ok = check_passed(r, "fiber_scheme") && f.at("holds").get<bool>() && f.at("scheme").at("d") == "9" &&
                  f.at("scheme").at("route") == "direct" && f.at("scheme").at("tensor").size() == 1000;
  note = "fiber condition holds, 9 classes, full 10^3 tensor by direct count";
  return ok;
}

bool c5(std::string& note) {
  auto r = reproduce("example5-reduced", 1).to_json();
  bool ok = true;
  for (const char* name : {"cor6_p3_r2_r2", "cor6_p3_r4_r2"}) {
    auto c = find_check(r, name);
    ok = ok && c && c->at("passed").get<bool>() && c->at("certificate").at("fiber").at("scheme").at("d") == "9";
  }
  auto c = find_check(r, "cor5_p3_n9_m3");
  ok = ok && c && c->at("passed").get<bool>() && c->at("certificate").at("fiber").at("scheme").at("d") == "27";
  std::size_t points = 0;
  if (c)
    for (auto& cls : c->at("certificate").at("fiber").at("scheme").at("classes")) points += cls.size();
  ok = ok && points == 19683;
  note = "cor6 (3,2,2,2), (3,4,2,2): 9 classes; cor5 (3,9,3): 27 classes over " + std::to_string(points) + " points";
  return ok;
}

bool c6(std::string& note) {
  std::mt19937_64 rng(6);
  std::int64_t walsh_cases = 0, walsh_bad = 0, pds_cases = 0, pds_bad = 0, part_cases = 0, part_bad = 0;
  for (auto V : {SpaceDesc::standard(2, {6, 6}), SpaceDesc::standard(3, {3, 4}), SpaceDesc::standard(5, {2, 3}),
                 SpaceDesc::standard(7, {2, 2})}) {
    for (int t = 0; t < 50; ++t) {
      auto f = random_function(V, rng);
      walsh_bad += !(walsh_fast(f) == walsh_naive(f));
      ++walsh_cases;
      audit(f);
    }
  }
  std::vector<SpacePtr> pds_spaces = {SpaceDesc::dot(2, 8), SpaceDesc::standard(2, {6, 6}), SpaceDesc::standard(3, {2, 2}),
                                      SpaceDesc::standard(3, {7}), SpaceDesc::standard(5, {2, 2})};
  for (int t = 0; t < 200; ++t) {
    auto& V = *pds_spaces[t % pds_spaces.size()];
    std::bernoulli_distribution coin(t % 3 == 0 ? 0.5 : 0.1);
    std::vector<Index> D;
    for (Index x = 1; x < V.size(); ++x)
      if (x <= V.neg(x) && coin(rng)) {
        D.push_back(x);
        if (V.neg(x) != x) D.push_back(V.neg(x));
      }
    std::sort(D.begin(), D.end());
    pds_bad += check_pds(V, D) != check_pds_bruteforce(V, D);
    ++pds_cases;
  }
  // spectral criterion against definitional enumeration, p = 2
  std::vector<PartitionSpec> parts;
  for (int t = 0; t < 20; ++t) parts.push_back(spread_partition(3, 2, slope_assignment(3, 2, rng)));
  for (int t = 0; t < 10; ++t) parts.push_back(spread_partition(4, 2, slope_assignment(4, 2, rng)));
  for (int t = 0; t < 10; ++t) parts.push_back(spread_partition(4, 3, slope_assignment(4, 3, rng)));
  for (int t = 0; t < 20; ++t) {
    auto G = spread_partition(3, 2, slope_assignment(3, 2, rng));
    auto& v = G.induced.values;
    Index a = 1 + rng() % (v.size() - 1), b = 1 + rng() % (v.size() - 1);
    std::swap(v[a], v[b]);
    parts.push_back(G);
  }
  for (auto& G : parts) {
    part_bad += check_bent_partition_p2(G).is_bent_partition != check_bent_partition_direct(G).is_bent_partition;
    ++part_cases;
  }
  // p = 3: Condition C implies the definitional property
  for (const char* id : {"mm_trace_monomial:p=3;k=2;m=2;d=5", "mm_trace_monomial:p=3;k=2;m=2;d=7",
                         "cor5_quadratic:p=3;n=4;m=2;alpha=0", "cor5_quadratic:p=3;n=4;m=2;alpha=1"}) {
    auto F = instantiate(ConstructionId::parse(id));
    audit.components(F);
    auto G = PartitionSpec::from_function(F);
    auto c = check_condition_c(G);
    part_bad += c.holds && !check_bent_partition_direct(G).is_bent_partition;
    ++part_cases;
  }
  note = "walsh " + std::to_string(walsh_bad) + "/" + std::to_string(walsh_cases) + ", pds " + std::to_string(pds_bad) + "/" +
         std::to_string(pds_cases) + ", partitions " + std::to_string(part_bad) + "/" + std::to_string(part_cases) +
         " mismatches";
  return walsh_bad == 0 && pds_bad == 0 && part_bad == 0;
}

bool c7(std::string& note) {
  std::mt19937_64 rng(7);
  for (const char* id : {"example4", "cor5_quadratic:p=3;n=9;m=3;alpha=0", "cor6_composite:p=3;r1=2;r2=2;m=2;L=0",
                         "mm_trace_monomial:p=2;k=4;m=2;d=1"})
    audit.components(instantiate(ConstructionId::parse(id)));
  for (auto V : {SpaceDesc::dot(2, 6), SpaceDesc::standard(3, {2, 1}), SpaceDesc::standard(5, {2})})
    for (int t = 0; t < 20; ++t) audit(random_function(V, rng));
  // PDS <=> two-weight code on scalar-closed subsets of V_4^(3)
  auto F = instantiate(ConstructionId::parse("mm_trace_monomial:p=3;k=2;m=2;d=5"));
  const auto& V = *F.domain;
  auto classes = punctured_preimage_sets(F);
  int tested = 0, positives = 0, bad = 0;
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
    if (code.rank < V.dimension()) continue;
    ++tested;
    auto pds = check_pds(V, D);
    if (pds.has_value() != code.two_weight) ++bad;
    else if (pds && params_of(*pds) != pds_from_two_weight_code(3, 4, code.length, code.nonzero_weights[0],
                                                                code.nonzero_weights[1]))
      ++bad;
    positives += pds.has_value();
  }
  note = std::to_string(audit.spectra) + " spectra, " + std::to_string(audit.dual_checks) + " dual-of-dual, " +
         std::to_string(audit.failures) + " failures; code/PDS " + std::to_string(bad) + "/" + std::to_string(tested) +
         " mismatches (" + std::to_string(positives) + " PDS)";
  return audit.failures == 0 && bad == 0 && audit.dual_checks > 0;
}

bool c8(std::string& note) {
  bool ok = true;
  std::string s;
  for (int k : {1, 3, 2}) {
    auto F = instantiate(example_id(k));
    auto r = run_equivalence_harness(PartitionSpec::from_function(F), 1);
    ok = ok && r.all_true;
    s += "example" + std::to_string(k) + (r.all_true ? " all true, " : " NOT all true, ");
  }
  auto F = instantiate(example_id(1));
  std::mt19937_64 rng(8);
  int negatives = 0;
  for (int t = 0; t < 3; ++t) {
    auto G = F;
    Index x = 1 + rng() % (G.values.size() - 1);
    G.values[x] = (G.values[x] + 1 + rng() % 3) % 4;
    auto r = run_equivalence_harness(PartitionSpec::from_function(G), 1);
    negatives += !r.all_true;
  }
  ok = ok && negatives == 3;
  note = s + std::to_string(negatives) + "/3 perturbations of example1 certified negative";
  return ok;
}

bool c9(std::string& note) {
  constexpr std::int64_t recorded = 896;
  auto V = SpaceDesc::standard(2, {2, 2});
  std::int64_t count = 0;
  std::vector<std::uint8_t> v(16);
  for (std::uint32_t t = 0; t < (1u << 16); ++t) {
    for (unsigned x = 0; x < 16; ++x) v[x] = (t >> x) & 1;
    count += is_bent(PFunc(V, v));
  }
  note = "bent count " + std::to_string(count) + " (recorded " + std::to_string(recorded) + ")";
  return count == recorded;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Example 1 reproduction", 60, c1},
      {2, "Example 2 reproduction", 600, c2},
      {3, "Example 3 reproduction", 300, c3},
      {4, "Example 4 reproduction", 10, c4},
      {5, "Example 5 reduced-scale substitutes", 120, c5},
      {6, "oracle equivalences", 0, c6},
      {7, "property suites", 0, c7},
      {8, "equivalence harness", 0, c8},
      {9, "census regression", 300, c9},
  };
  int failed = 0;
  for (auto& c : criteria) {
    std::string note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = c.budget_s == 0 || s < c.budget_s;
    ok = ok && in_budget;
    failed += !ok;
    std::printf("%s criterion %d: %s [tol=0 exact; %.1f s", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), s);
    if (c.budget_s > 0) std::printf(" / budget %.0f s", c.budget_s);
    std::printf("] %s\n", note.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
