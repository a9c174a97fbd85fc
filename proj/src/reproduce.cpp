#include "dualbent/reproduce.hpp"

#include <chrono>
#include <set>

#include "dualbent/constructions.hpp"
#include "dualbent/io.hpp"

namespace dualbent {

bool RunReport::passed() const {
  if (checks.empty()) return false;
  for (auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json RunReport::to_json() const {
  json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["seed"] = std::to_string(seed);
  j["guards"] = guard_levels();
  json cs = json::array();
  for (auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["certificate"] = c.certificate;
    if (!c.diagnostic.empty()) e["diagnostic"] = c.diagnostic;
    cs.push_back(e);
  }
  j["checks"] = cs;
  j["passed"] = passed();
  return j;
}

CheckOutcome run_check(const std::string& name, const std::function<bool(json&)>& body) {
  CheckOutcome out;
  out.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    out.passed = body(out.certificate);
  } catch (const GuardError& e) {
    out.diagnostic = std::string("guard: ") + e.what();
  } catch (const Error& e) {
    out.diagnostic = e.what();
  } catch (const InconsistencyError& e) {
    out.diagnostic = std::string("internal inconsistency: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

namespace {

bool eps_is(const VdbCertificate& c, UnitTag t) { return c.condition_a && c.eps == t; }

// D*_{F,i} checks against the closed forms for Condition A at eps = +1.
void condition_a_suite(RunReport& r, const VFunc& F, std::uint64_t seed, bool with_codes) {
  const unsigned p = F.p(), n = F.n(), m = F.m();
  const Index f0 = F.values[0];
  auto classes = punctured_preimage_sets(F);
  r.checks.push_back(run_check("pds", [&](json& j) {
    bool ok = true;
    j = json::array();
    for (Index i = 0; i < classes.size(); ++i) {
      auto cert = check_pds(*F.domain, classes[i]);
      auto want = condition_a_pds_parameters(p, n, m, 1, i == f0);
      json e = to_json(cert);
      e["class"] = std::to_string(i);
      e["expected"] = {num(want.v), num(want.k), num(want.lambda), num(want.mu)};
      ok = ok && cert && cert->regular && params_of(*cert) == want;
      j.push_back(e);
    }
    return ok;
  }));
  r.checks.push_back(run_check("scheme", [&](json& j) {
    auto s = build_scheme_from_function(F);
    auto want = expected_intersection_numbers(p, n, m, 1, f0, s.labels);
    auto ev = check_amorphy(*F.domain, s, seed);
    j["scheme"] = to_json(s);
    j["amorphy"] = to_json(ev);
    j["matches_closed_form"] = s.tensor == want;
    return s.is_scheme && s.tensor == want && ev.pds_typing_uniform &&
           ev.fusion_samples_passed == ev.fusion_samples_run;
  }));
  if (with_codes) {
    r.checks.push_back(run_check("codes", [&](json& j) {
      bool ok = true;
      j = json::array();
      for (Index i = 0; i < classes.size(); ++i) {
        auto code = check_two_weight_projective(*F.domain, classes[i]);
        auto want = condition_a_code_parameters(p, n, m, 1, i == f0);
        json e = to_json(code);
        e["class"] = std::to_string(i);
        e["expected"] = {num(want.length), num(want.w1), num(want.w2)};
        ok = ok && code.two_weight && matches_code_parameters(code, want);
        j.push_back(e);
      }
      return ok;
    }));
  }
}

void product_suite(RunReport& r, const VFunc& F, const VdbAnalysis& a, std::int64_t factor, bool unordered) {
  r.checks.push_back(run_check("hadamard", [&](json& j) {
    bool ok = true;
    j = json::array();
    const Index K = F.codomain->size();
    for (Index c = 1; c < K; ++c)
      for (Index d = 1; d < K; ++d) {
        if (c == d || (unordered && d < c)) continue;
        auto pr = check_product_identity(F, a, c, d);
        ok = ok && pr.holds && pr.factor == factor;
        j.push_back(to_json(pr));
      }
    return ok;
  }));
}

VFunc load(RunReport& r, const std::string& scope, const ConstructionId& id, const std::optional<std::string>& dir) {
  if (dir) {
    const std::string path = *dir + "/" + scope + ".tbl";
    auto text = read_file(path);
    r.inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return parse_function(text);
  }
  auto F = instantiate(id);
  r.inputs.push_back({{"construction", id.to_string()}, {"sha256", sha256_hex(format_function(F))}});
  return F;
}

void reduced_scheme(RunReport& r, const std::string& name, const ConstructionId& id, std::size_t classes) {
  r.checks.push_back(run_check(name, [&](json& j) {
    auto F = instantiate(id);
    r.inputs.push_back({{"construction", id.to_string()}, {"sha256", sha256_hex(format_function(F))}});
    auto a = analyze_vdb(F);
    auto fr = check_fiber_condition(F, a);
    j["construction"] = id.to_string();
    j["vdb"] = to_json(a.cert);
    j["fiber"] = to_json(fr);
    return fr.holds && fr.scheme.is_scheme && fr.scheme.d() == classes;
  }));
}

}  // namespace

std::vector<std::string> desk_scopes() { return {"example1", "example2", "example3", "example4", "example5-reduced"}; }

RunReport reproduce(const std::string& scope, std::uint64_t seed, const std::optional<std::string>& input_dir) {
  RunReport r;
  r.command = "reproduce " + scope;
  r.seed = seed;
  if (scope == "all-desk") {
    for (auto& s : desk_scopes()) {
      auto sub = reproduce(s, seed, input_dir);
      for (auto& in : sub.inputs) r.inputs.push_back(in);
      for (auto& c : sub.checks) {
        c.name = s + "/" + c.name;
        r.checks.push_back(std::move(c));
      }
    }
    return r;
  }
  if (scope == "example5-reduced") {
    reduced_scheme(r, "cor6_p3_r2_r2",
                   ConstructionId::parse("cor6_composite:p=3;r1=2;r2=2;m=2;alpha1=0;alpha2=0;alpha3=0;beta=0;gamma=0;L=0"),
                   9);
    reduced_scheme(r, "cor6_p3_r4_r2",
                   ConstructionId::parse("cor6_composite:p=3;r1=4;r2=2;m=2;alpha1=0;alpha2=0;alpha3=0;beta=0;gamma=0;L=0"),
                   9);
    reduced_scheme(r, "cor5_p3_n9_m3", ConstructionId::parse("cor5_quadratic:p=3;n=9;m=3;alpha=0"), 27);
    reduced_scheme(r, "cor6_p5_shape", example5_reduced_id(), 25);
    return r;
  }
  int k = 0;
  if (scope == "example1") k = 1;
  else if (scope == "example2") k = 2;
  else if (scope == "example3") k = 3;
  else if (scope == "example4") k = 4;
  else throw PreconditionError("unknown reproduce scope '" + scope + "'");

  VFunc F;
  VdbAnalysis a;
  auto loaded = run_check("load", [&](json& j) {
    F = load(r, scope, example_id(k), input_dir);
    j["p"] = std::to_string(F.p());
    j["n"] = std::to_string(F.n());
    j["m"] = std::to_string(F.m());
    return true;
  });
  r.checks.push_back(loaded);
  if (!loaded.passed) return r;

  if (k == 4) {
    r.checks.push_back(run_check("fiber_scheme", [&](json& j) {
      a = analyze_vdb(F);
      auto fr = check_fiber_condition(F, a);
      j["vdb"] = to_json(a.cert);
      j["fiber"] = to_json(fr);
      return a.cert.is_vectorial_dual_bent && fr.holds && fr.scheme.is_scheme && fr.scheme.d() == 9 &&
             fr.scheme.route == "direct";
    }));
    return r;
  }
  bool cond_a = false;
  r.checks.push_back(run_check("condition_a", [&](json& j) {
    a = analyze_vdb(F);
    auto c = check_condition_a(F, a);
    j = to_json(c);
    cond_a = eps_is(c, UnitTag::PlusOne);
    return cond_a;
  }));
  if (k == 1) {
    condition_a_suite(r, F, seed, true);
    if (a.report.vectorial_bent) product_suite(r, F, a, 64, true);
  } else if (k == 2) {
    if (a.report.vectorial_bent) product_suite(r, F, a, 729, false);
  } else {
    r.checks.push_back(run_check("bent_partition", [&](json& j) {
      auto cert = check_bent_partition_p2(PartitionSpec::from_function(F));
      j = to_json(cert);
      const std::set<std::int64_t> allowed = {-256, 768};
      bool inside = !cert.spectrum.empty();
      for (auto v : cert.spectrum) inside = inside && allowed.count(v);
      return cert.is_bent_partition && inside;
    }));
  }
  return r;
}

}  // namespace dualbent
