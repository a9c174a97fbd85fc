#include <chrono>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "dualbent/constructions.hpp"
#include "dualbent/io.hpp"
#include "dualbent/reproduce.hpp"

using namespace dualbent;

namespace {

struct Options {
  std::uint64_t seed = 1;
  std::string out;
  bool timings = false;
  std::string function;
  std::string file;
  std::string certificate;
  std::string id;
  std::string scope;
  std::string input_dir;
  std::string pair;
  std::string materialize;
  std::string emit_generator;
  long long cls = -1;
};

void emit(const Options& o, const json& j) {
  auto text = j.dump(2) + "\n";
  if (o.out.empty()) std::cout << text;
  else write_file(o.out, text);
}

json input_entry(const std::string& path, const std::string& text) { return {{"path", path}, {"sha256", sha256_hex(text)}}; }

json envelope(const Options& o, const std::string& command, json inputs) {
  json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["seed"] = std::to_string(o.seed);
  j["guards"] = guard_levels();
  return j;
}

VFunc load_function(const Options& o, json& inputs) {
  if (o.function.empty()) throw PreconditionError("--function is required");
  auto text = read_file(o.function);
  inputs.push_back(input_entry(o.function, text));
  return parse_function(text);
}

std::vector<Index> selected_classes(const Options& o, const VFunc& F) {
  std::vector<Index> out;
  if (o.cls >= 0) {
    if (static_cast<Index>(o.cls) >= F.codomain->size()) throw PreconditionError("--class exceeds p^m - 1");
    out.push_back(static_cast<Index>(o.cls));
  } else {
    for (Index i = 0; i < F.codomain->size(); ++i) out.push_back(i);
  }
  return out;
}

std::pair<Index, Index> parse_pair(const std::string& s, const VFunc& F) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw PreconditionError("--pair expects c,d");
  Index c = std::stoull(s.substr(0, comma)), d = std::stoull(s.substr(comma + 1));
  if (c >= F.codomain->size() || d >= F.codomain->size()) throw PreconditionError("--pair index exceeds p^m - 1");
  return {c, d};
}

void timing(const Options& o, const std::string& what, std::chrono::steady_clock::time_point t0) {
  if (!o.timings) return;
  std::cerr << what << ": " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
}

json check_bent(const VFunc& F) {
  json j;
  if (F.m() == 1) {
    j = to_json(classify_bent(component(F, 1)));
    return j;
  }
  auto r = check_vectorial_bent(F);
  j["vectorial_bent"] = r.vectorial_bent;
  json comps = json::array();
  for (std::size_t c = 1; c < r.spectra.size(); ++c) comps.push_back(to_json(r.spectra[c]));
  j["components"] = comps;
  return j;
}

json check_hadamard(const Options& o, const VFunc& F, bool& ok) {
  json j;
  auto a = analyze_vdb(F);
  json comps = json::array();
  ok = true;
  for (Index c = 1; c < F.codomain->size(); ++c) {
    auto r = check_generalized_hadamard(component_matrix(F, c));
    ok = ok && r.is_generalized_hadamard;
    comps.push_back(to_json(r));
  }
  j["components"] = comps;
  if (F.p() != 2) {
    auto u = check_unit_condition(F, a);
    j["unit_condition"] = to_json(u);
  }
  json prods = json::array();
  if (ok && F.n() % 2 == 0) {
    std::vector<std::pair<Index, Index>> pairs;
    if (!o.pair.empty()) {
      pairs.push_back(parse_pair(o.pair, F));
    } else {
      for (Index c = 1; c < F.codomain->size(); ++c)
        for (Index d = 1; d < F.codomain->size(); ++d)
          if (c != d) pairs.push_back({c, d});
    }
    for (auto [c, d] : pairs) {
      auto pr = check_product_identity(F, a, c, d);
      ok = ok && pr.holds;
      prods.push_back(to_json(pr));
    }
  }
  j["products"] = prods;
  if (!o.materialize.empty()) {
    Index c = o.pair.empty() ? 1 : parse_pair(o.pair, F).first;
    auto H = component_matrix(F, c);
    auto e = materialize(H);
    std::string text;
    const Index N = H.order();
    for (Index x = 0; x < N; ++x) {
      for (Index y = 0; y < N; ++y) {
        if (y) text.push_back(' ');
        text += std::to_string(e[x * N + y]);
      }
      text.push_back('\n');
    }
    write_file(o.materialize, text);
    j["materialized"] = {{"component", std::to_string(c)}, {"order", std::to_string(N)}};
  }
  j["holds"] = ok;
  return j;
}

json certify_partition(const Options& o, const PartitionSpec& G) {
  json j;
  const auto& F = G.induced;
  j["gate"] = to_json(check_part_sizes(G));
  if (F.p() == 2) j["spectral"] = to_json(check_bent_partition_p2(G));
  else j["condition_c"] = to_json(check_condition_c(G));
  try {
    j["definitional"] = to_json(check_bent_partition_direct(G));
  } catch (const GuardError& e) {
    j["definitional"] = {{"status", "theorem-backed, not definitionally re-verified"}, {"reason", e.what()}};
  }
  if (F.n() % 2 == 0 && F.n() >= 4 && F.m() >= 2 && 2 * F.m() <= F.n())
    j["harness"] = to_json(run_equivalence_harness(G, o.seed));
  return j;
}

// Random property checks against the definitional oracles.
json selftest(std::uint64_t seed, bool& ok) {
  std::mt19937_64 rng(seed);
  json j;
  ok = true;
  std::int64_t walsh = 0, pds = 0, failures = 0;
  for (auto V : {SpaceDesc::dot(2, 8), SpaceDesc::standard(3, {2, 2}), SpaceDesc::standard(5, {2})}) {
    std::uniform_int_distribution<unsigned> d(0, V->p() - 1);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::uint8_t> v(V->size());
      for (auto& x : v) x = static_cast<std::uint8_t>(d(rng));
      PFunc f(V, v);
      auto w = walsh_fast(f);
      if (!(w == walsh_naive(f)) || !check_parseval(w) || !check_inverse_transform(f, w)) ++failures;
      ++walsh;
    }
    std::bernoulli_distribution coin(0.3);
    for (int t = 0; t < 20; ++t) {
      std::vector<Index> D;
      for (Index x = 1; x < V->size(); ++x)
        if (x < V->neg(x) && coin(rng)) D.push_back(x), D.push_back(V->neg(x));
      if (V->p() == 2) {
        D.clear();
        for (Index x = 1; x < V->size(); ++x)
          if (coin(rng)) D.push_back(x);
      }
      std::sort(D.begin(), D.end());
      if (check_pds(*V, D) != check_pds_bruteforce(*V, D)) ++failures;
      ++pds;
    }
  }
  j["walsh_cases"] = num(walsh);
  j["pds_cases"] = num(pds);
  j["failures"] = num(failures);
  ok = failures == 0;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of vectorial dual-bent functions and their combinatorial objects"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for every sampled check");
  app.add_option("--out", o.out, "Write JSON (or the function file for construct) here");
  app.add_flag("--timings", o.timings, "Print wall-clock timings on stderr");

  auto* construct = app.add_subcommand("construct", "Instantiate a construction and write a function file");
  construct->add_option("--id", o.id, "Construction id, e.g. example1 or cor5_quadratic:p=3;n=6;m=2")->required();

  auto* check = app.add_subcommand("check", "Run one module check and emit its certificate");
  check->require_subcommand(1);
  std::vector<CLI::App*> kinds;
  for (const char* k : {"bent", "vdb", "pds", "scheme", "code", "hadamard", "partition"}) {
    auto* s = check->add_subcommand(k);
    if (std::string(k) == "partition") s->add_option("--file", o.file, "Partition file")->required();
    else s->add_option("--function", o.function, "Function file")->required();
    if (std::string(k) == "pds" || std::string(k) == "code") s->add_option("--class", o.cls, "Codomain index i");
    if (std::string(k) == "hadamard") s->add_option("--pair", o.pair, "c,d");
    kinds.push_back(s);
  }

  auto* scheme = app.add_subcommand("scheme", "Translation schemes");
  scheme->require_subcommand(1);
  auto* scheme_build = scheme->add_subcommand("build", "Build the scheme of the preimage classes");
  scheme_build->add_option("--function", o.function, "Function file")->required();
  auto* scheme_verify = scheme->add_subcommand("verify", "Recompute a scheme certificate");
  scheme_verify->add_option("--certificate", o.certificate, "Certificate from scheme build")->required();

  auto* code = app.add_subcommand("code", "Codes of preimage classes");
  code->require_subcommand(1);
  auto* code_weights = code->add_subcommand("weights", "Weight distribution of the code of D*_{F,i}");
  code_weights->add_option("--function", o.function, "Function file")->required();
  code_weights->add_option("--class", o.cls, "Codomain index i")->required();
  code_weights->add_option("--emit-generator", o.emit_generator, "Write the projective defining set, one vector per row");

  auto* hadamard = app.add_subcommand("hadamard", "Generalized Hadamard matrices");
  hadamard->require_subcommand(1);
  auto* hadamard_verify = hadamard->add_subcommand("verify", "Component matrices and product identities");
  hadamard_verify->add_option("--function", o.function, "Function file")->required();
  hadamard_verify->add_option("--pair", o.pair, "Check only the pair c,d");
  hadamard_verify->add_option("--materialize", o.materialize, "Write the matrix of component c as exponent rows");

  auto* partition = app.add_subcommand("partition", "Bent partitions");
  partition->require_subcommand(1);
  auto* partition_certify = partition->add_subcommand("certify", "Certify a partition file");
  partition_certify->add_option("--file", o.file, "Partition file")->required();

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Reproduce the worked examples");
  reproduce_cmd->add_option("scope", o.scope, "example1..example4, example5-reduced or all-desk")->required();
  reproduce_cmd->add_option("--input-dir", o.input_dir, "Read <scope>.tbl function files from this directory");

  auto* selftest_cmd = app.add_subcommand("selftest", "Random property checks against the definitional oracles");

  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (construct->parsed()) {
      auto id = ConstructionId::parse(o.id);
      auto text = format_function(instantiate(id));
      if (o.out.empty()) std::cout << text;
      else write_file(o.out, text);
      timing(o, "construct", t0);
      return 0;
    }
    if (check->parsed()) {
      json inputs = json::array();
      json j;
      std::string kind;
      for (auto* s : kinds)
        if (s->parsed()) kind = s->get_name();
      if (kind == "partition") {
        auto text = read_file(o.file);
        inputs.push_back(input_entry(o.file, text));
        j = envelope(o, "check partition", inputs);
        j["certificate"] = certify_partition(o, parse_partition(text));
      } else {
        auto F = load_function(o, inputs);
        j = envelope(o, "check " + kind, inputs);
        json c;
        if (kind == "bent") {
          c = check_bent(F);
        } else if (kind == "vdb") {
          c = to_json(analyze_vdb(F).cert);
        } else if (kind == "pds") {
          auto classes = punctured_preimage_sets(F);
          c = json::array();
          for (auto i : selected_classes(o, F)) {
            auto e = to_json(check_pds(*F.domain, classes[i]));
            e["class"] = std::to_string(i);
            c.push_back(e);
          }
        } else if (kind == "scheme") {
          c = to_json(build_scheme_from_function(F));
        } else if (kind == "code") {
          auto classes = punctured_preimage_sets(F);
          c = json::array();
          for (auto i : selected_classes(o, F)) {
            if (classes[i].empty()) continue;
            auto e = to_json(check_two_weight_projective(*F.domain, classes[i]));
            e["class"] = std::to_string(i);
            c.push_back(e);
          }
        } else {
          bool ok = false;
          c = check_hadamard(o, F, ok);
        }
        j["certificate"] = c;
      }
      emit(o, j);
      timing(o, "check " + kind, t0);
      return 0;
    }
    if (scheme_build->parsed()) {
      json inputs = json::array();
      auto F = load_function(o, inputs);
      auto j = envelope(o, "scheme build", inputs);
      j["space"] = F.domain->header();
      j["certificate"] = to_json(build_scheme_from_function(F));
      emit(o, j);
      timing(o, "scheme build", t0);
      return 0;
    }
    if (scheme_verify->parsed()) {
      auto text = read_file(o.certificate);
      json in = json::parse(text);
      auto V = SpaceDesc::parse_header(in.at("space").get<std::string>());
      const json& cert = in.at("certificate");
      auto classes = scheme_classes_from_json(cert);
      if (classes.empty()) throw PreconditionError("certificate has no classes");
      std::vector<std::vector<Index>> rest(classes.begin() + 1, classes.end());
      auto rebuilt = build_translation_scheme(*V, rest);
      const bool same = rebuilt.tensor == scheme_tensor_from_json(cert) && rebuilt.classes == classes &&
                        rebuilt.is_scheme == cert.at("is_scheme").get<bool>();
      auto j = envelope(o, "scheme verify", json::array({input_entry(o.certificate, text)}));
      j["recomputed"] = to_json(rebuilt);
      j["matches"] = same;
      emit(o, j);
      timing(o, "scheme verify", t0);
      return same && rebuilt.is_scheme ? 0 : 1;
    }
    if (code_weights->parsed()) {
      json inputs = json::array();
      auto F = load_function(o, inputs);
      auto i = selected_classes(o, F).front();
      auto D = punctured_preimage_sets(F)[i];
      auto spec = check_two_weight_projective(*F.domain, D);
      auto j = envelope(o, "code weights", inputs);
      json c = to_json(spec);
      c["class"] = std::to_string(i);
      j["certificate"] = c;
      if (!o.emit_generator.empty()) {
        std::string rows;
        for (auto x : projective_reduce(*F.domain, D).reps) {
          for (auto d : F.domain->digits(x)) rows.push_back(static_cast<char>('0' + d));
          rows.push_back('\n');
        }
        write_file(o.emit_generator, rows);
      }
      emit(o, j);
      timing(o, "code weights", t0);
      return 0;
    }
    if (hadamard_verify->parsed()) {
      json inputs = json::array();
      auto F = load_function(o, inputs);
      auto j = envelope(o, "hadamard verify", inputs);
      bool ok = false;
      j["certificate"] = check_hadamard(o, F, ok);
      emit(o, j);
      timing(o, "hadamard verify", t0);
      return ok ? 0 : 1;
    }
    if (partition_certify->parsed()) {
      auto text = read_file(o.file);
      auto j = envelope(o, "partition certify", json::array({input_entry(o.file, text)}));
      j["certificate"] = certify_partition(o, parse_partition(text));
      emit(o, j);
      timing(o, "partition certify", t0);
      return 0;
    }
    if (reproduce_cmd->parsed()) {
      std::optional<std::string> dir;
      if (!o.input_dir.empty()) dir = o.input_dir;
      auto r = reproduce(o.scope, o.seed, dir);
      emit(o, r.to_json());
      for (auto& c : r.checks) {
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.diagnostic.empty()) std::cerr << " (" << c.diagnostic << ")";
        if (o.timings) std::cerr << " " << c.seconds << " s";
        std::cerr << "\n";
      }
      timing(o, "reproduce " + o.scope, t0);
      return r.passed() ? 0 : 1;
    }
    if (selftest_cmd->parsed()) {
      bool ok = false;
      auto j = envelope(o, "selftest", json::array());
      j["certificate"] = selftest(o.seed, ok);
      emit(o, j);
      timing(o, "selftest", t0);
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
