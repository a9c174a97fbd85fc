#include "dualbent/report.hpp"

#include <charconv>

namespace dualbent {

json num(std::int64_t v) { return std::to_string(v); }
json num(const BigInt& v) { return v.str(); }

json index_list(std::span<const Index> xs) {
  json a = json::array();
  for (auto x : xs) a.push_back(std::to_string(x));
  return a;
}

namespace {

json opt_tag(const std::optional<UnitTag>& t) { return t ? json(to_string(*t)) : json(nullptr); }

std::int64_t parse_int(const json& v) {
  const auto& s = v.get_ref<const std::string&>();
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw PreconditionError("certificate: bad integer '" + s + "'");
  return x;
}

}  // namespace

json to_json(const CycInt& z) { return z.to_string(); }

json to_json(const WalshSpectrum& w) {
  json j;
  j["bent"] = w.bent;
  j["weakly_regular"] = w.weakly_regular();
  j["regular"] = w.regular();
  j["eps"] = opt_tag(w.global_eps);
  j["spectrum_at_zero"] = to_json(w.values.at(0));
  if (w.eps) {
    std::map<std::string, std::int64_t> counts;
    for (auto t : *w.eps) ++counts[to_string(t)];
    json c;
    for (auto& [k, v] : counts) c[k] = num(v);
    j["eps_counts"] = c;
  }
  return j;
}

json to_json(const VdbCertificate& c) {
  json j;
  j["vectorial_bent"] = c.is_vectorial_bent;
  j["vectorial_dual_bent"] = c.is_vectorial_dual_bent;
  j["sigma"] = c.sigma ? index_list(*c.sigma) : json(nullptr);
  j["sigma_identity"] = c.sigma_identity;
  j["condition_a"] = c.condition_a;
  j["eps"] = opt_tag(c.eps);
  j["all_weakly_regular"] = c.all_weakly_regular;
  json per = json::array();
  for (std::size_t k = 1; k < c.component_eps.size(); ++k) per.push_back(opt_tag(c.component_eps[k]));
  j["component_eps"] = per;  // c = 1, 2, ...
  if (c.eps_table) {
    // per component: how many points carry each tag
    json counts = json::array();
    for (std::size_t k = 1; k < c.eps_table->size(); ++k) {
      std::map<std::string, std::int64_t> m;
      for (auto t : (*c.eps_table)[k]) ++m[to_string(t)];
      json e;
      for (auto& [tag, v] : m) e[tag] = num(v);
      counts.push_back(e);
    }
    j["component_eps_counts"] = counts;
  }
  return j;
}

json to_json(const std::optional<PdsCertificate>& c) {
  json j;
  j["is_pds"] = c.has_value();
  if (!c) return j;
  j["v"] = num(c->v);
  j["k"] = num(c->k);
  j["lambda"] = num(c->lambda);
  j["mu"] = num(c->mu);
  j["regular"] = c->regular;
  j["type"] = to_string(c->typing.type);
  j["N"] = num(c->typing.N);
  j["s"] = num(c->typing.s);
  if (c->typing.type == PdsType::Both) j["s_negative"] = num(c->typing.s_negative);
  return j;
}

json to_json(const SchemeCertificate& c) {
  json j;
  json cls = json::array();
  for (auto& k : c.classes) cls.push_back(index_list(k));
  j["classes"] = cls;
  if (!c.labels.empty()) j["labels"] = index_list(std::span(c.labels).subspan(1));
  json t = json::array();
  for (auto x : c.tensor) t.push_back(num(x));
  j["tensor"] = t;
  j["d"] = num(static_cast<std::int64_t>(c.d()));
  j["is_scheme"] = c.is_scheme;
  j["symmetric"] = c.symmetric;
  j["route"] = c.route;
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

json to_json(const AmorphyEvidence& e) {
  json j;
  json pds = json::array();
  for (std::size_t i = 1; i < e.class_pds.size(); ++i) pds.push_back(to_json(e.class_pds[i]));
  j["class_pds"] = pds;
  j["pds_typing_uniform"] = e.pds_typing_uniform;
  j["uniform_type"] = to_string(e.uniform_type);
  j["fusion_samples_run"] = num(e.fusion_samples_run);
  j["fusion_samples_passed"] = num(e.fusion_samples_passed);
  j["seed"] = std::to_string(e.seed);
  return j;
}

json to_json(const FiberReport& r) {
  json j;
  j["holds"] = r.holds;
  j["fibers"] = num(static_cast<std::int64_t>(r.fibers));
  j["scheme"] = to_json(r.scheme);
  return j;
}

json to_json(const CodeSpec& c) {
  json j;
  j["length"] = num(c.length);
  j["dim"] = num(c.dimension);
  j["rank"] = num(c.rank);
  j["scalar_closed"] = c.scalar_closed;
  json d;
  for (auto& [w, k] : c.distribution) d[std::to_string(w)] = num(k);
  j["distribution"] = d;
  json w = json::array();
  for (auto x : c.nonzero_weights) w.push_back(num(x));
  j["nonzero_weights"] = w;
  j["two_weight"] = c.two_weight;
  return j;
}

json to_json(const GHReport& r) {
  json j;
  j["bent_route"] = r.bent_route;
  j["autocorrelation_route"] = r.autocorrelation_route ? json(*r.autocorrelation_route) : json(nullptr);
  j["is_generalized_hadamard"] = r.is_generalized_hadamard;
  return j;
}

json to_json(const UnitConditionReport& r) {
  json j;
  j["holds"] = r.holds;
  j["eps"] = opt_tag(r.eps);
  return j;
}

json to_json(const ProductReport& r) {
  json j;
  j["c"] = std::to_string(r.c);
  j["d"] = std::to_string(r.d);
  j["walsh_route"] = r.walsh_route;
  j["matrix_route"] = r.matrix_route ? json(*r.matrix_route) : json(nullptr);
  j["factor"] = num(r.factor);
  j["holds"] = r.holds;
  return j;
}

json to_json(const CardinalityGate& g) {
  json j;
  j["ok"] = g.ok;
  j["exceptional"] = g.exceptional ? json(std::to_string(*g.exceptional)) : json(nullptr);
  j["sign"] = num(g.sign);
  if (!g.message.empty()) j["message"] = g.message;
  return j;
}

json to_json(const BentPartitionCertificate& c) {
  json j;
  j["is_bent_partition"] = c.is_bent_partition;
  j["gate"] = to_json(c.gate);
  std::int64_t flipped = 0;
  for (std::size_t u = 1; u < c.branch.size(); ++u) flipped += c.branch[u];
  j["flipped_points"] = num(flipped);
  j["unflipped_pattern"] = c.unflipped_pattern;
  json s = json::array();
  for (auto v : c.spectrum) s.push_back(num(v));
  j["spectrum"] = s;
  if (!c.message.empty()) j["message"] = c.message;
  return j;
}

json to_json(const DirectReport& r) {
  json j;
  j["is_bent_partition"] = r.is_bent_partition;
  j["assignments"] = std::to_string(r.assignments);
  return j;
}

json to_json(const ConditionCReport& r) {
  json j;
  j["scalar_invariant"] = r.scalar_invariant;
  j["holds"] = r.holds;
  j["eps"] = opt_tag(r.eps);
  return j;
}

json to_json(const HarnessReport& r) {
  static const char* names[5] = {"bent_partition", "pds", "amorphic_scheme", "codes", "hadamard"};
  json j;
  json st = json::array();
  for (int k = 0; k < 5; ++k) {
    const auto& s = r.statements[k];
    json e;
    e["statement"] = names[k];
    e["holds"] = s.holds;
    e["eps"] = s.eps ? num(*s.eps) : json(nullptr);
    if (!s.detail.empty()) e["detail"] = s.detail;
    st.push_back(e);
  }
  j["statements"] = st;
  j["all_true"] = r.all_true;
  j["all_false"] = r.all_false;
  j["seed"] = std::to_string(r.seed);
  return j;
}

json guard_levels() {
  json j;
  for (auto g : {Guard::NaiveWalsh, Guard::FastWalsh, Guard::PdsBruteforce, Guard::MatrixMaterialize,
                 Guard::PartitionAssignments, Guard::FieldTable})
    j[guard_name(g)] = std::to_string(guard_limit(g));
  j["override_bits"] = std::to_string(guard_override_bits());
  return j;
}

std::vector<std::vector<Index>> scheme_classes_from_json(const json& j) {
  std::vector<std::vector<Index>> out;
  for (auto& c : j.at("classes")) {
    std::vector<Index> k;
    for (auto& x : c) {
      auto v = parse_int(x);
      if (v < 0) throw PreconditionError("certificate: negative index");
      k.push_back(static_cast<Index>(v));
    }
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<std::int64_t> scheme_tensor_from_json(const json& j) {
  std::vector<std::int64_t> t;
  for (auto& x : j.at("tensor")) t.push_back(parse_int(x));
  return t;
}

}  // namespace dualbent
