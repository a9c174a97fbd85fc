#include "dualbent/partitions.hpp"

#include <algorithm>
#include <set>

namespace dualbent {

namespace {

void require_shape(const VFunc& F, const char* what) {
  const unsigned n = F.n(), m = F.m();
  if (n % 2 || n < 4) throw PreconditionError(std::string(what) + " needs n even and n >= 4");
  if (m < 2 || 2 * m > n) throw PreconditionError(std::string(what) + " needs 2 <= m <= n/2");
}

std::vector<int> eps_candidates(unsigned p) { return p == 3 ? std::vector<int>{1, -1} : std::vector<int>{1}; }

std::vector<std::vector<Index>> punctured(const PartitionSpec& G) {
  auto parts = G.parts();
  auto& z = parts[G.induced.values[0]];
  z.erase(std::find(z.begin(), z.end(), Index{0}));
  return parts;
}

}  // namespace

CardinalityGate check_part_sizes(const PartitionSpec& G) {
  const VFunc& F = G.induced;
  const unsigned p = F.p(), n = F.n(), m = F.m();
  CardinalityGate g;
  if (n % 2 || 2 * m > n) {
    g.message = "part sizes are defined for n even and m <= n/2";
    return g;
  }
  auto parts = G.parts();
  const auto h = static_cast<std::int64_t>(ipow(p, n / 2));
  const auto a = static_cast<std::int64_t>(ipow(p, n / 2 - m));
  for (int sign : {1, -1}) {
    const std::int64_t base = a * (h - sign), special = base + sign * h;
    std::size_t at_base = 0;
    std::optional<Index> exc;
    bool bad = false;
    for (Index i = 0; i < parts.size(); ++i) {
      const auto sz = static_cast<std::int64_t>(parts[i].size());
      if (sz == base) ++at_base;
      else if (sz == special && !exc) exc = i;
      else bad = true;
    }
    if (!bad && exc && at_base + 1 == parts.size()) {
      g.ok = true;
      g.exceptional = exc;
      g.sign = sign;
      return g;
    }
  }
  for (Index i = 0; i < parts.size(); ++i)
    if (parts[i].empty()) {
      g.message = "part " + std::to_string(i) + " is empty";
      return g;
    }
  g.message = "part sizes do not follow the bent-partition cardinalities";
  return g;
}

BentPartitionCertificate check_bent_partition_p2(const PartitionSpec& G) {
  const VFunc& F = G.induced;
  if (F.p() != 2) throw PreconditionError("spectral bent-partition criterion needs p = 2");
  require_shape(F, "spectral bent-partition criterion");
  BentPartitionCertificate cert;
  cert.gate = check_part_sizes(G);
  if (!cert.gate.ok) {
    cert.message = cert.gate.message;
    return cert;
  }
  const unsigned n = F.n(), m = F.m();
  const Index K = F.codomain->size(), v = F.domain->size();
  std::vector<std::vector<std::int64_t>> W(K);
  for (Index c = 1; c < K; ++c) W[c] = walsh_fast(component(F, c)).coeffs();
  std::vector<int> sgn(K * K);
  for (Index c = 0; c < K; ++c)
    for (Index i = 0; i < K; ++i) sgn[c * K + i] = F.codomain->inner(c, i) ? -1 : 1;
  const std::int64_t a = std::int64_t{1} << (n / 2 - m), h = std::int64_t{1} << (n / 2);
  cert.distinguished.assign(v, 0);
  cert.branch.assign(v, 0);
  std::set<std::int64_t> spectrum;
  std::vector<std::int64_t> r(K);
  cert.is_bent_partition = true;
  for (Index u = 0; u < v; ++u) {
    for (Index i = 0; i < K; ++i) {
      std::int64_t acc = 0;
      for (Index c = 1; c < K; ++c) acc += W[c][u] * sgn[c * K + i];
      if (acc % static_cast<std::int64_t>(K) != 0) throw InconsistencyError("part character is not an integer");
      r[i] = acc / static_cast<std::int64_t>(K);
      if (u != 0) spectrum.insert(r[i]);
    }
    // r_i = chi_u(A_i) - 2^{n-m} delta_0(u)
    bool matched = false;
    for (int s : {1, -1}) {
      const std::int64_t rest = -s * a, hit = -s * a + s * h;
      std::size_t hits = 0, rests = 0;
      Index where = 0;
      for (Index i = 0; i < K; ++i) {
        if (r[i] == hit) ++hits, where = i;
        else if (r[i] == rest) ++rests;
      }
      if (hits == 1 && rests + 1 == K) {
        matched = true;
        cert.distinguished[u] = where;
        cert.branch[u] = s == -1;
        break;
      }
    }
    if (!matched) {
      cert.is_bent_partition = false;
      cert.message = "spectral pattern fails at u = " + std::to_string(u);
      break;
    }
  }
  cert.spectrum.assign(spectrum.begin(), spectrum.end());
  cert.unflipped_pattern = cert.is_bent_partition;
  for (Index u = 1; u < v && cert.unflipped_pattern; ++u) cert.unflipped_pattern = !cert.branch[u];
  return cert;
}

DirectReport check_bent_partition_direct(const PartitionSpec& G) {
  const VFunc& F = G.induced;
  const unsigned p = F.p();
  const Index K = F.codomain->size();
  // multinomial K! / ((K/p)!)^p
  BigInt count = 1;
  for (Index j = 2; j <= K; ++j) count *= j;
  BigInt part = 1;
  for (Index j = 2; j <= K / p; ++j) part *= j;
  for (unsigned j = 0; j < p; ++j) count /= part;
  const BigInt limit = guard_limit(Guard::PartitionAssignments);
  if (count > limit) {
    throw GuardError("balanced assignments exceed the enumeration guard (" + count.str() + " > " + limit.str() + ")");
  }
  enforce_guard(Guard::FastWalsh, F.domain->size(), "definitional bent-partition check");
  std::vector<std::uint8_t> vals(K);
  for (Index i = 0; i < K; ++i) vals[i] = static_cast<std::uint8_t>(i / (K / p));
  DirectReport r;
  r.is_bent_partition = true;
  std::vector<std::uint8_t> f(F.values.size());
  do {
    ++r.assignments;
    for (Index x = 0; x < f.size(); ++x) f[x] = vals[F.values[x]];
    if (!is_bent(PFunc(F.domain, f))) {
      r.is_bent_partition = false;
      break;
    }
  } while (std::next_permutation(vals.begin(), vals.end()));
  return r;
}

ConditionCReport check_condition_c(const PartitionSpec& G) {
  const VFunc& F = G.induced;
  if (F.p() == 2) throw PreconditionError("Condition C is trivial for p = 2");
  ConditionCReport r;
  r.scalar_invariant = is_scalar_invariant(F);
  if (!r.scalar_invariant) return r;
  auto cert = check_condition_a(F);
  r.holds = cert.condition_a;
  if (r.holds) r.eps = cert.eps;
  return r;
}

HarnessReport run_equivalence_harness(const PartitionSpec& G, std::uint64_t seed, unsigned fusion_samples) {
  const VFunc& F = G.induced;
  require_shape(F, "equivalence harness");
  const unsigned p = F.p(), n = F.n(), m = F.m();
  const auto& V = *F.domain;
  const Index K = F.codomain->size();
  const Index i0 = F.values[0];
  HarnessReport rep;
  rep.seed = seed;
  auto analysis = analyze_vdb(F);
  auto classes = punctured(G);

  // (1) bent partition with the spectral pattern (p = 2) or Condition C (p odd)
  {
    auto& st = rep.statements[0];
    if (p == 2) {
      auto c = check_bent_partition_p2(G);
      st.holds = c.is_bent_partition && c.unflipped_pattern;
      if (st.holds) st.eps = 1;
      st.detail = c.message;
    } else {
      if (!is_scalar_invariant(F)) {
        st.detail = "parts are not scalar invariant";
      } else {
        auto c = check_condition_a(F, analysis);
        st.holds = c.condition_a;
        if (st.holds) st.eps = *c.eps == UnitTag::PlusOne ? 1 : -1;
      }
    }
  }
  // (2) every A_i^* a regular PDS with the closed-form parameters
  {
    auto& st = rep.statements[1];
    std::vector<std::optional<PdsCertificate>> certs(K);
    for (Index i = 0; i < K; ++i) certs[i] = check_pds(V, classes[i]);
    for (int eps : eps_candidates(p)) {
      bool all = true;
      for (Index i = 0; i < K && all; ++i) {
        auto e = condition_a_pds_parameters(p, n, m, eps, i == i0);
        const auto& c = certs[i];
        if (!c || !c->regular) all = false;
        else if (c->k == 0) all = e.k == 0 && e.mu == 0;
        else all = params_of(*c) == e;
      }
      if (all) {
        st.holds = true;
        st.eps = eps;
        break;
      }
    }
    if (!st.holds) st.detail = "some A_i^* is not a PDS with the closed-form parameters";
  }
  // (3) amorphic scheme on the nonempty classes with the closed-form valencies
  {
    auto& st = rep.statements[2];
    std::vector<std::vector<Index>> cls;
    std::vector<Index> labels;
    for (Index i = 0; i < K; ++i)
      if (!classes[i].empty()) cls.push_back(classes[i]), labels.push_back(i);
    try {
      const bool enough = p == 2 ? labels.size() == K : labels.size() >= 3;
      if (!enough) {
        st.detail = "too few classes";
      } else {
        auto s = build_translation_scheme(V, cls);
        if (!s.is_scheme) {
          st.detail = s.failure;
        } else {
          auto ev = check_amorphy(V, s, seed, fusion_samples);
          const bool amorphic = ev.pds_typing_uniform && ev.fusion_samples_passed == ev.fusion_samples_run;
          for (int eps : eps_candidates(p)) {
            bool ok = amorphic;
            for (std::size_t j = 0; j < labels.size() && ok; ++j) {
              const std::int64_t want = condition_a_pds_parameters(p, n, m, eps, labels[j] == i0).k;
              ok = s.at(0, j + 1, j + 1) == want;
            }
            if (ok) {
              st.holds = true;
              st.eps = eps;
              break;
            }
          }
          if (!st.holds) st.detail = amorphic ? "valencies differ from the closed form" : "amorphy evidence fails";
        }
      }
    } catch (const PreconditionError& e) {
      st.detail = e.what();
    }
  }
  // (4) two-weight projective codes with the closed-form length and weights
  {
    auto& st = rep.statements[3];
    std::vector<CodeSpec> codes;
    for (Index i = 0; i < K; ++i)
      if (!classes[i].empty()) codes.push_back(check_two_weight_projective(V, classes[i]));
    std::vector<Index> labels;
    for (Index i = 0; i < K; ++i)
      if (!classes[i].empty()) labels.push_back(i);
    for (int eps : eps_candidates(p)) {
      bool ok = !codes.empty();
      for (std::size_t j = 0; j < codes.size() && ok; ++j)
        ok = matches_code_parameters(codes[j], condition_a_code_parameters(p, n, m, eps, labels[j] == i0));
      if (ok) {
        st.holds = true;
        st.eps = eps;
        break;
      }
    }
    if (!st.holds) st.detail = "some code misses the closed-form parameters";
  }
  // (5) generalized Hadamard matrices and product identities
  {
    auto& st = rep.statements[4];
    bool ok = analysis.report.vectorial_bent;
    if (!ok) st.detail = "a component matrix is not generalized Hadamard";
    int eps = 1;
    if (ok && p != 2) {
      auto u = check_unit_condition(F, analysis);
      ok = u.holds;
      if (ok) eps = *u.eps == UnitTag::PlusOne ? 1 : -1;
      else st.detail = "unit condition fails";
    }
    for (Index c = 1; c < K && ok; ++c)
      for (Index d = 1; d < K && ok; ++d) {
        if (c == d) continue;
        ok = check_product_identity(F, analysis, c, d).holds;
        if (!ok) st.detail = "product identity fails at (" + std::to_string(c) + "," + std::to_string(d) + ")";
      }
    st.holds = ok;
    if (ok) st.eps = eps;
  }
  rep.all_true = rep.all_false = true;
  for (auto& s : rep.statements) {
    rep.all_true = rep.all_true && s.holds;
    rep.all_false = rep.all_false && !s.holds;
  }
  return rep;
}

}  // namespace dualbent
