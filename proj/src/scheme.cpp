#include "dualbent/scheme.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace dualbent {

namespace {

void fill_identity_rows(SchemeCertificate& s) {
  // p^k_{0j} = p^k_{j0} = delta_{jk}
  const std::size_t D = s.size();
  for (std::size_t k = 0; k < D; ++k)
    for (std::size_t j = 0; j < D; ++j) {
      s.tensor[(k * D + 0) * D + j] = j == k;
      s.tensor[(k * D + j) * D + 0] = j == k;
    }
}

void build_direct(const SpaceDesc& V, const std::vector<std::uint32_t>& cls, SchemeCertificate& s) {
  const std::size_t D = s.size();
  const Index v = V.size();
  std::vector<char> seen(D, 0);
  std::vector<std::int64_t> local(D * D);
  for (Index g = 0; g < v && s.is_scheme; ++g) {
    std::fill(local.begin(), local.end(), 0);
    for (Index a = 0; a < v; ++a) ++local[cls[a] * D + cls[V.sub(g, a)]];
    const std::size_t k = cls[g];
    auto* row = s.tensor.data() + k * D * D;
    if (!seen[k]) {
      std::copy(local.begin(), local.end(), row);
      seen[k] = 1;
    } else if (!std::equal(local.begin(), local.end(), row)) {
      s.is_scheme = false;
      s.failure = "intersection counts differ inside class " + std::to_string(k);
    }
  }
}

void build_transform(const SpaceDesc& V, SchemeCertificate& s) {
  const std::size_t D = s.size();
  std::vector<kernels::ZetaTable> chi(D);
  for (std::size_t i = 1; i < D; ++i) chi[i] = character_table(V, indicator(V, s.classes[i]));
  fill_identity_rows(s);
  for (std::size_t i = 1; i < D && s.is_scheme; ++i)
    for (std::size_t j = i; j < D && s.is_scheme; ++j) {
      auto conv = convolve(V, chi[i], chi[j]);
      for (std::size_t k = 0; k < D && s.is_scheme; ++k) {
        const auto& cl = s.classes[k];
        std::int64_t val = conv[cl[0]];
        for (auto g : cl)
          if (conv[g] != val) {
            s.is_scheme = false;
            s.failure = "intersection counts (" + std::to_string(i) + "," + std::to_string(j) +
                        ") differ inside class " + std::to_string(k);
            break;
          }
        s.tensor[(k * D + i) * D + j] = val;
        s.tensor[(k * D + j) * D + i] = val;
      }
    }
}

}  // namespace

SchemeCertificate build_translation_scheme(const SpaceDesc& space, std::vector<std::vector<Index>> classes,
                                           SchemeRoute route) {
  const Index v = space.size();
  SchemeCertificate s;
  s.classes.push_back({0});
  std::vector<std::uint32_t> cls(v, UINT32_MAX);
  cls[0] = 0;
  for (auto& c : classes) {
    if (c.empty()) throw PreconditionError("scheme classes must be nonempty");
    std::sort(c.begin(), c.end());
    const auto id = static_cast<std::uint32_t>(s.classes.size());
    for (auto x : c) {
      if (x >= v) throw PreconditionError("class element outside the space");
      if (cls[x] != UINT32_MAX) throw PreconditionError("classes do not partition the nonzero vectors");
      cls[x] = id;
    }
    s.classes.push_back(std::move(c));
  }
  for (Index x = 0; x < v; ++x)
    if (cls[x] == UINT32_MAX) throw PreconditionError("classes do not cover the nonzero vectors");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!is_negation_closed(space, s.classes[i])) throw PreconditionError("class " + std::to_string(i) + " is not closed under negation");
  s.symmetric = true;
  s.is_scheme = true;
  const std::size_t D = s.size();
  s.tensor.assign(D * D * D, 0);
  if (route == SchemeRoute::Direct) enforce_guard(Guard::PdsBruteforce, v, "scheme by direct counting");
  if (route == SchemeRoute::Direct || (route == SchemeRoute::Auto && v <= guard_limit(Guard::PdsBruteforce))) {
    s.route = "direct";
    build_direct(space, cls, s);
  } else {
    s.route = "transform";
    build_transform(space, s);
  }
  if (s.is_scheme) {
    for (std::size_t k = 0; k < D; ++k)
      for (std::size_t i = 0; i < D; ++i) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < D; ++j) {
          if (s.at(k, i, j) < 0) throw InconsistencyError("negative intersection number");
          sum += s.at(k, i, j);
        }
        if (sum != static_cast<std::int64_t>(s.classes[i].size())) throw InconsistencyError("intersection row sum differs from class size");
      }
  }
  return s;
}

SchemeCertificate build_scheme_from_function(const VFunc& F) {
  auto sets = punctured_preimage_sets(F);
  std::vector<std::vector<Index>> classes;
  std::vector<Index> labels = {0};
  for (Index i = 0; i < sets.size(); ++i)
    if (!sets[i].empty()) {
      classes.push_back(sets[i]);
      labels.push_back(i);
    }
  auto s = build_translation_scheme(*F.domain, std::move(classes));
  s.labels = std::move(labels);
  return s;
}

AmorphyEvidence check_amorphy(const SpaceDesc& space, const SchemeCertificate& cert, std::uint64_t seed,
                              unsigned samples) {
  const std::size_t d = cert.d();
  if (d < 3) throw PreconditionError("amorphy evidence needs at least 3 classes");
  AmorphyEvidence ev;
  ev.seed = seed;
  ev.class_pds.assign(d + 1, std::nullopt);
  bool all_latin = true, all_negative = true;
  for (std::size_t i = 1; i <= d; ++i) {
    ev.class_pds[i] = check_pds(space, cert.classes[i]);
    PdsType t = ev.class_pds[i] ? ev.class_pds[i]->typing.type : PdsType::None;
    all_latin = all_latin && (t == PdsType::Latin || t == PdsType::Both);
    all_negative = all_negative && (t == PdsType::NegativeLatin || t == PdsType::Both);
  }
  ev.pds_typing_uniform = all_latin || all_negative;
  if (ev.pds_typing_uniform) ev.uniform_type = all_latin ? PdsType::Latin : PdsType::NegativeLatin;

  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    std::uniform_int_distribution<std::size_t> parts_dist(2, d - 1);
    const std::size_t t = parts_dist(rng);
    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<Index>> fused(t);
    std::uniform_int_distribution<std::size_t> pick(0, t - 1);
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t g = r < t ? r : pick(rng);
      const auto& cl = cert.classes[order[r]];
      fused[g].insert(fused[g].end(), cl.begin(), cl.end());
    }
    ++ev.fusion_samples_run;
    if (build_translation_scheme(space, std::move(fused)).is_scheme) ++ev.fusion_samples_passed;
  }
  return ev;
}

std::vector<std::int64_t> expected_intersection_numbers(unsigned p, unsigned n, unsigned m, int eps, Index f0,
                                                        std::span<const Index> labels) {
  if (n % 2 || 2 * m > n) throw PreconditionError("closed-form intersection numbers need n even, m <= n/2");
  const std::size_t D = labels.size();
  const auto half = static_cast<std::int64_t>(ipow(p, n / 2));
  const auto base = static_cast<std::int64_t>(ipow(p, n / 2 - m));
  std::vector<std::int64_t> s(D, 0);
  for (std::size_t i = 1; i < D; ++i) s[i] = base + (labels[i] == f0 ? eps : 0);
  std::vector<std::int64_t> t(D * D * D, 0);
  auto T = [&](std::size_t k, std::size_t i, std::size_t j) -> std::int64_t& { return t[(k * D + i) * D + j]; };
  T(0, 0, 0) = 1;
  for (std::size_t i = 1; i < D; ++i) {
    T(i, 0, i) = T(i, i, 0) = 1;
    T(0, i, i) = s[i] * (half - eps);
    T(i, i, i) = eps * half - 2 + (s[i] - eps) * (s[i] - 2 * eps);
    for (std::size_t j = 1; j < D; ++j) {
      if (j == i) continue;
      T(j, i, i) = s[i] * (s[i] - eps);
      T(j, i, j) = s[i] * (s[j] - eps);
      T(j, j, i) = s[i] * (s[j] - eps);
      for (std::size_t k = 1; k < D; ++k)
        if (k != i && k != j) T(k, i, j) = s[i] * s[j];
    }
  }
  return t;
}

FiberReport check_fiber_condition(const VFunc& F, const VdbAnalysis& a) {
  if (!a.cert.is_vectorial_dual_bent || !a.vdual) throw PreconditionError("fiber condition needs a vectorial dual-bent F");
  if (F.values[0] != 0) throw PreconditionError("fiber condition needs F(0) = 0");
  if (F.m() < 2 || 2 * F.m() > F.n()) throw PreconditionError("fiber condition needs 2 <= m <= n/2");
  if (!is_even(F)) throw PreconditionError("fiber condition needs F(-x) = F(x)");
  FiberReport r;
  const auto& G = a.vdual->dual.values;
  const Index q = F.codomain->size();
  std::map<Index, Index> first;  // fiber value -> representative beta
  r.holds = true;
  for (Index b = 1; b < G.size(); ++b) {
    auto [it, fresh] = first.emplace(G[b], b);
    if (fresh) continue;
    for (Index c = 1; c < q && r.holds; ++c) {
      const auto& eps = *a.report.spectra[c].eps;
      if (eps[b] != eps[it->second]) r.holds = false;
    }
  }
  r.fibers = first.size();
  r.scheme = build_scheme_from_function(F);
  if (r.scheme.is_scheme != r.holds) throw InconsistencyError("fiber condition and scheme existence disagree");
  return r;
}

}  // namespace dualbent
