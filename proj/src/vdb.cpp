#include "dualbent/vdb.hpp"

#include <algorithm>
#include <set>

namespace dualbent {

VFunc::VFunc(SpacePtr dom, SpacePtr cod, std::vector<std::uint32_t> v)
    : domain(std::move(dom)), codomain(std::move(cod)), values(std::move(v)) {
  if (!domain || !codomain) throw PreconditionError("vectorial function without spaces");
  if (domain->p() != codomain->p()) throw PreconditionError("domain and codomain characteristic differ");
  if (codomain->dimension() > domain->dimension()) throw PreconditionError("codomain dimension exceeds domain");
  if (values.size() != domain->size()) throw PreconditionError("table length must equal p^n");
  for (auto y : values)
    if (y >= codomain->size()) throw PreconditionError("function value outside the codomain");
}

PFunc component(const VFunc& F, Index c) {
  if (c == 0) throw PreconditionError("component needs a nonzero c");
  if (c >= F.codomain->size()) throw PreconditionError("c outside the codomain");
  std::vector<std::uint8_t> t(F.codomain->size());
  for (Index y = 0; y < t.size(); ++y) t[y] = static_cast<std::uint8_t>(F.codomain->inner(c, y));
  std::vector<std::uint8_t> v(F.values.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = t[F.values[x]];
  return PFunc(F.domain, std::move(v));
}

VectorialBentReport check_vectorial_bent(const VFunc& F) {
  VectorialBentReport r;
  const Index q = F.codomain->size();
  r.spectra.resize(q);
  r.vectorial_bent = true;
  for (Index c = 1; c < q; ++c) {
    r.spectra[c] = classify_bent(component(F, c));
    r.vectorial_bent = r.vectorial_bent && r.spectra[c].bent;
  }
  return r;
}

namespace {

struct Row {
  std::vector<std::uint8_t> v;
  std::size_t pivot;
  std::vector<unsigned> comb;  // in terms of the chosen duals d_{c_1}, ..., d_{c_m}
};

}  // namespace

std::optional<VectorialDual> discover_vectorial_dual(const VFunc& F, const VectorialBentReport& report) {
  if (!report.vectorial_bent) return std::nullopt;
  const unsigned p = F.p(), m = F.m();
  const Index q = F.codomain->size();
  const std::size_t N = F.values.size();
  enforce_guard(Guard::FastWalsh, q, "codomain size for dual discovery");

  std::vector<Row> rows;
  std::vector<Index> basis;
  std::vector<std::vector<unsigned>> coeff(q);  // coefficients of (F_c)* on the basis duals

  for (Index c = 1; c < q; ++c) {
    const auto& d = report.spectra[c].dual->values;
    std::vector<std::uint8_t> v(d);
    std::vector<unsigned> acc(m, 0);
    for (const Row& r : rows) {
      unsigned k = v[r.pivot];
      if (!k) continue;
      for (std::size_t x = 0; x < N; ++x) v[x] = static_cast<std::uint8_t>((v[x] + p * p - k * r.v[x]) % p);
      for (unsigned i = 0; i < m; ++i) acc[i] = (acc[i] + k * r.comb[i]) % p;
    }
    auto nz = std::find_if(v.begin(), v.end(), [](std::uint8_t t) { return t != 0; });
    if (nz == v.end()) {
      coeff[c] = acc;
      continue;
    }
    if (basis.size() == m) return std::nullopt;  // span too large
    const std::size_t idx = basis.size();
    basis.push_back(c);
    Row r;
    r.pivot = static_cast<std::size_t>(nz - v.begin());
    unsigned inv = inverse_mod_p(v[r.pivot], p);
    for (auto& t : v) t = static_cast<std::uint8_t>(t * inv % p);
    r.v = std::move(v);
    r.comb.assign(m, 0);
    for (unsigned i = 0; i < m; ++i) r.comb[i] = (p - acc[i]) % p * inv % p;
    r.comb[idx] = (r.comb[idx] + inv) % p;
    rows.push_back(std::move(r));
    coeff[c].assign(m, 0);
    coeff[c][idx] = 1;
  }
  if (basis.size() != m) return std::nullopt;

  // p^m - 1 distinct nonzero coefficient vectors fill the space.
  std::set<std::vector<unsigned>> seen;
  for (Index c = 1; c < q; ++c) {
    if (std::all_of(coeff[c].begin(), coeff[c].end(), [](unsigned t) { return t == 0; })) return std::nullopt;
    if (!seen.insert(coeff[c]).second) return std::nullopt;
  }

  // Coordinates of G are taken along the c_i when they are independent. Otherwise
  // c -> (F_c)* is not linear, sigma cannot be the identity, and unit vectors are used.
  std::vector<Index> frame = basis;
  {
    std::vector<std::vector<unsigned>> rows;
    for (auto c : basis) rows.push_back(F.codomain->digits(c));
    if (rank_mod_p(p, rows) != m) {
      for (unsigned i = 0; i < m; ++i) {
        std::vector<unsigned> e(m, 0);
        e[i] = 1;
        frame[i] = F.codomain->from_digits(e);
      }
    }
  }
  // Dual frame alpha_i with <frame_j, alpha_i> = delta_ij.
  std::vector<Index> alpha(m);
  for (unsigned i = 0; i < m; ++i) {
    bool found = false;
    for (Index a = 0; a < q && !found; ++a) {
      bool ok = true;
      for (unsigned j = 0; j < m && ok; ++j) ok = F.codomain->inner(frame[j], a) == (i == j ? 1u : 0u);
      if (ok) {
        alpha[i] = a;
        found = true;
      }
    }
    if (!found) throw InconsistencyError("codomain inner product is degenerate");
  }

  VectorialDual out;
  out.basis = basis;
  out.sigma.assign(q, 0);
  for (Index c = 1; c < q; ++c) {
    Index s = 0;
    for (unsigned i = 0; i < m; ++i) s = F.codomain->add(s, F.codomain->scale(coeff[c][i], frame[i]));
    out.sigma[c] = s;
  }
  // G(x) = sum_i (F_{c_i})*(x) alpha_i, via a lookup over digit tuples.
  std::vector<Index> combo(ipow(p, m));
  for (Index t = 0; t < combo.size(); ++t) {
    Index s = 0, r = t;
    for (unsigned i = 0; i < m; ++i) {
      s = F.codomain->add(s, F.codomain->scale(static_cast<unsigned>(r % p), alpha[i]));
      r /= p;
    }
    combo[t] = s;
  }
  std::vector<std::uint32_t> g(N);
  std::vector<const std::vector<std::uint8_t>*> bd(m);
  for (unsigned i = 0; i < m; ++i) bd[i] = &report.spectra[basis[i]].dual->values;
  for (std::size_t x = 0; x < N; ++x) {
    Index t = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i) {
      t += (*bd[i])[x] * scale;
      scale *= p;
    }
    g[x] = static_cast<std::uint32_t>(combo[t]);
  }
  out.dual = VFunc(F.domain, F.codomain, std::move(g));

  for (Index c = 1; c < q; ++c) {
    if (component(out.dual, out.sigma[c]).values != report.spectra[c].dual->values) {
      throw InconsistencyError("vectorial dual does not reproduce a component dual");
    }
  }
  out.sigma_identity = true;
  for (Index c = 1; c < q; ++c) out.sigma_identity = out.sigma_identity && out.sigma[c] == c;
  out.duals_bent = true;
  for (Index c = 1; c < q && out.duals_bent; ++c) out.duals_bent = is_bent(*report.spectra[c].dual);
  return out;
}

std::optional<VectorialDual> discover_vectorial_dual(const VFunc& F) {
  return discover_vectorial_dual(F, check_vectorial_bent(F));
}

VdbAnalysis analyze_vdb(const VFunc& F) {
  VdbAnalysis a;
  a.report = check_vectorial_bent(F);
  VdbCertificate& cert = a.cert;
  cert.is_vectorial_bent = a.report.vectorial_bent;
  const Index q = F.codomain->size();
  cert.component_eps.assign(q, std::nullopt);
  if (!cert.is_vectorial_bent) return a;

  bool all_wr = true;
  for (Index c = 1; c < q; ++c) {
    cert.component_eps[c] = a.report.spectra[c].global_eps;
    all_wr = all_wr && cert.component_eps[c].has_value();
  }
  cert.all_weakly_regular = all_wr;
  if (all_wr) {
    bool same = true;
    for (Index c = 2; c < q; ++c) same = same && cert.component_eps[c] == cert.component_eps[1];
    if (same) cert.eps = cert.component_eps[1];
  }
  if (!cert.eps) {
    std::vector<std::vector<UnitTag>> table(q);
    for (Index c = 1; c < q; ++c) table[c] = *a.report.spectra[c].eps;
    cert.eps_table = std::move(table);
  }

  a.vdual = discover_vectorial_dual(F, a.report);
  if (a.vdual) {
    cert.is_vectorial_dual_bent = a.vdual->duals_bent;
    cert.sigma = a.vdual->sigma;
    cert.sigma_identity = a.vdual->sigma_identity;
    cert.vdual = a.vdual->dual;
  }
  cert.condition_a = cert.is_vectorial_dual_bent && cert.sigma_identity && cert.eps.has_value() &&
                     (*cert.eps == UnitTag::PlusOne || *cert.eps == UnitTag::MinusOne);
  if (cert.condition_a && F.p() > 3 && *cert.eps != UnitTag::PlusOne) {
    throw InconsistencyError("Condition A instance with p > 3 and eps = -1");
  }
  return a;
}

void require_condition_a_shape(const VFunc& F) {
  const unsigned n = F.n(), m = F.m();
  if (n % 2 != 0 || n < 4) throw PreconditionError("Condition A needs n even and n >= 4");
  if (m < 2 || 2 * m > n) throw PreconditionError("Condition A needs 2 <= m <= n/2");
}

VdbCertificate check_condition_a(const VFunc& F) {
  require_condition_a_shape(F);
  return analyze_vdb(F).cert;
}

VdbCertificate check_condition_a(const VFunc& F, const VdbAnalysis& a) {
  require_condition_a_shape(F);
  return a.cert;
}

std::vector<std::vector<Index>> preimage_sets(const VFunc& F) {
  std::vector<std::vector<Index>> out(F.codomain->size());
  for (Index x = 0; x < F.values.size(); ++x) out[F.values[x]].push_back(x);
  return out;
}

std::vector<std::vector<Index>> punctured_preimage_sets(const VFunc& F) {
  auto out = preimage_sets(F);
  auto& z = out[F.values[0]];
  z.erase(z.begin());
  return out;
}

bool is_even(const VFunc& F) {
  for (Index x = 0; x < F.values.size(); ++x)
    if (F.values[F.domain->neg(x)] != F.values[x]) return false;
  return true;
}

bool is_scalar_invariant(const VFunc& F) {
  for (unsigned a = 2; a < F.p(); ++a)
    for (Index x = 0; x < F.values.size(); ++x)
      if (F.values[F.domain->scale(a, x)] != F.values[x]) return false;
  return true;
}

ImageCardinalityReport check_image_cardinality(const VFunc& F, const VdbAnalysis& a) {
  const unsigned p = F.p(), n = F.n(), m = F.m();
  if (!a.cert.is_vectorial_dual_bent) throw PreconditionError("image cardinality needs a vectorial dual-bent F");
  if (F.values[0] != 0) throw PreconditionError("image cardinality needs F(0) = 0");
  if (m < 2 || 2 * m > n) throw PreconditionError("image cardinality needs 2 <= m <= n/2");
  if (!is_even(F)) throw PreconditionError("image cardinality needs F(-x) = F(x)");
  ImageCardinalityReport r;
  std::set<Index> img, dimg;
  const auto& G = a.vdual->dual;
  for (Index x = 1; x < F.values.size(); ++x) {
    img.insert(F.values[x]);
    dimg.insert(G.values[x]);
  }
  r.image_size = img.size();
  r.dual_image_size = dimg.size();
  r.all_eps0_minus_one = true;
  for (Index c = 1; c < F.codomain->size(); ++c)
    r.all_eps0_minus_one = r.all_eps0_minus_one && (*a.report.spectra[c].eps)[0] == UnitTag::MinusOne;
  const std::uint64_t pm = ipow(p, m);
  r.expected = (n % 2 == 0 && 2 * m == n && r.all_eps0_minus_one) ? pm - 1 : pm;
  r.holds = r.image_size == r.expected && r.dual_image_size == r.expected;
  return r;
}

ImageCardinalityReport check_image_cardinality(const VFunc& F) { return check_image_cardinality(F, analyze_vdb(F)); }

bool check_preimage_identity(const VFunc& F, const VdbAnalysis& a) {
  if (!a.report.vectorial_bent) return false;
  if (F.values[0] != 0) throw PreconditionError("preimage identity needs F(0) = 0");
  const unsigned p = F.p();
  const Index q = F.codomain->size();
  for (Index c = 1; c < q; ++c)
    if (a.report.spectra[c].dual->values[0] != 0) return false;
  auto sets = punctured_preimage_sets(F);
  const BigInt pn = BigInt(ipow(p, F.n())), pm = BigInt(q);
  std::vector<CycInt> w0;
  for (Index c = 1; c < q; ++c) w0.push_back(a.report.spectra[c].values.at(0));
  for (Index i = 0; i < q; ++i) {
    CycInt s(p);
    for (Index c = 1; c < q; ++c) s = s + w0[c - 1].rotate(-static_cast<std::int64_t>(F.codomain->inner(c, i)));
    BigInt lhs = pm * (BigInt(sets[i].size()) + (i == 0 ? 1 : 0)) - pn;
    if (s != CycInt::integer(p, lhs)) return false;
  }
  return true;
}

}  // namespace dualbent
