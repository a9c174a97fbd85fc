#include "dualbent/hadamard.hpp"

namespace dualbent {

namespace {

// sum of z^{e_k} given as per-residue counts: zero iff all counts agree
bool counts_vanish(const std::vector<std::int64_t>& cnt) {
  for (auto c : cnt)
    if (c != cnt[0]) return false;
  return true;
}

// Counts equal eps * scale * z^j as an element of Z[z].
bool counts_equal_scaled_root(const std::vector<std::int64_t>& cnt, std::int64_t factor, unsigned j) {
  const std::size_t p = cnt.size();
  std::vector<std::int64_t> want(p, 0);
  want[j] = factor;
  // compare modulo the all-ones vector
  const std::int64_t shift = cnt[0] - want[0];
  for (std::size_t k = 0; k < p; ++k)
    if (cnt[k] - want[k] != shift) return false;
  return true;
}

PFunc shifted(const GHMatrix& H) {
  const auto& V = *H.generator.space;
  const unsigned p = V.p();
  std::vector<std::uint8_t> g(V.size());
  for (Index u = 0; u < V.size(); ++u) g[u] = static_cast<std::uint8_t>((H.generator.values[u] + p - V.inner(H.shift, u)) % p);
  return PFunc(H.generator.space, std::move(g));
}

}  // namespace

unsigned GHMatrix::exponent(Index x, Index y) const {
  const auto& V = *generator.space;
  const Index w = V.sub(x, y);
  const unsigned p = V.p();
  return (generator.values[w] + p - V.inner(shift, w)) % p;
}

GHMatrix component_matrix(const VFunc& F, Index c, Index z) {
  if (z >= F.domain->size()) throw PreconditionError("shift outside the domain");
  return GHMatrix{component(F, c), z};
}

GHReport check_generalized_hadamard(const GHMatrix& H) {
  GHReport r;
  PFunc g = shifted(H);
  r.bent_route = is_bent(g);
  const auto& V = *g.space;
  if (V.size() <= guard_limit(Guard::PdsBruteforce)) {
    const unsigned p = V.p();
    bool all = true;
    std::vector<std::int64_t> cnt(p);
    for (Index w = 1; w < V.size() && all; ++w) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (Index u = 0; u < V.size(); ++u) ++cnt[(g.values[u] + p - g.values[V.sub(u, w)]) % p];
      all = counts_vanish(cnt);
    }
    r.autocorrelation_route = all;
    if (all != r.bent_route) throw InconsistencyError("bent and autocorrelation routes disagree");
  }
  r.is_generalized_hadamard = r.bent_route;
  return r;
}

std::vector<std::uint8_t> materialize(const GHMatrix& H) {
  const Index N = H.order();
  enforce_guard(Guard::MatrixMaterialize, N, "matrix materialization");
  std::vector<std::uint8_t> e(N * N);
  for (Index x = 0; x < N; ++x)
    for (Index y = 0; y < N; ++y) e[x * N + y] = static_cast<std::uint8_t>(H.exponent(x, y));
  return e;
}

bool check_gh_by_matrix(const GHMatrix& H) {
  auto e = materialize(H);
  const Index N = H.order();
  const unsigned p = H.generator.p();
  std::vector<std::int64_t> cnt(p);
  for (Index x = 0; x < N; ++x)
    for (Index y = 0; y < N; ++y) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (Index z = 0; z < N; ++z) ++cnt[(e[x * N + z] + p - e[y * N + z]) % p];
      bool ok = x == y ? counts_equal_scaled_root(cnt, static_cast<std::int64_t>(N), 0) : counts_vanish(cnt);
      if (!ok) return false;
    }
  return true;
}

UnitConditionReport check_unit_condition(const VFunc& F, const VdbAnalysis& a) {
  if (F.p() == 2) throw PreconditionError("unit condition needs p odd");
  UnitConditionReport r;
  if (!a.cert.is_vectorial_bent || !a.cert.eps) return r;
  if (*a.cert.eps == UnitTag::PlusOne || *a.cert.eps == UnitTag::MinusOne) {
    r.holds = true;
    r.eps = a.cert.eps;
  }
  return r;
}

ProductReport check_product_identity(const VFunc& F, const VdbAnalysis& a, Index c, Index d) {
  const auto& V = *F.domain;
  const auto& C = *F.codomain;
  const unsigned p = F.p(), n = F.n();
  if (c == 0 || d == 0 || c >= C.size() || d >= C.size()) throw PreconditionError("product pair needs nonzero c, d");
  if (c == d) throw PreconditionError("invalid product pair: c = d");
  if (n % 2) throw PreconditionError("product identity needs n even");
  if (!a.report.vectorial_bent) throw PreconditionError("product identity needs F vectorial bent");
  ProductReport r;
  r.c = c;
  r.d = d;
  std::int64_t eps = 1;
  if (p != 2) {
    auto u = check_unit_condition(F, a);
    if (!u.holds) return r;
    eps = *u.eps == UnitTag::PlusOne ? 1 : -1;
  }
  const auto half = static_cast<std::int64_t>(ipow(p, n / 2));
  r.factor = eps * half;
  const Index diff = C.sub(c, d);

  // T(g) = p^{-n} sum_a W_c(a) conj(W_d(a)) z^{<a,g>} = sum_u z^{F_c(u) - F_d(u-g)}
  auto wc = kernels::from_canonical(p, n, a.report.spectra[c].values.coeffs());
  auto wd = kernels::from_canonical(p, n, a.report.spectra[d].values.coeffs());
  auto prod = kernels::multiply_conj(wc, wd);
  auto back = inverse_character_table(V, std::move(prod));
  auto canon = kernels::canonical(back);
  const unsigned w = cyc_width(p);
  const auto vol = static_cast<std::int64_t>(V.size());
  auto target = component(F, diff);
  bool ok = true;
  for (Index g = 0; g < V.size() && ok; ++g) {
    // inverse table holds sum_a t(a) z^{-<a,h>}; T(g) sits at h = -g
    const Index h = V.neg(g);
    std::vector<std::int64_t> got(w);
    for (unsigned j = 0; j < w; ++j) {
      if (canon[h * w + j] % vol != 0) throw InconsistencyError("cross-correlation not divisible by p^n");
      got[j] = canon[h * w + j] / vol;
    }
    auto want = CycInt::zeta_power(p, target.values[g]) * BigInt(r.factor);
    ok = CycInt::from_canonical(p, got) == want;
  }
  r.walsh_route = ok;

  if (V.size() <= guard_limit(Guard::MatrixMaterialize)) {
    auto ec = materialize(component_matrix(F, c));
    auto ed = materialize(component_matrix(F, d));
    auto et = materialize(component_matrix(F, diff));
    const Index N = V.size();
    bool mok = true;
    std::vector<std::int64_t> cnt(p);
    for (Index x = 0; x < N && mok; ++x)
      for (Index y = 0; y < N && mok; ++y) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (Index z = 0; z < N; ++z) ++cnt[(ec[x * N + z] + p - ed[y * N + z]) % p];
        if (p == 2) {
          mok = cnt[0] - cnt[1] == r.factor * (et[x * N + y] ? -1 : 1);
        } else {
          mok = counts_equal_scaled_root(cnt, r.factor, et[x * N + y]);
        }
      }
    r.matrix_route = mok;
    if (mok != r.walsh_route) throw InconsistencyError("Walsh and matrix routes of the product identity disagree");
  }
  r.holds = r.walsh_route;
  return r;
}

}  // namespace dualbent
