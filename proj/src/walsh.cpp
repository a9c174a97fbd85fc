#include "dualbent/walsh.hpp"

#include <algorithm>

namespace dualbent {

PFunc::PFunc(SpacePtr s, std::vector<std::uint8_t> v) : space(std::move(s)), values(std::move(v)) {
  if (!space) throw PreconditionError("function without space");
  if (values.size() != space->size()) throw PreconditionError("table length must equal p^n");
  for (auto x : values)
    if (x >= space->p()) throw PreconditionError("function value out of range");
}

SpectrumTable::SpectrumTable(unsigned p, unsigned n, std::vector<std::int64_t> coeffs)
    : p_(p), n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ipow(p, n) * cyc_width(p)) throw PreconditionError("spectrum length mismatch");
}

CycInt SpectrumTable::at(Index a) const { return CycInt::from_canonical(p_, raw(a)); }

namespace {

kernels::ZetaTable apply_gram(const SpaceDesc& space, kernels::ZetaTable t) {
  if (space.gram_is_identity()) return t;
  return kernels::permuted(t, space.gram_permutation());
}

SpectrumTable fast_impl(const PFunc& f, bool serial) {
  const SpaceDesc& V = *f.space;
  enforce_guard(Guard::FastWalsh, V.size(), "walsh_fast");
  auto t = kernels::zeta_powers(V.p(), V.dimension(), f.values);
  if (serial) {
    kernels::serial::transform(t, -1);
  } else {
    kernels::transform(t, -1);
  }
  t = apply_gram(V, std::move(t));
  return SpectrumTable(V.p(), V.dimension(), kernels::canonical(t));
}

}  // namespace

SpectrumTable walsh_naive(const PFunc& f) {
  const SpaceDesc& V = *f.space;
  enforce_guard(Guard::NaiveWalsh, V.size(), "walsh_naive");
  const unsigned p = V.p();
  const Index N = V.size();
  const unsigned w = cyc_width(p);
  std::vector<std::int64_t> out(N * w);
  std::vector<std::int64_t> count(p);
  for (Index a = 0; a < N; ++a) {
    std::fill(count.begin(), count.end(), 0);
    for (Index x = 0; x < N; ++x) {
      unsigned e = (f.values[x] + p - V.inner(a, x)) % p;
      count[e]++;
    }
    if (p == 2) {
      out[a] = count[0] - count[1];
    } else {
      for (unsigned k = 0; k + 1 < p; ++k) out[a * w + k] = count[k] - count[p - 1];
    }
  }
  return SpectrumTable(p, V.dimension(), std::move(out));
}

SpectrumTable walsh_fast(const PFunc& f) { return fast_impl(f, false); }

SpectrumTable walsh_fast_serial(const PFunc& f) { return fast_impl(f, true); }

WalshSpectrum classify_bent(const PFunc& f) {
  const SpaceDesc& V = *f.space;
  WalshSpectrum s;
  s.values = walsh_fast(f);
  const Index N = V.size();
  BentMatcher matcher(V.p(), V.dimension());
  std::vector<std::uint8_t> dual(N);
  std::vector<UnitTag> eps(N);
  for (Index a = 0; a < N; ++a) {
    auto m = matcher.match(s.values.raw(a));
    if (!m) return s;
    dual[a] = static_cast<std::uint8_t>(m->j);
    eps[a] = m->tag;
  }
  s.bent = true;
  bool constant = std::all_of(eps.begin(), eps.end(), [&](UnitTag t) { return t == eps[0]; });
  if (constant) s.global_eps = eps[0];
  s.dual = PFunc(f.space, std::move(dual));
  s.eps = std::move(eps);
  return s;
}

bool is_bent(const PFunc& f) {
  auto w = walsh_fast(f);
  BentMatcher matcher(f.space->p(), f.space->dimension());
  for (Index a = 0; a < f.space->size(); ++a)
    if (!matcher.match(w.raw(a))) return false;
  return true;
}

bool check_inverse_transform(const PFunc& f) { return check_inverse_transform(f, walsh_fast(f)); }

bool check_inverse_transform(const PFunc& f, const SpectrumTable& w) {
  const SpaceDesc& V = *f.space;
  enforce_guard(Guard::FastWalsh, V.size(), "inverse transform");
  const unsigned p = V.p();
  auto t = kernels::from_canonical(p, V.dimension(), w.coeffs());
  kernels::transform(t, +1);
  t = apply_gram(V, std::move(t));
  auto c = kernels::canonical(t);
  const unsigned wd = cyc_width(p);
  const std::int64_t N = static_cast<std::int64_t>(V.size());
  for (Index x = 0; x < V.size(); ++x) {
    const std::int64_t* v = c.data() + x * wd;
    if (p == 2) {
      if (v[0] != (f.values[x] ? -N : N)) return false;
      continue;
    }
    // N z^j in canonical form: N at j (j < p-1), or -N everywhere for j = p-1.
    const unsigned j = f.values[x];
    for (unsigned k = 0; k < wd; ++k) {
      std::int64_t expect = (j == p - 1) ? -N : (k == j ? N : 0);
      if (v[k] != expect) return false;
    }
  }
  return true;
}

bool check_parseval(const SpectrumTable& w) {
  const unsigned p = w.p();
  std::vector<__int128> acc(p, 0);
  for (Index a = 0; a < w.size(); ++a) {
    auto c = w.raw(a);
    if (p == 2) {
      acc[0] += static_cast<__int128>(c[0]) * c[0];
      continue;
    }
    // slots of the canonical value: c_0..c_{p-2}, 0
    for (unsigned i = 0; i + 1 < p; ++i) {
      if (!c[i]) continue;
      for (unsigned j = 0; j + 1 < p; ++j) acc[(i + p - j) % p] += static_cast<__int128>(c[i]) * c[j];
    }
  }
  __int128 target = 1;
  for (unsigned i = 0; i < 2 * w.n(); ++i) target *= p;
  if (p == 2) return acc[0] == target;
  for (unsigned k = 0; k + 1 < p; ++k)
    if (acc[k] - acc[p - 1] != (k == 0 ? target : 0)) return false;
  return true;
}

kernels::ZetaTable character_table(const SpaceDesc& space, std::span<const std::int64_t> weights) {
  enforce_guard(Guard::FastWalsh, space.size(), "character sums");
  auto t = kernels::integers(space.p(), space.dimension(), weights);
  kernels::transform(t, +1);
  return apply_gram(space, std::move(t));
}

SpectrumTable character_sums(const SpaceDesc& space, std::span<const std::int64_t> weights) {
  auto t = character_table(space, weights);
  return SpectrumTable(space.p(), space.dimension(), kernels::canonical(t));
}

kernels::ZetaTable inverse_character_table(const SpaceDesc& space, kernels::ZetaTable t) {
  enforce_guard(Guard::FastWalsh, space.size(), "inverse character sums");
  kernels::transform(t, -1);
  return apply_gram(space, std::move(t));
}

std::vector<std::int64_t> indicator(const SpaceDesc& space, std::span<const Index> set) {
  std::vector<std::int64_t> w(space.size(), 0);
  for (auto x : set) {
    if (x >= space.size()) throw PreconditionError("set element outside the space");
    w[x] = 1;
  }
  return w;
}

}  // namespace dualbent
