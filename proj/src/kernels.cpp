#include "dualbent/kernels.hpp"

#include <algorithm>
#include <cstdlib>

namespace dualbent::kernels {

namespace {

constexpr std::size_t kParallelThreshold = 1u << 12;

unsigned mod_p(long long v, unsigned p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<unsigned>(r < 0 ? r + p : r);
}

void binary_transform(std::int64_t* d, std::size_t N) {
  for (std::size_t s = 1; s < N; s <<= 1) {
    const long long half = static_cast<long long>(N / 2);
#pragma omp parallel for schedule(static) if (N >= kParallelThreshold)
    for (long long idx = 0; idx < half; ++idx) {
      std::size_t hi = static_cast<std::size_t>(idx) / s, lo = static_cast<std::size_t>(idx) % s;
      std::size_t i = hi * 2 * s + lo, j = i + s;
      std::int64_t a = d[i], b = d[j];
      d[i] = a + b;
      d[j] = a - b;
    }
  }
}

template <unsigned P>
void odd_transform(std::int64_t* d, std::size_t N, int sign) {
  unsigned rot[P][P];
  for (unsigned t = 0; t < P; ++t)
    for (unsigned u = 0; u < P; ++u) rot[t][u] = mod_p(static_cast<long long>(sign) * t * u, P);
  for (std::size_t s = 1; s < N; s *= P) {
    const long long count = static_cast<long long>(N / P);
#pragma omp parallel for schedule(static) if (N >= kParallelThreshold)
    for (long long idx = 0; idx < count; ++idx) {
      std::size_t hi = static_cast<std::size_t>(idx) / s, lo = static_cast<std::size_t>(idx) % s;
      std::size_t base = hi * s * P + lo;
      std::int64_t in[P][P];
      for (unsigned t = 0; t < P; ++t) {
        const std::int64_t* src = d + (base + t * s) * P;
        for (unsigned k = 0; k < P; ++k) in[t][k] = src[k];
      }
      for (unsigned u = 0; u < P; ++u) {
        std::int64_t out[P] = {};
        for (unsigned t = 0; t < P; ++t) {
          const unsigned r = rot[t][u];
          for (unsigned k = 0; k < P; ++k) {
            unsigned dst = k + r;
            if (dst >= P) dst -= P;
            out[dst] += in[t][k];
          }
        }
        std::int64_t* dst = d + (base + u * s) * P;
        for (unsigned k = 0; k < P; ++k) dst[k] = out[k];
      }
    }
  }
}

}  // namespace

ZetaTable::ZetaTable(unsigned p_, unsigned n_) : p(p_), n(n_) {
  data.assign(static_cast<std::size_t>(ipow(p_, n_)) * slot_width(p_), 0);
}

ZetaTable zeta_powers(unsigned p, unsigned n, std::span<const std::uint8_t> exps) {
  ZetaTable t(p, n);
  if (exps.size() != t.size()) throw PreconditionError("table length mismatch");
  if (p == 2) {
    for (std::size_t x = 0; x < exps.size(); ++x) t.data[x] = (exps[x] & 1) ? -1 : 1;
  } else {
    for (std::size_t x = 0; x < exps.size(); ++x) t.data[x * p + exps[x] % p] = 1;
  }
  return t;
}

ZetaTable integers(unsigned p, unsigned n, std::span<const std::int64_t> w) {
  ZetaTable t(p, n);
  if (w.size() != t.size()) throw PreconditionError("table length mismatch");
  const unsigned wd = t.width();
  for (std::size_t x = 0; x < w.size(); ++x) t.data[x * wd] = w[x];
  return t;
}

std::int64_t max_abs(const ZetaTable& t) {
  std::int64_t m = 0;
  for (auto v : t.data) m = std::max<std::int64_t>(m, v < 0 ? -v : v);
  return m;
}

void check_transform_headroom(const ZetaTable& t) {
  __int128 bound = static_cast<__int128>(max_abs(t)) * static_cast<__int128>(t.size());
  if (bound > (static_cast<__int128>(1) << 62)) throw GuardError("transform could overflow int64");
}

void transform(ZetaTable& t, int sign) {
  check_transform_headroom(t);
  const std::size_t N = t.size();
  switch (t.p) {
    case 2: binary_transform(t.data.data(), N); break;
    case 3: odd_transform<3>(t.data.data(), N, sign); break;
    case 5: odd_transform<5>(t.data.data(), N, sign); break;
    case 7: odd_transform<7>(t.data.data(), N, sign); break;
    default: serial::transform(t, sign);
  }
}

namespace serial {

void transform(ZetaTable& t, int sign) {
  check_transform_headroom(t);
  const unsigned p = t.p, w = t.width();
  const std::size_t N = t.size();
  std::vector<std::int64_t> in(static_cast<std::size_t>(p) * w), out(static_cast<std::size_t>(p) * w);
  for (std::size_t s = 1; s < N; s *= p) {
    for (std::size_t base = 0; base < N; base += s * p) {
      for (std::size_t lo = 0; lo < s; ++lo) {
        for (unsigned k = 0; k < p; ++k)
          for (unsigned c = 0; c < w; ++c) in[k * w + c] = t.at(base + lo + k * s)[c];
        std::fill(out.begin(), out.end(), 0);
        for (unsigned u = 0; u < p; ++u) {
          for (unsigned k = 0; k < p; ++k) {
            unsigned r = mod_p(static_cast<long long>(sign) * u * k, p);
            if (p == 2) {
              out[u] += (r ? -1 : 1) * in[k];
            } else {
              for (unsigned c = 0; c < p; ++c) out[u * p + (c + r) % p] += in[k * p + c];
            }
          }
        }
        for (unsigned u = 0; u < p; ++u)
          for (unsigned c = 0; c < w; ++c) t.at(base + lo + u * s)[c] = out[u * w + c];
      }
    }
  }
}

}  // namespace serial

void multiply(ZetaTable& a, const ZetaTable& b) {
  if (a.p != b.p || a.size() != b.size()) throw PreconditionError("table shape mismatch");
  __int128 bound = static_cast<__int128>(max_abs(a)) * max_abs(b) * a.width();
  if (bound > (static_cast<__int128>(1) << 62)) throw GuardError("pointwise product could overflow int64");
  const unsigned p = a.p;
  const long long N = static_cast<long long>(a.size());
  if (p == 2) {
    for (long long x = 0; x < N; ++x) a.data[x] *= b.data[x];
    return;
  }
#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(N) >= kParallelThreshold)
  for (long long x = 0; x < N; ++x) {
    std::int64_t r[8] = {};
    const std::int64_t* u = a.at(x);
    const std::int64_t* v = b.at(x);
    for (unsigned i = 0; i < p; ++i) {
      if (!u[i]) continue;
      for (unsigned j = 0; j < p; ++j) {
        unsigned k = i + j;
        if (k >= p) k -= p;
        r[k] += u[i] * v[j];
      }
    }
    std::int64_t* dst = a.at(x);
    for (unsigned k = 0; k < p; ++k) dst[k] = r[k];
  }
}

ZetaTable multiply_conj(const ZetaTable& a, const ZetaTable& b) {
  ZetaTable c = b;
  if (c.p != 2) {
    const unsigned p = c.p;
    for (std::size_t x = 0; x < c.size(); ++x) {
      std::int64_t* v = c.at(x);
      for (unsigned k = 1; k < (p + 1) / 2; ++k) std::swap(v[k], v[p - k]);
    }
  }
  ZetaTable r = a;
  multiply(r, c);
  return r;
}

ZetaTable permuted(const ZetaTable& t, std::span<const std::uint32_t> perm) {
  if (perm.size() != t.size()) throw PreconditionError("permutation length mismatch");
  ZetaTable r(t.p, t.n);
  const unsigned w = t.width();
  for (std::size_t x = 0; x < perm.size(); ++x) std::copy_n(t.at(perm[x]), w, r.at(x));
  return r;
}

std::vector<std::int64_t> canonical(const ZetaTable& t) {
  if (t.p == 2) return t.data;
  const unsigned p = t.p;
  std::vector<std::int64_t> out(t.size() * (p - 1));
  for (std::size_t x = 0; x < t.size(); ++x) {
    const std::int64_t* v = t.at(x);
    for (unsigned k = 0; k + 1 < p; ++k) out[x * (p - 1) + k] = v[k] - v[p - 1];
  }
  return out;
}

ZetaTable from_canonical(unsigned p, unsigned n, std::span<const std::int64_t> c) {
  ZetaTable t(p, n);
  if (p == 2) {
    if (c.size() != t.size()) throw PreconditionError("canonical length mismatch");
    std::copy(c.begin(), c.end(), t.data.begin());
    return t;
  }
  if (c.size() != t.size() * (p - 1)) throw PreconditionError("canonical length mismatch");
  for (std::size_t x = 0; x < t.size(); ++x)
    for (unsigned k = 0; k + 1 < p; ++k) t.at(x)[k] = c[x * (p - 1) + k];
  return t;
}

}  // namespace dualbent::kernels
