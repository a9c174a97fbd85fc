#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dualbent/common.hpp"

// Exact radix-p character transforms over F_p^n with the plain dot product.
// Values live in Z[zeta_p] as int64 slots: one integer per entry when p = 2, and p
// coefficients of 1, z, ..., z^{p-1} (unreduced) when p is odd. Multiplying by z^k
// is a rotation of the slots.
namespace dualbent::kernels {

inline unsigned slot_width(unsigned p) { return p == 2 ? 1u : p; }

struct ZetaTable {
  unsigned p = 2;
  unsigned n = 0;
  std::vector<std::int64_t> data;

  ZetaTable() = default;
  ZetaTable(unsigned p, unsigned n);
  unsigned width() const { return slot_width(p); }
  std::size_t size() const { return data.size() / width(); }
  std::int64_t* at(std::size_t i) { return data.data() + i * width(); }
  const std::int64_t* at(std::size_t i) const { return data.data() + i * width(); }
};

// Entry x holds z^{e[x]}.
ZetaTable zeta_powers(unsigned p, unsigned n, std::span<const std::uint8_t> exps);
// Entry x holds the integer w[x].
ZetaTable integers(unsigned p, unsigned n, std::span<const std::int64_t> w);

// In place: out[b] = sum_x in[x] z^{sign * (b . x)}, sign = +1 or -1.
// OpenMP-parallel over the butterflies of each stage.
void transform(ZetaTable& t, int sign);

namespace serial {
// Reference implementation with runtime p and no threading.
void transform(ZetaTable& t, int sign);
}  // namespace serial

// a[x] *= b[x]
void multiply(ZetaTable& a, const ZetaTable& b);
// Result entry x = a[x] * conj(b[x]).
ZetaTable multiply_conj(const ZetaTable& a, const ZetaTable& b);
// Entry x <- entry perm[x].
ZetaTable permuted(const ZetaTable& t, std::span<const std::uint32_t> perm);

std::int64_t max_abs(const ZetaTable& t);

// Canonical coefficients (width p-1, or 1 when p = 2) for every entry.
std::vector<std::int64_t> canonical(const ZetaTable& t);
// Inverse of canonical(): canonical coefficients back to slots.
ZetaTable from_canonical(unsigned p, unsigned n, std::span<const std::int64_t> c);

// Throws GuardError if a transform of t could overflow int64.
void check_transform_headroom(const ZetaTable& t);

}  // namespace dualbent::kernels
