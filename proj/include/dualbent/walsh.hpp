#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dualbent/cyclotomic.hpp"
#include "dualbent/field.hpp"
#include "dualbent/kernels.hpp"

namespace dualbent {

// f: V_n -> F_p as a table over canonical indices.
struct PFunc {
  SpacePtr space;
  std::vector<std::uint8_t> values;

  PFunc() = default;
  PFunc(SpacePtr s, std::vector<std::uint8_t> v);
  unsigned p() const { return space->p(); }
  std::uint8_t operator()(Index x) const { return values[x]; }
};

// Table of Z[zeta_p] values with canonical int64 coefficients.
class SpectrumTable {
 public:
  SpectrumTable() = default;
  SpectrumTable(unsigned p, unsigned n, std::vector<std::int64_t> coeffs);

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned width() const { return cyc_width(p_); }
  std::size_t size() const { return coeffs_.size() / width(); }
  CycInt at(Index a) const;
  std::span<const std::int64_t> raw(Index a) const { return {coeffs_.data() + a * width(), width()}; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool operator==(const SpectrumTable& o) const = default;

 private:
  unsigned p_ = 2, n_ = 0;
  std::vector<std::int64_t> coeffs_;
};

struct WalshSpectrum {
  SpectrumTable values;
  bool bent = false;
  std::optional<PFunc> dual;                    // f*, when bent
  std::optional<std::vector<UnitTag>> eps;      // eps_f(a), when bent
  std::optional<UnitTag> global_eps;            // set iff weakly regular

  bool weakly_regular() const { return global_eps.has_value(); }
  bool regular() const { return global_eps == UnitTag::PlusOne; }
};

// W_f(a) = sum_x z^{f(x) - <a,x>} by the double loop.
SpectrumTable walsh_naive(const PFunc& f);
// Butterfly on flattened coordinates followed by the Gram index map.
SpectrumTable walsh_fast(const PFunc& f);
// Same pipeline on the serial reference kernel.
SpectrumTable walsh_fast_serial(const PFunc& f);
WalshSpectrum classify_bent(const PFunc& f);
// Decides bentness only, without building the dual.
bool is_bent(const PFunc& f);

// p^n z^{f(x)} = sum_a W_f(a) z^{<a,x>} at every x.
bool check_inverse_transform(const PFunc& f);
bool check_inverse_transform(const PFunc& f, const SpectrumTable& w);
// sum_a |W(a)|^2 = p^{2n}.
bool check_parseval(const SpectrumTable& w);

// chi_u(w) = sum_x w(x) z^{<u,x>} for every u.
SpectrumTable character_sums(const SpaceDesc& space, std::span<const std::int64_t> weights);
// Same, left in slot form for further products.
kernels::ZetaTable character_table(const SpaceDesc& space, std::span<const std::int64_t> weights);
// g -> sum_u t(u) z^{-<u,g>}, slot form (no division by p^n).
kernels::ZetaTable inverse_character_table(const SpaceDesc& space, kernels::ZetaTable t);

// Indicator weights of a subset.
std::vector<std::int64_t> indicator(const SpaceDesc& space, std::span<const Index> set);

}  // namespace dualbent
