#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualbent/common.hpp"

namespace dualbent {

using BigInt = boost::multiprecision::cpp_int;

// Number of canonical coefficients for Z[zeta_p]: p-1, or 1 when p = 2.
inline unsigned cyc_width(unsigned p) { return p == 2 ? 1u : p - 1; }

// Element of Z[zeta_p] in the power basis 1, z, ..., z^{p-2}.
class CycInt {
 public:
  explicit CycInt(unsigned p);
  static CycInt integer(unsigned p, const BigInt& v);
  static CycInt zeta_power(unsigned p, std::int64_t j);
  // From p coefficients of 1, z, ..., z^{p-1} (p = 2: coefficients of 1 and -1).
  static CycInt from_slots(unsigned p, std::span<const std::int64_t> slots);
  static CycInt from_canonical(unsigned p, std::span<const std::int64_t> coeffs);

  unsigned p() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator*(const BigInt& s) const;
  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  // z -> z^{p-1}
  CycInt conj() const;
  // Multiply by z^j.
  CycInt rotate(std::int64_t j) const;
  bool is_zero() const;
  bool is_rational() const;
  BigInt rational_value() const;  // requires is_rational()
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  std::vector<BigInt> slots() const;  // p slots, last zero
  static CycInt reduce(unsigned p, std::vector<BigInt> slots);

  unsigned p_;
  std::vector<BigInt> c_;
};

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_conj(const CycInt& a);

// g = sum over nonzero x of eta(x) z^x; g^2 = eta(-1) p.
CycInt gauss_sum(unsigned p);

enum class UnitTag : std::uint8_t { PlusOne, MinusOne, PlusI, MinusI };

const char* to_string(UnitTag t);
std::optional<UnitTag> parse_unit_tag(std::string_view s);
UnitTag unit_mul(UnitTag a, UnitTag b);
UnitTag unit_inverse(UnitTag t);
UnitTag unit_from_sign(int s);  // +1 or -1

struct BentMatch {
  UnitTag tag;
  unsigned j;
  bool operator==(const BentMatch&) const = default;
};

// Candidates eps p^{n/2} z^j (n even) or eps' p^{(n-1)/2} g z^j (n odd). For
// p = 3 mod 4 and n odd the Gauss sum carries the sqrt(-1), so +g is tagged +i.
std::optional<BentMatch> match_bent_value(const CycInt& w, unsigned p, unsigned n);

// The value matched by (tag, j).
CycInt bent_value(unsigned p, unsigned n, UnitTag tag, unsigned j);

// Same matcher on int64 canonical coefficients; built once per (p, n).
class BentMatcher {
 public:
  BentMatcher(unsigned p, unsigned n);
  std::optional<BentMatch> match(std::span<const std::int64_t> canonical) const;
  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  // Canonical int64 coefficients of the candidate value.
  std::span<const std::int64_t> candidate(UnitTag tag, unsigned j) const;

 private:
  unsigned p_, n_, width_;
  std::vector<BentMatch> keys_;
  std::vector<std::int64_t> values_;  // keys_.size() * width_
};

}  // namespace dualbent
