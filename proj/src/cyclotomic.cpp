#include "dualbent/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dualbent {

namespace {

void require_same(const CycInt& a, const CycInt& b) {
  if (a.p() != b.p()) throw PreconditionError("cyclotomic modulus mismatch");
}

unsigned mod_p(std::int64_t j, unsigned p) {
  std::int64_t r = j % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<unsigned>(r);
}

int euler_eta(unsigned x, unsigned p) {
  x %= p;
  if (x == 0) return 0;
  std::uint64_t r = 1, b = x, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

CycInt::CycInt(unsigned p) : p_(p), c_(cyc_width(p)) {
  if (p < 2) throw PreconditionError("cyclotomic modulus must be prime");
}

CycInt CycInt::integer(unsigned p, const BigInt& v) {
  CycInt r(p);
  r.c_[0] = v;
  return r;
}

CycInt CycInt::zeta_power(unsigned p, std::int64_t j) {
  std::vector<BigInt> s(p);
  s[mod_p(j, p)] = 1;
  return reduce(p, std::move(s));
}

CycInt CycInt::reduce(unsigned p, std::vector<BigInt> slots) {
  CycInt r(p);
  const BigInt last = slots[p - 1];
  for (unsigned i = 0; i < cyc_width(p); ++i) r.c_[i] = slots[i] - last;
  return r;
}

CycInt CycInt::from_slots(unsigned p, std::span<const std::int64_t> slots) {
  if (slots.size() != p) throw PreconditionError("slot count must equal p");
  std::vector<BigInt> s(slots.begin(), slots.end());
  return reduce(p, std::move(s));
}

CycInt CycInt::from_canonical(unsigned p, std::span<const std::int64_t> coeffs) {
  if (coeffs.size() != cyc_width(p)) throw PreconditionError("canonical width mismatch");
  CycInt r(p);
  for (unsigned i = 0; i < coeffs.size(); ++i) r.c_[i] = coeffs[i];
  return r;
}

std::vector<BigInt> CycInt::slots() const {
  std::vector<BigInt> s(p_);
  for (unsigned i = 0; i < c_.size(); ++i) s[i] = c_[i];
  return s;
}

CycInt CycInt::operator+(const CycInt& o) const {
  require_same(*this, o);
  CycInt r(p_);
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  require_same(*this, o);
  CycInt r(p_);
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(p_);
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  require_same(*this, o);
  auto a = slots(), b = o.slots();
  std::vector<BigInt> s(p_);
  for (unsigned i = 0; i < p_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < p_; ++j) {
      if (b[j] == 0) continue;
      s[(i + j) % p_] += a[i] * b[j];
    }
  }
  return reduce(p_, std::move(s));
}

CycInt CycInt::operator*(const BigInt& v) const {
  CycInt r(p_);
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * v;
  return r;
}

bool CycInt::operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }

CycInt CycInt::conj() const {
  auto a = slots();
  std::vector<BigInt> s(p_);
  for (unsigned i = 0; i < p_; ++i) s[(p_ - i) % p_] = a[i];
  return reduce(p_, std::move(s));
}

CycInt CycInt::rotate(std::int64_t j) const {
  auto a = slots();
  std::vector<BigInt> s(p_);
  unsigned k = mod_p(j, p_);
  for (unsigned i = 0; i < p_; ++i) s[(i + k) % p_] = a[i];
  return reduce(p_, std::move(s));
}

bool CycInt::is_zero() const {
  for (auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (unsigned i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigInt CycInt::rational_value() const {
  if (!is_rational()) throw PreconditionError("cyclotomic integer is not rational");
  return c_[0];
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> z = 0;
  for (unsigned i = 0; i < c_.size(); ++i) {
    double ang = 2.0 * std::numbers::pi * i / p_;
    z += c_[i].convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (i) os << " + ";
    os << c_[i];
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return os.str();
}

CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
CycInt cyc_conj(const CycInt& a) { return a.conj(); }

CycInt gauss_sum(unsigned p) {
  if (p == 2) throw PreconditionError("Gauss sum needs odd p");
  std::vector<std::int64_t> s(p, 0);
  for (unsigned x = 1; x < p; ++x) s[x] = euler_eta(x, p);
  return CycInt::from_slots(p, s);
}

const char* to_string(UnitTag t) {
  switch (t) {
    case UnitTag::PlusOne: return "+1";
    case UnitTag::MinusOne: return "-1";
    case UnitTag::PlusI: return "+i";
    case UnitTag::MinusI: return "-i";
  }
  return "?";
}

std::optional<UnitTag> parse_unit_tag(std::string_view s) {
  if (s == "+1") return UnitTag::PlusOne;
  if (s == "-1") return UnitTag::MinusOne;
  if (s == "+i") return UnitTag::PlusI;
  if (s == "-i") return UnitTag::MinusI;
  return std::nullopt;
}

namespace {
// i^k encoding: +1 -> 0, +i -> 1, -1 -> 2, -i -> 3
int power_of_i(UnitTag t) {
  switch (t) {
    case UnitTag::PlusOne: return 0;
    case UnitTag::PlusI: return 1;
    case UnitTag::MinusOne: return 2;
    case UnitTag::MinusI: return 3;
  }
  return 0;
}
UnitTag from_power_of_i(int k) {
  static const UnitTag t[4] = {UnitTag::PlusOne, UnitTag::PlusI, UnitTag::MinusOne, UnitTag::MinusI};
  return t[((k % 4) + 4) % 4];
}
}  // namespace

UnitTag unit_mul(UnitTag a, UnitTag b) { return from_power_of_i(power_of_i(a) + power_of_i(b)); }
UnitTag unit_inverse(UnitTag t) { return from_power_of_i(-power_of_i(t)); }
UnitTag unit_from_sign(int s) { return s >= 0 ? UnitTag::PlusOne : UnitTag::MinusOne; }

namespace {

struct Candidate {
  BentMatch key;
  CycInt value;
};

std::vector<Candidate> candidates(unsigned p, unsigned n) {
  std::vector<Candidate> out;
  if (p == 2) {
    if (n % 2) return out;
    BigInt P = BigInt(1) << (n / 2);
    for (unsigned j = 0; j < 2; ++j)
      out.push_back({{UnitTag::PlusOne, j}, CycInt::zeta_power(2, j) * P});
    return out;
  }
  BigInt P = 1;
  for (unsigned i = 0; i < n / 2; ++i) P *= p;
  CycInt base = CycInt::integer(p, P);
  UnitTag plus = UnitTag::PlusOne, minus = UnitTag::MinusOne;
  if (n % 2) {
    base = gauss_sum(p) * P;
    if (p % 4 == 3) {
      plus = UnitTag::PlusI;
      minus = UnitTag::MinusI;
    }
  }
  for (unsigned j = 0; j < p; ++j) {
    CycInt v = base.rotate(j);
    out.push_back({{plus, j}, v});
    out.push_back({{minus, j}, -v});
  }
  return out;
}

}  // namespace

std::optional<BentMatch> match_bent_value(const CycInt& w, unsigned p, unsigned n) {
  if (w.p() != p) throw PreconditionError("cyclotomic modulus mismatch");
  for (auto& c : candidates(p, n))
    if (c.value == w) return c.key;
  return std::nullopt;
}

CycInt bent_value(unsigned p, unsigned n, UnitTag tag, unsigned j) {
  for (auto& c : candidates(p, n))
    if (c.key.tag == tag && c.key.j == j % p) return c.value;
  throw PreconditionError(std::string("unit tag ") + to_string(tag) + " is not a bent value tag here");
}

BentMatcher::BentMatcher(unsigned p, unsigned n) : p_(p), n_(n), width_(cyc_width(p)) {
  for (auto& c : candidates(p, n)) {
    keys_.push_back(c.key);
    for (auto& v : c.value.coeffs()) {
      if (boost::multiprecision::abs(v) > BigInt(1) << 62) throw GuardError("bent value exceeds int64");
      values_.push_back(v.convert_to<std::int64_t>());
    }
  }
}

std::optional<BentMatch> BentMatcher::match(std::span<const std::int64_t> w) const {
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    const std::int64_t* v = values_.data() + k * width_;
    unsigned i = 0;
    while (i < width_ && v[i] == w[i]) ++i;
    if (i == width_) return keys_[k];
  }
  return std::nullopt;
}

std::span<const std::int64_t> BentMatcher::candidate(UnitTag tag, unsigned j) const {
  for (std::size_t k = 0; k < keys_.size(); ++k)
    if (keys_[k].tag == tag && keys_[k].j == j) return {values_.data() + k * width_, width_};
  throw PreconditionError("no such bent candidate");
}

}  // namespace dualbent
