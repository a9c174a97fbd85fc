#include "dualbent/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dualbent {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned inverse_mod_p(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) throw PreconditionError("zero has no inverse mod p");
  for (unsigned b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  throw PreconditionError("no inverse mod p");
}

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    unsigned lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - lead * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

// Remainder against a possibly non-monic divisor.
Poly poly_rem(Poly f, Poly g, unsigned p) {
  trim(g);
  trim(f);
  unsigned inv = inverse_mod_p(g.back(), p);
  for (auto& c : g) c = c * inv % p;
  return poly_mod(std::move(f), g, p);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), g, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& g, unsigned p) {
  Poly r{1};
  base = poly_mod(std::move(base), g, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, g, p);
    base = poly_mulmod(base, base, g, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

Poly poly_from_index(Index v, unsigned p, unsigned len) {
  Poly f(len);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = static_cast<unsigned>(v % p);
    v /= p;
  }
  return f;
}

std::vector<unsigned> divisors_below(unsigned k) {
  std::vector<unsigned> d;
  for (unsigned m = 1; m < k; ++m)
    if (k % m == 0) d.push_back(m);
  return d;
}

}  // namespace

bool is_irreducible(unsigned p, const Poly& f0) {
  Poly f = f0;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const Index count = ipow(p, d);
    for (Index low = 0; low < count; ++low) {
      Poly g = poly_from_index(low, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

bool is_primitive_poly(unsigned p, const Poly& f0) {
  Poly f = f0;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  const std::uint64_t order = ipow(p, k) - 1;
  if (f[0] == 0) return false;
  if (poly_powmod({0, 1}, order, f, p) != Poly{1}) return false;
  for (auto r : prime_factors(order)) {
    if (poly_powmod({0, 1}, order / r, f, p) == Poly{1}) return false;
  }
  return true;
}

Poly default_modulus(unsigned p, unsigned k) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (k == 0) throw PreconditionError("degree must be positive");
  if (auto t = conway_table(p, k)) return *t;
  // Search: first primitive polynomial (by index of its low coefficients) whose
  // norm-compatible powers are roots of the defaults of the proper subfields.
  const std::uint64_t q1 = ipow(p, k) - 1;
  const Index count = ipow(p, k);
  std::vector<std::pair<unsigned, Poly>> subs;
  for (unsigned m : divisors_below(k)) subs.emplace_back(m, default_modulus(p, m));
  for (Index low = 1; low < count; ++low) {
    Poly f = poly_from_index(low, p, k);
    f.push_back(1);
    if (!is_primitive_poly(p, f)) continue;
    bool ok = true;
    for (auto& [m, g] : subs) {
      Poly r = poly_powmod({0, 1}, q1 / (ipow(p, m) - 1), f, p);
      // Evaluate g at r modulo f.
      Poly acc;
      for (std::size_t i = g.size(); i-- > 0;) {
        acc = poly_mulmod(acc, r, f, p);
        if (acc.empty()) acc.push_back(0);
        acc[0] = (acc[0] + g[i]) % p;
        trim(acc);
      }
      if (!acc.empty()) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
  }
  throw Error("no compatible primitive polynomial found");
}

GaloisField::GaloisField(unsigned p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p) || p > 7) throw PreconditionError("field characteristic must be a prime <= 7");
  trim(modulus_);
  if (modulus_.size() < 2) throw PreconditionError("modulus must have degree >= 1");
  for (auto c : modulus_)
    if (c >= p) throw PreconditionError("modulus coefficient out of range");
  if (modulus_.back() != 1) throw PreconditionError("modulus must be monic");
  if (!is_irreducible(p, modulus_)) throw PreconditionError("modulus is not irreducible");
  k_ = static_cast<unsigned>(modulus_.size() - 1);
  q_ = ipow(p, k_);
  enforce_guard(Guard::FieldTable, q_, "GF(p^k) tables");

  // Generator: x when primitive, else the smallest primitive index.
  const std::uint64_t order = q_ - 1;
  const auto primes = prime_factors(order);
  auto is_gen = [&](Index g) {
    if (g == 0) return false;
    if (order == 1) return g == 1;
    if (pow_slow(g, order) != 1) return false;
    for (auto r : primes)
      if (pow_slow(g, order / r) == 1) return false;
    return true;
  };
  if (k_ > 1 && is_gen(p)) {
    gen_ = p;
  } else {
    gen_ = 0;
    for (Index g = 1; g < q_; ++g) {
      if (is_gen(g)) {
        gen_ = g;
        break;
      }
    }
  }

  exp_.resize(order);
  log_.assign(q_, 0);
  Index cur = 1;
  // Multiplying by x is a shift plus one reduction step.
  Index xk = 0;  // index of x^k = -sum f_i x^i
  {
    Index scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      xk += static_cast<Index>((p - modulus_[i]) % p) * scale;
      scale *= p;
    }
  }
  const Index top = q_ / p;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    if (gen_ == static_cast<Index>(p) && k_ > 1) {
      unsigned hi = static_cast<unsigned>(cur / top);
      cur = (cur % top) * p;
      if (hi) cur = add(cur, scalar_mul(hi, xk));
    } else {
      cur = mul_poly(cur, gen_);
    }
  }
  if (cur != 1) throw InconsistencyError("generator order mismatch");

  // Absolute trace is linear: tabulate on the basis, extend by digits.
  std::vector<unsigned> basis_tr(k_);
  for (unsigned i = 0; i < k_; ++i) {
    Index xi = ipow(p, i);
    Index s = 0, y = xi;
    for (unsigned j = 0; j < k_; ++j) {
      s = add(s, y);
      y = pow(y, p);
    }
    if (s >= p) throw InconsistencyError("trace left the prime field");
    basis_tr[i] = static_cast<unsigned>(s);
  }
  abs_trace_.resize(q_);
  for (Index a = 0; a < q_; ++a) {
    unsigned t = 0;
    Index v = a;
    for (unsigned i = 0; i < k_; ++i) {
      t += static_cast<unsigned>(v % p) * basis_tr[i];
      v /= p;
    }
    abs_trace_[a] = static_cast<std::uint8_t>(t % p);
  }
}

Index GaloisField::pow_slow(Index a, std::uint64_t e) const {
  Index r = 1;
  while (e) {
    if (e & 1) r = mul_poly(r, a);
    a = mul_poly(a, a);
    e >>= 1;
  }
  return r;
}

Index GaloisField::add(Index a, Index b) const {
  if (p_ == 2) return a ^ b;
  Index r = 0, scale = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Index GaloisField::neg(Index a) const {
  if (p_ == 2) return a;
  Index r = 0, scale = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Index GaloisField::sub(Index a, Index b) const { return add(a, neg(b)); }

Index GaloisField::scalar_mul(unsigned s, Index a) const {
  s %= p_;
  Index r = 0, scale = 1;
  while (a) {
    r += ((a % p_) * s % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Index GaloisField::mul(Index a, Index b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

Index GaloisField::mul_poly(Index a, Index b) const {
  Poly pa = poly_from_index(a, p_, k_), pb = poly_from_index(b, p_, k_);
  trim(pa);
  trim(pb);
  Poly r = poly_mulmod(pa, pb, modulus_, p_);
  Index v = 0, scale = 1;
  for (auto c : r) {
    v += c * scale;
    scale *= p_;
  }
  return v;
}

Index GaloisField::inv(Index a) const {
  if (a == 0) throw PreconditionError("zero has no inverse");
  std::uint64_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1 - l)];
}

Index GaloisField::pow(Index a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  unsigned __int128 l = static_cast<unsigned __int128>(log_[a]) * e;
  return exp_[static_cast<std::uint64_t>(l % (q_ - 1))];
}

std::uint64_t GaloisField::log(Index a) const {
  if (a == 0) throw PreconditionError("log of zero");
  return log_[a];
}

Index GaloisField::frobenius(Index a, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) a = pow(a, p_);
  return a;
}

Index GaloisField::trace(Index a, unsigned m) const {
  if (m == 0 || k_ % m != 0) throw PreconditionError("trace target degree must divide the field degree");
  Index s = 0, y = a;
  const std::uint64_t pm = ipow(p_, m);
  for (unsigned j = 0; j < k_ / m; ++j) {
    s = add(s, y);
    y = pow(y, pm);
  }
  return s;
}

int GaloisField::quadratic_character(Index a) const {
  if (p_ == 2) throw PreconditionError("quadratic character needs odd p");
  if (a == 0) return 0;
  return (log_[a] % 2 == 0) ? 1 : -1;
}

bool GaloisField::in_subfield(Index a, unsigned m) const {
  if (m == 0 || k_ % m != 0) return false;
  return pow(a, ipow(p_, m)) == a;
}

Index GaloisField::evaluate(const Poly& f, Index a) const {
  Index acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, a), f[i] % p_);
  return acc;
}

std::vector<unsigned> GaloisField::digits(Index a) const {
  std::vector<unsigned> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = static_cast<unsigned>(a % p_);
    a /= p_;
  }
  return d;
}

Index GaloisField::from_digits(std::span<const unsigned> d) const {
  if (d.size() != k_) throw PreconditionError("slice length mismatch");
  Index v = 0, scale = 1;
  for (auto c : d) {
    if (c >= p_) throw PreconditionError("digit out of range");
    v += c * scale;
    scale *= p_;
  }
  return v;
}

std::shared_ptr<const GaloisField> make_field(unsigned p, Poly modulus) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, Poly>, std::shared_ptr<const GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  trim(modulus);
  auto key = std::make_pair(p, modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const GaloisField>(p, modulus);
  cache.emplace(key, f);
  return f;
}

std::shared_ptr<const GaloisField> make_field(unsigned p, unsigned k) {
  return make_field(p, default_modulus(p, k));
}

SubfieldMap::SubfieldMap(std::shared_ptr<const GaloisField> big, std::shared_ptr<const GaloisField> small)
    : big_(std::move(big)), small_(std::move(small)) {
  const GaloisField& B = *big_;
  const GaloisField& S = *small_;
  if (B.characteristic() != S.characteristic() || B.degree() % S.degree() != 0) {
    throw PreconditionError("not a subfield");
  }
  const unsigned p = B.characteristic();
  Index root = 0;
  if (S.degree() == 1) {
    // F_p embeds canonically; record whether the norm of the generator is the
    // root of the degree-1 modulus, as it is for Conway tables.
    const Index root1 = (p - S.modulus()[0] % p) % p;
    norm_compatible_ = B.exp((B.order() - 1) / (p - 1)) == root1;
  } else {
    const std::uint64_t step = (B.order() - 1) / (S.order() - 1);
    const Index gamma = B.exp(step);
    // Send the small generator to gamma; x = g_small^e then maps to gamma^e.
    const Index cand = B.pow(gamma, S.log(p));
    if (B.evaluate(S.modulus(), cand) == 0) {
      root = cand;
      norm_compatible_ = true;
    } else {
      bool found = false;
      for (Index a = 0; a < B.order() && !found; ++a) {
        if (B.evaluate(S.modulus(), a) == 0) {
          root = a;
          found = true;
        }
      }
      if (!found) throw InconsistencyError("subfield modulus has no root");
    }
  }
  up_.resize(S.order());
  for (Index s = 0; s < S.order(); ++s) {
    if (S.degree() == 1) {
      up_[s] = s;
    } else {
      auto d = S.digits(s);
      Index acc = 0;
      for (std::size_t i = d.size(); i-- > 0;) acc = B.add(B.mul(acc, root), d[i]);
      up_[s] = acc;
    }
    down_.emplace(up_[s], s);
  }
  if (down_.size() != S.order()) throw InconsistencyError("subfield embedding not injective");
}

Index SubfieldMap::to_small(Index b) const {
  auto it = down_.find(b);
  if (it == down_.end()) throw PreconditionError("element not in subfield");
  return it->second;
}

// ---------------- SpaceDesc ----------------

SpaceDesc::SpaceDesc(unsigned p, std::vector<std::shared_ptr<const GaloisField>> factors,
                     std::vector<FormKind> forms)
    : p_(p), factors_(std::move(factors)), forms_(std::move(forms)) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (factors_.empty()) throw PreconditionError("space needs at least one factor");
  if (forms_.empty()) forms_.assign(factors_.size(), FormKind::Trace);
  if (forms_.size() != factors_.size()) throw PreconditionError("form list length mismatch");
  for (auto& f : factors_) {
    if (!f || f->characteristic() != p) throw PreconditionError("factor characteristic mismatch");
    offsets_.push_back(n_);
    factor_scale_.push_back(ipow(p, n_));
    n_ += f->degree();
  }
  if (n_ > 40) throw PreconditionError("dimension too large");
  size_ = ipow(p, n_);
  pow_.resize(n_ + 1);
  for (unsigned i = 0; i <= n_; ++i) pow_[i] = ipow(p, i);
}

std::shared_ptr<const SpaceDesc> SpaceDesc::standard(unsigned p, const std::vector<unsigned>& degrees) {
  std::vector<std::shared_ptr<const GaloisField>> fs;
  for (auto d : degrees) fs.push_back(make_field(p, d));
  return std::make_shared<const SpaceDesc>(p, std::move(fs));
}

std::shared_ptr<const SpaceDesc> SpaceDesc::dot(unsigned p, unsigned n) {
  return standard(p, std::vector<unsigned>(n, 1));
}

const GaloisField& SpaceDesc::field(std::size_t f) const {
  if (f >= factors_.size()) throw PreconditionError("factor index out of range");
  return *factors_[f];
}

Index SpaceDesc::slice(Index x, std::size_t f) const {
  return (x / factor_scale_.at(f)) % factors_[f]->order();
}

Index SpaceDesc::with_slice(Index x, std::size_t f, Index v) const {
  Index old = slice(x, f);
  return x - old * factor_scale_[f] + v * factor_scale_[f];
}

Index SpaceDesc::compose(std::span<const Index> slices) const {
  if (slices.size() != factors_.size()) throw PreconditionError("slice count mismatch");
  Index x = 0;
  for (std::size_t f = 0; f < slices.size(); ++f) x += slices[f] * factor_scale_[f];
  return x;
}

Index SpaceDesc::add(Index a, Index b) const {
  if (p_ == 2) return a ^ b;
  Index r = 0, scale = 1;
  while (a || b) {
    unsigned s = static_cast<unsigned>(a % p_ + b % p_);
    if (s >= p_) s -= p_;
    r += s * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Index SpaceDesc::neg(Index a) const {
  if (p_ == 2) return a;
  Index r = 0, scale = 1;
  while (a) {
    unsigned d = static_cast<unsigned>(a % p_);
    if (d) r += (p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Index SpaceDesc::sub(Index a, Index b) const { return add(a, neg(b)); }

Index SpaceDesc::scale(unsigned s, Index a) const {
  s %= p_;
  if (s == 0) return 0;
  if (s == 1) return a;
  Index r = 0, sc = 1;
  while (a) {
    r += ((a % p_) * s % p_) * sc;
    a /= p_;
    sc *= p_;
  }
  return r;
}

unsigned SpaceDesc::inner(Index a, Index b) const {
  unsigned t = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const GaloisField& F = *factors_[f];
    Index x = slice(a, f), y = slice(b, f);
    if (forms_[f] == FormKind::Trace || F.degree() == 1) {
      t += F.absolute_trace(F.mul(x, y));
    } else {
      for (unsigned i = 0; i < F.degree(); ++i) {
        t += static_cast<unsigned>((x % p_) * (y % p_));
        x /= p_;
        y /= p_;
      }
    }
  }
  return t % p_;
}

std::vector<unsigned> SpaceDesc::digits(Index a) const {
  std::vector<unsigned> d(n_);
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = static_cast<unsigned>(a % p_);
    a /= p_;
  }
  return d;
}

Index SpaceDesc::from_digits(std::span<const unsigned> d) const {
  if (d.size() != n_) throw PreconditionError("vector length mismatch");
  Index v = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (d[i] >= p_) throw PreconditionError("digit out of range");
    v += d[i] * pow_[i];
  }
  return v;
}

Index SpaceDesc::field_mul(std::size_t f, Index a, Index b) const { return field(f).mul(a, b); }

Index SpaceDesc::trace(std::size_t f, Index a, unsigned m) const { return field(f).trace(a, m); }

int SpaceDesc::quadratic_character(std::size_t f, Index a) const {
  return field(f).quadratic_character(a);
}

std::string SpaceDesc::header() const {
  std::ostringstream os;
  os << "p=" << p_ << " factors=";
  for (std::size_t f = 0; f < factors_.size(); ++f) os << (f ? "," : "") << factors_[f]->degree();
  os << " irr=";
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (f) os << ",";
    for (auto c : factors_[f]->modulus()) os << c;
  }
  bool custom = false;
  for (std::size_t f = 0; f < factors_.size(); ++f)
    if (forms_[f] == FormKind::Dot && factors_[f]->degree() > 1) custom = true;
  if (custom) {
    os << " forms=";
    for (std::size_t f = 0; f < factors_.size(); ++f) os << (f ? "," : "") << (forms_[f] == FormKind::Dot ? 'd' : 't');
  }
  return os.str();
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

unsigned parse_uint(const std::string& s, const char* what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw PreconditionError(std::string("bad ") + what + " '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

std::shared_ptr<const SpaceDesc> SpaceDesc::parse_header(std::string_view header) {
  std::map<std::string, std::string> kv;
  for (auto& tok : split(header, ' ')) {
    if (tok.empty()) continue;
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw PreconditionError("header token without '=': " + tok);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"p", "factors", "irr"})
    if (!kv.count(key)) throw PreconditionError(std::string("header missing '") + key + "'");
  unsigned p = parse_uint(kv["p"], "p");
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  auto degs = split(kv["factors"], ',');
  auto irrs = split(kv["irr"], ',');
  if (degs.size() != irrs.size()) throw PreconditionError("factors and irr lists differ in length");
  std::vector<std::shared_ptr<const GaloisField>> fs;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    unsigned d = parse_uint(degs[i], "degree");
    Poly poly;
    for (char c : irrs[i]) {
      if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= p) {
        throw PreconditionError("bad irreducible digit in '" + irrs[i] + "'");
      }
      poly.push_back(static_cast<unsigned>(c - '0'));
    }
    if (poly.size() != d + 1) throw PreconditionError("irreducible degree does not match factor degree");
    fs.push_back(make_field(p, poly));
  }
  std::vector<FormKind> forms;
  if (kv.count("forms")) {
    auto fl = split(kv["forms"], ',');
    if (fl.size() != fs.size()) throw PreconditionError("forms list length mismatch");
    for (auto& f : fl) {
      if (f == "t") forms.push_back(FormKind::Trace);
      else if (f == "d") forms.push_back(FormKind::Dot);
      else throw PreconditionError("unknown form tag '" + f + "'");
    }
  }
  return std::make_shared<const SpaceDesc>(p, std::move(fs), std::move(forms));
}

std::vector<unsigned> SpaceDesc::gram_matrix() const {
  std::vector<unsigned> g(static_cast<std::size_t>(n_) * n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) g[i * n_ + j] = inner(pow_[i], pow_[j]);
  return g;
}

bool SpaceDesc::gram_is_identity() const {
  auto g = gram_matrix();
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (g[i * n_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

const std::vector<std::uint32_t>& SpaceDesc::gram_permutation() const {
  std::call_once(lazy_->gram_once, [this] {
    enforce_guard(Guard::FastWalsh, size_, "Gram permutation table");
    auto g = gram_matrix();
    std::vector<Index> col(n_);
    for (unsigned j = 0; j < n_; ++j) {
      Index v = 0;
      for (unsigned i = 0; i < n_; ++i) v += g[i * n_ + j] * pow_[i];
      col[j] = v;
    }
    auto& perm = lazy_->gram_perm;
    perm.assign(size_, 0);
    for (Index a = 1; a < size_; ++a) {
      unsigned j = 0;
      Index t = a;
      while (t % p_ == 0) {
        t /= p_;
        ++j;
      }
      perm[a] = static_cast<std::uint32_t>(add(perm[a - pow_[j]], col[j]));
    }
  });
  return lazy_->gram_perm;
}

const std::vector<std::uint32_t>& SpaceDesc::negation_table() const {
  std::call_once(lazy_->neg_once, [this] {
    enforce_guard(Guard::FastWalsh, size_, "negation table");
    auto& t = lazy_->neg;
    t.resize(size_);
    for (Index a = 0; a < size_; ++a) t[a] = static_cast<std::uint32_t>(neg(a));
  });
  return lazy_->neg;
}

bool SpaceDesc::operator==(const SpaceDesc& o) const {
  if (p_ != o.p_ || factors_.size() != o.factors_.size()) return false;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (!(*factors_[f] == *o.factors_[f])) return false;
    bool dot_a = forms_[f] == FormKind::Dot && factors_[f]->degree() > 1;
    bool dot_b = o.forms_[f] == FormKind::Dot && o.factors_[f]->degree() > 1;
    if (dot_a != dot_b) return false;
  }
  return true;
}

unsigned rank_mod_p(unsigned p, std::vector<std::vector<unsigned>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  unsigned rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    unsigned inv = inverse_mod_p(rows[rank][c], p);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      unsigned f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace dualbent
