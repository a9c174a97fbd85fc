#include "dualbent/pds.hpp"

#include <cmath>

namespace dualbent {

std::string to_string(PdsType t) {
  switch (t) {
    case PdsType::None: return "none";
    case PdsType::Latin: return "latin";
    case PdsType::NegativeLatin: return "negative_latin";
    case PdsType::Both: return "latin_and_negative_latin";
  }
  return "none";
}

PdsParams params_of(const PdsCertificate& c) { return {c.v, c.k, c.lambda, c.mu}; }

bool satisfies_counting_identity(const PdsParams& c) {
  return c.k * (c.k - c.lambda - 1) == (c.v - c.k - 1) * c.mu;
}

bool is_negation_closed(const SpaceDesc& space, std::span<const Index> D) {
  std::vector<char> in(space.size(), 0);
  for (auto x : D) in[x] = 1;
  for (auto x : D)
    if (!in[space.neg(x)]) return false;
  return true;
}

namespace {

std::vector<char> membership(const SpaceDesc& space, std::span<const Index> D) {
  std::vector<char> in(space.size(), 0);
  for (auto x : D) {
    if (x >= space.size()) throw PreconditionError("set element outside the space");
    if (in[x]) throw PreconditionError("set lists an element twice");
    in[x] = 1;
  }
  return in;
}

bool is_regular(const SpaceDesc& space, const std::vector<char>& in) {
  if (in[0]) return false;
  for (Index x = 0; x < space.size(); ++x)
    if (in[x] && !in[space.neg(x)]) return false;
  return true;
}

std::optional<PdsCertificate> from_counts(const SpaceDesc& space, const std::vector<char>& in,
                                          const std::vector<std::int64_t>& counts) {
  PdsCertificate c;
  c.v = static_cast<std::int64_t>(space.size());
  for (auto b : in) c.k += b;
  c.regular = is_regular(space, in);
  std::optional<std::int64_t> lam, mu;
  for (Index g = 1; g < space.size(); ++g) {
    auto& slot = in[g] ? lam : mu;
    if (!slot) slot = counts[g];
    else if (*slot != counts[g]) return std::nullopt;
  }
  if (c.k == 0) {
    lam = 0;
    mu = 0;
  }
  c.lambda = lam ? *lam : (mu ? *mu : 0);
  c.mu = mu ? *mu : c.lambda;
  c.typing = c.regular ? classify_pds_type(c) : PdsTyping{};
  return c;
}

}  // namespace

std::vector<std::int64_t> difference_counts_bruteforce(const SpaceDesc& space, std::span<const Index> D) {
  enforce_guard(Guard::PdsBruteforce, space.size(), "difference counts by double loop");
  std::vector<std::int64_t> counts(space.size(), 0);
  for (auto a : D)
    for (auto b : D) ++counts[space.sub(a, b)];
  return counts;
}

std::vector<std::int64_t> convolve(const SpaceDesc& space, const kernels::ZetaTable& chi_a,
                                   const kernels::ZetaTable& chi_b) {
  auto prod = chi_a;
  kernels::multiply(prod, chi_b);
  auto back = inverse_character_table(space, std::move(prod));
  auto canon = kernels::canonical(back);
  const unsigned w = cyc_width(space.p());
  const auto v = static_cast<std::int64_t>(space.size());
  std::vector<std::int64_t> out(space.size());
  for (Index g = 0; g < space.size(); ++g) {
    for (unsigned j = 1; j < w; ++j)
      if (canon[g * w + j] != 0) throw InconsistencyError("convolution is not a rational integer");
    std::int64_t x = canon[g * w];
    if (x % v != 0) throw InconsistencyError("convolution is not divisible by p^n");
    out[g] = x / v;
  }
  return out;
}

std::vector<std::int64_t> difference_counts(const SpaceDesc& space, std::span<const Index> D) {
  auto w = indicator(space, D);
  auto chi = character_table(space, w);
  // D * (-D): the character of -D is the conjugate character of D
  std::vector<std::int64_t> wneg(space.size(), 0);
  for (auto x : D) wneg[space.neg(x)] = 1;
  auto chin = character_table(space, wneg);
  return convolve(space, chi, chin);
}

std::optional<PdsCertificate> check_pds_bruteforce(const SpaceDesc& space, std::span<const Index> D) {
  auto in = membership(space, D);
  return from_counts(space, in, difference_counts_bruteforce(space, D));
}

std::optional<PdsCertificate> check_pds(const SpaceDesc& space, std::span<const Index> D) {
  auto in = membership(space, D);
  if (!is_regular(space, in)) return from_counts(space, in, difference_counts(space, D));

  PdsCertificate c;
  c.v = static_cast<std::int64_t>(space.size());
  c.k = static_cast<std::int64_t>(D.size());
  c.regular = true;
  if (c.k == 0) {
    c.typing = classify_pds_type(c);
    return c;
  }
  const unsigned p = space.p(), w = cyc_width(p);
  auto chi = character_sums(space, indicator(space, D));
  const auto& raw = chi.coeffs();
  // Distinct nontrivial character values, at most two.
  std::vector<Index> reps;
  for (Index u = 1; u < space.size(); ++u) {
    bool seen = false;
    for (auto r : reps)
      if (std::equal(raw.begin() + u * w, raw.begin() + (u + 1) * w, raw.begin() + r * w)) {
        seen = true;
        break;
      }
    if (!seen) {
      reps.push_back(u);
      if (reps.size() > 2) return std::nullopt;
    }
  }
  const BigInt v = c.v, k = c.k;
  BigInt lam, mu;
  if (reps.size() == 1) {
    CycInt r = chi.at(reps[0]);
    if (!r.is_rational()) return std::nullopt;
    BigInt rr = r.rational_value();
    BigInt num = k * k - rr * rr;
    if (num % v != 0) return std::nullopt;
    mu = lam = num / v;
  } else {
    CycInt r1 = chi.at(reps[0]), r2 = chi.at(reps[1]);
    CycInt beta = r1 + r2, prod = r1 * r2;
    if (!beta.is_rational() || !prod.is_rational()) return std::nullopt;
    BigInt b = beta.rational_value(), gamma = -prod.rational_value();
    mu = k - gamma;
    lam = b + mu;
    // principal character: k^2 = mu v + (lambda - mu) k + gamma
    if (k * k != mu * v + b * k + gamma) return std::nullopt;
  }
  if (lam < 0 || mu < 0) return std::nullopt;
  c.lambda = static_cast<std::int64_t>(lam);
  c.mu = static_cast<std::int64_t>(mu);
  c.typing = classify_pds_type(c);
  return c;
}

PdsTyping classify_pds_type(const PdsCertificate& c) {
  PdsTyping t;
  if (!c.regular) return t;
  auto N = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(c.v))));
  while (N * N > c.v) --N;
  while ((N + 1) * (N + 1) <= c.v) ++N;
  if (N * N != c.v || N < 2) return t;
  bool latin = false, negative = false;
  std::int64_t sl = 0, sn = 0;
  if (c.k % (N - 1) == 0) {
    sl = c.k / (N - 1);
    latin = c.lambda == N + sl * sl - 3 * sl && c.mu == sl * sl - sl;
  }
  if (c.k % (N + 1) == 0) {
    sn = c.k / (N + 1);
    negative = c.lambda == -N + sn * sn + 3 * sn && c.mu == sn * sn + sn;
  }
  // the empty set has vacuous lambda; both templates hold with s = 0
  if (c.k == 0) latin = negative = true, sl = sn = 0;
  t.N = N;
  t.s_negative = sn;
  if (latin && negative) {
    // happens for k = 0 and for k = (v - 1) / 2 with s = (N + 1) / 2, e.g. (81, 40, 19, 20)
    t.type = PdsType::Both;
    t.s = sl;
  } else if (latin) {
    t.type = PdsType::Latin;
    t.s = sl;
  } else if (negative) {
    t.type = PdsType::NegativeLatin;
    t.s = sn;
  }
  return t;
}

PdsParams condition_a_pds_parameters(unsigned p, unsigned n, unsigned m, int eps, bool contains_f0_value) {
  if (n % 2 || 2 * m > n) throw PreconditionError("Condition A parameters need n even and m <= n/2");
  const auto half = static_cast<std::int64_t>(ipow(p, n / 2));
  const std::int64_t s = static_cast<std::int64_t>(ipow(p, n / 2 - m)) + (contains_f0_value ? eps : 0);
  PdsParams r;
  r.v = static_cast<std::int64_t>(ipow(p, n));
  r.k = s * (half - eps);
  r.lambda = eps * half + s * s - 3 * eps * s;
  r.mu = s * s - eps * s;
  return r;
}

}  // namespace dualbent
