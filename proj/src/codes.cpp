#include "dualbent/codes.hpp"

#include <algorithm>
#include <set>

namespace dualbent {

Index projective_canonical(const SpaceDesc& space, Index x) {
  if (x == 0) throw PreconditionError("zero has no projective point");
  const unsigned p = space.p();
  if (p == 2) return x;
  auto dig = space.digits(x);
  unsigned lead = 0;
  for (auto d : dig)
    if (d) {
      lead = d;
      break;
    }
  return space.scale(inverse_mod_p(lead, p), x);
}

ProjectiveReduction projective_reduce(const SpaceDesc& space, std::span<const Index> D) {
  std::set<Index> in(D.begin(), D.end());
  if (in.count(0)) throw PreconditionError("projective reduction needs 0 not in D");
  std::set<Index> reps;
  for (auto x : D) reps.insert(projective_canonical(space, x));
  ProjectiveReduction r;
  r.reps.assign(reps.begin(), reps.end());
  r.scalar_closed = in.size() == r.reps.size() * (space.p() - 1);
  return r;
}

void require_projective(const SpaceDesc& space, std::span<const Index> reps) {
  std::set<Index> seen;
  for (auto x : reps) {
    if (x == 0) throw PreconditionError("defining set contains the zero vector");
    if (!seen.insert(projective_canonical(space, x)).second) {
      throw PreconditionError("defining set repeats a projective point");
    }
  }
}

WeightDistribution weight_distribution_direct(const SpaceDesc& space, std::span<const Index> reps) {
  require_projective(space, reps);
  WeightDistribution w;
  for (Index a = 0; a < space.size(); ++a) {
    std::int64_t wt = 0;
    for (auto d : reps) wt += space.inner(a, d) != 0;
    ++w[wt];
  }
  return w;
}

WeightDistribution weight_distribution_transform(const SpaceDesc& space, std::span<const Index> reps) {
  require_projective(space, reps);
  const unsigned p = space.p();
  std::vector<std::int64_t> ind(space.size(), 0);
  for (auto d : reps)
    for (unsigned a = 1; a < p; ++a) ind[space.scale(a, d)] = 1;
  auto chi = character_sums(space, ind);
  const unsigned width = cyc_width(p);
  const auto& raw = chi.coeffs();
  const auto t = static_cast<std::int64_t>(reps.size());
  WeightDistribution w;
  for (Index a = 0; a < space.size(); ++a) {
    for (unsigned j = 1; j < width; ++j)
      if (raw[a * width + j] != 0) throw InconsistencyError("character of a scalar-closed set is not rational");
    const std::int64_t zeros = t + raw[a * width];
    if (zeros % p != 0) throw InconsistencyError("zero-count is not an integer");
    ++w[t - zeros / p];
  }
  return w;
}

WeightDistribution weight_distribution(const SpaceDesc& space, std::span<const Index> reps) {
  const double work = static_cast<double>(space.size()) * static_cast<double>(reps.size());
  if (work <= static_cast<double>(1u << 24)) return weight_distribution_direct(space, reps);
  return weight_distribution_transform(space, reps);
}

CodeSpec check_two_weight_projective(const SpaceDesc& space, std::span<const Index> D) {
  auto red = projective_reduce(space, D);
  CodeSpec c;
  c.defining_set = red.reps;
  c.scalar_closed = red.scalar_closed;
  c.length = static_cast<std::int64_t>(red.reps.size());
  c.dimension = space.dimension();
  std::vector<std::vector<unsigned>> rows;
  for (auto x : red.reps) rows.push_back(space.digits(x));
  c.rank = rows.empty() ? 0 : rank_mod_p(space.p(), rows);
  c.distribution = weight_distribution(space, red.reps);
  for (auto& [wt, cnt] : c.distribution)
    if (wt != 0) c.nonzero_weights.push_back(wt);
  c.two_weight = c.nonzero_weights.size() == 2;
  return c;
}

CodeParams condition_a_code_parameters(unsigned p, unsigned n, unsigned m, int eps, bool contains_f0_value) {
  if (n % 2 || 2 * m > n) throw PreconditionError("Condition A code parameters need n even and m <= n/2");
  const auto pn_m = static_cast<std::int64_t>(ipow(p, n - m));
  const auto ph_m = static_cast<std::int64_t>(ipow(p, n / 2 - m));
  const auto ph = static_cast<std::int64_t>(ipow(p, n / 2));
  const std::int64_t delta = contains_f0_value ? 1 : 0;
  CodeParams r;
  r.length = (pn_m - eps * ph_m + delta * (eps * ph - 1)) / (p - 1);
  const std::int64_t base = pn_m / p, step = ph / p;
  r.w1 = base + (1 - eps + 2 * eps * delta) / 2 * step;
  r.w2 = base + (-1 - eps + 2 * eps * delta) / 2 * step;
  return r;
}

bool matches_code_parameters(const CodeSpec& code, const CodeParams& e) {
  std::set<std::int64_t> want;
  if (e.w1 != 0) want.insert(e.w1);
  if (e.w2 != 0) want.insert(e.w2);
  std::set<std::int64_t> got(code.nonzero_weights.begin(), code.nonzero_weights.end());
  return code.length == e.length && got == want;
}

PdsParams pds_from_two_weight_code(unsigned p, unsigned n, std::int64_t t, std::int64_t w1, std::int64_t w2) {
  PdsParams r;
  const std::int64_t P = p;
  r.v = static_cast<std::int64_t>(ipow(p, n));
  r.k = t * (P - 1);
  const std::int64_t k = r.k;
  r.lambda = k * k + 3 * k - P * (k + 1) * (w1 + w2) + P * P * w1 * w2;
  r.mu = k * k + k - P * k * (w1 + w2) + P * P * w1 * w2;
  return r;
}

}  // namespace dualbent
