#pragma once

#include <optional>
#include <vector>

#include "dualbent/vdb.hpp"

namespace dualbent {

// Entry (x, y) = z^{f(x-y) - <shift, x-y>}, never materialized above the matrix guard.
struct GHMatrix {
  PFunc generator;
  Index shift = 0;

  // exponent of entry (x, y)
  unsigned exponent(Index x, Index y) const;
  Index order() const { return generator.space->size(); }
};

// H_c^{(z)} of a vectorial function.
GHMatrix component_matrix(const VFunc& F, Index c, Index z = 0);

struct GHReport {
  bool bent_route = false;                    // the shifted generator is bent
  std::optional<bool> autocorrelation_route;  // sum_u z^{g(u) - g(u-w)} = 0 for w != 0, up to 2^12
  bool is_generalized_hadamard = false;
};

// Cross-asserts the two routes when both run.
GHReport check_generalized_hadamard(const GHMatrix& H);

// Row-major exponents; guarded at order 2^8.
std::vector<std::uint8_t> materialize(const GHMatrix& H);
// H conj(H)^T = order * I by literal multiplication; guarded.
bool check_gh_by_matrix(const GHMatrix& H);

struct UnitConditionReport {
  bool holds = false;
  std::optional<UnitTag> eps;  // the common eps, when it is +1 or -1
};

// Every p^{-n/2} W_{F_c}(z) lies in {eps z^j} for one eps in {+1, -1}. p odd.
UnitConditionReport check_unit_condition(const VFunc& F, const VdbAnalysis& a);

struct ProductReport {
  Index c = 0, d = 0;
  bool walsh_route = false;
  std::optional<bool> matrix_route;  // literal product at order <= 2^8
  std::int64_t factor = 0;           // eps p^{n/2}
  bool holds = false;
};

// p = 2: H_c H_d = 2^{n/2} H_{c+d}. p odd: H_c conj(H_d)^T = eps p^{n/2} H_{c-d}, eps from
// the unit condition. The Walsh route compares sum_u z^{F_c(u) - F_d(u-g)}, computed
// from W_{F_c} conj(W_{F_d}) by one inverse transform, with eps p^{n/2} z^{F_{c-d}(g)}.
// Requires F vectorial bent, n even, c != d.
ProductReport check_product_identity(const VFunc& F, const VdbAnalysis& a, Index c, Index d);

}  // namespace dualbent
