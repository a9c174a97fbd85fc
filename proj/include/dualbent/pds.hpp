#pragma once

#include <optional>
#include <vector>

#include "dualbent/walsh.hpp"

namespace dualbent {

enum class PdsType { None, Latin, NegativeLatin, Both };
std::string to_string(PdsType t);

struct PdsTyping {
  PdsType type = PdsType::None;
  std::int64_t N = 0;
  std::int64_t s = 0;           // Latin s, or negative Latin s when only that matches
  std::int64_t s_negative = 0;  // negative Latin s when both match
};

struct PdsCertificate {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool regular = false;  // -D = D and 0 not in D
  PdsTyping typing;
  bool operator==(const PdsCertificate& o) const {
    return v == o.v && k == o.k && lambda == o.lambda && mu == o.mu && regular == o.regular;
  }
};

struct PdsParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const PdsParams& o) const = default;
};

PdsParams params_of(const PdsCertificate& c);

// Regular sets go through the two-eigenvalue character criterion, everything else
// through difference counts obtained from one indicator transform. Parameters that
// are vacuous (no element to count) are set equal to the other one; the empty set
// gives (v, 0, 0, 0).
std::optional<PdsCertificate> check_pds(const SpaceDesc& space, std::span<const Index> D);
// Counts differences by the double loop; size guarded.
std::optional<PdsCertificate> check_pds_bruteforce(const SpaceDesc& space, std::span<const Index> D);

// counts[g] = #{(a, b) in D x D : a - b = g}
std::vector<std::int64_t> difference_counts_bruteforce(const SpaceDesc& space, std::span<const Index> D);
std::vector<std::int64_t> difference_counts(const SpaceDesc& space, std::span<const Index> D);

// Solves the Latin and negative Latin templates.
PdsTyping classify_pds_type(const PdsCertificate& c);

bool satisfies_counting_identity(const PdsParams& c);

// Parameters of D*_{F,i} for a Condition A function: s = p^{n/2-m} + eps * delta.
PdsParams condition_a_pds_parameters(unsigned p, unsigned n, unsigned m, int eps, bool contains_f0_value);

bool is_negation_closed(const SpaceDesc& space, std::span<const Index> D);

// Integer convolution a * b of two character tables in slot form, divided by p^n.
// Throws InconsistencyError when the result is not a rational integer table.
std::vector<std::int64_t> convolve(const SpaceDesc& space, const kernels::ZetaTable& chi_a,
                                   const kernels::ZetaTable& chi_b);

}  // namespace dualbent
