#pragma once

#include <map>
#include <vector>

#include "dualbent/pds.hpp"

namespace dualbent {

// First nonzero coordinate scaled to 1.
Index projective_canonical(const SpaceDesc& space, Index x);

struct ProjectiveReduction {
  std::vector<Index> reps;   // sorted canonical representatives
  bool scalar_closed = false;  // D = F_p^* reps
};

// Requires 0 not in D.
ProjectiveReduction projective_reduce(const SpaceDesc& space, std::span<const Index> D);

// Throws PreconditionError if the list has zero or two F_p-proportional entries.
void require_projective(const SpaceDesc& space, std::span<const Index> reps);

using WeightDistribution = std::map<std::int64_t, std::int64_t>;

// wt(c_alpha) = #{d : <alpha, d> != 0} by streaming over alpha and the list.
WeightDistribution weight_distribution_direct(const SpaceDesc& space, std::span<const Index> reps);
// wt(c_alpha) = t - (t + chi_alpha(F_p^* reps)) / p from one indicator transform.
WeightDistribution weight_distribution_transform(const SpaceDesc& space, std::span<const Index> reps);
// Direct below a work threshold, transform above it.
WeightDistribution weight_distribution(const SpaceDesc& space, std::span<const Index> reps);

struct CodeSpec {
  std::vector<Index> defining_set;
  std::int64_t length = 0;
  unsigned dimension = 0;  // ambient n
  unsigned rank = 0;       // effective dimension
  bool scalar_closed = false;
  WeightDistribution distribution;
  std::vector<std::int64_t> nonzero_weights;
  bool two_weight = false;
};

// Full pipeline; throws PreconditionError if 0 is in D.
CodeSpec check_two_weight_projective(const SpaceDesc& space, std::span<const Index> D);

struct CodeParams {
  std::int64_t length = 0, w1 = 0, w2 = 0;
};

// Length and weights of the code of D*_{F,i} for a Condition A function.
CodeParams condition_a_code_parameters(unsigned p, unsigned n, unsigned m, int eps, bool contains_f0_value);

// Length matches and the nonzero weights are exactly {w1, w2} without 0. A zero
// weight occurs when n = 2m, eps = +1 and i != F(0): D*_{F,i} is then a subspace
// minus 0 and the code is degenerate with one nonzero weight.
bool matches_code_parameters(const CodeSpec& code, const CodeParams& expected);

// PDS parameters of F_p^* D~ from a two-weight code of length t with weights w1, w2.
PdsParams pds_from_two_weight_code(unsigned p, unsigned n, std::int64_t t, std::int64_t w1, std::int64_t w2);

}  // namespace dualbent
