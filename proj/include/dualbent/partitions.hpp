#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualbent/codes.hpp"
#include "dualbent/hadamard.hpp"
#include "dualbent/scheme.hpp"

namespace dualbent {

// Parts A_i indexed by the codomain V_m; stored as the induced F(x) = sum delta_{A_i}(x) i.
struct PartitionSpec {
  VFunc induced;

  static PartitionSpec from_function(VFunc F) { return PartitionSpec{std::move(F)}; }
  const SpaceDesc& space() const { return *induced.domain; }
  std::vector<std::vector<Index>> parts() const { return preimage_sets(induced); }
};

struct CardinalityGate {
  bool ok = false;
  std::optional<Index> exceptional;  // i_0
  int sign = 0;                      // +1: sizes p^{n/2-m}(p^{n/2}-1), exceptional + p^{n/2}
  std::string message;
};

// Part sizes of a bent partition: all but one equal p^{n/2-m}(p^{n/2} -+ 1), the
// remaining one differs by +- p^{n/2}.
CardinalityGate check_part_sizes(const PartitionSpec& G);

struct BentPartitionCertificate {
  bool is_bent_partition = false;
  CardinalityGate gate;
  std::vector<Index> distinguished;  // G(u) per u
  std::vector<char> branch;          // 1 when u is in S (the sign-flipped pattern)
  bool unflipped_pattern = false;    // no u != 0 in S
  std::vector<std::int64_t> spectrum;  // distinct chi_u(A_i) over u != 0, sorted
  std::string message;
};

// p = 2, n even >= 4, 2 <= m <= n/2. chi_u(A_i) = 2^{n-m} delta_0(u) + 2^{-m} sum_c
// W_{F_c}(u) (-1)^{<c,i>}; certified iff every u has exactly one distinguished index.
BentPartitionCertificate check_bent_partition_p2(const PartitionSpec& G);

struct DirectReport {
  bool is_bent_partition = false;
  std::uint64_t assignments = 0;
};

// Walsh-tests every part-constant function taking each value on K/p parts.
DirectReport check_bent_partition_direct(const PartitionSpec& G);

struct ConditionCReport {
  bool scalar_invariant = false;
  bool holds = false;
  std::optional<UnitTag> eps;
};

// p odd: a A_i = A_i for every a, then Condition A on the induced function.
ConditionCReport check_condition_c(const PartitionSpec& G);

struct StatementResult {
  bool holds = false;
  std::optional<int> eps;
  std::string detail;
};

struct HarnessReport {
  // bent partition, PDS, amorphic scheme, codes, Hadamard identities
  StatementResult statements[5];
  bool all_true = false;
  bool all_false = false;
  std::uint64_t seed = 0;
};

// Evaluates the five equivalent statements for the partition (p odd and p = 2 forms).
HarnessReport run_equivalence_harness(const PartitionSpec& G, std::uint64_t seed, unsigned fusion_samples = 20);

}  // namespace dualbent
