#pragma once

#include <optional>
#include <vector>

#include "dualbent/pds.hpp"
#include "dualbent/vdb.hpp"

namespace dualbent {

// Translation scheme R_i = {(x, y) : x - y in D_i}. Class 0 is {0}.
struct SchemeCertificate {
  std::vector<std::vector<Index>> classes;  // sorted index lists
  std::vector<Index> labels;                // codomain value per class when built from F; labels[0] unused
  std::vector<std::int64_t> tensor;         // p^k_{ij} at (k * size + i) * size + j
  bool is_scheme = false;
  bool symmetric = false;
  std::string route;    // direct or transform
  std::string failure;  // first violated constancy, if any

  std::size_t size() const { return classes.size(); }
  std::size_t d() const { return classes.size() - 1; }
  std::int64_t at(std::size_t k, std::size_t i, std::size_t j) const { return tensor[(k * size() + i) * size() + j]; }
};

enum class SchemeRoute { Auto, Direct, Transform };

// classes must partition V* into nonempty negation-closed sets. Auto counts directly
// up to the brute-force guard and uses indicator transforms above it.
SchemeCertificate build_translation_scheme(const SpaceDesc& space, std::vector<std::vector<Index>> classes,
                                           SchemeRoute route = SchemeRoute::Auto);

// Classes D*_{F,i} for every i in F(V*), in codomain order.
SchemeCertificate build_scheme_from_function(const VFunc& F);

struct AmorphyEvidence {
  std::vector<std::optional<PdsCertificate>> class_pds;  // index 0 unused
  bool pds_typing_uniform = false;
  PdsType uniform_type = PdsType::None;
  unsigned fusion_samples_run = 0;
  unsigned fusion_samples_passed = 0;
  std::uint64_t seed = 0;
};

AmorphyEvidence check_amorphy(const SpaceDesc& space, const SchemeCertificate& cert, std::uint64_t seed,
                              unsigned samples = 20);

// Closed-form tensor for a Condition A function in the class order of labels.
std::vector<std::int64_t> expected_intersection_numbers(unsigned p, unsigned n, unsigned m, int eps, Index f0,
                                                        std::span<const Index> labels);

struct FiberReport {
  bool holds = false;       // every eps_{F_c} is constant on every fiber of F* over V*
  std::size_t fibers = 0;
  SchemeCertificate scheme; // built from the preimage classes; must agree with holds
};

// Requires F vectorial dual-bent, F(0) = 0, F even, 2 <= m <= n/2. Throws
// InconsistencyError when the fiber condition and scheme existence disagree.
FiberReport check_fiber_condition(const VFunc& F, const VdbAnalysis& a);

}  // namespace dualbent
