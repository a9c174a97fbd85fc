#pragma once

#include <optional>
#include <vector>

#include "dualbent/walsh.hpp"

namespace dualbent {

// F: V_n -> V_m with codomain values as canonical indices.
struct VFunc {
  SpacePtr domain;
  SpacePtr codomain;
  std::vector<std::uint32_t> values;

  VFunc() = default;
  VFunc(SpacePtr dom, SpacePtr cod, std::vector<std::uint32_t> v);
  unsigned p() const { return domain->p(); }
  unsigned n() const { return domain->dimension(); }
  unsigned m() const { return codomain->dimension(); }
  Index operator()(Index x) const { return values[x]; }
};

// F_c(x) = <c, F(x)>_m
PFunc component(const VFunc& F, Index c);

struct VectorialBentReport {
  bool vectorial_bent = false;
  std::vector<WalshSpectrum> spectra;  // indexed by c; entry 0 unused
};

VectorialBentReport check_vectorial_bent(const VFunc& F);

struct VectorialDual {
  std::vector<Index> basis;   // c_1..c_m chosen greedily in canonical order
  std::vector<Index> sigma;   // sigma[c]; sigma[0] = 0
  VFunc dual;                 // F*, with (F_c)* = (F*)_{sigma(c)}
  bool sigma_identity = false;
  bool duals_bent = false;    // every (F_c)* is bent
};

// None when the duals plus zero do not form an m-dimensional space.
std::optional<VectorialDual> discover_vectorial_dual(const VFunc& F, const VectorialBentReport& report);
std::optional<VectorialDual> discover_vectorial_dual(const VFunc& F);

struct VdbCertificate {
  bool is_vectorial_bent = false;
  bool is_vectorial_dual_bent = false;
  std::optional<std::vector<Index>> sigma;
  bool sigma_identity = false;
  std::optional<VFunc> vdual;
  bool condition_a = false;
  std::optional<UnitTag> eps;                        // common eps of all components
  std::vector<std::optional<UnitTag>> component_eps; // per c: eps_{F_c} if weakly regular
  bool all_weakly_regular = false;
  // Per (c, x) tags, kept when components disagree or are not weakly regular.
  std::optional<std::vector<std::vector<UnitTag>>> eps_table;
};

// Full analysis without the Condition A parameter preconditions.
struct VdbAnalysis {
  VectorialBentReport report;
  std::optional<VectorialDual> vdual;
  VdbCertificate cert;
};

VdbAnalysis analyze_vdb(const VFunc& F);

// Requires n even, n >= 4, 2 <= m <= n/2.
VdbCertificate check_condition_a(const VFunc& F);
VdbCertificate check_condition_a(const VFunc& F, const VdbAnalysis& a);
void require_condition_a_shape(const VFunc& F);

// D_{F,i} for every codomain index i.
std::vector<std::vector<Index>> preimage_sets(const VFunc& F);
// D*_{F,i}: same without the zero vector.
std::vector<std::vector<Index>> punctured_preimage_sets(const VFunc& F);

struct ImageCardinalityReport {
  std::uint64_t image_size = 0;        // |F(V*)|
  std::uint64_t dual_image_size = 0;   // |F*(V*)|
  std::uint64_t expected = 0;
  bool all_eps0_minus_one = false;
  bool holds = false;
};

// Requires F vectorial dual-bent, F(0) = 0, F even, 2 <= m <= n/2.
ImageCardinalityReport check_image_cardinality(const VFunc& F, const VdbAnalysis& a);
ImageCardinalityReport check_image_cardinality(const VFunc& F);

// p^m (|D*_{F,i}| + delta_0(i)) = p^n + sum_{c != 0} W_{F_c}(0) z^{-<c,i>} for every i,
// together with (F_c)*(0) = 0, for F with F(0) = 0.
bool check_preimage_identity(const VFunc& F, const VdbAnalysis& a);

bool is_even(const VFunc& F);                 // F(-x) = F(x)
bool is_scalar_invariant(const VFunc& F);     // F(ax) = F(x) for a in F_p*

}  // namespace dualbent
