#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dualbent/common.hpp"

namespace dualbent {

bool is_prime(unsigned p);

// Polynomials over F_p, coefficients low to high.
using Poly = std::vector<unsigned>;

// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(unsigned p, const Poly& f);

// x has multiplicative order p^deg - 1 modulo f (implies irreducible).
bool is_primitive_poly(unsigned p, const Poly& f);

// Default modulus for GF(p^k): the Conway polynomial when tabulated, otherwise the
// first primitive polynomial compatible with the defaults of every proper subfield.
Poly default_modulus(unsigned p, unsigned k);

// Tabulated Conway polynomial (p in {2,3,5,7}, k <= 9), if any.
std::optional<Poly> conway_table(unsigned p, unsigned k);

// GF(p^k) with elements as canonical indices sum c_i p^i of polynomial coefficients.
class GaloisField {
 public:
  GaloisField(unsigned p, Poly modulus);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  Index order() const { return q_; }
  const Poly& modulus() const { return modulus_; }

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index scalar_mul(unsigned s, Index a) const;
  Index mul(Index a, Index b) const;
  // Schoolbook product reduced by the modulus; reference for the table path.
  Index mul_poly(Index a, Index b) const;
  Index inv(Index a) const;
  Index pow(Index a, std::uint64_t e) const;
  Index frobenius(Index a, unsigned times = 1) const;

  Index primitive_element() const { return gen_; }
  Index exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  std::uint64_t log(Index a) const;

  // Tr_m^k(a) as an element of this field (it lies in the subfield of order p^m).
  Index trace(Index a, unsigned m) const;
  // Tr_1^k(a) as a residue, table driven.
  unsigned absolute_trace(Index a) const { return abs_trace_[a]; }
  // +1, -1 or 0; p must be odd.
  int quadratic_character(Index a) const;
  bool in_subfield(Index a, unsigned m) const;
  // Evaluate a polynomial over F_p at a.
  Index evaluate(const Poly& f, Index a) const;

  std::vector<unsigned> digits(Index a) const;
  Index from_digits(std::span<const unsigned> d) const;

  bool operator==(const GaloisField& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

 private:
  Index pow_slow(Index a, std::uint64_t e) const;

  unsigned p_;
  unsigned k_;
  Index q_;
  Poly modulus_;
  Index gen_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> abs_trace_;
};

std::shared_ptr<const GaloisField> make_field(unsigned p, unsigned k);
std::shared_ptr<const GaloisField> make_field(unsigned p, Poly modulus);

// Embedding of a subfield GF(p^m) (with its own modulus) into GF(p^k).
class SubfieldMap {
 public:
  SubfieldMap(std::shared_ptr<const GaloisField> big, std::shared_ptr<const GaloisField> small);
  Index to_big(Index s) const { return up_[s]; }
  // Throws PreconditionError if b is not in the image.
  Index to_small(Index b) const;
  const GaloisField& big() const { return *big_; }
  const GaloisField& small() const { return *small_; }
  // True when the default generator of the small field maps to g^((q-1)/(p^m-1)).
  bool used_norm_compatible_root() const { return norm_compatible_; }

 private:
  std::shared_ptr<const GaloisField> big_, small_;
  std::vector<Index> up_;
  std::unordered_map<Index, Index> down_;
  bool norm_compatible_ = false;
};

enum class FormKind { Trace, Dot };

// V_n^(p) as a product of extension fields. A degree-1 factor is F_p.
class SpaceDesc {
 public:
  SpaceDesc(unsigned p, std::vector<std::shared_ptr<const GaloisField>> factors,
            std::vector<FormKind> forms = {});

  // Factors with default moduli and trace forms.
  static std::shared_ptr<const SpaceDesc> standard(unsigned p, const std::vector<unsigned>& degrees);
  // F_p^n with the dot product.
  static std::shared_ptr<const SpaceDesc> dot(unsigned p, unsigned n);
  static std::shared_ptr<const SpaceDesc> parse_header(std::string_view header);

  unsigned p() const { return p_; }
  unsigned dimension() const { return n_; }
  Index size() const { return size_; }
  std::size_t factor_count() const { return factors_.size(); }
  const GaloisField& field(std::size_t f) const;
  std::shared_ptr<const GaloisField> field_ptr(std::size_t f) const { return factors_.at(f); }
  FormKind form(std::size_t f) const { return forms_.at(f); }
  unsigned factor_offset(std::size_t f) const { return offsets_.at(f); }

  Index slice(Index x, std::size_t f) const;
  Index with_slice(Index x, std::size_t f, Index v) const;
  Index compose(std::span<const Index> slices) const;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index scale(unsigned s, Index a) const;
  unsigned inner(Index a, Index b) const;

  std::vector<unsigned> digits(Index a) const;
  Index from_digits(std::span<const unsigned> d) const;

  // Operations on one factor.
  Index field_mul(std::size_t f, Index a, Index b) const;
  Index trace(std::size_t f, Index a, unsigned m) const;
  int quadratic_character(std::size_t f, Index a) const;

  std::string header() const;

  // Gram matrix of the inner product on unit vectors, row-major n x n.
  std::vector<unsigned> gram_matrix() const;
  bool gram_is_identity() const;
  // perm[a] = canonical index of G a. Built on first use.
  const std::vector<std::uint32_t>& gram_permutation() const;
  // perm[x] = index of -x. Built on first use.
  const std::vector<std::uint32_t>& negation_table() const;

  bool operator==(const SpaceDesc& o) const;

 private:
  unsigned p_;
  unsigned n_ = 0;
  Index size_ = 1;
  std::vector<std::shared_ptr<const GaloisField>> factors_;
  std::vector<FormKind> forms_;
  std::vector<unsigned> offsets_;
  std::vector<Index> factor_scale_;  // p^offset
  std::vector<Index> pow_;           // p^i, i <= n

  struct Lazy {
    std::once_flag gram_once, neg_once;
    std::vector<std::uint32_t> gram_perm, neg;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

using SpacePtr = std::shared_ptr<const SpaceDesc>;

// Gaussian elimination rank over F_p of row vectors given as digit lists.
unsigned rank_mod_p(unsigned p, std::vector<std::vector<unsigned>> rows);

unsigned inverse_mod_p(unsigned a, unsigned p);

}  // namespace dualbent
