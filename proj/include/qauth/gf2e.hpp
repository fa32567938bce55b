#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qauth::gf2e {

/// Coefficient bit-pattern of a GF(2^s) element in the polynomial basis
/// {1, t, ..., t^(s-1)}; low bit = constant term.
using Word = std::uint32_t;

/// GF(2)[x] helpers on bit-packed polynomials (low bit = constant term).
namespace poly2 {
int degree(std::uint64_t f);
std::uint64_t mod(std::uint64_t f, std::uint64_t g);
bool is_irreducible(std::uint64_t f);
}  // namespace poly2

/// Smallest monic irreducible polynomial of the given degree over GF(2),
/// "smallest" meaning the coefficient vector read as an integer. Degree 1
/// returns x, so GF(2) itself fits the same construction path.
std::uint64_t find_irreducible_gf2(int degree);

/// GF(2^s) with the lexicographically smallest modulus, elements as Words.
///
/// This is the ground field of the tower; s = 1 degenerates to GF(2) with
/// modulus x. All operations are pure and the object is immutable, so a
/// single instance may be shared freely across threads.
class BaseField {
 public:
  explicit BaseField(int s);
  BaseField(int s, Word modulus);  // validates irreducibility

  int s() const { return s_; }
  Word modulus() const { return modulus_; }
  std::uint32_t order() const { return 1u << s_; }

  Word add(Word a, Word b) const;
  Word mul(Word a, Word b) const;
  Word inv(Word a) const;  // throws std::domain_error on 0
  Word pow(Word a, std::uint64_t e) const;

  /// Absolute trace GF(2^s) -> GF(2).
  int trace(Word a) const;

 private:
  void check_elem(Word a) const;
  int s_;
  Word modulus_;
};

/// Top-level element: coordinates over the base field in the polynomial
/// basis {1, w, ..., w^(2r-1)} of the top modulus, low index = constant term.
using TopElem = std::vector<Word>;

/// Serializable description of the two-level tower.
struct TowerDesc {
  int r = 0;
  int s = 0;
  Word base_modulus = 0;          // degree-s bit polynomial
  std::vector<Word> top_modulus;  // 2r+1 base-field coefficients, monic

  bool operator==(const TowerDesc&) const = default;
};

/// The field GF(2^(2rs)) realized as GF((2^s)^(2r)), giving both vector-space
/// views at once: TopElem holds the 2r coordinates over GF(2^s), and
/// to_bits/from_bits expose the 2rs-dimensional binary view (concatenated
/// base-coordinate bit-vectors, ascending basis order, little-endian).
class TowerField {
 public:
  /// Canonical tower: lexicographically smallest moduli at both levels.
  TowerField(int r, int s);
  /// Rebuild from a descriptor (validates both moduli).
  explicit TowerField(const TowerDesc& desc);

  const TowerDesc& desc() const { return desc_; }
  const BaseField& base() const { return base_; }
  int r() const { return desc_.r; }
  int s() const { return desc_.s; }
  int dim_over_base() const { return 2 * desc_.r; }
  int bin_dim() const { return 2 * desc_.r * desc_.s; }

  TopElem zero() const;
  TopElem one() const;

  TopElem add(const TopElem& a, const TopElem& b) const;
  TopElem mul(const TopElem& a, const TopElem& b) const;
  TopElem square(const TopElem& a) const;
  TopElem pow(const TopElem& a, std::uint64_t e) const;
  TopElem inv(const TopElem& a) const;  // throws std::domain_error on 0
  bool is_zero(const TopElem& a) const;

  /// Scalar action of the base field on the top field.
  TopElem scalar_mul(Word alpha, const TopElem& a) const;

  /// Absolute trace GF(2^(2rs)) -> GF(2).
  int trace(const TopElem& a) const;

  /// a^(2^(rs)), the conjugation entering the symplectic form.
  TopElem conj_halfway(const TopElem& a) const;

  /// Binary view: bit (j*s + i) carries bit i of coordinate j. bin_dim <= 64.
  std::uint64_t to_bits(const TopElem& a) const;
  TopElem from_bits(std::uint64_t bits) const;

  /// The 2r base-field coordinates (a copy), and its inverse.
  std::vector<Word> subfield_coords(const TopElem& a) const;
  TopElem assemble(const std::vector<Word>& coords) const;  // throws on length mismatch

 private:
  void check_elem(const TopElem& a) const;
  TowerDesc desc_;
  BaseField base_;
};

/// Smallest monic irreducible polynomial of the given degree over GF(2^s),
/// as a coefficient vector of length degree+1 (monic leading 1 included).
/// Ordering: coefficient vector read as an integer in base 2^s, low digit =
/// constant term. Exhaustive trial division; meant for desk-scale degrees.
std::vector<Word> find_irreducible(int degree, const BaseField& ground);

std::string word_to_hex(Word w);
Word word_from_hex(const std::string& s);

}  // namespace qauth::gf2e
