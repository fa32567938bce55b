#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qauth/gf2e.hpp"

namespace qauth::pauli {

/// Label of the n-qubit Pauli operator X^a Z^b, phases not tracked.
///
/// Bit conventions, used everywhere downstream:
///   - qubit i's X bit is bit i of `x_bits`, Z bit is bit i of `z_bits`;
///   - the packed 2n-bit form is (a|b): bits [0,n) = X part, [n,2n) = Z part;
///   - text form is a string over {I,X,Z,Y} with qubit 0 leftmost
///     (Y meaning both bits set, i.e. XZ up to phase);
///   - hex form is the packed integer, most significant nibble first.
struct PauliVector {
  int n = 0;
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;

  static PauliVector identity(int n) { return {n, 0, 0}; }
  static PauliVector from_bits(int n, std::uint64_t packed);
  static PauliVector from_string(const std::string& text);
  static PauliVector from_hex(int n, const std::string& hex);

  std::uint64_t to_bits() const;
  std::string to_string() const;
  std::string to_hex() const;

  bool is_identity() const { return x_bits == 0 && z_bits == 0; }
  /// Number of qubits acted on non-trivially.
  int weight() const;

  /// Group product up to phase (bitwise XOR).
  friend PauliVector operator+(const PauliVector& a, const PauliVector& b);
  bool operator==(const PauliVector&) const = default;
};

/// Standard symplectic form a'.b xor a.b'; zero iff E_x and E_y commute.
int symplectic_standard(const PauliVector& x, const PauliVector& y);

/// Same form on packed 2n-bit vectors. Hot path for the exhaustive scans.
inline int symplectic_standard_bits(std::uint64_t u, std::uint64_t v, int n) {
  const std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
  const std::uint64_t ux = u & mask, uz = u >> n;
  const std::uint64_t vx = v & mask, vz = v >> n;
  return (__builtin_popcountll(ux & vz) ^ __builtin_popcountll(uz & vx)) & 1;
}

/// Field-defined form B(x,y) = Tr(x * y^(2^(rs))) on GF(2^(2rs)).
int symplectic_field(const gf2e::TowerField& tower, const gf2e::TopElem& x,
                     const gf2e::TopElem& y);

/// Invertible GF(2) change of basis from the tower's binary coordinates to
/// standard (a|b) coordinates, pulling the field form back to the standard
/// one: symplectic_field(u, v) == symplectic_standard(M u, M v).
struct SymplecticBasisMap {
  int n = 0;
  /// Row i of M as a 2n-bit mask: output bit i = parity(rows[i] & input).
  std::vector<std::uint64_t> rows;

  std::uint64_t apply(std::uint64_t field_coords) const;
};

/// Deterministic construction of the basis map by symplectic Gram-Schmidt on
/// the field form: repeatedly take the lowest-index remaining basis vector,
/// pair it with its lowest-index symplectic partner, project the pair out.
SymplecticBasisMap align_bases(const gf2e::TowerField& tower);

/// Hyperbolic pairs (e_i, f_i) for an arbitrary form given as row masks
/// F over a list of packed vectors; exposed for reuse by the completion code.
/// form(u, v) must be alternating and nondegenerate on span(basis).
std::vector<std::pair<std::uint64_t, std::uint64_t>> symplectic_gram_schmidt(
    std::vector<std::uint64_t> basis, int dim,
    const std::vector<std::uint64_t>& form_rows);

inline constexpr int kDenseCap = 12;

using Cplx = std::complex<double>;

/// Dense matrix of X^a Z^b (literal operator product, X applied after Z):
/// maps |j> to (-1)^(b.j) |j xor a>. Requires n <= kDenseCap.
Eigen::MatrixXcd pauli_to_dense(const PauliVector& p);

/// In-place application of X^a Z^b to a state vector of length 2^n.
void apply_pauli(const PauliVector& p, Eigen::VectorXcd& state);

/// Phase making i^k X^a Z^b a Hermitian involution (k = |a & b| mod 4 via
/// i^popcount). Measurement-style uses (projectors, eigenvalues +-1) want
/// this normalization; the (a|b) label is unchanged.
Cplx hermitian_phase(const PauliVector& p);

/// Dense Hermitian form: hermitian_phase(p) * pauli_to_dense(p).
Eigen::MatrixXcd pauli_to_dense_hermitian(const PauliVector& p);
void apply_pauli_hermitian(const PauliVector& p, Eigen::VectorXcd& state);

}  // namespace qauth::pauli
