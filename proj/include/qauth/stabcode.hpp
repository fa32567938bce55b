#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qauth/pauli.hpp"

namespace qauth::stabcode {

/// Hyperbolic completion of an isotropic generator set: stabilizers g_i,
/// destabilizers d_i with B(g_i, d_j) = delta_ij, and logical pairs
/// (xbar_j, zbar_j) spanning the symplectic complement with the standard
/// pairing. All vectors are packed 2n-bit (a|b) rows; together they form a
/// GF(2) basis of the whole space.
struct SymplecticCompletion {
  int n = 0;  // qubits
  int s = 0;  // stabilizer generators
  int m = 0;  // logical qubits, m = n - s
  std::vector<std::uint64_t> stabilizers;    // size s (the code's RREF rows)
  std::vector<std::uint64_t> destabilizers;  // size s
  std::vector<std::uint64_t> logical_x;      // size m
  std::vector<std::uint64_t> logical_z;      // size m
};

/// Syndrome bit vector, bit i = B(g_i, x).
struct Syndrome {
  int s = 0;
  std::uint32_t bits = 0;
  bool operator==(const Syndrome&) const = default;
};

/// Deterministic completion of an isotropic rank-s row set to a hyperbolic
/// basis. Destabilizers are the canonical representatives of the affine
/// solution spaces (particular solution reduced by the RREF nullspace);
/// logical pairs come from symplectic Gram-Schmidt on the complement with
/// the lowest-index rule.
SymplecticCompletion complete_code(const std::vector<std::uint64_t>& gen_rows, int n);

Syndrome syndrome_of(const SymplecticCompletion& c, const pauli::PauliVector& x);

/// Is the packed vector in the span of the stabilizer rows?
bool in_stabilizer_span(const SymplecticCompletion& c, std::uint64_t v);

/// Image of x in Q_perp/Q as a 2m-bit logical label, (a|b) layout:
/// bit j = B(zbar_j, x) (X component), bit m+j = B(xbar_j, x) (Z component).
/// Requires syndrome_of(x) == 0; throws std::invalid_argument otherwise.
std::uint32_t logical_action(const SymplecticCompletion& c, const pauli::PauliVector& x);

/// Dense state on m message qubits or n code qubits: raw Eigen vectors,
/// validated (unit norm) where the operations require it.
struct DecodeResult {
  Eigen::VectorXcd message;  // 2^m amplitudes
  Syndrome observed;
};

/// Exact encoder/decoder for one completed code, all syndromes.
///
/// The encoded basis is pinned as follows: |y,0> is the unit vector of the
/// joint (+1 logical Z, (-1)^(y_i) stabilizer) eigenspace whose
/// lowest-index nonzero amplitude is real positive, found by applying the
/// eigenprojectors to computational basis seeds in index order; then
/// |y,c> = prod_j Lx_j^(c_j) |y,0> with Lx_j the Hermitian dense form of
/// xbar_j. With this convention an undetectable error E_e acts on encoded
/// states exactly as its 2m-bit logical label, up to one global phase.
class DenseCoder {
 public:
  explicit DenseCoder(const SymplecticCompletion& c);

  int n() const { return c_.n; }
  int m() const { return c_.m; }
  int s() const { return c_.s; }

  /// Isometry onto the coset with syndrome y; isometry columns are |y,c>.
  const Eigen::MatrixXcd& isometry(std::uint32_t y) const;

  /// encode: message (2^m, unit norm) -> code space (2^n) with syndrome y.
  Eigen::VectorXcd encode(const Syndrome& y, const Eigen::VectorXcd& message) const;

  /// decode: project onto the coset with the largest squared norm (ties to
  /// the smallest syndrome value), report it, return that coset's logical
  /// content renormalized.
  DecodeResult decode(const Eigen::VectorXcd& state) const;

 private:
  SymplecticCompletion c_;
  std::vector<Eigen::MatrixXcd> isometries_;  // one per syndrome value
};

inline Eigen::VectorXcd encode_dense(const SymplecticCompletion& c, const Syndrome& y,
                                     const Eigen::VectorXcd& message) {
  return DenseCoder(c).encode(y, message);
}

inline DecodeResult decode_dense(const SymplecticCompletion& c, const Eigen::VectorXcd& state) {
  return DenseCoder(c).decode(state);
}

}  // namespace qauth::stabcode
