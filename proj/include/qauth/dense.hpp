#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <random>

#include "qauth/pauli.hpp"

namespace qauth::dense {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kNormTol = 1e-10;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr int kAncillaCap = 4;

/// Pure state on n qubits, validated: dimension 2^n, unit norm within 1e-10.
struct DenseState {
  int n = 0;
  Vec amps;

  DenseState() = default;
  DenseState(int n, Vec a);

  static DenseState basis(int n, std::uint64_t index);
};

/// Validated density operator: Hermitian within 1e-10, eigenvalues above
/// -1e-10, unit trace within 1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat entries);
  static DensityMatrix pure(const Vec& psi);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  Eigen::Index dim() const { return entries_.rows(); }
  const Mat& entries() const { return entries_; }

 private:
  Mat entries_;
};

/// Tensor product with the low-qubits-first index convention used across the
/// project: index = low + dim(low) * high.
Mat tensor(const Mat& low, const Mat& high);
Vec tensor(const Vec& low, const Vec& high);

/// Trace out the trailing (high) factor of a dim_keep * dim_drop system.
Mat partial_trace_high(const Mat& joint, Eigen::Index dim_keep, Eigen::Index dim_drop);

/// Uhlmann fidelity F(a,b) = Tr sqrt(sqrt(a) b sqrt(a)); for a pure this is
/// sqrt(<psi|b|psi>), the convention used throughout.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);
double fidelity_pure(const Vec& psi, const Mat& rho);

/// D(a,b) = (1/2) Tr |a - b|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Seeded Haar-style unitary via QR of a complex Gaussian matrix with the
/// R-diagonal phase normalization.
Mat haar_unitary(Eigen::Index dim, std::mt19937_64& rng);

/// Seeded random density matrix (normalized Wishart G G-dagger).
DensityMatrix random_density(Eigen::Index dim, std::mt19937_64& rng);

/// Seeded random pure state.
Vec random_state(Eigen::Index dim, std::mt19937_64& rng);

/// Adversary intervention on the transmitted n-qubit system: either a Pauli
/// label or a unitary on transmitted (low qubits) x ancilla (high qubits),
/// ancilla starting in |0...0> and traced out afterwards.
class AdversaryChannel {
 public:
  static AdversaryChannel from_pauli(const pauli::PauliVector& p);
  static AdversaryChannel from_unitary(Mat u, int system_qubits, int ancilla_qubits);

  int system_qubits() const { return system_qubits_; }
  int ancilla_qubits() const { return ancilla_qubits_; }
  bool is_pauli() const { return pauli_.has_value(); }
  const pauli::PauliVector& pauli_label() const { return *pauli_; }

  /// Pure system input -> matrix of pure branches: column e is the
  /// (unnormalized) system state entangled with ancilla basis state e, so the
  /// received density is branch_matrix * branch_matrix.adjoint().
  Mat branch_matrix(const Vec& system_in) const;

  /// Density in, density out (spectral decomposition over branch matrices).
  Mat apply(const Mat& rho_system) const;

 private:
  AdversaryChannel() = default;
  std::optional<pauli::PauliVector> pauli_;
  Mat unitary_;
  int system_qubits_ = 0;
  int ancilla_qubits_ = 0;
};

struct PhaseAttackResult {
  double achieved;  // overlap of the attacked plus-state with the minus-state
  double floor;     // p0 + p1 - 1
  double p0;
  double p1;
};

/// The conditional-phase distinguishing attack: split on the eigenspaces of
/// rho0 - rho1 (nonnegative eigenvalues, within 1e-10, go to V0), flip the
/// phase on V1, and measure how close the attacked (|0~> + |1~>)/sqrt(2)
/// purification lands to (|0~> - |1~>)/sqrt(2).
PhaseAttackResult phase_attack_demo(const DensityMatrix& rho0, const DensityMatrix& rho1);

struct TensorPowerResult {
  double distance;  // exact D(rho0^t, rho1^t)
  double bound;     // 1 - 2 exp(-t delta^2 / 2), delta = D(rho0, rho1)
};

/// Exact tensor-power trace distance against the amplification bound.
/// Requires dim^t <= 4096.
TensorPowerResult tensor_power_distance_demo(const DensityMatrix& rho0,
                                             const DensityMatrix& rho1, int t);

}  // namespace qauth::dense
