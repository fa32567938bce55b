#pragma once

#include "qauth/authproto.hpp"
#include "qauth/dense.hpp"

namespace qauth::densesim {

/// Exact soundness functional: averages Bob's joint (message, verdict)
/// output over every key (k, x, y) for the given adversary channel and pure
/// message, and returns Tr(P1 rho_Bob) with P1 the "message intact or
/// rejected" projector. 1.0 means the attack achieved nothing.
double soundness_measure(const authproto::SchemeDense& scheme,
                         const dense::AdversaryChannel& attack,
                         const Eigen::VectorXcd& message);

/// Exact key-averaged transmitted density for a message on m qubits.
dense::DensityMatrix ciphertext_density(const authproto::SchemeDense& scheme,
                                        const Eigen::VectorXcd& message);

/// Same, for a message entangled with a reference system (message qubits
/// low, reference high); returns the reduced transmitted n-qubit density.
dense::DensityMatrix ciphertext_density_entangled(const authproto::SchemeDense& scheme,
                                                  const Eigen::VectorXcd& joint,
                                                  int reference_qubits);

struct FidelityFloorResult {
  double fidelity = 0.0;     // F(rho, rho') between sent and accepted output
  double p_acc = 0.0;        // Bob's total accept probability
  double epsilon = 0.0;      // soundness error measured for this attack
  double floor = 0.0;        // 1 - epsilon / p_acc
  bool vacuous = false;      // p_acc below 1e-6: no meaningful floor
};

/// Checks the accepted-output fidelity floor F >= 1 - eps/p_acc, with eps
/// the soundness error of this very attack (per spectral component for mixed
/// messages, which is what the floor's proof consumes).
FidelityFloorResult fidelity_floor_check(const authproto::SchemeDense& scheme,
                                         const dense::AdversaryChannel& attack,
                                         const dense::DensityMatrix& message);

/// Soundness of the t-fold iterated scheme (independent keys per copy) on
/// the all-zero product message, under an attack acting on all t*n
/// transmitted qubits at once. Bob accepts only if every copy accepts.
/// t*n must stay within the dense cap.
double product_state_soundness(const authproto::SchemeDense& scheme,
                               const dense::AdversaryChannel& attack, int t);

}  // namespace qauth::densesim
