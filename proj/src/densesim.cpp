#include "qauth/densesim.hpp"

#include <stdexcept>

namespace qauth::densesim {

using dense::Mat;
using dense::Vec;

namespace {

// One key's contribution to Bob's output, kept as the accept-branch block
// plus the scalar weight of every reject branch. The accept block lives on
// the message space; P1 only needs these two pieces.
struct BobOutput {
  Mat accept_block;  // 2^m x 2^m, unnormalized
  double reject_weight = 0.0;
};

// Runs one key through encode -> attack -> syndrome branches -> decode.
BobOutput run_key(const authproto::SchemeDense& scheme, const authproto::AuthKey& key,
                  const dense::AdversaryChannel& attack, const Vec& message) {
  const auto& family = scheme.family();
  const Eigen::Index dim_m = 1ll << family.m;
  const Vec transmitted = authproto::auth_encode(scheme, key, message);
  const Mat branches = attack.branch_matrix(transmitted);

  BobOutput out;
  out.accept_block = Mat::Zero(dim_m, dim_m);
  const auto& coder = scheme.coder(key.k);
  const std::uint32_t syndromes = 1u << family.s;
  for (std::uint32_t observed = 0; observed < syndromes; ++observed) {
    // decode the observed coset, then QOTP-decrypt; as a matrix acting on
    // every attack branch at once.
    Mat decoded = coder.isometry(observed).adjoint() * branches;
    for (Eigen::Index col = 0; col < decoded.cols(); ++col) {
      decoded.col(col) = authproto::qotp_apply(key.qotp, family.m, decoded.col(col));
    }
    if (observed == key.y.bits) {
      out.accept_block += decoded * decoded.adjoint();
    } else {
      out.reject_weight += decoded.squaredNorm();
    }
  }
  return out;
}

}  // namespace

double soundness_measure(const authproto::SchemeDense& scheme,
                         const dense::AdversaryChannel& attack, const Vec& message) {
  const auto& family = scheme.family();
  if (message.size() != (1ll << family.m))
    throw std::invalid_argument("soundness_measure: message dimension mismatch");
  if (std::abs(message.norm() - 1.0) > dense::kNormTol)
    throw std::invalid_argument("soundness_measure: message not normalized");
  if (attack.system_qubits() != family.n)
    throw std::invalid_argument("soundness_measure: attack acts on the wrong qubit count");

  const Eigen::Index dim_m = 1ll << family.m;
  Mat accept_block = Mat::Zero(dim_m, dim_m);
  double reject_weight = 0.0;
  const std::vector<authproto::AuthKey> keys = authproto::all_keys(family);
  for (const authproto::AuthKey& key : keys) {
    const BobOutput bob = run_key(scheme, key, attack, message);
    accept_block += bob.accept_block;
    reject_weight += bob.reject_weight;
  }
  const double inv = 1.0 / static_cast<double>(keys.size());
  accept_block *= inv;
  reject_weight *= inv;

  // Tr(P1 rho) = <psi| rho_acc |psi> + Tr(rho_rej)
  const double intact = (message.adjoint() * accept_block * message).value().real();
  return intact + reject_weight;
}

dense::DensityMatrix ciphertext_density(const authproto::SchemeDense& scheme,
                                        const Vec& message) {
  const auto& family = scheme.family();
  if (message.size() != (1ll << family.m))
    throw std::invalid_argument("ciphertext_density: message dimension mismatch");
  const Eigen::Index dim_n = 1ll << family.n;
  Mat avg = Mat::Zero(dim_n, dim_n);
  const std::vector<authproto::AuthKey> keys = authproto::all_keys(family);
  for (const authproto::AuthKey& key : keys) {
    const Vec transmitted = authproto::auth_encode(scheme, key, message);
    avg += transmitted * transmitted.adjoint();
  }
  avg /= static_cast<double>(keys.size());
  avg = 0.5 * (avg + avg.adjoint().eval());
  return dense::DensityMatrix(std::move(avg));
}

dense::DensityMatrix ciphertext_density_entangled(const authproto::SchemeDense& scheme,
                                                  const Vec& joint, int reference_qubits) {
  const auto& family = scheme.family();
  const Eigen::Index dim_m = 1ll << family.m;
  const Eigen::Index dim_ref = 1ll << reference_qubits;
  if (joint.size() != dim_m * dim_ref)
    throw std::invalid_argument("ciphertext_density_entangled: dimension mismatch");
  if (std::abs(joint.norm() - 1.0) > dense::kNormTol)
    throw std::invalid_argument("ciphertext_density_entangled: state not normalized");
  const Eigen::Index dim_n = 1ll << family.n;
  Mat avg = Mat::Zero(dim_n, dim_n);
  const std::vector<authproto::AuthKey> keys = authproto::all_keys(family);
  for (const authproto::AuthKey& key : keys) {
    // apply the encoding isometry to the message half of each reference block
    Mat blocks(dim_n, dim_ref);
    for (Eigen::Index ref = 0; ref < dim_ref; ++ref) {
      const Vec msg_block = joint.segment(ref * dim_m, dim_m);
      const Vec masked = authproto::qotp_apply(key.qotp, family.m, msg_block);
      blocks.col(ref) = scheme.coder(key.k).isometry(key.y.bits) * masked;
    }
    avg += blocks * blocks.adjoint();  // reference traced out
  }
  avg /= static_cast<double>(keys.size());
  avg = 0.5 * (avg + avg.adjoint().eval());
  return dense::DensityMatrix(std::move(avg));
}

FidelityFloorResult fidelity_floor_check(const authproto::SchemeDense& scheme,
                                         const dense::AdversaryChannel& attack,
                                         const dense::DensityMatrix& message) {
  const auto& family = scheme.family();
  const Eigen::Index dim_m = 1ll << family.m;
  if (message.dim() != dim_m)
    throw std::invalid_argument("fidelity_floor_check: message dimension mismatch");

  Eigen::SelfAdjointEigenSolver<Mat> es(message.entries());
  const std::vector<authproto::AuthKey> keys = authproto::all_keys(family);
  Mat accept_total = Mat::Zero(dim_m, dim_m);
  double epsilon = 0.0;
  for (Eigen::Index i = 0; i < dim_m; ++i) {
    const double p = es.eigenvalues()[i];
    if (p <= 1e-14) continue;
    const Vec component = es.eigenvectors().col(i);
    Mat accept_i = Mat::Zero(dim_m, dim_m);
    for (const authproto::AuthKey& key : keys) {
      accept_i += run_key(scheme, key, attack, component).accept_block;
    }
    accept_i /= static_cast<double>(keys.size());
    // per-component soundness error Tr(Q_i rho_i): accepted but not intact
    const double acc_i = accept_i.trace().real();
    const double intact_i = (component.adjoint() * accept_i * component).value().real();
    epsilon = std::max(epsilon, acc_i - intact_i);
    accept_total += p * accept_i;
  }

  FidelityFloorResult out;
  out.p_acc = accept_total.trace().real();
  out.epsilon = epsilon;
  if (out.p_acc < 1e-6) {
    out.vacuous = true;
    return out;
  }
  Mat conditioned = accept_total / out.p_acc;
  conditioned = 0.5 * (conditioned + conditioned.adjoint().eval());
  out.fidelity = dense::fidelity(message, dense::DensityMatrix(std::move(conditioned)));
  out.floor = 1.0 - out.epsilon / out.p_acc;
  return out;
}

double product_state_soundness(const authproto::SchemeDense& scheme,
                               const dense::AdversaryChannel& attack, int t) {
  const auto& family = scheme.family();
  if (t < 1 || t > 2) throw std::invalid_argument("product_state_soundness: t must be 1 or 2");
  if (t * family.n > pauli::kDenseCap)
    throw std::invalid_argument("product_state_soundness: t*n exceeds the dense cap");
  if (attack.system_qubits() != t * family.n)
    throw std::invalid_argument("product_state_soundness: attack acts on the wrong qubit count");

  const Eigen::Index dim_m = 1ll << family.m;
  const Eigen::Index dim_mt = 1ll << (t * family.m);
  const Vec zero_msg = Vec::Unit(dim_m, 0);
  const std::vector<authproto::AuthKey> keys = authproto::all_keys(family);

  Mat accept_block = Mat::Zero(dim_mt, dim_mt);
  double reject_weight = 0.0;
  std::uint64_t tuple_count = 0;

  const std::uint32_t syndromes = 1u << family.s;
  std::vector<authproto::AuthKey> tuple(t);
  // iterate over all key tuples (t = 1 or 2)
  const std::size_t total_keys = keys.size();
  std::vector<std::size_t> idx(t, 0);
  while (true) {
    for (int c = 0; c < t; ++c) tuple[c] = keys[idx[c]];
    // joint encode, copy 0 on the low qubits
    Vec enc = authproto::auth_encode(scheme, tuple[0], zero_msg);
    for (int c = 1; c < t; ++c) {
      enc = dense::tensor(enc, authproto::auth_encode(scheme, tuple[c], zero_msg));
    }
    const Mat branches = attack.branch_matrix(enc);
    // branch over observed syndromes of every copy
    std::vector<std::uint32_t> obs(t, 0);
    while (true) {
      Mat decoder = scheme.coder(tuple[0].k).isometry(obs[0]).adjoint();
      for (int c = 1; c < t; ++c) {
        decoder = dense::tensor(decoder, Mat(scheme.coder(tuple[c].k).isometry(obs[c]).adjoint()));
      }
      Mat decoded = decoder * branches;
      // QOTP-decrypt every copy (kron of the per-copy masks)
      std::uint64_t mask_x = 0, mask_z = 0;
      for (int c = 0; c < t; ++c) {
        const std::uint64_t x = tuple[c].qotp & ((1ull << family.m) - 1);
        const std::uint64_t z = tuple[c].qotp >> family.m;
        mask_x |= x << (c * family.m);
        mask_z |= z << (c * family.m);
      }
      if (t * family.m > 0) {
        const pauli::PauliVector joint_mask{t * family.m, mask_x, mask_z};
        for (Eigen::Index col = 0; col < decoded.cols(); ++col) {
          Vec v = decoded.col(col);
          pauli::apply_pauli_hermitian(joint_mask, v);
          decoded.col(col) = v;
        }
      }
      bool all_accept = true;
      for (int c = 0; c < t; ++c) all_accept &= (obs[c] == tuple[c].y.bits);
      if (all_accept) {
        accept_block += decoded * decoded.adjoint();
      } else {
        reject_weight += decoded.squaredNorm();
      }
      int carry = 0;
      while (carry < t && ++obs[carry] == syndromes) obs[carry++] = 0;
      if (carry == t) break;
    }
    ++tuple_count;
    int carry = 0;
    while (carry < t && ++idx[carry] == total_keys) idx[carry++] = 0;
    if (carry == t) break;
  }

  accept_block /= static_cast<double>(tuple_count);
  reject_weight /= static_cast<double>(tuple_count);
  const Vec target = Vec::Unit(dim_mt, 0);
  const double intact = (target.adjoint() * accept_block * target).value().real();
  return intact + reject_weight;
}

}  // namespace qauth::densesim
