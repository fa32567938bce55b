#pragma once

#include <cstdint>
#include <vector>

#include "qauth/dense.hpp"
#include "qauth/ptcodes.hpp"
#include "qauth/rational.hpp"
#include "qauth/stabcode.hpp"

namespace qauth::authproto {

/// The private key triple: code index k in [0, 2^s], a 2m-bit quantum
/// one-time-pad key (X bits low, Z bits high), and an s-bit secret syndrome.
struct AuthKey {
  int k = 0;
  std::uint64_t qotp = 0;
  stabcode::Syndrome y;

  bool operator==(const AuthKey&) const = default;
};

/// Accounting of Theorem-style key length: 2m + s + ceil(log2(2^s + 1)).
int key_bit_length(const ptcodes::PurityTestingFamily& family);

/// Seeded key generation: k uniform over the 2^s + 1 codes via rejection
/// sampling on ceil(log2(2^s+1))-bit draws, then 2m QOTP bits, then s
/// syndrome bits, all from one mt19937_64 stream.
AuthKey keygen(std::uint64_t seed, const ptcodes::PurityTestingFamily& family);

/// Every key, in deterministic (k, qotp, y) lexicographic order; the exact
/// averaging set of size (2^s + 1) * 4^m * 2^s.
std::vector<AuthKey> all_keys(const ptcodes::PurityTestingFamily& family);

/// Quantum one-time pad: per qubit j apply the keyed Pauli with X bit j and
/// Z bit m+j of the key (as a Hermitian involution, so it is exactly its own
/// inverse). m = message qubit count.
Eigen::VectorXcd qotp_apply(std::uint64_t key_bits, int m, const Eigen::VectorXcd& message);

/// Cached dense coders for a family, one per code.
class SchemeDense {
 public:
  explicit SchemeDense(const ptcodes::PurityTestingFamily& family);
  const ptcodes::PurityTestingFamily& family() const { return family_; }
  const stabcode::DenseCoder& coder(int k) const { return coders_.at(k); }

 private:
  const ptcodes::PurityTestingFamily& family_;
  std::vector<stabcode::DenseCoder> coders_;
};

/// Sender: QOTP-encrypt, then encode into the keyed code with the keyed
/// syndrome (Protocol step "A q-encrypts rho as tau using key x; A encodes
/// tau according to Q_k with syndrome y").
Eigen::VectorXcd auth_encode(const SchemeDense& scheme, const AuthKey& key,
                             const Eigen::VectorXcd& message);

struct VerifyResult {
  bool accept = false;
  stabcode::Syndrome observed;
  Eigen::VectorXcd message;  // decoded and decrypted either way; flagged by accept
};

/// Receiver: measure the syndrome, accept iff it matches the keyed one,
/// decode the observed coset and QOTP-decrypt. The message is produced on
/// reject too (the scheme's two-output shape), just flagged.
VerifyResult auth_verify(const SchemeDense& scheme, const AuthKey& key,
                         const Eigen::VectorXcd& received);

enum class Verdict { Reject, Accept };

struct AttackOutcome {
  Verdict verdict = Verdict::Reject;
  std::uint32_t logical_effect = 0;  // 2m-bit label, meaningful on Accept

  bool operator==(const AttackOutcome&) const = default;
};

/// Symbolic outcome of a Pauli attack E_e on the authentication scheme under
/// the given key: the receiver's measured syndrome is y xor syndrome(e), so
/// the verdict is Accept iff syndrome(e) = 0, and the surviving effect is the
/// logical label of e (QOTP conjugation maps a Pauli attack to itself up to
/// sign, so the qotp and y components never change the verdict).
AttackOutcome pauli_attack_analyze(const ptcodes::PurityTestingFamily& family,
                                   const AuthKey& key, const pauli::PauliVector& e);

/// Bell-frame semantics of the interactive purity-testing protocol: both
/// parties measure the syndrome of Q_k on their halves; an error E_e on the
/// channel offsets the receiver's syndrome by syndrome(e), so they agree iff
/// syndrome(e) = 0, and the surviving Bell-frame error is the logical label.
/// alice_syndrome models the (public, random) value announced by the sender.
AttackOutcome purity_protocol_analyze(const ptcodes::PurityTestingFamily& family, int k,
                                      const pauli::PauliVector& e,
                                      std::uint32_t alice_syndrome = 0);

struct SoundnessReport {
  pauli::PauliVector error;
  std::vector<AttackOutcome> per_key;  // indexed by code k
  Rational corruption_probability;    // #{k : Accept with effect != 0} / (2^s+1)
};

SoundnessReport soundness_exact(const ptcodes::PurityTestingFamily& family,
                                const pauli::PauliVector& e);

struct SoundnessWorstCase {
  Rational max_corruption;
  pauli::PauliVector argmax;
};

/// Max of corruption_probability over all nonzero errors (exhaustive).
SoundnessWorstCase soundness_scan(const ptcodes::PurityTestingFamily& family,
                                  int cap = ptcodes::kExhaustiveCap);

}  // namespace qauth::authproto
