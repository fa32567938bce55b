#include "qauth/authproto.hpp"

#include <random>
#include <stdexcept>

namespace qauth::authproto {

namespace {

int ceil_log2(std::uint64_t v) {
  int bits = 0;
  while ((1ull << bits) < v) ++bits;
  return bits;
}

}  // namespace

int key_bit_length(const ptcodes::PurityTestingFamily& family) {
  return 2 * family.m + family.s + ceil_log2((1ull << family.s) + 1);
}

AuthKey keygen(std::uint64_t seed, const ptcodes::PurityTestingFamily& family) {
  std::mt19937_64 rng(seed);
  const std::uint64_t key_count = (1ull << family.s) + 1;
  const int k_bits = ceil_log2(key_count);
  auto draw_bits = [&rng](int bits) -> std::uint64_t {
    if (bits == 0) return 0;
    return rng() & ((bits == 64) ? ~0ull : ((1ull << bits) - 1));
  };
  // Rejection sampling keeps k uniform although 2^s + 1 is never a power of 2.
  std::uint64_t k;
  do {
    k = draw_bits(k_bits);
  } while (k >= key_count);
  AuthKey key;
  key.k = static_cast<int>(k);
  key.qotp = draw_bits(2 * family.m);
  key.y = stabcode::Syndrome{family.s, static_cast<std::uint32_t>(draw_bits(family.s))};
  return key;
}

std::vector<AuthKey> all_keys(const ptcodes::PurityTestingFamily& family) {
  std::vector<AuthKey> keys;
  const std::uint64_t qotp_count = 1ull << (2 * family.m);
  const std::uint32_t syndrome_count = 1u << family.s;
  keys.reserve(family.codes.size() * qotp_count * syndrome_count);
  for (int k = 0; k < family.code_count(); ++k) {
    for (std::uint64_t x = 0; x < qotp_count; ++x) {
      for (std::uint32_t y = 0; y < syndrome_count; ++y) {
        keys.push_back(AuthKey{k, x, stabcode::Syndrome{family.s, y}});
      }
    }
  }
  return keys;
}

Eigen::VectorXcd qotp_apply(std::uint64_t key_bits, int m, const Eigen::VectorXcd& message) {
  if (m == 0) {
    if (key_bits) throw std::invalid_argument("qotp_apply: key bits with no qubits");
    return message;
  }
  if (message.size() != (1ll << m)) throw std::invalid_argument("qotp_apply: dimension mismatch");
  const pauli::PauliVector mask = pauli::PauliVector::from_bits(m, key_bits);
  Eigen::VectorXcd out = message;
  pauli::apply_pauli_hermitian(mask, out);
  return out;
}

SchemeDense::SchemeDense(const ptcodes::PurityTestingFamily& family) : family_(family) {
  coders_.reserve(family.codes.size());
  for (const ptcodes::CurveCode& code : family.codes) {
    coders_.emplace_back(code.completion);
  }
}

Eigen::VectorXcd auth_encode(const SchemeDense& scheme, const AuthKey& key,
                             const Eigen::VectorXcd& message) {
  const auto& family = scheme.family();
  if (key.k < 0 || key.k >= family.code_count())
    throw std::invalid_argument("auth_encode: code index out of range");
  const Eigen::VectorXcd masked = qotp_apply(key.qotp, family.m, message);
  return scheme.coder(key.k).encode(key.y, masked);
}

VerifyResult auth_verify(const SchemeDense& scheme, const AuthKey& key,
                         const Eigen::VectorXcd& received) {
  const auto& family = scheme.family();
  if (key.k < 0 || key.k >= family.code_count())
    throw std::invalid_argument("auth_verify: code index out of range");
  const stabcode::DecodeResult decoded = scheme.coder(key.k).decode(received);
  VerifyResult out;
  out.observed = decoded.observed;
  out.accept = decoded.observed == key.y;
  out.message = qotp_apply(key.qotp, family.m, decoded.message);
  return out;
}

AttackOutcome pauli_attack_analyze(const ptcodes::PurityTestingFamily& family,
                                   const AuthKey& key, const pauli::PauliVector& e) {
  if (key.k < 0 || key.k >= family.code_count())
    throw std::invalid_argument("pauli_attack_analyze: code index out of range");
  const auto& completion = family.codes[key.k].completion;
  const stabcode::Syndrome shift = stabcode::syndrome_of(completion, e);
  const std::uint32_t observed = key.y.bits ^ shift.bits;
  AttackOutcome out;
  if (observed != key.y.bits) {
    out.verdict = Verdict::Reject;
    return out;
  }
  out.verdict = Verdict::Accept;
  out.logical_effect = stabcode::logical_action(completion, e);
  return out;
}

AttackOutcome purity_protocol_analyze(const ptcodes::PurityTestingFamily& family, int k,
                                      const pauli::PauliVector& e,
                                      std::uint32_t alice_syndrome) {
  if (k < 0 || k >= family.code_count())
    throw std::invalid_argument("purity_protocol_analyze: code index out of range");
  const auto& completion = family.codes[k].completion;
  const std::uint32_t bob_syndrome =
      alice_syndrome ^ stabcode::syndrome_of(completion, e).bits;
  AttackOutcome out;
  if (bob_syndrome != alice_syndrome) {
    out.verdict = Verdict::Reject;
    return out;
  }
  out.verdict = Verdict::Accept;
  out.logical_effect = stabcode::logical_action(completion, e);
  return out;
}

SoundnessReport soundness_exact(const ptcodes::PurityTestingFamily& family,
                                const pauli::PauliVector& e) {
  SoundnessReport report;
  report.error = e;
  int corrupting = 0;
  for (int k = 0; k < family.code_count(); ++k) {
    AuthKey key;
    key.k = k;
    key.y = stabcode::Syndrome{family.s, 0};
    const AttackOutcome outcome = pauli_attack_analyze(family, key, e);
    if (outcome.verdict == Verdict::Accept && outcome.logical_effect != 0) ++corrupting;
    report.per_key.push_back(outcome);
  }
  report.corruption_probability = Rational(corrupting, family.code_count());
  return report;
}

SoundnessWorstCase soundness_scan(const ptcodes::PurityTestingFamily& family, int cap) {
  if (family.n > cap || family.n > ptcodes::kExhaustiveCap)
    throw std::invalid_argument("soundness_scan: n exceeds the exhaustive cap");
  SoundnessWorstCase worst;
  worst.max_corruption = Rational(0, 1);
  worst.argmax = pauli::PauliVector::identity(family.n);
  const std::uint64_t total = 1ull << (2 * family.n);
  for (std::uint64_t v = 1; v < total; ++v) {
    const pauli::PauliVector e = pauli::PauliVector::from_bits(family.n, v);
    int corrupting = 0;
    for (int k = 0; k < family.code_count(); ++k) {
      const auto& completion = family.codes[k].completion;
      if (stabcode::syndrome_of(completion, e).bits != 0) continue;
      if (stabcode::logical_action(completion, e) != 0) ++corrupting;
    }
    const Rational p(corrupting, family.code_count());
    if (worst.max_corruption < p) {
      worst.max_corruption = p;
      worst.argmax = e;
    }
  }
  return worst;
}

}  // namespace qauth::authproto
