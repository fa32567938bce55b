#include <cmath>
#include <random>

#include "doctest.h"
#include "qauth/authproto.hpp"
#include "qauth/densesim.hpp"

using namespace qauth;
using namespace qauth::authproto;
using pauli::PauliVector;

namespace {

const ptcodes::PurityTestingFamily& fam22() {
  static const auto f = ptcodes::build_family(2, 2);
  return f;
}

const SchemeDense& scheme22() {
  static const SchemeDense s(fam22());
  return s;
}

Eigen::VectorXcd seeded_state(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return dense::random_state(dim, rng);
}

}  // namespace

TEST_CASE("keygen determinism and ranges") {
  const auto& family = fam22();
  const AuthKey a = keygen(1234, family);
  const AuthKey b = keygen(1234, family);
  CHECK(a == b);
  CHECK(keygen(1235, family).qotp != a.qotp);  // overwhelmingly likely, fixed seeds
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const AuthKey k = keygen(seed, family);
    CHECK(k.k >= 0);
    CHECK(k.k < family.code_count());
    CHECK((k.qotp >> (2 * family.m)) == 0);
    CHECK((k.y.bits >> family.s) == 0);
  }
}

TEST_CASE("keygen uniformity of the code index") {
  const auto& family = fam22();
  const int buckets = family.code_count();
  std::vector<int> counts(buckets, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[keygen(900000 + i, family).k];
  const double p = 1.0 / buckets;
  const double mean = draws * p;
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (int c : counts) CHECK(std::abs(c - mean) < 5 * sigma);
}

TEST_CASE("key length accounting") {
  CHECK(key_bit_length(fam22()) == 2 * 2 + 2 + 3);  // 2m + s + ceil(log2 5)
  CHECK(key_bit_length(ptcodes::build_family(2, 1)) == 2 + 1 + 2);
  CHECK(key_bit_length(ptcodes::build_family(2, 3)) == 6 + 3 + 4);
  for (const auto& [r, s] : {std::pair{2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    const auto family = ptcodes::build_family(r, s);
    CHECK(key_bit_length(family) > 2 * family.m);  // above the 2m floor
  }
}

TEST_CASE("qotp basics") {
  const Eigen::VectorXcd psi = seeded_state(4, 77);
  CHECK(qotp_apply(0, 2, psi).isApprox(psi, 1e-14));
  for (std::uint64_t key = 0; key < 16; ++key) {
    CHECK(qotp_apply(key, 2, qotp_apply(key, 2, psi)).isApprox(psi, 1e-12));
  }
}

TEST_CASE("qotp key average is maximally mixed") {
  for (int m = 1; m <= 3; ++m) {
    const Eigen::Index dim = 1ll << m;
    const Eigen::VectorXcd psi = seeded_state(dim, 100 + m);
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t key = 0; key < (1ull << (2 * m)); ++key) {
      const Eigen::VectorXcd out = qotp_apply(key, m, psi);
      avg += out * out.adjoint();
    }
    avg /= static_cast<double>(1ull << (2 * m));
    CHECK((avg - Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("auth encode/verify completeness on sampled keys") {
  const auto& family = fam22();
  const Eigen::VectorXcd msg = seeded_state(4, 5);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const AuthKey key = keygen(seed, family);
    const Eigen::VectorXcd sent = auth_encode(scheme22(), key, msg);
    CHECK(std::abs(sent.norm() - 1.0) < 1e-12);
    const VerifyResult res = auth_verify(scheme22(), key, sent);
    CHECK(res.accept);
    CHECK(std::abs(std::abs(msg.dot(res.message)) - 1.0) < 1e-10);
  }
}

TEST_CASE("auth_verify flags errors according to their syndrome") {
  const auto& family = fam22();
  const Eigen::VectorXcd msg = seeded_state(4, 6);
  const AuthKey key = keygen(42, family);
  const auto& completion = family.codes[key.k].completion;
  const Eigen::VectorXcd sent = auth_encode(scheme22(), key, msg);

  int rejects = 0, silent = 0;
  for (std::uint64_t v = 1; v < 256; ++v) {
    const auto e = PauliVector::from_bits(4, v);
    Eigen::VectorXcd hit = sent;
    pauli::apply_pauli(e, hit);
    const VerifyResult res = auth_verify(scheme22(), key, hit);
    if (stabcode::syndrome_of(completion, e).bits != 0) {
      CHECK_FALSE(res.accept);
      ++rejects;
    } else {
      CHECK(res.accept);
      if (stabcode::logical_action(completion, e) == 0) {
        // stabilizer element: message untouched
        CHECK(std::abs(std::abs(msg.dot(res.message)) - 1.0) < 1e-10);
        ++silent;
      }
    }
  }
  CHECK(rejects == 192);
  CHECK(silent == 3);  // the nonidentity stabilizer elements
}

TEST_CASE("pauli_attack_analyze matches classify_error across all labels") {
  const auto& family = fam22();
  AuthKey key = keygen(7, family);
  for (std::uint64_t v = 0; v < 256; ++v) {
    const auto e = PauliVector::from_bits(4, v);
    const AttackOutcome out = pauli_attack_analyze(family, key, e);
    const ptcodes::ErrorClass cls = ptcodes::classify_error(family.codes[key.k], e);
    switch (cls) {
      case ptcodes::ErrorClass::Harmless:
        CHECK(out.verdict == Verdict::Accept);
        CHECK(out.logical_effect == 0);
        break;
      case ptcodes::ErrorClass::Undetected:
        CHECK(out.verdict == Verdict::Accept);
        CHECK(out.logical_effect != 0);
        break;
      case ptcodes::ErrorClass::Detected:
        CHECK(out.verdict == Verdict::Reject);
        break;
    }
  }
  CHECK(pauli_attack_analyze(family, key, PauliVector::identity(4)) ==
        AttackOutcome{Verdict::Accept, 0});
}

TEST_CASE("verdicts do not depend on the qotp key or the syndrome") {
  const auto& family = fam22();
  const Eigen::VectorXcd msg = seeded_state(4, 8);
  const auto e = PauliVector::from_string("XZIY");
  const AttackOutcome symbolic = pauli_attack_analyze(family, keygen(0, family), e);
  for (std::uint64_t x = 0; x < 16; x += 3) {
    for (std::uint32_t y = 0; y < 4; ++y) {
      AuthKey key{keygen(0, family).k, x, stabcode::Syndrome{2, y}};
      Eigen::VectorXcd hit = auth_encode(scheme22(), key, msg);
      pauli::apply_pauli(e, hit);
      const VerifyResult res = auth_verify(scheme22(), key, hit);
      CHECK(res.accept == (symbolic.verdict == Verdict::Accept));
    }
  }
}

TEST_CASE("soundness_exact and the exhaustive scan") {
  const auto& family = fam22();
  const SoundnessReport zero = soundness_exact(family, PauliVector::identity(4));
  CHECK(zero.corruption_probability == Rational(0, 1));

  const SoundnessWorstCase worst = soundness_scan(family);
  // equality of two independently computed quantities
  CHECK(worst.max_corruption == ptcodes::epsilon_exact(family));
  CHECK(worst.max_corruption == Rational(3, 5));

  const auto fam23 = ptcodes::build_family(2, 3);
  const SoundnessWorstCase worst23 = soundness_scan(fam23);
  CHECK(worst23.max_corruption <= Rational(4, 9));  // Theorem bound
  CHECK(worst23.max_corruption == Rational(1, 3));

  // per-key table shape
  const SoundnessReport rep = soundness_exact(family, PauliVector::from_bits(4, worst.argmax.to_bits()));
  CHECK(rep.per_key.size() == 5);
  CHECK(rep.corruption_probability == Rational(3, 5));
}

TEST_CASE("purity protocol agrees with the authentication analysis") {
  const auto& family = fam22();
  for (int k = 0; k < family.code_count(); ++k) {
    for (std::uint64_t v = 0; v < 256; ++v) {
      const auto e = PauliVector::from_bits(4, v);
      AuthKey key{k, 0, stabcode::Syndrome{2, 0}};
      CHECK(purity_protocol_analyze(family, k, e) == pauli_attack_analyze(family, key, e));
      // the announced syndrome never changes the outcome
      CHECK(purity_protocol_analyze(family, k, e, 3) == purity_protocol_analyze(family, k, e));
    }
  }
  // completeness of the Bell-frame protocol
  for (int k = 0; k < family.code_count(); ++k) {
    CHECK(purity_protocol_analyze(family, k, PauliVector::identity(4)) ==
          AttackOutcome{Verdict::Accept, 0});
  }
}

TEST_CASE("soundness bound holds exhaustively at small n") {
  for (const auto& [r, s] : {std::pair{2, 1}, {3, 1}, {1, 2}}) {
    const auto family = ptcodes::build_family(r, s);
    const auto worst = soundness_scan(family);
    CHECK(worst.max_corruption <= family.epsilon_bound());
  }
}
