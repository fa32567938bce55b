#include <random>

#include "doctest.h"
#include "qauth/densesim.hpp"

using namespace qauth;
using namespace qauth::densesim;
using dense::AdversaryChannel;
using dense::Mat;
using dense::Vec;
using pauli::PauliVector;

namespace {

const ptcodes::PurityTestingFamily& fam21() {
  static const auto f = ptcodes::build_family(2, 1);
  return f;
}

const authproto::SchemeDense& scheme21() {
  static const authproto::SchemeDense s(fam21());
  return s;
}

const ptcodes::PurityTestingFamily& fam22() {
  static const auto f = ptcodes::build_family(2, 2);
  return f;
}

const authproto::SchemeDense& scheme22() {
  static const authproto::SchemeDense s(fam22());
  return s;
}

AdversaryChannel identity_attack(int n) {
  return AdversaryChannel::from_pauli(PauliVector::identity(n));
}

}  // namespace

TEST_CASE("soundness of the identity attack is exactly 1") {
  std::mt19937_64 rng(61);
  for (const auto* scheme : {&scheme21(), &scheme22()}) {
    const auto& family = scheme->family();
    const Vec msg = dense::random_state(1ll << family.m, rng);
    CHECK(soundness_measure(*scheme, identity_attack(family.n), msg) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("dense soundness agrees with the symbolic layer on Pauli attacks") {
  // exhaustive at (2,1): every one of the 4^2 labels
  const auto& family = fam21();
  std::mt19937_64 rng(63);
  const Vec msg = dense::random_state(2, rng);
  for (std::uint64_t v = 0; v < 16; ++v) {
    const auto e = PauliVector::from_bits(2, v);
    const double value =
        soundness_measure(scheme21(), AdversaryChannel::from_pauli(e), msg);
    const double corruption =
        authproto::soundness_exact(family, e).corruption_probability.to_double();
    // Pauli attacks either corrupt or leave the message alone, so the
    // functional is meant to sit at 1 - corruption... except that a logical
    // effect may fix the particular message; it can only do better.
    CHECK(value >= 1.0 - corruption - 1e-9);
  }

  // against a message that no nonzero logical label fixes, equality holds
  const Vec generic = dense::random_state(2, rng);
  for (std::uint64_t v = 0; v < 16; ++v) {
    const auto e = PauliVector::from_bits(2, v);
    // corruption counted only over effects that move this message
    int moved = 0;
    for (int k = 0; k < family.code_count(); ++k) {
      const auto out = authproto::pauli_attack_analyze(
          family, authproto::AuthKey{k, 0, stabcode::Syndrome{family.s, 0}}, e);
      if (out.verdict == authproto::Verdict::Accept && out.logical_effect != 0) {
        Vec hit = generic;
        pauli::apply_pauli(PauliVector::from_bits(family.m, out.logical_effect), hit);
        if (std::abs(std::abs(generic.dot(hit)) - 1.0) > 1e-9) ++moved;
      }
    }
    const double value =
        soundness_measure(scheme21(), AdversaryChannel::from_pauli(e), generic);
    CHECK(value == doctest::Approx(1.0 - double(moved) / family.code_count()).epsilon(1e-9));
  }
}

TEST_CASE("random unitary attacks respect the exact soundness floor") {
  const double eps = ptcodes::epsilon_exact(fam22()).to_double();
  std::mt19937_64 rng(65);
  const Vec msg = dense::random_state(4, rng);
  for (int c = 0; c < 10; ++c) {
    const int ancilla = c % 3;
    const auto u = dense::haar_unitary(1ll << (4 + ancilla), rng);
    const auto attack = AdversaryChannel::from_unitary(u, 4, ancilla);
    CHECK(soundness_measure(scheme22(), attack, msg) >= 1.0 - eps - 1e-9);
  }
}

TEST_CASE("ciphertext density is maximally mixed and message independent") {
  const Eigen::Index dim_n = 1ll << fam22().n;
  const auto mixed = dense::DensityMatrix::maximally_mixed(dim_n);
  const auto c0 = ciphertext_density(scheme22(), Vec::Unit(4, 0));
  const auto c3 = ciphertext_density(scheme22(), Vec::Unit(4, 3));
  CHECK(dense::trace_distance(c0, mixed) < 1e-10);
  CHECK(dense::trace_distance(c3, mixed) < 1e-10);
  CHECK(dense::trace_distance(c0, c3) < 1e-10);
  CHECK(c0.entries().trace().real() == doctest::Approx(1.0).epsilon(1e-12));

  // entangled with a reference: the transmitted side still averages flat
  Vec joint = Vec::Zero(16);
  for (int i = 0; i < 4; ++i) joint[i + 4 * i] = 0.5;
  const auto ce = ciphertext_density_entangled(scheme22(), joint, 2);
  CHECK(dense::trace_distance(ce, mixed) < 1e-10);
}

TEST_CASE("fidelity floor") {
  std::mt19937_64 rng(67);
  const auto msg = dense::DensityMatrix::pure(dense::random_state(4, rng));

  const auto idres = fidelity_floor_check(scheme22(), identity_attack(4), msg);
  CHECK(idres.p_acc == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(idres.fidelity == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(idres.vacuous);

  // an error detected by every code: rejected under every key
  std::uint64_t detected_everywhere = 0;
  for (std::uint64_t v = 1; v < 256; ++v) {
    bool all = true;
    for (const auto& code : fam22().codes) {
      if (ptcodes::classify_error(code, PauliVector::from_bits(4, v)) !=
          ptcodes::ErrorClass::Detected) {
        all = false;
        break;
      }
    }
    if (all) {
      detected_everywhere = v;
      break;
    }
  }
  REQUIRE(detected_everywhere != 0);
  const auto vres = fidelity_floor_check(
      scheme22(), AdversaryChannel::from_pauli(PauliVector::from_bits(4, detected_everywhere)),
      msg);
  CHECK(vres.vacuous);
  CHECK(vres.p_acc == doctest::Approx(0.0).epsilon(1e-12));

  for (int c = 0; c < 6; ++c) {
    const int ancilla = c % 3;
    const auto u = dense::haar_unitary(1ll << (4 + ancilla), rng);
    const auto attack = AdversaryChannel::from_unitary(u, 4, ancilla);
    const auto res = fidelity_floor_check(scheme22(), attack, msg);
    if (!res.vacuous) CHECK(res.fidelity >= res.floor - 1e-8);
  }

  // a genuinely mixed message goes through the spectral path
  const auto mixed_msg = dense::random_density(4, rng);
  const auto mres = fidelity_floor_check(scheme22(), identity_attack(4), mixed_msg);
  CHECK(mres.fidelity == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("iterated scheme on the all-zero product state") {
  // t = 1 reduces to the ordinary functional
  const Vec zero1 = Vec::Unit(2, 0);
  CHECK(product_state_soundness(scheme21(), identity_attack(2), 1) ==
        doctest::Approx(soundness_measure(scheme21(), identity_attack(2), zero1))
            .epsilon(1e-12));

  // t = 2, identity attack
  CHECK(product_state_soundness(scheme21(), identity_attack(4), 2) ==
        doctest::Approx(1.0).epsilon(1e-10));

  // t = 2, product Pauli attacks: at least 1 - c1 - c2
  const auto& family = fam21();
  for (std::uint64_t v1 = 0; v1 < 16; v1 += 3) {
    for (std::uint64_t v2 = 0; v2 < 16; v2 += 5) {
      const auto e1 = PauliVector::from_bits(2, v1);
      const auto e2 = PauliVector::from_bits(2, v2);
      const PauliVector joint{4, e1.x_bits | (e2.x_bits << 2), e1.z_bits | (e2.z_bits << 2)};
      const double value =
          product_state_soundness(scheme21(), AdversaryChannel::from_pauli(joint), 2);
      const double c1 = authproto::soundness_exact(family, e1).corruption_probability.to_double();
      const double c2 = authproto::soundness_exact(family, e2).corruption_probability.to_double();
      CHECK(value >= 1.0 - c1 - c2 - 1e-9);
    }
  }

  CHECK_THROWS_AS(product_state_soundness(scheme21(), identity_attack(4), 3),
                  std::invalid_argument);
}
