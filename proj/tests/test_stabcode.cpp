#include <random>

#include "doctest.h"
#include "qauth/ptcodes.hpp"
#include "qauth/stabcode.hpp"

using namespace qauth;
using namespace qauth::stabcode;
using pauli::PauliVector;

namespace {

int sym(std::uint64_t a, std::uint64_t b, int n) {
  return pauli::symplectic_standard_bits(a, b, n);
}

const ptcodes::PurityTestingFamily& fam22() {
  static const auto f = ptcodes::build_family(2, 2);
  return f;
}

}  // namespace

TEST_CASE("completion pairing matrix is the standard one") {
  for (const auto& code : fam22().codes) {
    const SymplecticCompletion& c = code.completion;
    const int n = c.n;
    for (int i = 0; i < c.s; ++i) {
      for (int j = 0; j < c.s; ++j) {
        CHECK(sym(c.stabilizers[i], c.stabilizers[j], n) == 0);
        CHECK(sym(c.destabilizers[i], c.destabilizers[j], n) == 0);
        CHECK(sym(c.stabilizers[i], c.destabilizers[j], n) == (i == j ? 1 : 0));
      }
      for (int j = 0; j < c.m; ++j) {
        CHECK(sym(c.stabilizers[i], c.logical_x[j], n) == 0);
        CHECK(sym(c.stabilizers[i], c.logical_z[j], n) == 0);
        CHECK(sym(c.destabilizers[i], c.logical_x[j], n) == 0);
        CHECK(sym(c.destabilizers[i], c.logical_z[j], n) == 0);
      }
    }
    for (int i = 0; i < c.m; ++i) {
      for (int j = 0; j < c.m; ++j) {
        CHECK(sym(c.logical_x[i], c.logical_x[j], n) == 0);
        CHECK(sym(c.logical_z[i], c.logical_z[j], n) == 0);
        CHECK(sym(c.logical_x[i], c.logical_z[j], n) == (i == j ? 1 : 0));
      }
    }
    // the 2n vectors form a basis: determinism gives the same object twice
    CHECK(complete_code(code.gen_rows, code.n).destabilizers == c.destabilizers);
    CHECK(complete_code(code.gen_rows, code.n).logical_x == c.logical_x);
  }
}

TEST_CASE("complete_code rejects bad inputs") {
  CHECK_THROWS_AS(complete_code({0b0001, 0b0001}, 2), std::invalid_argument);  // dependent
  // X0 and Z0 anticommute: not isotropic
  CHECK_THROWS_AS(complete_code({0b0001, 0b0100}, 2), std::invalid_argument);
}

TEST_CASE("syndromes") {
  const auto& code = fam22().codes[1];
  const SymplecticCompletion& c = code.completion;
  CHECK(syndrome_of(c, PauliVector::identity(c.n)).bits == 0);
  for (int j = 0; j < c.s; ++j) {
    CHECK(syndrome_of(c, PauliVector::from_bits(c.n, c.stabilizers[j])).bits == 0);
  }
  for (int i = 0; i < c.s; ++i) {
    CHECK(syndrome_of(c, PauliVector::from_bits(c.n, c.destabilizers[i])).bits ==
          (1u << i));
  }
  // linearity, exhaustive at n = 4
  for (std::uint64_t u = 0; u < 256; ++u) {
    for (std::uint64_t v = 0; v < 256; v += 7) {
      CHECK(syndrome_of(c, PauliVector::from_bits(4, u ^ v)).bits ==
            (syndrome_of(c, PauliVector::from_bits(4, u)).bits ^
             syndrome_of(c, PauliVector::from_bits(4, v)).bits));
    }
  }
  CHECK_THROWS_AS(syndrome_of(c, PauliVector::identity(3)), std::invalid_argument);
}

TEST_CASE("logical action") {
  const auto& code = fam22().codes[0];
  const SymplecticCompletion& c = code.completion;
  for (std::uint64_t g : c.stabilizers) {
    CHECK(logical_action(c, PauliVector::from_bits(c.n, g)) == 0);
  }
  for (int j = 0; j < c.m; ++j) {
    CHECK(logical_action(c, PauliVector::from_bits(c.n, c.logical_x[j])) == (1u << j));
    CHECK(logical_action(c, PauliVector::from_bits(c.n, c.logical_z[j])) == (1u << (c.m + j)));
  }
  // adding any generator never moves the label; exhaustive over the dual
  for (std::uint64_t v = 0; v < 256; ++v) {
    const auto x = PauliVector::from_bits(4, v);
    if (syndrome_of(c, x).bits != 0) continue;
    const std::uint32_t label = logical_action(c, x);
    CHECK((label == 0) == in_stabilizer_span(c, v));
    for (std::uint64_t g : c.stabilizers) {
      CHECK(logical_action(c, PauliVector::from_bits(4, v ^ g)) == label);
    }
  }
  // outside the dual: precondition violation
  CHECK_THROWS_AS(logical_action(c, PauliVector::from_bits(c.n, c.destabilizers[0])),
                  std::invalid_argument);
}

TEST_CASE("dense encoding: eigenvalues, isometry, orthogonal cosets") {
  const auto& code = fam22().codes[2];
  const DenseCoder coder(code.completion);
  const int n = coder.n();
  const std::size_t dim_n = 1ull << n;
  const std::size_t dim_m = 1ull << coder.m();

  for (std::uint32_t y = 0; y < 4; ++y) {
    const Eigen::MatrixXcd& iso = coder.isometry(y);
    CHECK((iso.adjoint() * iso - Eigen::MatrixXcd::Identity(dim_m, dim_m)).cwiseAbs().maxCoeff() <
          1e-10);
    // stabilizer eigenvalues (-1)^(y_i) on every encoded column
    for (int i = 0; i < coder.s(); ++i) {
      const auto g = PauliVector::from_bits(n, code.completion.stabilizers[i]);
      const Eigen::MatrixXcd gd = pauli::pauli_to_dense_hermitian(g);
      const double want = (y >> i & 1) ? -1.0 : 1.0;
      for (std::size_t cc = 0; cc < dim_m; ++cc) {
        const std::complex<double> ev = iso.col(cc).adjoint() * gd * iso.col(cc);
        CHECK(std::abs(ev - want) < 1e-10);
      }
    }
    // logical Z eigenvalues (-1)^(c_j)
    for (int j = 0; j < coder.m(); ++j) {
      const auto z = PauliVector::from_bits(n, code.completion.logical_z[j]);
      const Eigen::MatrixXcd zd = pauli::pauli_to_dense_hermitian(z);
      for (std::size_t cc = 0; cc < dim_m; ++cc) {
        const double want = (cc >> j & 1) ? -1.0 : 1.0;
        const std::complex<double> ev = iso.col(cc).adjoint() * zd * iso.col(cc);
        CHECK(std::abs(ev - want) < 1e-10);
      }
    }
    // cosets are mutually orthogonal
    for (std::uint32_t y2 = y + 1; y2 < 4; ++y2) {
      CHECK((iso.adjoint() * coder.isometry(y2)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  // the 2^s coset spaces of dimension 2^m fill the whole space
  CHECK((1ull << coder.s()) * dim_m == dim_n);
}

TEST_CASE("dense round trip and superposition decode") {
  const auto& code = fam22().codes[4];
  const DenseCoder coder(code.completion);
  std::mt19937_64 rng(21);
  std::normal_distribution<double> gauss;
  for (std::uint32_t y = 0; y < 4; ++y) {
    Eigen::VectorXcd msg(4);
    for (int i = 0; i < 4; ++i) msg[i] = std::complex<double>(gauss(rng), gauss(rng));
    msg /= msg.norm();
    const Eigen::VectorXcd enc = coder.encode(Syndrome{2, y}, msg);
    CHECK(std::abs(enc.norm() - 1.0) < 1e-12);
    const DecodeResult dec = coder.decode(enc);
    CHECK(dec.observed.bits == y);
    CHECK(std::abs(std::abs(msg.dot(dec.message)) - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS(coder.encode(Syndrome{2, 0}, Eigen::VectorXcd::Zero(4)),
                  std::invalid_argument);
}

TEST_CASE("dense behavior under Pauli errors matches the symbolic layer") {
  const auto& code = fam22().codes[3];
  const SymplecticCompletion& c = code.completion;
  const DenseCoder coder(c);
  std::mt19937_64 rng(33);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd msg(4);
  for (int i = 0; i < 4; ++i) msg[i] = std::complex<double>(gauss(rng), gauss(rng));
  msg /= msg.norm();

  for (std::uint32_t y = 0; y < 4; ++y) {
    const Eigen::VectorXcd enc = coder.encode(Syndrome{2, y}, msg);
    for (int trial = 0; trial < 64; ++trial) {
      const auto e = PauliVector::from_bits(4, rng() & 0xff);
      Eigen::VectorXcd hit = enc;
      pauli::apply_pauli(e, hit);
      const DecodeResult dec = coder.decode(hit);
      const std::uint32_t shift = syndrome_of(c, e).bits;
      CHECK(dec.observed.bits == (y ^ shift));
      if (shift == 0) {
        Eigen::VectorXcd expected = msg;
        pauli::apply_pauli(PauliVector::from_bits(2, logical_action(c, e)), expected);
        CHECK(std::abs(std::abs(expected.dot(dec.message)) - 1.0) < 1e-10);
      }
    }
  }
}
