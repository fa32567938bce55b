#include <set>

#include "doctest.h"
#include "qauth/ptcodes.hpp"

using namespace qauth;
using namespace qauth::ptcodes;
using pauli::PauliVector;

namespace {

const PurityTestingFamily& fam22() {
  static const auto f = build_family(2, 2);
  return f;
}

// Dense-matrix oracle for the error classes, independent of the symplectic
// bit machinery: commutation via literal matrix commutators, membership via
// comparison (up to sign) against the 2^s group element matrices.
ErrorClass dense_classify(const CurveCode& code, const PauliVector& x) {
  const Eigen::MatrixXcd ex = pauli::pauli_to_dense(x);
  for (std::uint64_t g : code.gen_rows) {
    const Eigen::MatrixXcd gd = pauli::pauli_to_dense(PauliVector::from_bits(code.n, g));
    if ((ex * gd - gd * ex).cwiseAbs().maxCoeff() > 1e-9) return ErrorClass::Detected;
  }
  for (std::uint32_t subset = 0; subset < (1u << code.s); ++subset) {
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(1 << code.n, 1 << code.n);
    for (int i = 0; i < code.s; ++i) {
      if (subset >> i & 1)
        prod = prod * pauli::pauli_to_dense(PauliVector::from_bits(code.n, code.gen_rows[i]));
    }
    if ((ex - prod).cwiseAbs().maxCoeff() < 1e-9 || (ex + prod).cwiseAbs().maxCoeff() < 1e-9)
      return ErrorClass::Harmless;
  }
  return ErrorClass::Undetected;
}

}  // namespace

TEST_CASE("curve points") {
  const gf2e::TowerField t23(2, 3);
  CHECK(curve_points(t23).size() == 9);  // 2^s + 1

  const gf2e::TowerField t21(2, 1);
  const auto pts = curve_points(t21);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].coords == std::vector<gf2e::Word>{1, 0, 0, 0});
  CHECK(pts[1].coords == std::vector<gf2e::Word>{1, 1, 1, 1});
  CHECK(pts[2].coords == std::vector<gf2e::Word>{0, 0, 0, 1});

  // pairwise distinct as projective points for all s <= 4, r <= 3
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const gf2e::TowerField tower(r, s);
      const auto points = curve_points(tower);
      CHECK(points.size() == (1u << s) + 1);
      std::set<std::vector<gf2e::Word>> canon;
      for (const auto& pt : points) {
        // scale so the first nonzero coordinate is 1
        std::vector<gf2e::Word> c = pt.coords;
        gf2e::Word lead = 0;
        for (gf2e::Word w : c) {
          if (w) {
            lead = w;
            break;
          }
        }
        REQUIRE(lead != 0);
        const gf2e::Word inv = tower.base().inv(lead);
        for (auto& w : c) w = tower.base().mul(inv, w);
        canon.insert(c);
      }
      CHECK(canon.size() == points.size());
    }
  }

  CHECK_THROWS_AS(build_family(0, 3), std::invalid_argument);
}

TEST_CASE("codes from points: rank, isotropy, membership") {
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const auto family = build_family(r, s);
      CHECK(family.code_count() == (1 << s) + 1);
      for (const CurveCode& code : family.codes) {
        CHECK(static_cast<int>(code.gen_rows.size()) == s);
        for (std::uint64_t a : code.gen_rows) {
          for (std::uint64_t b : code.gen_rows) {
            CHECK(pauli::symplectic_standard_bits(a, b, family.n) == 0);
          }
        }
        CHECK(code.contains(0));
        for (std::uint64_t g : code.gen_rows) CHECK(code.contains(g));
      }
    }
  }
}

TEST_CASE("classify_error basics and class counts at (2,2)") {
  const auto& family = fam22();
  const CurveCode& code = family.codes[0];
  CHECK(classify_error(code, PauliVector::identity(4)) == ErrorClass::Harmless);
  for (std::uint64_t g : code.gen_rows) {
    CHECK(classify_error(code, PauliVector::from_bits(4, g)) == ErrorClass::Harmless);
  }
  for (const CurveCode& c : family.codes) {
    int harmless = 0, detected = 0, undetected = 0;
    for (std::uint64_t v = 0; v < 256; ++v) {
      switch (classify_error(c, PauliVector::from_bits(4, v))) {
        case ErrorClass::Harmless: ++harmless; break;
        case ErrorClass::Detected: ++detected; break;
        case ErrorClass::Undetected: ++undetected; break;
      }
    }
    CHECK(harmless + detected + undetected == 256);  // sums to 4^n
    // |Q| = 2^s, |Q_perp| = 2^(2n-s): frozen structural counts
    CHECK(harmless == 4);
    CHECK(undetected == 60);
    CHECK(detected == 192);
  }
  CHECK_THROWS_AS(classify_error(code, PauliVector::identity(3)), std::invalid_argument);
}

TEST_CASE("classify_error agrees with the dense-matrix oracle at (2,2)") {
  const auto& family = fam22();
  for (const CurveCode& code : family.codes) {
    for (std::uint64_t v = 0; v < 256; ++v) {
      const auto x = PauliVector::from_bits(4, v);
      CHECK(classify_error(code, x) == dense_classify(code, x));
    }
  }
}

TEST_CASE("Q inside Q_perp, and dim Q_perp = 2n - s") {
  for (const auto& [r, s] : {std::pair{2, 1}, {2, 2}, {1, 2}}) {
    const auto family = build_family(r, s);
    for (const CurveCode& code : family.codes) {
      std::uint64_t perp_count = 0;
      for (std::uint64_t v = 0; v < (1ull << (2 * family.n)); ++v) {
        const auto x = PauliVector::from_bits(family.n, v);
        const ErrorClass cls = classify_error(code, x);
        if (cls != ErrorClass::Detected) ++perp_count;
        if (code.contains(v)) CHECK(cls == ErrorClass::Harmless);
      }
      CHECK(perp_count == (1ull << (2 * family.n - family.s)));
    }
  }
}

TEST_CASE("exact epsilon: frozen values and the 2r ceiling") {
  struct Row {
    int r, s;
    Rational expect;
  };
  // values frozen from the independent field-coordinate enumeration
  const Row rows[] = {{2, 1, Rational(1, 1)},
                      {2, 2, Rational(3, 5)},
                      {3, 1, Rational(1, 1)},
                      {2, 3, Rational(1, 3)},
                      {1, 2, Rational(0, 1)}};
  for (const Row& row : rows) {
    const auto family = build_family(row.r, row.s);
    const EpsilonReport report = epsilon_scan(family);
    CHECK(report.epsilon == row.expect);
    CHECK(report.epsilon <= family.epsilon_bound());
    CHECK(report.max_undetected <= 2 * row.r);
    for (int w : report.worst_by_weight) CHECK(w <= 2 * row.r);
  }
  CHECK(fam22().epsilon_bound() == Rational(4, 5));
  CHECK(build_family(2, 3).epsilon_bound() == Rational(4, 9));
}

TEST_CASE("epsilon refuses oversized parameters") {
  const auto family = build_family(2, 2);
  CHECK_THROWS_AS(epsilon_scan(family, 3), std::invalid_argument);
}

TEST_CASE("general position") {
  for (const auto& [r, s] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}) {
    CHECK(general_position_check(build_family(r, s)));
  }
  // a deliberately corrupted family: duplicate one code
  auto corrupted = build_family(2, 2);
  corrupted.codes[1] = corrupted.codes[0];
  CHECK_FALSE(general_position_check(corrupted));
}
