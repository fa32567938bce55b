#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qauth/gf2e.hpp"
#include "qauth/pauli.hpp"
#include "qauth/rational.hpp"
#include "qauth/stabcode.hpp"

namespace qauth::ptcodes {

inline constexpr int kExhaustiveCap = 12;

/// Point of the normal rational curve in PG(2r-1, 2^s): index k in [0, 2^s],
/// projective coordinates over the base field. Finite points are
/// (1, y, y^2, ..., y^(2r-1)) for the k-th field element y (coordinate
/// bit-pattern order); k = 2^s is (0, ..., 0, 1).
struct CurvePoint {
  int k = 0;
  std::vector<gf2e::Word> coords;
};

std::vector<CurvePoint> curve_points(const gf2e::TowerField& tower);

/// One code Q_k: the s-dimensional binary span of {alpha z_k}, carried to
/// standard (a|b) coordinates and row-reduced, plus its completion.
struct CurveCode {
  CurvePoint point;
  int n = 0;
  int s = 0;
  std::vector<std::uint64_t> gen_rows;  // RREF, descending pivots
  stabcode::SymplecticCompletion completion;

  /// Membership of a packed 2n-bit vector in Q_k.
  bool contains(std::uint64_t v) const;
};

CurveCode code_from_point(const gf2e::TowerField& tower, const CurvePoint& pt,
                          const pauli::SymplecticBasisMap& map);

enum class ErrorClass { Harmless, Detected, Undetected };

/// Harmless iff x in Q_k; Undetected iff x in Q_k-perp minus Q_k; Detected
/// otherwise (some generator anticommutes).
ErrorClass classify_error(const CurveCode& code, const pauli::PauliVector& x);

struct PurityTestingFamily {
  int r = 0;
  int s = 0;
  int n = 0;  // rs
  int m = 0;  // (r-1)s
  gf2e::TowerDesc tower;
  pauli::SymplecticBasisMap basis_map;
  std::vector<CurveCode> codes;  // 2^s + 1 of them

  int code_count() const { return static_cast<int>(codes.size()); }
  Rational epsilon_bound() const { return Rational(2 * r, (1ll << s) + 1); }
};

/// Builds the canonical family for (r, s): canonical tower, aligned basis,
/// one completed code per curve point.
PurityTestingFamily build_family(int r, int s);

struct EpsilonReport {
  Rational epsilon;                  // max undetected count / (2^s+1)
  int max_undetected = 0;            // numerator before reduction
  std::uint64_t worst_error = 0;     // packed (a|b) achieving the max
  std::vector<int> worst_by_weight;  // index w-1: max count among weight-w errors
};

/// Exact purity-testing error by enumeration of all 4^n - 1 labels.
/// Throws if n exceeds the cap (default kExhaustiveCap, hard-limited to 12).
EpsilonReport epsilon_scan(const PurityTestingFamily& family, int cap = kExhaustiveCap);

inline Rational epsilon_exact(const PurityTestingFamily& family, int cap = kExhaustiveCap) {
  return epsilon_scan(family, cap).epsilon;
}

/// True iff every 2r-subset of codes stacks to a rank-2rs matrix. Exhaustive
/// when the number of subsets is at most `exhaustive_limit`, otherwise that
/// many subsets are drawn from a seeded generator.
bool general_position_check(const PurityTestingFamily& family,
                            std::uint64_t sample_seed = 0,
                            std::size_t exhaustive_limit = 200000);

}  // namespace qauth::ptcodes
