#include "qauth/ptcodes.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qauth::ptcodes {

namespace {

inline int parity64(std::uint64_t v) { return __builtin_popcountll(v) & 1; }

inline std::uint64_t swap_halves(std::uint64_t v, int n) {
  const std::uint64_t mask = (1ull << n) - 1;
  return ((v & mask) << n) | (v >> n & mask);
}

std::vector<std::uint64_t> rref(std::vector<std::uint64_t> rows) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v : rows) {
    for (std::uint64_t b : out) {
      const int h = 63 - __builtin_clzll(b);
      if (v >> h & 1) v ^= b;
    }
    if (v == 0) continue;
    const int h = 63 - __builtin_clzll(v);
    for (std::uint64_t& b : out) {
      if (b >> h & 1) b ^= v;
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int rank_of(const std::vector<std::uint64_t>& rows) {
  return static_cast<int>(rref(rows).size());
}

}  // namespace

std::vector<CurvePoint> curve_points(const gf2e::TowerField& tower) {
  const int r = tower.r();
  const int s = tower.s();
  const std::uint32_t q = 1u << s;
  std::vector<CurvePoint> pts;
  pts.reserve(q + 1);
  for (std::uint32_t yv = 0; yv < q; ++yv) {
    CurvePoint pt;
    pt.k = static_cast<int>(yv);
    pt.coords.resize(2 * r);
    gf2e::Word acc = 1;
    pt.coords[0] = 1;
    for (int j = 1; j < 2 * r; ++j) {
      acc = tower.base().mul(acc, static_cast<gf2e::Word>(yv));
      pt.coords[j] = acc;
    }
    pts.push_back(std::move(pt));
  }
  CurvePoint inf;
  inf.k = static_cast<int>(q);
  inf.coords.assign(2 * r, 0);
  inf.coords.back() = 1;
  pts.push_back(std::move(inf));
  return pts;
}

bool CurveCode::contains(std::uint64_t v) const {
  for (std::uint64_t b : gen_rows) {
    const int h = 63 - __builtin_clzll(b);
    if (v >> h & 1) v ^= b;
  }
  return v == 0;
}

CurveCode code_from_point(const gf2e::TowerField& tower, const CurvePoint& pt,
                          const pauli::SymplecticBasisMap& map) {
  const int s = tower.s();
  if (static_cast<int>(pt.coords.size()) != 2 * tower.r())
    throw std::invalid_argument("code_from_point: wrong coordinate count");
  const gf2e::TopElem z = tower.assemble(pt.coords);
  if (tower.is_zero(z)) throw std::invalid_argument("code_from_point: zero point");

  CurveCode code;
  code.point = pt;
  code.n = tower.r() * s;
  code.s = s;

  // Span of {alpha z} over GF(2): multiply z by the base-field basis
  // {1, t, ..., t^(s-1)} and carry each vector to standard coordinates.
  std::vector<std::uint64_t> rows;
  gf2e::Word alpha = 1;
  for (int i = 0; i < s; ++i) {
    rows.push_back(map.apply(tower.to_bits(tower.scalar_mul(alpha, z))));
    if (i + 1 < s) alpha = tower.base().mul(alpha, 2u);
  }
  code.gen_rows = rref(rows);
  if (static_cast<int>(code.gen_rows.size()) != s)
    throw std::logic_error("code_from_point: generators not independent");
  code.completion = stabcode::complete_code(code.gen_rows, code.n);
  return code;
}

ErrorClass classify_error(const CurveCode& code, const pauli::PauliVector& x) {
  if (x.n != code.n) throw std::invalid_argument("classify_error: size mismatch");
  const std::uint64_t v = x.to_bits();
  if (code.contains(v)) return ErrorClass::Harmless;
  for (std::uint64_t g : code.gen_rows) {
    if (parity64(swap_halves(g, code.n) & v)) return ErrorClass::Detected;
  }
  return ErrorClass::Undetected;
}

PurityTestingFamily build_family(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("build_family: need r >= 1 and s >= 1");
  PurityTestingFamily fam;
  fam.r = r;
  fam.s = s;
  fam.n = r * s;
  fam.m = (r - 1) * s;
  const gf2e::TowerField tower(r, s);
  fam.tower = tower.desc();
  fam.basis_map = pauli::align_bases(tower);
  for (const CurvePoint& pt : curve_points(tower)) {
    fam.codes.push_back(code_from_point(tower, pt, fam.basis_map));
  }
  return fam;
}

EpsilonReport epsilon_scan(const PurityTestingFamily& family, int cap) {
  cap = std::min(cap, kExhaustiveCap);
  const int n = family.n;
  if (n > cap) throw std::invalid_argument("epsilon_scan: n exceeds the exhaustive cap");
  const int ceiling = 2 * family.r;

  // Hot loop over all 4^n - 1 labels; everything pre-swapped so membership
  // and orthogonality are single AND-popcount passes.
  struct CodeMasks {
    std::vector<std::uint64_t> perp;       // swapped generator rows
    std::vector<std::uint64_t> rref_rows;  // membership reduction
  };
  std::vector<CodeMasks> masks;
  for (const CurveCode& code : family.codes) {
    CodeMasks cm;
    for (std::uint64_t g : code.gen_rows) cm.perp.push_back(swap_halves(g, n));
    cm.rref_rows = code.gen_rows;
    masks.push_back(std::move(cm));
  }

  EpsilonReport report;
  report.worst_by_weight.assign(n, 0);
  const std::uint64_t total = 1ull << (2 * n);
  for (std::uint64_t v = 1; v < total; ++v) {
    int count = 0;
    for (const CodeMasks& cm : masks) {
      bool in_perp = true;
      for (std::uint64_t p : cm.perp) {
        if (parity64(p & v)) {
          in_perp = false;
          break;
        }
      }
      if (!in_perp) continue;
      std::uint64_t red = v;
      for (std::uint64_t b : cm.rref_rows) {
        const int h = 63 - __builtin_clzll(b);
        if (red >> h & 1) red ^= b;
      }
      if (red != 0) ++count;
    }
    const std::uint64_t mask = (1ull << n) - 1;
    const int w = __builtin_popcountll((v & mask) | (v >> n));
    report.worst_by_weight[w - 1] = std::max(report.worst_by_weight[w - 1], count);
    if (count > report.max_undetected) {
      report.max_undetected = count;
      report.worst_error = v;
      if (count >= ceiling) break;  // cannot exceed 2r
    }
  }
  report.epsilon = Rational(report.max_undetected, family.code_count());
  return report;
}

bool general_position_check(const PurityTestingFamily& family, std::uint64_t sample_seed,
                            std::size_t exhaustive_limit) {
  const int k = family.code_count();
  const int pick = 2 * family.r;
  if (pick > k) return true;  // no 2r-subsets exist

  std::uint64_t subsets = 1;
  for (int i = 0; i < pick; ++i) subsets = subsets * (k - i) / (i + 1);

  auto stacked_full_rank = [&](const std::vector<int>& idx) {
    std::vector<std::uint64_t> rows;
    for (int j : idx) {
      const auto& g = family.codes[j].gen_rows;
      rows.insert(rows.end(), g.begin(), g.end());
    }
    return rank_of(rows) == 2 * family.r * family.s;
  };

  if (subsets <= exhaustive_limit) {
    std::vector<int> idx(pick);
    for (int i = 0; i < pick; ++i) idx[i] = i;
    while (true) {
      if (!stacked_full_rank(idx)) return false;
      int pos = pick - 1;
      while (pos >= 0 && idx[pos] == k - pick + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
  }

  std::mt19937_64 rng(sample_seed);
  for (std::size_t trial = 0; trial < exhaustive_limit; ++trial) {
    std::vector<int> pool(k);
    for (int i = 0; i < k; ++i) pool[i] = i;
    std::vector<int> idx;
    for (int i = 0; i < pick; ++i) {
      std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
      const std::size_t at = d(rng);
      idx.push_back(pool[at]);
      pool.erase(pool.begin() + at);
    }
    if (!stacked_full_rank(idx)) return false;
  }
  return true;
}

}  // namespace qauth::ptcodes
