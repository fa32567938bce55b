#include "qauth/stabcode.hpp"

#include <algorithm>
#include <stdexcept>

namespace qauth::stabcode {

namespace {

// Swap the X and Z halves of a packed 2n-bit vector; B(u, v) is then
// parity(swapped(u) & v).
inline std::uint64_t swap_halves(std::uint64_t v, int n) {
  const std::uint64_t mask = (1ull << n) - 1;
  return ((v & mask) << n) | (v >> n & mask);
}

inline int parity64(std::uint64_t v) { return __builtin_popcountll(v) & 1; }

// Reduced row echelon form over GF(2), rows as bit masks (highest set bit is
// the pivot). Returns rows sorted by descending pivot.
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

bool in_span(const std::vector<std::uint64_t>& rref_rows, std::uint64_t v) {
  for (std::uint64_t b : rref_rows) {
    const int h = 63 - __builtin_clzll(b);
    if (v >> h & 1) v ^= b;
  }
  return v == 0;
}

struct AffineSystem {
  // parity(mask & x) == rhs, one per constraint
  std::vector<std::uint64_t> masks;
  std::vector<int> rhs;
};

// Canonical solution of an affine GF(2) system over `dim` variables: the
// unique solution with every free variable zero. Throws on inconsistency.
std::uint64_t solve_canonical(AffineSystem sys, int dim) {
  std::vector<int> pivot_of_col(dim, -1);
  std::size_t row = 0;
  for (int col = 0; col < dim && row < sys.masks.size(); ++col) {
    std::size_t sel = row;
    while (sel < sys.masks.size() && !(sys.masks[sel] >> col & 1)) ++sel;
    if (sel == sys.masks.size()) continue;
    std::swap(sys.masks[row], sys.masks[sel]);
    std::swap(sys.rhs[row], sys.rhs[sel]);
    for (std::size_t other = 0; other < sys.masks.size(); ++other) {
      if (other != row && (sys.masks[other] >> col & 1)) {
        sys.masks[other] ^= sys.masks[row];
        sys.rhs[other] ^= sys.rhs[row];
      }
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  for (std::size_t t = row; t < sys.masks.size(); ++t) {
    if (sys.rhs[t]) throw std::logic_error("solve_canonical: inconsistent system");
  }
  std::uint64_t x = 0;
  for (int col = 0; col < dim; ++col) {
    if (pivot_of_col[col] >= 0 && sys.rhs[pivot_of_col[col]]) x |= 1ull << col;
  }
  return x;
}

// Basis of the nullspace of a homogeneous system, one vector per free
// column, in ascending free-column order.
std::vector<std::uint64_t> nullspace_basis(std::vector<std::uint64_t> masks, int dim) {
  std::vector<int> pivot_cols;
  std::size_t row = 0;
  for (int col = 0; col < dim && row < masks.size(); ++col) {
    std::size_t sel = row;
    while (sel < masks.size() && !(masks[sel] >> col & 1)) ++sel;
    if (sel == masks.size()) continue;
    std::swap(masks[row], masks[sel]);
    for (std::size_t other = 0; other < masks.size(); ++other) {
      if (other != row && (masks[other] >> col & 1)) masks[other] ^= masks[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<std::uint64_t> basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::uint64_t v = 1ull << free;
    for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
      if (masks[t] >> free & 1) v |= 1ull << pivot_cols[t];
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

SymplecticCompletion complete_code(const std::vector<std::uint64_t>& gen_rows, int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("complete_code: n out of range");
  const int s = static_cast<int>(gen_rows.size());
  if (s < 1 || s > n) throw std::invalid_argument("complete_code: need 1 <= s <= n");
  const int dim = 2 * n;

  const std::vector<std::uint64_t> gen_rref = rref(gen_rows);
  if (static_cast<int>(gen_rref.size()) != s)
    throw std::invalid_argument("complete_code: generator rows not independent");
  for (std::uint64_t a : gen_rows) {
    for (std::uint64_t b : gen_rows) {
      if (parity64(swap_halves(a, n) & b))
        throw std::invalid_argument("complete_code: generators are not isotropic");
    }
  }

  SymplecticCompletion c;
  c.n = n;
  c.s = s;
  c.m = n - s;
  c.stabilizers = gen_rows;

  // Destabilizers one at a time: B(g_j, d_i) = delta_ij and B(d_k, d_i) = 0
  // for k < i; canonical representative of each affine solution space.
  for (int i = 0; i < s; ++i) {
    AffineSystem sys;
    for (int j = 0; j < s; ++j) {
      sys.masks.push_back(swap_halves(gen_rows[j], n));
      sys.rhs.push_back(j == i ? 1 : 0);
    }
    for (int k = 0; k < i; ++k) {
      sys.masks.push_back(swap_halves(c.destabilizers[k], n));
      sys.rhs.push_back(0);
    }
    c.destabilizers.push_back(solve_canonical(std::move(sys), dim));
  }

  // Logical subspace: everything symplectically orthogonal to all g_i, d_i.
  std::vector<std::uint64_t> hom;
  for (std::uint64_t g : c.stabilizers) hom.push_back(swap_halves(g, n));
  for (std::uint64_t d : c.destabilizers) hom.push_back(swap_halves(d, n));
  const std::vector<std::uint64_t> complement = nullspace_basis(hom, dim);
  if (static_cast<int>(complement.size()) != 2 * c.m)
    throw std::logic_error("complete_code: complement has wrong dimension");

  if (c.m > 0) {
    std::vector<std::uint64_t> form_rows(dim);
    for (int i = 0; i < dim; ++i) form_rows[i] = swap_halves(1ull << i, n);
    const auto pairs = pauli::symplectic_gram_schmidt(complement, dim, form_rows);
    for (const auto& [x, z] : pairs) {
      c.logical_x.push_back(x);
      c.logical_z.push_back(z);
    }
  }

  // The 2n vectors must form a basis.
  std::vector<std::uint64_t> all = c.stabilizers;
  all.insert(all.end(), c.destabilizers.begin(), c.destabilizers.end());
  all.insert(all.end(), c.logical_x.begin(), c.logical_x.end());
  all.insert(all.end(), c.logical_z.begin(), c.logical_z.end());
  if (static_cast<int>(rref(all).size()) != dim)
    throw std::logic_error("complete_code: completion is not a basis");
  return c;
}

Syndrome syndrome_of(const SymplecticCompletion& c, const pauli::PauliVector& x) {
  if (x.n != c.n) throw std::invalid_argument("syndrome_of: size mismatch");
  const std::uint64_t v = x.to_bits();
  Syndrome out;
  out.s = c.s;
  for (int i = 0; i < c.s; ++i) {
    out.bits |= static_cast<std::uint32_t>(parity64(swap_halves(c.stabilizers[i], c.n) & v)) << i;
  }
  return out;
}

bool in_stabilizer_span(const SymplecticCompletion& c, std::uint64_t v) {
  return in_span(rref(c.stabilizers), v);
}

std::uint32_t logical_action(const SymplecticCompletion& c, const pauli::PauliVector& x) {
  if (x.n != c.n) throw std::invalid_argument("logical_action: size mismatch");
  if (syndrome_of(c, x).bits != 0)
    throw std::invalid_argument("logical_action: x is outside the symplectic dual");
  const std::uint64_t v = x.to_bits();
  std::uint32_t label = 0;
  for (int j = 0; j < c.m; ++j) {
    label |= static_cast<std::uint32_t>(parity64(swap_halves(c.logical_z[j], c.n) & v)) << j;
    label |= static_cast<std::uint32_t>(parity64(swap_halves(c.logical_x[j], c.n) & v))
             << (c.m + j);
  }
  return label;
}

// ---------------------------------------------------------------------------
// DenseCoder

namespace {

constexpr double kAmpTol = 1e-8;

// In-place (I + sign * H)/2 with H the Hermitian dense form of the label.
void project_eigen(const pauli::PauliVector& p, int sign, Eigen::VectorXcd& state) {
  Eigen::VectorXcd moved = state;
  pauli::apply_pauli_hermitian(p, moved);
  state = 0.5 * (state + static_cast<double>(sign) * moved);
}

}  // namespace

DenseCoder::DenseCoder(const SymplecticCompletion& c) : c_(c) {
  if (c_.n > pauli::kDenseCap)
    throw std::invalid_argument("DenseCoder: n exceeds the dense cap");
  const std::size_t dim_n = 1ull << c_.n;
  const std::size_t dim_m = 1ull << c_.m;
  const std::uint32_t syndromes = 1u << c_.s;
  isometries_.reserve(syndromes);

  std::vector<pauli::PauliVector> gens, lz, lx;
  for (std::uint64_t g : c_.stabilizers) gens.push_back(pauli::PauliVector::from_bits(c_.n, g));
  for (std::uint64_t z : c_.logical_z) lz.push_back(pauli::PauliVector::from_bits(c_.n, z));
  for (std::uint64_t x : c_.logical_x) lx.push_back(pauli::PauliVector::from_bits(c_.n, x));

  for (std::uint32_t y = 0; y < syndromes; ++y) {
    // |y,0>: joint eigenvector, phase fixed on its lowest-index amplitude.
    Eigen::VectorXcd anchor;
    for (std::size_t seed = 0; seed < dim_n; ++seed) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_n);
      v[seed] = 1.0;
      for (int i = 0; i < c_.s; ++i) project_eigen(gens[i], (y >> i & 1) ? -1 : 1, v);
      for (int j = 0; j < c_.m; ++j) project_eigen(lz[j], 1, v);
      const double norm = v.norm();
      if (norm > kAmpTol) {
        v /= norm;
        for (std::size_t idx = 0; idx < dim_n; ++idx) {
          if (std::abs(v[idx]) > kAmpTol) {
            v *= std::conj(v[idx]) / std::abs(v[idx]);
            break;
          }
        }
        anchor = std::move(v);
        break;
      }
    }
    if (anchor.size() == 0) throw std::logic_error("DenseCoder: empty joint eigenspace");

    Eigen::MatrixXcd iso(dim_n, dim_m);
    for (std::size_t cbits = 0; cbits < dim_m; ++cbits) {
      Eigen::VectorXcd col = anchor;
      for (int j = 0; j < c_.m; ++j) {
        if (cbits >> j & 1) pauli::apply_pauli_hermitian(lx[j], col);
      }
      iso.col(cbits) = col;
    }
    isometries_.push_back(std::move(iso));
  }
}

const Eigen::MatrixXcd& DenseCoder::isometry(std::uint32_t y) const {
  if (y >= isometries_.size()) throw std::invalid_argument("DenseCoder: syndrome out of range");
  return isometries_[y];
}

Eigen::VectorXcd DenseCoder::encode(const Syndrome& y, const Eigen::VectorXcd& message) const {
  if (y.s != c_.s) throw std::invalid_argument("DenseCoder::encode: syndrome length mismatch");
  if (message.size() != (1ll << c_.m))
    throw std::invalid_argument("DenseCoder::encode: message dimension mismatch");
  if (std::abs(message.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("DenseCoder::encode: message is not normalized");
  return isometries_[y.bits] * message;
}

DecodeResult DenseCoder::decode(const Eigen::VectorXcd& state) const {
  if (state.size() != (1ll << c_.n))
    throw std::invalid_argument("DenseCoder::decode: state dimension mismatch");
  if (std::abs(state.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("DenseCoder::decode: state is not normalized");
  std::uint32_t best = 0;
  double best_weight = -1.0;
  for (std::uint32_t y = 0; y < isometries_.size(); ++y) {
    const double w = (isometries_[y].adjoint() * state).squaredNorm();
    if (w > best_weight + 1e-12) {
      best_weight = w;
      best = y;
    }
  }
  DecodeResult out;
  out.observed = Syndrome{c_.s, best};
  out.message = isometries_[best].adjoint() * state;
  out.message /= out.message.norm();
  return out;
}

}  // namespace qauth::stabcode
