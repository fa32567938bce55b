#include "qauth/pauli.hpp"

#include <sstream>
#include <stdexcept>

namespace qauth::pauli {

namespace {

void check_n(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("PauliVector: n out of range [1,30]");
}

}  // namespace

PauliVector PauliVector::from_bits(int n, std::uint64_t packed) {
  check_n(n);
  const std::uint64_t mask = (1ull << n) - 1;
  if (packed >> (2 * n)) throw std::invalid_argument("PauliVector::from_bits: bits beyond 2n");
  return {n, packed & mask, (packed >> n) & mask};
}

std::uint64_t PauliVector::to_bits() const {
  return x_bits | (z_bits << n);
}

PauliVector PauliVector::from_string(const std::string& text) {
  const int n = static_cast<int>(text.size());
  check_n(n);
  PauliVector p{n, 0, 0};
  for (int i = 0; i < n; ++i) {
    switch (text[i]) {
      case 'I':
        break;
      case 'X':
        p.x_bits |= 1ull << i;
        break;
      case 'Z':
        p.z_bits |= 1ull << i;
        break;
      case 'Y':
        p.x_bits |= 1ull << i;
        p.z_bits |= 1ull << i;
        break;
      default:
        throw std::invalid_argument("PauliVector::from_string: expected I, X, Z or Y");
    }
  }
  return p;
}

std::string PauliVector::to_string() const {
  std::string out(n, 'I');
  for (int i = 0; i < n; ++i) {
    const bool x = x_bits >> i & 1;
    const bool z = z_bits >> i & 1;
    if (x && z)
      out[i] = 'Y';
    else if (x)
      out[i] = 'X';
    else if (z)
      out[i] = 'Z';
  }
  return out;
}

std::string PauliVector::to_hex() const {
  const int digits = (2 * n + 3) / 4;
  std::ostringstream os;
  os << std::hex << to_bits();
  std::string s = os.str();
  if (static_cast<int>(s.size()) < digits) s.insert(0, digits - s.size(), '0');
  return "0x" + s;
}

PauliVector PauliVector::from_hex(int n, const std::string& hex) {
  check_n(n);
  std::size_t pos = 0;
  if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) pos = 2;
  if (pos >= hex.size()) throw std::invalid_argument("PauliVector::from_hex: empty string");
  std::uint64_t v = 0;
  for (std::size_t i = pos; i < hex.size(); ++i) {
    const char c = hex[i];
    std::uint64_t d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      d = c - 'A' + 10;
    else
      throw std::invalid_argument("PauliVector::from_hex: bad hex digit");
    v = (v << 4) | d;
  }
  return from_bits(n, v);
}

int PauliVector::weight() const {
  return __builtin_popcountll(x_bits | z_bits);
}

PauliVector operator+(const PauliVector& a, const PauliVector& b) {
  if (a.n != b.n) throw std::invalid_argument("PauliVector: size mismatch");
  return {a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits};
}

int symplectic_standard(const PauliVector& x, const PauliVector& y) {
  if (x.n != y.n) throw std::invalid_argument("symplectic_standard: size mismatch");
  return (__builtin_popcountll(y.x_bits & x.z_bits) ^
          __builtin_popcountll(x.x_bits & y.z_bits)) &
         1;
}

int symplectic_field(const gf2e::TowerField& tower, const gf2e::TopElem& x,
                     const gf2e::TopElem& y) {
  return tower.trace(tower.mul(x, tower.conj_halfway(y)));
}

std::uint64_t SymplecticBasisMap::apply(std::uint64_t field_coords) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out |= static_cast<std::uint64_t>(__builtin_popcountll(rows[i] & field_coords) & 1) << i;
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> symplectic_gram_schmidt(
    std::vector<std::uint64_t> basis, int dim,
    const std::vector<std::uint64_t>& form_rows) {
  auto form = [&](std::uint64_t u, std::uint64_t v) -> int {
    int acc = 0;
    std::uint64_t x = u;
    while (x) {
      const int i = __builtin_ctzll(x);
      acc ^= __builtin_popcountll(form_rows[i] & v) & 1;
      x &= x - 1;
    }
    return acc;
  };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  while (!basis.empty()) {
    const std::uint64_t u = basis.front();
    std::size_t partner = basis.size();
    for (std::size_t j = 1; j < basis.size(); ++j) {
      if (form(u, basis[j])) {
        partner = j;
        break;
      }
    }
    if (partner == basis.size())
      throw std::logic_error("symplectic_gram_schmidt: form degenerate on span");
    const std::uint64_t v = basis[partner];
    basis.erase(basis.begin() + partner);
    basis.erase(basis.begin());
    for (std::uint64_t& w : basis) {
      if (form(w, v)) w ^= u;
      if (form(w, u)) w ^= v;
    }
    pairs.emplace_back(u, v);
  }
  (void)dim;
  return pairs;
}

namespace {

// GF(2) matrix inverse, rows as bit masks. Throws if singular.
std::vector<std::uint64_t> gf2_invert(std::vector<std::uint64_t> a, int dim) {
  std::vector<std::uint64_t> inv(dim);
  for (int i = 0; i < dim; ++i) inv[i] = 1ull << i;
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int row = col; row < dim; ++row) {
      if (a[row] >> col & 1) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("gf2_invert: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int row = 0; row < dim; ++row) {
      if (row != col && (a[row] >> col & 1)) {
        a[row] ^= a[col];
        inv[row] ^= inv[col];
      }
    }
  }
  return inv;
}

}  // namespace

SymplecticBasisMap align_bases(const gf2e::TowerField& tower) {
  const int dim = tower.bin_dim();
  const int n = dim / 2;
  // Gram matrix of the field form over the binary basis.
  std::vector<std::uint64_t> gram(dim, 0);
  std::vector<gf2e::TopElem> basis_elems(dim);
  for (int i = 0; i < dim; ++i) basis_elems[i] = tower.from_bits(1ull << i);
  for (int i = 0; i < dim; ++i) {
    const gf2e::TopElem conj = tower.conj_halfway(basis_elems[i]);
    for (int j = 0; j < dim; ++j) {
      // B(e_j, e_i) as bit j of row... rows are indexed by the first argument:
      // gram[i] bit j = B(e_i, e_j).
      if (tower.trace(tower.mul(basis_elems[j], conj))) gram[j] |= 1ull << i;
    }
  }
  std::vector<std::uint64_t> ambient(dim);
  for (int i = 0; i < dim; ++i) ambient[i] = 1ull << i;
  const auto pairs = symplectic_gram_schmidt(ambient, dim, gram);
  // Columns of H are e_1..e_n, f_1..f_n; M = H^[-1] maps a field-coordinate
  // vector to its hyperbolic coordinates (a|b).
  std::vector<std::uint64_t> h_rows(dim, 0);
  for (int col = 0; col < n; ++col) {
    const auto& [e, f] = pairs[col];
    for (int row = 0; row < dim; ++row) {
      if (e >> row & 1) h_rows[row] |= 1ull << col;
      if (f >> row & 1) h_rows[row] |= 1ull << (col + n);
    }
  }
  SymplecticBasisMap map;
  map.n = n;
  map.rows = gf2_invert(h_rows, dim);
  return map;
}

// ---------------------------------------------------------------------------
// dense layer

namespace {

void check_dense_n(int n) {
  if (n < 1 || n > kDenseCap)
    throw std::invalid_argument("pauli dense op: n exceeds the dense cap");
}

}  // namespace

void apply_pauli(const PauliVector& p, Eigen::VectorXcd& state) {
  check_dense_n(p.n);
  const std::size_t dim = 1ull << p.n;
  if (static_cast<std::size_t>(state.size()) != dim)
    throw std::invalid_argument("apply_pauli: state dimension mismatch");
  Eigen::VectorXcd out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const int sign = __builtin_popcountll(p.z_bits & j) & 1;
    out[j ^ p.x_bits] = sign ? -state[j] : state[j];
  }
  state.swap(out);
}

Eigen::MatrixXcd pauli_to_dense(const PauliVector& p) {
  check_dense_n(p.n);
  const std::size_t dim = 1ull << p.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const int sign = __builtin_popcountll(p.z_bits & j) & 1;
    m(j ^ p.x_bits, j) = sign ? -1.0 : 1.0;
  }
  return m;
}

Cplx hermitian_phase(const PauliVector& p) {
  static const Cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[__builtin_popcountll(p.x_bits & p.z_bits) & 3];
}

Eigen::MatrixXcd pauli_to_dense_hermitian(const PauliVector& p) {
  return hermitian_phase(p) * pauli_to_dense(p);
}

void apply_pauli_hermitian(const PauliVector& p, Eigen::VectorXcd& state) {
  apply_pauli(p, state);
  state *= hermitian_phase(p);
}

}  // namespace qauth::pauli
