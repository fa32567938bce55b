#include "qauth/gf2e.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qauth::gf2e {

namespace poly2 {

int degree(std::uint64_t f) {
  if (f == 0) return -1;
  return 63 - __builtin_clzll(f);
}

std::uint64_t mod(std::uint64_t f, std::uint64_t g) {
  if (g == 0) throw std::domain_error("poly2::mod: division by zero polynomial");
  const int dg = degree(g);
  while (degree(f) >= dg) {
    f ^= g << (degree(f) - dg);
  }
  return f;
}

bool is_irreducible(std::uint64_t f) {
  const int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int k = 1; k <= d / 2; ++k) {
    for (std::uint64_t low = 0; low < (1ull << k); ++low) {
      const std::uint64_t g = (1ull << k) | low;
      if (mod(f, g) == 0) return false;
    }
  }
  return true;
}

}  // namespace poly2

std::uint64_t find_irreducible_gf2(int degree) {
  if (degree < 1) throw std::invalid_argument("find_irreducible_gf2: degree must be >= 1");
  if (degree == 1) return 0b10;  // x
  for (std::uint64_t low = 0;; ++low) {
    const std::uint64_t f = (1ull << degree) | low;
    if (poly2::is_irreducible(f)) return f;
  }
}

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(int s) : s_(s) {
  if (s < 1 || s > 16) throw std::invalid_argument("BaseField: s out of range [1,16]");
  modulus_ = static_cast<Word>(find_irreducible_gf2(s));
}

BaseField::BaseField(int s, Word modulus) : s_(s), modulus_(modulus) {
  if (s < 1 || s > 16) throw std::invalid_argument("BaseField: s out of range [1,16]");
  if (poly2::degree(modulus) != s || !poly2::is_irreducible(modulus))
    throw std::invalid_argument("BaseField: modulus is not a degree-s irreducible");
}

void BaseField::check_elem(Word a) const {
  if (a >> s_) throw std::invalid_argument("BaseField: element out of range");
}

Word BaseField::add(Word a, Word b) const {
  check_elem(a);
  check_elem(b);
  return a ^ b;
}

Word BaseField::mul(Word a, Word b) const {
  check_elem(a);
  check_elem(b);
  std::uint64_t acc = 0;
  std::uint64_t x = a;
  while (b) {
    if (b & 1) acc ^= x;
    b >>= 1;
    x <<= 1;
    if (x >> s_ & 1) x ^= modulus_;
  }
  return static_cast<Word>(acc);
}

Word BaseField::pow(Word a, std::uint64_t e) const {
  check_elem(a);
  Word result = 1;
  Word base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Word BaseField::inv(Word a) const {
  check_elem(a);
  if (a == 0) throw std::domain_error("BaseField::inv: zero has no inverse");
  // a^(2^s - 2) by square-and-multiply; fine at desk scale.
  return pow(a, (1ull << s_) - 2);
}

int BaseField::trace(Word a) const {
  check_elem(a);
  Word acc = 0;
  Word cur = a;
  for (int i = 0; i < s_; ++i) {
    acc ^= cur;
    cur = mul(cur, cur);
  }
  if (acc > 1) throw std::logic_error("BaseField::trace: trace not in GF(2)");
  return static_cast<int>(acc);
}

// ---------------------------------------------------------------------------
// polynomial arithmetic over a BaseField (local helpers)

namespace {

// Reduces in place modulo the monic polynomial with low coefficients `mod`
// (length d, x^d implied). `v` may have length up to 2d-1.
void reduce_top(std::vector<Word>& v, const std::vector<Word>& mod, const BaseField& base) {
  const std::size_t d = mod.size();
  for (std::size_t k = v.size(); k-- > d;) {
    const Word c = v[k];
    if (c == 0) continue;
    v[k] = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (mod[i]) v[k - d + i] ^= base.mul(c, mod[i]);
    }
  }
  v.resize(d);
}

std::vector<Word> poly_mul_mod(const std::vector<Word>& a, const std::vector<Word>& b,
                               const std::vector<Word>& mod, const BaseField& base) {
  std::vector<Word> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j]) prod[i + j] ^= base.mul(a[i], b[j]);
    }
  }
  reduce_top(prod, mod, base);
  return prod;
}

// Remainder of f by monic g, coefficient vectors low-first (explicit leading
// coefficients, g.back() == 1).
std::vector<Word> poly_rem(std::vector<Word> f, const std::vector<Word>& g, const BaseField& base) {
  const std::size_t dg = g.size() - 1;
  while (true) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() <= dg) break;
    const std::size_t shift = f.size() - 1 - dg;
    const Word lead = f.back();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i]) f[shift + i] ^= base.mul(lead, g[i]);
    }
  }
  return f;
}

bool top_poly_is_irreducible(const std::vector<Word>& low_coeffs, const BaseField& base) {
  const int d = static_cast<int>(low_coeffs.size());
  std::vector<Word> f = low_coeffs;
  f.push_back(1);
  const std::uint64_t q = base.order();
  for (int k = 1; k <= d / 2; ++k) {
    // All monic degree-k polynomials over GF(2^s), enumerated by base-q digits.
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= q;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<Word> g(k + 1, 0);
      std::uint64_t x = v;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<Word>(x % q);
        x /= q;
      }
      g[k] = 1;
      const std::vector<Word> r = poly_rem(f, g, base);
      if (std::all_of(r.begin(), r.end(), [](Word w) { return w == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Word> find_irreducible(int degree, const BaseField& ground) {
  if (degree < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
  const std::uint64_t q = ground.order();
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= q;
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<Word> low(degree, 0);
    std::uint64_t x = v;
    for (int i = 0; i < degree; ++i) {
      low[i] = static_cast<Word>(x % q);
      x /= q;
    }
    if (degree == 1) {
      // Every monic linear polynomial is irreducible; v == 0 gives x.
      std::vector<Word> f = low;
      f.push_back(1);
      return f;
    }
    if (top_poly_is_irreducible(low, ground)) {
      std::vector<Word> f = low;
      f.push_back(1);
      return f;
    }
  }
  throw std::logic_error("find_irreducible: no irreducible found (impossible)");
}

// ---------------------------------------------------------------------------
// TowerField

TowerField::TowerField(int r, int s) : base_(s) {
  if (r < 1 || 2 * r * s > 60)
    throw std::invalid_argument("TowerField: need r >= 1 and 2rs <= 60");
  desc_.r = r;
  desc_.s = s;
  desc_.base_modulus = base_.modulus();
  desc_.top_modulus = find_irreducible(2 * r, base_);
}

TowerField::TowerField(const TowerDesc& desc) : base_(desc.s, desc.base_modulus) {
  if (desc.r < 1 || 2 * desc.r * desc.s > 60)
    throw std::invalid_argument("TowerField: need r >= 1 and 2rs <= 60");
  if (static_cast<int>(desc.top_modulus.size()) != 2 * desc.r + 1 || desc.top_modulus.back() != 1)
    throw std::invalid_argument("TowerField: top modulus must be monic of degree 2r");
  std::vector<Word> low(desc.top_modulus.begin(), desc.top_modulus.end() - 1);
  if (!top_poly_is_irreducible(low, base_))
    throw std::invalid_argument("TowerField: top modulus is reducible");
  desc_ = desc;
}

void TowerField::check_elem(const TopElem& a) const {
  if (static_cast<int>(a.size()) != dim_over_base())
    throw std::invalid_argument("TowerField: element has wrong coordinate count");
  for (Word c : a) {
    if (c >> desc_.s) throw std::invalid_argument("TowerField: coordinate out of range");
  }
}

TopElem TowerField::zero() const { return TopElem(dim_over_base(), 0); }

TopElem TowerField::one() const {
  TopElem e(dim_over_base(), 0);
  e[0] = 1;
  return e;
}

TopElem TowerField::add(const TopElem& a, const TopElem& b) const {
  check_elem(a);
  check_elem(b);
  TopElem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

TopElem TowerField::mul(const TopElem& a, const TopElem& b) const {
  check_elem(a);
  check_elem(b);
  std::vector<Word> low(desc_.top_modulus.begin(), desc_.top_modulus.end() - 1);
  return poly_mul_mod(a, b, low, base_);
}

TopElem TowerField::square(const TopElem& a) const { return mul(a, a); }

TopElem TowerField::pow(const TopElem& a, std::uint64_t e) const {
  check_elem(a);
  TopElem result = one();
  TopElem b = a;
  while (e) {
    if (e & 1) result = mul(result, b);
    b = mul(b, b);
    e >>= 1;
  }
  return result;
}

bool TowerField::is_zero(const TopElem& a) const {
  check_elem(a);
  return std::all_of(a.begin(), a.end(), [](Word w) { return w == 0; });
}

TopElem TowerField::inv(const TopElem& a) const {
  if (is_zero(a)) throw std::domain_error("TowerField::inv: zero has no inverse");
  // a^(2^(2rs) - 2)
  const std::uint64_t order_minus_2 = (1ull << bin_dim()) - 2;
  return pow(a, order_minus_2);
}

TopElem TowerField::scalar_mul(Word alpha, const TopElem& a) const {
  check_elem(a);
  TopElem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_.mul(alpha, a[i]);
  return out;
}

int TowerField::trace(const TopElem& a) const {
  check_elem(a);
  TopElem acc = zero();
  TopElem cur = a;
  const int bits = bin_dim();
  for (int i = 0; i < bits; ++i) {
    acc = add(acc, cur);
    cur = square(cur);
  }
  if (!std::all_of(acc.begin() + 1, acc.end(), [](Word w) { return w == 0; }) || acc[0] > 1)
    throw std::logic_error("TowerField::trace: trace not in GF(2)");
  return static_cast<int>(acc[0]);
}

TopElem TowerField::conj_halfway(const TopElem& a) const {
  check_elem(a);
  TopElem cur = a;
  const int half = desc_.r * desc_.s;
  for (int i = 0; i < half; ++i) cur = square(cur);
  return cur;
}

std::uint64_t TowerField::to_bits(const TopElem& a) const {
  check_elem(a);
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    v |= static_cast<std::uint64_t>(a[j]) << (j * desc_.s);
  }
  return v;
}

TopElem TowerField::from_bits(std::uint64_t bits) const {
  const Word mask = (desc_.s == 32) ? ~Word{0} : ((Word{1} << desc_.s) - 1);
  TopElem a(dim_over_base());
  for (int j = 0; j < dim_over_base(); ++j) {
    a[j] = static_cast<Word>(bits >> (j * desc_.s)) & mask;
  }
  if (bits >> bin_dim() && bin_dim() < 64)
    throw std::invalid_argument("TowerField::from_bits: bits beyond 2rs set");
  return a;
}

std::vector<Word> TowerField::subfield_coords(const TopElem& a) const {
  check_elem(a);
  return a;
}

TopElem TowerField::assemble(const std::vector<Word>& coords) const {
  if (static_cast<int>(coords.size()) != dim_over_base())
    throw std::invalid_argument("TowerField::assemble: expected 2r coordinates");
  TopElem a = coords;
  check_elem(a);
  return a;
}

// ---------------------------------------------------------------------------

std::string word_to_hex(Word w) {
  std::ostringstream os;
  os << "0x" << std::hex << w;
  return os.str();
}

Word word_from_hex(const std::string& s) {
  std::size_t pos = 0;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) pos = 2;
  if (pos >= s.size()) throw std::invalid_argument("word_from_hex: empty string");
  Word value = 0;
  for (std::size_t i = pos; i < s.size(); ++i) {
    const char c = s[i];
    Word digit;
    if (c >= '0' && c <= '9')
      digit = static_cast<Word>(c - '0');
    else if (c >= 'a' && c <= 'f')
      digit = static_cast<Word>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      digit = static_cast<Word>(c - 'A' + 10);
    else
      throw std::invalid_argument("word_from_hex: bad hex digit");
    value = (value << 4) | digit;
  }
  return value;
}

}  // namespace qauth::gf2e
