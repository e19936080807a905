#include "porc/gfq.hpp"

#include "porc/rootsys.hpp"

#include <sstream>
#include <stdexcept>

namespace porc {

namespace {

// carryless product, then reduction mod the degree-f modulus
uint64_t clmul(uint64_t a, uint64_t b) {
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

uint32_t reduce(uint64_t x, int f, uint32_t mod) {
  for (int d = 63; d >= f; d--)
    if (x >> d) x ^= (uint64_t)mod << (d - f);
  return (uint32_t)x;
}

bool poly2_irreducible(uint32_t mod, int f) {
  if (f == 1) return true;
  // trial division by every polynomial of degree 1..f/2
  for (int d = 1; 2 * d <= f; d++) {
    for (uint32_t g = (1u << d); g < (2u << d); g++) {
      // remainder of mod by g
      uint64_t rem = mod;
      for (int k = f; k >= d; k--)
        if (rem >> k) rem ^= (uint64_t)g << (k - d);
      if (rem == 0) return false;
    }
  }
  return true;
}

const std::pair<int, uint32_t> kModuli[] = {
    {1, 0b11},        {2, 0b111},       {3, 0b1011},      {4, 0b10011},
    {5, 0b100101},    {6, 0b1011011},   {7, 0b10000011},  {8, 0b100011101},
    {9, 0b1000010001}, {10, 0b10000001001}, {11, 0b100000000101}, {12, 0b1000001010011},
};

}  // namespace

uint32_t FieldCtx::standard_modulus(int f) {
  for (auto [ff, m] : kModuli)
    if (ff == f) return m;
  throw std::invalid_argument("no standard modulus for f=" + std::to_string(f));
}

std::string FieldCtx::moduli_file_text() {
  std::ostringstream os;
  for (auto [f, m] : kModuli) {
    os << f << ": ";
    for (int b = f; b >= 0; b--) os << ((m >> b) & 1);
    os << '\n';
  }
  return os.str();
}

uint64_t FieldCtx::moduli_checksum() { return fnv1a64(moduli_file_text()); }

FieldCtx FieldCtx::make(int f) { return make(f, standard_modulus(f)); }

FieldCtx FieldCtx::make(int f, uint32_t modulus) {
  if (f < 1 || f > 20) throw std::invalid_argument("field exponent out of range");
  if ((modulus >> f) != 1) throw std::invalid_argument("modulus degree mismatch");
  if (!poly2_irreducible(modulus, f)) throw std::invalid_argument("modulus is reducible");
  FieldCtx F;
  F.f_ = f;
  F.mod_ = modulus;
  F.q_ = 1u << f;
  F.init_tables();
  return F;
}

void FieldCtx::init_tables() {
  if (f_ > 16) return;
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  if (f_ == 1) {
    exp_[0] = 1;
    log_[1] = 0;
    return;
  }
  // find a generator (for the standard moduli x is primitive, but do not rely on it)
  for (uint32_t g = 2; g < q_; g++) {
    uint32_t x = 1;
    bool ok = true;
    for (uint32_t i = 0; i < q_ - 1; i++) {
      exp_[i] = x;
      if (i > 0 && x == 1) {
        ok = false;
        break;
      }
      x = reduce(clmul(x, g), f_, mod_);
    }
    if (ok && x == 1) {
      for (uint32_t i = 0; i < q_ - 1; i++) log_[exp_[i]] = (int)i;
      return;
    }
  }
  throw std::logic_error("no field generator found");
}

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    uint64_t L = (uint64_t)log_[a] + log_[b];
    if (L >= q_ - 1) L -= q_ - 1;
    return exp_[L];
  }
  return reduce(clmul(a, b), f_, mod_);
}

uint32_t FieldCtx::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint32_t r = 1;
  a = a;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t FieldCtx::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

uint32_t FieldCtx::sqrt(uint32_t a) const { return pow(a, q_ / 2); }

int FieldCtx::trace(uint32_t x) const {
  uint32_t t = 0, y = x;
  for (int k = 0; k < f_; k++) {
    t ^= y;
    y = mul(y, y);
  }
  if (t != 0 && t != 1) throw std::logic_error("trace not in GF(2)");
  return (int)t;
}

std::vector<uint32_t> FieldCtx::cube_roots(uint32_t c) const {
  std::vector<uint32_t> out;
  for (uint32_t y = 0; y < q_; y++)
    if (mul(y, mul(y, y)) == c) out.push_back(y);
  return out;
}

int count_roots(const FieldCtx& F, const std::vector<uint32_t>& coeffs) {
  bool zero = true;
  for (uint32_t c : coeffs) zero = zero && c == 0;
  if (zero) throw std::invalid_argument("count_roots: zero polynomial");
  if (coeffs.size() > 9) throw std::invalid_argument("count_roots: degree > 8");
  int n = 0;
  for (uint32_t x = 0; x < F.q(); x++) {
    uint32_t v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = F.add(F.mul(v, x), coeffs[i]);
    if (v == 0) n++;
  }
  return n;
}

namespace {
// dense polynomials over F_q, low-to-high
using FPoly = std::vector<uint32_t>;

void ftrim(FPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

FPoly fmod(const FieldCtx& F, FPoly a, const FPoly& m) {
  ftrim(a);
  while (a.size() >= m.size()) {
    uint32_t c = F.mul(a.back(), F.inv(m.back()));
    size_t off = a.size() - m.size();
    for (size_t i = 0; i < m.size(); i++) a[off + i] ^= F.mul(c, m[i]);
    ftrim(a);
  }
  return a;
}

FPoly fmulmod(const FieldCtx& F, const FPoly& a, const FPoly& b, const FPoly& m) {
  FPoly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); i++)
    if (a[i])
      for (size_t j = 0; j < b.size(); j++) r[i + j] ^= F.mul(a[i], b[j]);
  return fmod(F, std::move(r), m);
}

FPoly fgcd(const FieldCtx& F, FPoly a, FPoly b) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    FPoly r = fmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}
}  // namespace

int count_roots_gcd(const FieldCtx& F, const std::vector<uint32_t>& coeffs) {
  FPoly m = coeffs;
  ftrim(m);
  if (m.empty()) throw std::invalid_argument("count_roots_gcd: zero polynomial");
  if (m.size() == 1) return 0;
  // X^q mod m by repeated squaring of X
  FPoly x = fmod(F, FPoly{0, 1}, m);
  FPoly xq = x;
  for (int k = 0; k < F.f(); k++) xq = fmulmod(F, xq, xq, m);
  // gcd(m, X^q - X)
  if (xq.size() < 2) xq.resize(2, 0);
  xq[1] ^= 1;
  FPoly g = fgcd(F, m, xq);
  return g.empty() ? 0 : (int)g.size() - 1;
}

CubicCensus cubic_census_A(const FieldCtx& F) {
  CubicCensus cc;
  cc.counts = {{0, 0}, {1, 0}, {3, 0}};
  for (uint32_t a = 1; a < F.q(); a++)
    for (uint32_t b = 1; b < F.q(); b++) {
      int n = count_roots(F, {b, a, 0, 1});
      cc.counts[n]++;
      cc.domain_size++;
    }
  return cc;
}

CubicCensus cubic_census_B(const FieldCtx& F) {
  CubicCensus cc;
  cc.counts = {{0, 0}, {1, 0}, {3, 0}};
  for (uint32_t b = 1; b < F.q(); b++) {
    uint32_t b2 = F.mul(b, b), b3 = F.mul(b2, b);
    for (uint32_t t = 1; t < F.q(); t++) {
      if (t == b3) continue;
      uint32_t lin = F.add(F.mul(t, F.inv(b)), b2);  // t/b + b^2
      for (uint32_t c = 1; c < F.q(); c++) {
        if (c == t) continue;
        int n = count_roots(F, {F.add(t, c), lin, 0, 1});
        cc.counts[n]++;
        cc.domain_size++;
      }
    }
  }
  return cc;
}

}  // namespace porc
