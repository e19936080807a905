#include "porc/chevalley.hpp"

#include <map>
#include <sstream>

namespace porc {

namespace {

// Signed roots as coefficient vectors; used only while deriving the Lie
// structure constants N(a,b) from the extraspecial pairs.
struct NBuilder {
  const RootSystem& rs;
  std::map<std::pair<int, int>, int> base;  // (i,j), i<j positive indices

  explicit NBuilder(const RootSystem& r) : rs(r) { build(); }

  static std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b, int sb) {
    std::vector<int> v = a;
    for (size_t k = 0; k < v.size(); k++) v[k] += sb * b[k];
    return v;
  }

  // signed lookup: returns (index, sign) when v or -v is a positive root
  std::pair<int, int> find(const std::vector<int>& v) const {
    if (auto i = rs.index_of(v)) return {*i, +1};
    std::vector<int> m = v;
    for (auto& x : m) x = -x;
    if (auto i = rs.index_of(m)) return {*i, -1};
    return {0, 0};
  }

  int norm2x2_of(const std::vector<int>& v) const {
    auto [i, s] = find(v);
    if (!i) throw std::logic_error("norm of non-root requested");
    return rs.norm2x2(i);
  }

  int base_n(int i, int j) const {
    if (i == j) throw std::logic_error("N(a,a) requested");
    if (i < j) {
      auto it = base.find({i, j});
      return it == base.end() ? 0 : it->second;
    }
    return -base_n(j, i);
  }

  // N for signed roots (sa*alpha_i, sb*alpha_j); 0 when the sum is not a root
  int n_signed(int i, int sa, int j, int sb) const {
    std::vector<int> x = rs.root(i).coeffs, y = rs.root(j).coeffs;
    for (auto& v : x) v *= sa;
    for (auto& v : y) v *= sb;
    std::vector<int> s = add(x, y, +1);
    auto [si, ss] = find(s);
    if (!si) return 0;
    if (sa > 0 && sb > 0) return base_n(i, j);
    if (sa < 0 && sb < 0) return -base_n(i, j);
    if (sa < 0) return -n_signed(j, sb, i, sa);
    // x positive, y negative, s = x - y_pos
    int nx2 = rs.norm2x2(i), ny2 = rs.norm2x2(j), ns2 = rs.norm2x2(si);
    if (ss > 0) {
      // triple (x, y, -s): N(x,y)/|s|^2 = N(y,-s)/|x|^2, N(y,-s) = -N(-y,s)
      long long num = -(long long)base_n(j, si) * ns2;
      if (num % nx2) throw std::logic_error("structure constant division error");
      return (int)(num / nx2);
    }
    // s negative: N(x,y)/|s|^2 = N(-s,x)/|y|^2
    long long num = (long long)base_n(si, i) * ns2;
    if (num % ny2) throw std::logic_error("structure constant division error");
    return (int)(num / ny2);
  }

  // chain length p: max k with beta - k*alpha a root
  int chain_down(int a, int b) const {
    std::vector<int> v = rs.root(b).coeffs;
    const std::vector<int>& step = rs.root(a).coeffs;
    int p = 0;
    while (true) {
      v = add(v, step, -1);
      bool zero = true;
      for (int x : v) zero = zero && x == 0;
      if (zero || !find(v).first) break;
      p++;
    }
    return p;
  }

  void build() {
    const int N = rs.num_roots();
    for (int g = 1; g <= N; g++) {
      if (rs.root(g).height == 1) continue;
      // all decompositions of gamma into ordered pairs of positive roots
      std::vector<std::pair<int, int>> pairs;
      for (int a = 1; a <= N; a++) {
        for (int b = a + 1; b <= N; b++) {
          if (rs.sum(a, b) == std::optional<int>(g)) pairs.push_back({a, b});
        }
      }
      if (pairs.empty()) throw std::logic_error("non-simple root with no decomposition");
      auto [a1, b1] = pairs.front();  // minimal first index = extraspecial
      base[{a1, b1}] = chain_down(a1, b1) + 1;
      for (size_t t = 1; t < pairs.size(); t++) {
        auto [a, b] = pairs[t];
        // Jacobi on (a1, b1, -a, -b), which sums to zero
        long long g2 = rs.norm2x2(g);
        long long t2 = 0, t3 = 0;
        {
          auto d = add(rs.root(b1).coeffs, rs.root(a).coeffs, -1);
          auto [di, dsgn] = find(d);
          (void)dsgn;
          if (di) {
            long long num = (long long)n_signed(b1, +1, a, -1) * n_signed(a1, +1, b, -1);
            int dn = rs.norm2x2(di);
            t2 = num * g2;
            if (t2 % dn) throw std::logic_error("jacobi division error");
            t2 /= dn;
          }
        }
        {
          auto d = add(rs.root(a1).coeffs, rs.root(a).coeffs, -1);
          auto [di, dsgn] = find(d);
          (void)dsgn;
          if (di) {
            long long num = (long long)n_signed(a, -1, a1, +1) * n_signed(b1, +1, b, -1);
            int dn = rs.norm2x2(di);
            t3 = num * g2;
            if (t3 % dn) throw std::logic_error("jacobi division error");
            t3 /= dn;
          }
        }
        // N(a1,b1)*N(-a,-b)/|g|^2 + t2/|g|^2-normalized... all terms already scaled by |g|^2
        long long lhs = -(t2 + t3);
        long long n11 = base_n(a1, b1);
        if (lhs % n11) throw std::logic_error("jacobi not divisible by extraspecial N");
        long long nmm = lhs / n11;  // = N(-a,-b) * |g|^2 / |g|^2
        base[{a, b}] = (int)(-nmm);
      }
    }
  }
};

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

CommutatorTable CommutatorTable::build(const RootSystem& rs, int p) {
  if (p < 2) throw std::invalid_argument("characteristic must be a prime");
  CommutatorTable tab;
  tab.rs_ = &rs;
  tab.p_ = p;
  const int N = rs.num_roots();
  tab.full_.assign((size_t)N * N, {});
  tab.modp_.assign((size_t)N * N, {});

  NBuilder nb(rs);

  // M(xi, eta, i) = N(xi,eta) N(xi,xi+eta) ... N(xi,(i-1)xi+eta) / i!
  auto bigM = [&](int xi, int eta, int i) -> long long {
    long long prod = 1;
    std::vector<int> cur = rs.root(eta).coeffs;
    for (int k = 0; k < i; k++) {
      auto [ci, cs] = nb.find(cur);
      if (!ci || cs < 0) throw std::logic_error("M-chain left the positive system");
      prod *= nb.base_n(xi, ci);
      cur = NBuilder::add(cur, rs.root(xi).coeffs, +1);
    }
    if (prod % factorial(i)) throw std::logic_error("M value not integral");
    return prod / factorial(i);
  };

  for (int i = 1; i <= N; i++) {
    for (int j = 1; j <= N; j++) {
      if (i == j) continue;
      // [x_i(t), x_j(u)] = prod over (a,b), a*alpha_j + b*alpha_i in Phi+,
      // of x_{a alpha_j + b alpha_i}(C_ab * (-u)^a * t^b)  [alpha = alpha_j, beta = alpha_i]
      std::vector<CommTerm> terms;
      for (int ab = 2; ab <= 5; ab++) {
        for (int a = 1; a < ab; a++) {
          int b = ab - a;
          if (a > 3 || b > 3) continue;
          std::vector<int> tgt = rs.root(j).coeffs;
          for (auto& y : tgt) y *= a;
          for (size_t k = 0; k < tgt.size(); k++) tgt[k] += b * rs.root(i).coeffs[k];
          auto idx = rs.index_of(tgt);
          if (!idx) continue;
          long long C = 0;
          int alpha = j, beta = i;
          if (b == 1) {
            C = (a == 1) ? nb.base_n(alpha, beta) : bigM(alpha, beta, a);
          } else if (a == 1) {
            C = (b == 2 ? 1 : -1) * bigM(beta, alpha, b);
          } else if (a == 3 && b == 2) {
            auto s = rs.sum(alpha, beta);
            if (!s) throw std::logic_error("C32 without alpha+beta");
            long long m = bigM(*s, alpha, 2);
            if (m % 3) throw std::logic_error("C32 not integral");
            C = m / 3;
          } else if (a == 2 && b == 3) {
            auto s = rs.sum(alpha, beta);
            if (!s) throw std::logic_error("C23 without alpha+beta");
            long long m = bigM(*s, beta, 2);
            if ((2 * m) % 3) throw std::logic_error("C23 not integral");
            C = -2 * m / 3;
          } else {
            throw std::logic_error("unexpected exponent pair in commutator formula");
          }
          if (C == 0 || C > 3 || C < -3)
            throw std::logic_error("structure constant out of range");
          CommTerm ct;
          ct.target = *idx;
          ct.a_exp = b;  // exponent of t (first argument)
          ct.b_exp = a;  // exponent of u (second argument)
          ct.c = (int)((a % 2 == 0) ? C : -C);  // fold (-1)^a from (-u)^a
          terms.push_back(ct);
        }
      }
      tab.full_[(size_t)(i - 1) * N + (j - 1)] = terms;
      std::vector<CommTerm> red;
      for (const auto& ct : terms)
        if (ct.c % p != 0) red.push_back(ct);
      tab.modp_[(size_t)(i - 1) * N + (j - 1)] = red;
    }
  }
  return tab;
}

std::string CommutatorTable::dump() const {
  std::ostringstream os;
  const int N = num_roots();
  for (int i = 1; i <= N; i++)
    for (int j = 1; j <= N; j++) {
      if (i == j) continue;
      const auto& ts = terms(i, j);
      if (ts.empty()) continue;
      os << i << ' ' << j << " ->";
      for (const auto& t : ts)
        os << " (" << t.target << ',' << t.c << ',' << t.a_exp << ',' << t.b_exp << ')';
      os << '\n';
    }
  return os.str();
}

uint64_t full_mask(const RootSystem& rs) {
  int n = rs.num_roots();
  if (n >= 64) throw std::invalid_argument("mask operations limited to N < 64");
  return (1ULL << n) - 1;
}

UElement u_identity(const CommutatorTable& tab) {
  return UElement{std::vector<uint32_t>(tab.num_roots() + 1, 0)};
}

UElement u_generator(const CommutatorTable& tab, int root, uint32_t t) {
  UElement e = u_identity(tab);
  e.coords.at(root) = t;
  return e;
}

UElement collect_product(const CommutatorTable& tab, const FieldCtx& F, uint64_t support,
                         uint64_t drop, const UElement& u, const UElement& v) {
  Collector<FieldArith> col{tab, FieldArith{F}, support, drop};
  return UElement{col.multiply(u.coords, v.coords)};
}

UElement u_inverse(const CommutatorTable& tab, const FieldCtx& F, uint64_t support,
                   uint64_t drop, const UElement& u) {
  Collector<FieldArith> col{tab, FieldArith{F}, support, drop};
  return UElement{col.inverse(u.coords)};
}

UElement commutator(const CommutatorTable& tab, const FieldCtx& F, int i, uint32_t t, int j,
                    uint32_t s) {
  Collector<FieldArith> col{tab, FieldArith{F}, full_mask(tab.roots()), 0};
  return UElement{col.commutator(col.to_coords({{i, t}}), col.to_coords({{j, s}}))};
}

}  // namespace porc
