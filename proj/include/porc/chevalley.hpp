#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "porc/gfq.hpp"
#include "porc/rootsys.hpp"

namespace porc {

// One factor of the commutator relation: [x_i(t), x_j(u)] contributes
// x_target(c * t^a_exp * u^b_exp), with every sign folded into c.
struct CommTerm {
  int target = 0;
  int a_exp = 0;  // exponent of the first argument
  int b_exp = 0;  // exponent of the second argument
  int c = 0;      // integer constant, |c| in {1,2,3}
};

class CommutatorTable {
 public:
  static CommutatorTable build(const RootSystem& rs, int p);

  const RootSystem& roots() const { return *rs_; }
  int prime() const { return p_; }
  int num_roots() const { return rs_->num_roots(); }

  // full integer relation for the ordered pair (i, j), i != j
  const std::vector<CommTerm>& terms(int i, int j) const { return at(full_, i, j); }
  // char-p relation: terms with c = 0 mod p dropped
  const std::vector<CommTerm>& terms_mod_p(int i, int j) const { return at(modp_, i, j); }

  std::string dump() const;  // one line per pair, for external diffing

 private:
  const std::vector<CommTerm>& at(const std::vector<std::vector<CommTerm>>& v, int i,
                                  int j) const {
    int n = num_roots();
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::out_of_range("commutator pair out of range");
    return v[(i - 1) * n + (j - 1)];
  }
  const RootSystem* rs_ = nullptr;
  int p_ = 2;
  std::vector<std::vector<CommTerm>> full_, modp_;
};

// ---------------------------------------------------------------------------
// Collection: normal forms in U and its quattern quotients.
//
// Elements are coordinate vectors indexed 1..N over a support mask; letters
// with index in the drop mask (the normal set K) are erased after each
// insertion, letters outside support|drop are a structural error.
// The coefficient arithmetic is a template parameter so the same collector
// runs over F_{2^f}, prime fields and GF(2) polynomial rings.
// ---------------------------------------------------------------------------

struct FieldArith {  // GF(2^f)
  const FieldCtx& F;
  using Elem = uint32_t;
  Elem zero() const { return 0; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem neg(Elem a) const { return a; }
  Elem mul(Elem a, Elem b) const { return F.mul(a, b); }
  Elem scale(int c, Elem a) const { return (c & 1) ? a : 0; }
  Elem pw(Elem a, int e) const { return F.pow(a, e); }
};

struct PrimeArith {  // F_p, p odd, for cross-checking constants
  int p;
  using Elem = int;
  Elem zero() const { return 0; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem scale(int c, Elem a) const { return ((c % p + p) % p) * a % p; }
  Elem pw(Elem a, int e) const {
    Elem r = 1;
    for (int k = 0; k < e; k++) r = mul(r, a);
    return r;
  }
};

template <class A>
struct Collector {
  const CommutatorTable& tab;
  A ar;
  uint64_t support;  // bit (i-1) set iff root i is a coordinate (the set S)
  uint64_t drop;     // the set K; letters here vanish (X_K is normal in X_P)

  using Elem = typename A::Elem;
  using Word = std::vector<std::pair<int, Elem>>;

  std::vector<Elem> zero_vec() const {
    return std::vector<Elem>(tab.num_roots() + 1, ar.zero());
  }

  bool in(uint64_t m, int i) const { return (m >> (i - 1)) & 1; }

  // rewrite w into the normal form x_{i1} x_{i2} ... with ascending indices
  void canonicalize(Word& w) const {
    size_t guard = 0;
    const size_t limit = 4096 + 64 * w.size() * (size_t)(tab.num_roots() + 2) *
                                    (size_t)(tab.num_roots() + 2);
    size_t i = 0;
    while (i + 1 <= w.size()) {
      if (++guard > limit * 64 + (1u << 22)) throw std::logic_error("collection did not terminate");
      if (i < w.size() && ar.is_zero(w[i].second)) {
        w.erase(w.begin() + i);
        if (i) i--;
        continue;
      }
      if (i + 1 >= w.size()) break;
      auto [j, s] = w[i];
      auto [k, t] = w[i + 1];
      if (j == k) {
        w[i].second = ar.add(s, t);
        w.erase(w.begin() + i + 1);
        if (i) i--;
        continue;
      }
      if (j < k) {
        i++;
        continue;
      }
      // x_j(s) x_k(t) = x_k(t) x_j(s) [x_j(s), x_k(t)]
      w[i] = {k, t};
      w[i + 1] = {j, s};
      Word ins;
      for (const CommTerm& cm : tab.terms_mod_p(j, k)) {
        if (!in(support, cm.target)) {
          if (in(drop, cm.target)) continue;
          throw std::logic_error("collection left the pattern support at root " +
                                 std::to_string(cm.target));
        }
        Elem v = ar.scale(cm.c, ar.mul(ar.pw(s, cm.a_exp), ar.pw(t, cm.b_exp)));
        if (!ar.is_zero(v)) ins.push_back({cm.target, v});
      }
      w.insert(w.begin() + i + 2, ins.begin(), ins.end());
      if (i) i--;
    }
  }

  std::vector<Elem> to_coords(Word w) const {
    canonicalize(w);
    auto c = zero_vec();
    for (auto& [i, v] : w) {
      if (!in(support, i)) throw std::logic_error("coordinate outside support");
      c[i] = ar.add(c[i], v);
    }
    return c;
  }

  Word to_word(const std::vector<Elem>& c) const {
    Word w;
    for (int i = 1; i <= tab.num_roots(); i++)
      if (!ar.is_zero(c[i])) w.push_back({i, c[i]});
    return w;
  }

  std::vector<Elem> multiply(const std::vector<Elem>& u, const std::vector<Elem>& v) const {
    Word w = to_word(u);
    Word wv = to_word(v);
    w.insert(w.end(), wv.begin(), wv.end());
    return to_coords(std::move(w));
  }

  std::vector<Elem> inverse(const std::vector<Elem>& u) const {
    Word w = to_word(u);
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->first, ar.neg(it->second)});
    return to_coords(std::move(r));
  }

  // [u, v] = u^-1 v^-1 u v
  std::vector<Elem> commutator(const std::vector<Elem>& u, const std::vector<Elem>& v) const {
    return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
  }

  bool is_identity(const std::vector<Elem>& u) const {
    for (int i = 1; i <= tab.num_roots(); i++)
      if (!ar.is_zero(u[i])) return false;
    return true;
  }
};

// Concrete GF(2^f) element of U (or of a quattern quotient).
struct UElement {
  std::vector<uint32_t> coords;  // index 0 unused
};

UElement u_identity(const CommutatorTable& tab);
UElement u_generator(const CommutatorTable& tab, int root, uint32_t t);
UElement collect_product(const CommutatorTable& tab, const FieldCtx& F, uint64_t support,
                         uint64_t drop, const UElement& u, const UElement& v);
UElement u_inverse(const CommutatorTable& tab, const FieldCtx& F, uint64_t support,
                   uint64_t drop, const UElement& u);
// the [OP] commutator: normal form of [x_i(t), x_j(s)] in the full group
UElement commutator(const CommutatorTable& tab, const FieldCtx& F, int i, uint32_t t, int j,
                    uint32_t s);

uint64_t full_mask(const RootSystem& rs);

}  // namespace porc
