#include "porc/patterns.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace porc {

std::vector<int> set_to_indices(RootSet s) {
  std::vector<int> v;
  for (int i = 1; s; i++, s >>= 1)
    if (s & 1) v.push_back(i);
  return v;
}

RootSet indices_to_set(const std::vector<int>& idx) {
  RootSet s = 0;
  for (int i : idx) s |= 1ull << (i - 1);
  return s;
}

namespace {
// support of the char-p commutator of the ordered pair (i, j)
RootSet comm_support(const CommutatorTable& tab, int i, int j) {
  RootSet s = 0;
  for (const auto& t : tab.terms_mod_p(i, j)) s |= 1ull << (t.target - 1);
  return s;
}
}  // namespace

bool is_pattern_group(const CommutatorTable& tab, RootSet P) {
  auto idx = set_to_indices(P);
  for (size_t a = 0; a < idx.size(); a++)
    for (size_t b = a + 1; b < idx.size(); b++)
      if (comm_support(tab, idx[a], idx[b]) & ~P) return false;
  return true;
}

bool is_normal_pattern(const CommutatorTable& tab, RootSet P, RootSet N) {
  if (N & ~P) throw std::invalid_argument("is_normal_pattern: N not a subset of P");
  if (!is_pattern_group(tab, P))
    throw std::invalid_argument("is_normal_pattern: X_P is not a pattern group");
  for (int i : set_to_indices(P))
    for (int j : set_to_indices(N))
      if (i != j && (comm_support(tab, i, j) & ~N)) return false;
  return true;
}

std::vector<RootSet> enumerate_normal_patterns(const CommutatorTable& tab) {
  const int N = tab.num_roots();
  if (N >= 64) throw std::invalid_argument("enumeration limited to N < 64");
  // principal closures: close {g} under "targets of [anything, member]"
  std::vector<RootSet> principal(N + 1, 0);
  for (int g = 1; g <= N; g++) {
    RootSet c = 1ull << (g - 1);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int d : set_to_indices(c))
        for (int a = 1; a <= N; a++) {
          if (a == d) continue;
          RootSet ts = comm_support(tab, a, d);
          if (ts & ~c) {
            c |= ts;
            grew = true;
          }
        }
    }
    principal[g] = c;
  }
  // normal patterns = unions of principal closures (including the empty union)
  std::vector<RootSet> out{0};
  std::map<RootSet, bool> seen{{0, true}};
  for (size_t k = 0; k < out.size(); k++) {
    RootSet s = out[k];
    for (int g = 1; g <= N; g++) {
      RootSet u = s | principal[g];
      if (!seen.count(u)) {
        seen[u] = true;
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  RootSet full = full_mask(tab.roots());
  for (RootSet s : out)
    if (!is_normal_pattern(tab, full, s)) throw std::logic_error("closure enumeration bug");
  return out;
}

Quattern make_quattern(const CommutatorTable& tab, RootSet P, RootSet K) {
  if (K & ~P) throw std::invalid_argument("quattern: K not a subset of P");
  if (!is_pattern_group(tab, P) || !is_normal_pattern(tab, P, K))
    throw std::invalid_argument("quattern: (P, K) is not a pattern/normal pair");
  return Quattern{P, K, P & ~K};
}

RootSet center_roots(const CommutatorTable& tab, const Quattern& quat) {
  RootSet z = 0;
  auto s = set_to_indices(quat.S);
  for (int g : s) {
    bool central = true;
    for (int d : s) {
      if (d == g) continue;
      if (comm_support(tab, g, d) & quat.S) {
        central = false;
        break;
      }
    }
    if (central) z |= 1ull << (g - 1);
  }
  return z;
}

RootSet direct_factor_roots(const CommutatorTable& tab, const Quattern& quat) {
  RootSet z = center_roots(tab, quat);
  RootSet d = 0;
  auto s = set_to_indices(quat.S);
  for (int g : set_to_indices(z)) {
    bool hit = false;
    for (size_t a = 0; a < s.size() && !hit; a++)
      for (size_t b = a + 1; b < s.size() && !hit; b++) {
        if (s[a] == g || s[b] == g) continue;
        hit = set_has(comm_support(tab, s[a], s[b]) & quat.S, g);
      }
    if (!hit) d |= 1ull << (g - 1);
  }
  return d;
}

std::vector<RepresentableSet> representable_sets(const CommutatorTable& tab) {
  RootSet full = full_mask(tab.roots());
  std::vector<RepresentableSet> out;
  std::map<RootSet, RootSet> sigma_to_n;
  for (RootSet n : enumerate_normal_patterns(tab)) {
    Quattern q = make_quattern(tab, full, n);
    RootSet sigma = center_roots(tab, q);
    auto [it, fresh] = sigma_to_n.insert({sigma, n});
    if (!fresh)
      throw std::logic_error("representable sets are not injective in N");
    out.push_back({sigma, n});
  }
  return out;
}

}  // namespace porc
