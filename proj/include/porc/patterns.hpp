#pragma once

#include <cstdint>
#include <vector>

#include "porc/chevalley.hpp"

namespace porc {

// Root sets are bitmasks: bit (i-1) stands for root index i.
using RootSet = uint64_t;

std::vector<int> set_to_indices(RootSet s);
RootSet indices_to_set(const std::vector<int>& idx);
inline bool set_has(RootSet s, int i) { return (s >> (i - 1)) & 1; }
inline int set_size(RootSet s) { return __builtin_popcountll(s); }

struct Quattern {
  RootSet P = 0;  // pattern
  RootSet K = 0;  // normal set, K subset of P
  RootSet S = 0;  // P \ K
};

struct RepresentableSet {
  RootSet sigma = 0;    // Z(U / X_N)
  RootSet n_sigma = 0;  // the unique normal set N with that center
};

// X_P is a group: every pairwise char-p commutator has support inside P.
bool is_pattern_group(const CommutatorTable& tab, RootSet P);
// X_N normal in X_P; requires N subset of P and X_P a pattern group.
bool is_normal_pattern(const CommutatorTable& tab, RootSet P, RootSet N);

// All N with X_N normal in U, ascending mask order. Rank <= 4 scale.
std::vector<RootSet> enumerate_normal_patterns(const CommutatorTable& tab);
std::vector<RepresentableSet> representable_sets(const CommutatorTable& tab);

// Z(X_S) as a root set: gamma with [x_gamma, X_S] = 1 in the quotient.
RootSet center_roots(const CommutatorTable& tab, const Quattern& quat);
// D(X_S): gamma central and hit by no commutator of S \ {gamma}.
RootSet direct_factor_roots(const CommutatorTable& tab, const Quattern& quat);

Quattern make_quattern(const CommutatorTable& tab, RootSet P, RootSet K);

}  // namespace porc
