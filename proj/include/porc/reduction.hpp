#pragma once

#include <string>
#include <vector>

#include "porc/patterns.hpp"

namespace porc {

struct Move {
  enum Kind { Step2, Step3Drop, Step3Keep } kind;
  int beta = 0, delta = 0, gamma = 0;
};

struct CoreForm {
  int z = 0, m = 0, c = 0;
  bool operator==(const CoreForm& o) const { return z == o.z && m == o.m && c == o.c; }
  bool operator<(const CoreForm& o) const {
    return std::tie(z, m, c) < std::tie(o.z, o.m, o.c);
  }
  std::string str() const;
};

// End state of the reduction. For nonabelian cores the direct factor D has
// been split off: S and Z are the working sets, S_orig/Z_orig keep the
// pre-split data that the form [z,m,c] refers to.
struct Core {
  RootSet S = 0, Z = 0, A = 0, L = 0, K = 0;
  RootSet D = 0;
  RootSet S_orig = 0, Z_orig = 0;
  bool abelian = false;
  std::vector<Move> path;
  int sigma_index = -1;  // which representable set produced it (when applicable)

  int degree_multiplier() const { return set_size(A); }
};

// The reduction algorithm, starting from a representable set of U.
std::vector<Core> reduce(const CommutatorTable& tab, const RepresentableSet& rep);
// General entry: reduce Irr(X_S)_Z for a quattern (S = P\K) and Z subset of
// the root center of X_S.
std::vector<Core> reduce_from(const CommutatorTable& tab, RootSet S, RootSet Z, RootSet K);

CoreForm core_form(const CommutatorTable& tab, const Core& core);

// All cores of U at the table's characteristic, in deterministic order
// (representable sets ascending by N, depth-first reduction order).
struct AllCores {
  std::vector<RepresentableSet> reps;
  std::vector<Core> cores;              // all cores, sigma_index set
  std::vector<int> nonabelian_indices;  // into cores
};
AllCores all_cores(const CommutatorTable& tab);

}  // namespace porc
