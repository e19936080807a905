#include "porc/reduction.hpp"

#include <stdexcept>

namespace porc {

std::string CoreForm::str() const {
  return "[" + std::to_string(z) + "," + std::to_string(m) + "," + std::to_string(c) + "]";
}

namespace {

// surviving targets of [x_i, x_j] inside the quattern support
RootSet surviving(const CommutatorTable& tab, RootSet S, int i, int j) {
  RootSet r = 0;
  for (const auto& t : tab.terms_mod_p(i, j))
    if (set_has(S, t.target)) r |= 1ull << (t.target - 1);
  return r;
}

bool power_map_bijective(int p, int e) {
  // t -> t^e must be bijective on F_q for every q = p^f: e a power of p
  while (e % p == 0) e /= p;
  return e == 1;
}

struct Reducer {
  const CommutatorTable& tab;
  std::vector<Core> out;

  RootSet center(RootSet S) const {
    RootSet z = 0;
    auto idx = set_to_indices(S);
    for (int g : idx) {
      bool central = true;
      for (int d : idx)
        if (d != g && surviving(tab, S, g, d)) {
          central = false;
          break;
        }
      if (central) z |= 1ull << (g - 1);
    }
    return z;
  }

  RootSet direct_factors(RootSet S, RootSet zs) const {
    RootSet d = 0;
    auto idx = set_to_indices(S);
    for (int g : set_to_indices(zs)) {
      bool hit = false;
      for (size_t a = 0; a < idx.size() && !hit; a++)
        for (size_t b = a + 1; b < idx.size() && !hit; b++) {
          if (idx[a] == g || idx[b] == g) continue;
          hit = set_has(surviving(tab, S, idx[a], idx[b]), g);
        }
      if (!hit) d |= 1ull << (g - 1);
    }
    return d;
  }

  // Prop 4.1 conditions for the pair (beta, delta) against the current Z.
  bool valid_pair(RootSet S, RootSet Z, int beta, int delta) const {
    const auto& ts = tab.terms_mod_p(beta, delta);
    int n_surv = 0;
    const CommTerm* surv = nullptr;
    for (const auto& t : ts)
      if (set_has(S, t.target)) {
        n_surv++;
        surv = &t;
      }
    if (n_surv != 1) return false;                       // single monomial
    if (!set_has(Z, surv->target)) return false;         // landing on gamma in Z
    if (!power_map_bijective(tab.prime(), surv->a_exp)) return false;
    if (!power_map_bijective(tab.prime(), surv->b_exp)) return false;
    // condition 2: nothing in X_S hits the beta coordinate
    auto idx = set_to_indices(S);
    for (size_t a = 0; a < idx.size(); a++)
      for (size_t b = a + 1; b < idx.size(); b++)
        if (set_has(surviving(tab, S, idx[a], idx[b]), beta)) return false;
    // condition 3: delta commutes with everything but beta
    for (int a : idx)
      if (a != beta && a != delta && surviving(tab, S, a, delta)) return false;
    return true;
  }

  void run(Core c) {
    while (true) {
      RootSet zs = center(c.S);
      if ((c.Z & ~zs) != 0)
        throw std::logic_error("reduction invariant broken: Z not central");
      if (c.S == zs) {  // Step 1: abelian
        c.abelian = true;
        c.S_orig = c.S;
        c.Z_orig = c.Z;
        out.push_back(std::move(c));
        return;
      }
      // Step 2: look for the unique pair with maximal delta, then minimal beta
      int best_beta = 0, best_delta = 0;
      auto idx = set_to_indices(c.S);
      for (int delta : idx) {
        if (best_delta > delta) continue;
        for (int beta : idx) {
          if (beta == delta) continue;
          if (best_delta == delta && best_beta != 0 && best_beta <= beta) continue;
          if (valid_pair(c.S, c.Z, beta, delta)) {
            best_delta = delta;
            best_beta = beta;
          }
        }
      }
      if (best_beta != 0) {
        int b = best_beta, d = best_delta;
        c.S &= ~(1ull << (b - 1));
        c.S &= ~(1ull << (d - 1));
        c.A |= 1ull << (b - 1);
        c.L |= 1ull << (d - 1);
        c.K |= 1ull << (d - 1);
        c.path.push_back({Move::Step2, b, d, 0});
        continue;
      }
      // Step 3: split off a maximal central root outside Z and D
      RootSet dset = direct_factors(c.S, zs);
      RootSet cand = zs & ~(c.Z | dset);
      if (cand) {
        int gamma = 64 - __builtin_clzll(cand);  // maximal index
        Core drop = c;
        drop.S &= ~(1ull << (gamma - 1));
        drop.K |= 1ull << (gamma - 1);
        drop.path.push_back({Move::Step3Drop, 0, 0, gamma});
        Core keep = std::move(c);
        keep.Z |= 1ull << (gamma - 1);
        keep.path.push_back({Move::Step3Keep, 0, 0, gamma});
        run(std::move(drop));
        run(std::move(keep));
        return;
      }
      // Step 4: nonabelian core; split off the direct abelian factor
      c.abelian = false;
      c.S_orig = c.S;
      c.Z_orig = c.Z;
      c.S &= ~dset;
      c.Z &= ~dset;
      c.D = dset;
      out.push_back(std::move(c));
      return;
    }
  }
};

}  // namespace

std::vector<Core> reduce_from(const CommutatorTable& tab, RootSet S, RootSet Z, RootSet K) {
  Reducer r{tab, {}};
  Core c;
  c.S = S;
  c.Z = Z;
  c.K = K;
  if (Z & ~r.center(S)) throw std::invalid_argument("reduce_from: Z not central in X_S");
  r.run(std::move(c));
  return std::move(r.out);
}

std::vector<Core> reduce(const CommutatorTable& tab, const RepresentableSet& rep) {
  RootSet S = full_mask(tab.roots()) & ~rep.n_sigma;
  return reduce_from(tab, S, rep.sigma, rep.n_sigma);
}

CoreForm core_form(const CommutatorTable& tab, const Core& core) {
  CoreForm f;
  f.z = set_size(core.Z_orig);
  f.m = set_size(core.S_orig);
  auto idx = set_to_indices(core.S_orig);
  for (size_t a = 0; a < idx.size(); a++)
    for (size_t b = a + 1; b < idx.size(); b++)
      if (surviving(tab, core.S_orig, idx[a], idx[b])) f.c++;
  return f;
}

AllCores all_cores(const CommutatorTable& tab) {
  AllCores ac;
  ac.reps = representable_sets(tab);
  for (size_t i = 0; i < ac.reps.size(); i++) {
    auto cores = reduce(tab, ac.reps[i]);
    for (auto& c : cores) {
      c.sigma_index = (int)i;
      if (!c.abelian) ac.nonabelian_indices.push_back((int)ac.cores.size());
      ac.cores.push_back(std::move(c));
    }
  }
  return ac;
}

}  // namespace porc
