#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "porc/patterns.hpp"

using namespace porc;

namespace {
CommutatorTable make(char t, int r, int p) {
  static std::map<std::tuple<char, int, int>, CommutatorTable> cache;
  auto key = std::make_tuple(t, r, p);
  auto it = cache.find(key);
  if (it == cache.end()) {
    static std::map<std::pair<char, int>, RootSystem> rcache;
    auto rkey = std::make_pair(t, r);
    if (!rcache.count(rkey)) rcache.emplace(rkey, RootSystem::build(t, r));
    it = cache.emplace(key, CommutatorTable::build(rcache.at(rkey), p)).first;
  }
  return it->second;
}
}  // namespace

TEST_CASE("pattern group examples at the very bad prime") {
  auto b2p2 = make('B', 2, 2);
  auto b2p3 = make('B', 2, 3);
  RootSet P = indices_to_set({2, 3});  // {a2, a1+a2}
  CHECK(is_pattern_group(b2p2, P));
  CHECK(!is_pattern_group(b2p3, P));
  // singletons and closed patterns are always groups
  for (int i = 1; i <= 4; i++) CHECK(is_pattern_group(b2p2, 1ull << (i - 1)));
  CHECK(is_pattern_group(b2p3, indices_to_set({1, 2, 3, 4})));
  CHECK(is_pattern_group(b2p3, indices_to_set({3, 4})));
}

TEST_CASE("normal pattern examples") {
  auto g2p3 = make('G', 2, 3);
  auto g2p2 = make('G', 2, 2);
  RootSet full = indices_to_set({1, 2, 3, 4, 5, 6});
  RootSet N = indices_to_set({4});  // a1 + 2 a2
  CHECK(is_normal_pattern(g2p3, full, N));
  CHECK(!is_normal_pattern(g2p2, full, N));
  CHECK(is_normal_pattern(g2p3, full, full));
  CHECK(is_normal_pattern(g2p3, full, 0));
  CHECK_THROWS(is_normal_pattern(g2p3, N, full));
}

TEST_CASE("representable set counts reproduce the rank-4 table") {
  CHECK(enumerate_normal_patterns(make('A', 4, 2)).size() == 42);
  CHECK(enumerate_normal_patterns(make('A', 4, 3)).size() == 42);
  CHECK(enumerate_normal_patterns(make('B', 4, 2)).size() == 98);
  CHECK(enumerate_normal_patterns(make('B', 4, 3)).size() == 70);
  CHECK(enumerate_normal_patterns(make('C', 4, 2)).size() == 98);
  CHECK(enumerate_normal_patterns(make('C', 4, 3)).size() == 70);
  CHECK(enumerate_normal_patterns(make('D', 4, 2)).size() == 50);
  CHECK(enumerate_normal_patterns(make('D', 4, 3)).size() == 50);
  CHECK(enumerate_normal_patterns(make('F', 4, 2)).size() == 190);
  CHECK(enumerate_normal_patterns(make('F', 4, 3)).size() == 105);
  CHECK(representable_sets(make('F', 4, 2)).size() == 190);
  CHECK(representable_sets(make('D', 4, 5)).size() == 50);
  CHECK(representable_sets(make('F', 4, 5)).size() == 105);
}

TEST_CASE("center roots of UB2 and round trips") {
  auto tab = make('B', 2, 2);
  RootSet full = indices_to_set({1, 2, 3, 4});
  auto q = make_quattern(tab, full, 0);
  CHECK(center_roots(tab, q) == indices_to_set({3, 4}));
  // abelian quattern: S itself
  auto qa = make_quattern(tab, full, indices_to_set({3, 4}));
  CHECK(center_roots(tab, qa) == indices_to_set({1, 2}));
  // single root
  auto q1 = make_quattern(tab, indices_to_set({4}), 0);
  CHECK(center_roots(tab, q1) == indices_to_set({4}));
}

TEST_CASE("round trip: every representable set is the center of its quotient") {
  for (auto [t, r, p] :
       {std::tuple{'B', 2, 2}, {'B', 3, 2}, {'G', 2, 2}, {'G', 2, 3}, {'F', 4, 2}}) {
    auto tab = make(t, r, p);
    RootSet full = full_mask(tab.roots());
    for (const auto& rep : representable_sets(tab)) {
      auto q = make_quattern(tab, full, rep.n_sigma);
      CHECK(center_roots(tab, q) == rep.sigma);
    }
  }
}

TEST_CASE("normality is closed under unions (rank <= 4, spot types)") {
  for (auto [t, r, p] : {std::tuple{'B', 3, 2}, {'G', 2, 3}, {'D', 4, 2}}) {
    auto tab = make(t, r, p);
    auto ns = enumerate_normal_patterns(tab);
    RootSet full = full_mask(tab.roots());
    for (size_t a = 0; a < ns.size(); a++)
      for (size_t b = a + 1; b < ns.size(); b++)
        CHECK(is_normal_pattern(tab, full, ns[a] | ns[b]));
  }
}

TEST_CASE("direct factor roots") {
  auto tab = make('B', 2, 2);
  // B2 full quattern: both central roots are commutator targets, D empty
  auto q = make_quattern(tab, indices_to_set({1, 2, 3, 4}), 0);
  CHECK(direct_factor_roots(tab, q) == 0);
  // two commuting roots: both are direct factors
  auto q2 = make_quattern(tab, indices_to_set({3, 4}), 0);
  CHECK(direct_factor_roots(tab, q2) == indices_to_set({3, 4}));
  // D is always inside the center set
  auto f4 = make('F', 4, 2);
  for (const auto& rep : representable_sets(f4)) {
    auto qq = make_quattern(f4, full_mask(f4.roots()), rep.n_sigma);
    CHECK((direct_factor_roots(f4, qq) & ~center_roots(f4, qq)) == 0);
  }
}
