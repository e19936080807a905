#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "porc/rootsys.hpp"

using namespace porc;

static int classical(char t, int r) {
  switch (t) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return r == 6 ? 36 : (r == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

TEST_CASE("positive root counts match the classical values") {
  for (char t : {'A', 'B', 'C', 'D'})
    for (int r = (t == 'D' ? 3 : (t == 'A' ? 1 : 2)); r <= 8; r++)
      CHECK(RootSystem::build(t, r).num_roots() == classical(t, r));
  for (int r : {6, 7, 8}) CHECK(RootSystem::build('E', r).num_roots() == classical('E', r));
  CHECK(RootSystem::build('F', 4).num_roots() == 24);
  CHECK(RootSystem::build('G', 2).num_roots() == 6);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS(RootSystem::build('H', 3));
  CHECK_THROWS(RootSystem::build('A', 9));
  CHECK_THROWS(RootSystem::build('F', 5));
  CHECK_THROWS(RootSystem::build('E', 5));
}

TEST_CASE("F4 closure produces 24 roots from the 4 simples") {
  auto rs = RootSystem::build('F', 4);
  CHECK(rs.num_roots() == 24);
  // highest root 2342, height 11
  CHECK(rs.root(24).coeffs == std::vector<int>{2, 3, 4, 2});
  CHECK(rs.root(24).height == 11);
}

TEST_CASE("sum table agrees with coefficient addition, exhaustively") {
  for (auto [t, r] : {std::pair{'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    auto rs = RootSystem::build(t, r);
    int n = rs.num_roots();
    for (int i = 1; i <= n; i++)
      for (int j = 1; j <= n; j++) {
        std::vector<int> s = rs.root(i).coeffs;
        for (int k = 0; k < r; k++) s[k] += rs.root(j).coeffs[k];
        auto direct = rs.index_of(s);
        CHECK(rs.sum(i, j) == direct);
        if (direct) CHECK(*rs.sum(i, j) == *rs.sum(j, i));
      }
  }
}

TEST_CASE("B2 sums from the operation examples") {
  auto rs = RootSystem::build('B', 2);
  CHECK(rs.sum(1, 2) == std::optional<int>(3));   // a1 + a2
  CHECK(!rs.sum(4, 1));                           // (1,2)+(1,0) = (2,2) not a root
  CHECK(!rs.sum(4, 2));
  CHECK_THROWS(rs.sum(0, 1));
  CHECK_THROWS(rs.sum(1, 5));
}

TEST_CASE("F4: highest root plus any simple root is absent") {
  auto rs = RootSystem::build('F', 4);
  for (int i = 1; i <= 4; i++) CHECK(!rs.sum(24, i));
}

TEST_CASE("strict order and enumeration compatibility") {
  for (auto [t, r] : {std::pair{'A', 4}, {'B', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    auto rs = RootSystem::build(t, r);
    int n = rs.num_roots();
    for (int i = 1; i <= n; i++) {
      CHECK(!rs.is_less(i, i));
      for (int j = i + 1; j <= n; j++) CHECK(!rs.is_less(j, i));  // order refines
    }
  }
  auto b2 = RootSystem::build('B', 2);
  CHECK(b2.is_less(1, 3));
  CHECK(!b2.is_less(1, 2));
  CHECK(!b2.is_less(2, 1));
}

TEST_CASE("embedded tables equal the data files") {
  for (auto name : {"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
    auto rs = RootSystem::build(name[0], name[1] - '0');
    std::ifstream in(std::string(PORC_SOURCE_DIR) + "/data/roots/" + name + ".txt");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(rs.table_text() == ss.str());
    CHECK(embedded_root_table(name[0], name[1] - '0') == rs.table_text());
  }
  CHECK(RootSystem::build('F', 4).table_checksum() != 0);
}

TEST_CASE("F4 enumeration satisfies the section-6 sum relations") {
  auto rs = RootSystem::build('F', 4);
  auto idx = [&](std::vector<int> v) { return rs.index_of(v).value_or(0); };
  // the relations that pin the F4,2 / F7,2 / F11 / F10 / F7,1 core data
  CHECK(idx({0, 1, 2, 0}) == 9);    // a2 + 2 a3
  CHECK(idx({1, 1, 1, 0}) == 8);    // a3 + a5
  CHECK(idx({0, 1, 1, 1}) == 10);   // a2 + a7
  CHECK(idx({1, 1, 2, 2}) == 18);   // a5 + 2 a7
  CHECK(idx({1, 1, 2, 0}) == 11);   // 2 a3 + a5
  CHECK(idx({0, 1, 2, 2}) == 16);   // a2 + 2 a7
  CHECK(idx({1, 1, 1, 1}) == 12);   // a5 + a7
  CHECK(idx({1, 2, 2, 0}) == 14);   // a5 + a9
  CHECK(idx({1, 2, 3, 1}) == 19);   // a10 + a11
  CHECK(idx({1, 3, 4, 2}) == 23);   // a5 + 2 a13
}
