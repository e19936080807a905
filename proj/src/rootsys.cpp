#include "porc/rootsys.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace porc {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

struct SimpleData {
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<int> norm2x2;              // 2*(alpha_i, alpha_i)
};

void bond(SimpleData& d, int i, int j) {
  // simply-laced bond between equal-length simples
  d.cartan[i][j] = -1;
  d.cartan[j][i] = -1;
}

SimpleData simple_data(char type, int r) {
  auto valid = [&](int lo, int hi) { return r >= lo && r <= hi; };
  bool ok = false;
  switch (type) {
    case 'A': ok = valid(1, 8); break;
    case 'B': ok = valid(2, 8); break;
    case 'C': ok = valid(2, 8); break;
    case 'D': ok = valid(3, 8); break;
    case 'E': ok = valid(6, 8); break;
    case 'F': ok = (r == 4); break;
    case 'G': ok = (r == 2); break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument("invalid root system type " + std::string(1, type) +
                                std::to_string(r));

  SimpleData d;
  d.cartan.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; i++) d.cartan[i][i] = 2;
  d.norm2x2.assign(r, 4);  // long roots, 2*(a,a) = 4

  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < r; i++) bond(d, i, i + 1);
      break;
    case 'B':  // alpha_r short
      for (int i = 0; i + 2 < r; i++) bond(d, i, i + 1);
      d.cartan[r - 2][r - 1] = -2;
      d.cartan[r - 1][r - 2] = -1;
      d.norm2x2[r - 1] = 2;
      break;
    case 'C':  // alpha_r long, the rest short
      for (int i = 0; i + 2 < r; i++) bond(d, i, i + 1);
      d.cartan[r - 2][r - 1] = -1;
      d.cartan[r - 1][r - 2] = -2;
      for (int i = 0; i + 1 < r; i++) d.norm2x2[i] = 2;
      break;
    case 'D':
      for (int i = 0; i + 2 < r - 1; i++) bond(d, i, i + 1);
      bond(d, r - 3, r - 2);
      bond(d, r - 3, r - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to 4
      bond(d, 0, 2);
      bond(d, 2, 3);
      bond(d, 1, 3);
      for (int i = 3; i + 1 < r; i++) bond(d, i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(d, 0, 1);
      d.cartan[1][2] = -2;
      d.cartan[2][1] = -1;
      bond(d, 2, 3);
      d.norm2x2[2] = d.norm2x2[3] = 2;
      break;
    case 'G':  // alpha_1 long, alpha_2 short
      d.cartan[0][1] = -3;
      d.cartan[1][0] = -1;
      d.norm2x2[0] = 12;
      d.norm2x2[1] = 4;
      break;
  }
  return d;
}

int classical_count(char type, int r) {
  switch (type) {
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

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
  SimpleData d = simple_data(type, rank);
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;

  const int r = rank;
  auto pairing = [&](const std::vector<int>& g, int i) {  // <gamma, alpha_i^vee>
    int s = 0;
    for (int j = 0; j < r; j++) s += g[j] * d.cartan[j][i];
    return s;
  };

  // closure by height: process each level in order, adding simple roots
  std::vector<std::vector<int>> level;
  for (int i = 0; i < r; i++) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    level.push_back(e);
  }
  auto add_root = [&](const std::vector<int>& g) {
    Root rt;
    rt.coeffs = g;
    rt.height = 0;
    for (int c : g) rt.height += c;
    rt.index = (int)rs.roots_.size() + 1;
    rs.by_coeffs_[g] = rt.index;
    rs.roots_.push_back(std::move(rt));
  };
  for (auto& g : level) add_root(g);

  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : level) {
      for (int i = 0; i < r; i++) {
        std::vector<int> h = g;
        h[i] += 1;
        if (rs.by_coeffs_.count(h)) continue;
        // alpha_i string through gamma: p steps down, q = p - <gamma, alpha_i^vee> up
        int p = 0;
        std::vector<int> down = g;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !rs.by_coeffs_.count(down)) break;
          p++;
        }
        if (p - pairing(g, i) > 0) {
          add_root(h);
          next.push_back(h);
        }
      }
    }
    level = std::move(next);
  }

  const int N = rs.num_roots();
  if (N != classical_count(type, rank))
    throw std::logic_error("root closure produced wrong count for " + rs.name());

  // norms
  rs.norm2x2_.resize(N);
  for (int i = 0; i < N; i++) {
    const auto& g = rs.roots_[i].coeffs;
    long long v = 0;  // 2*(g,g) = sum_{jk} g_j g_k * 2*(a_j,a_k); 2(a_j,a_k) = cartan[j][k]*norm2x2[k]/2
    for (int j = 0; j < r; j++)
      for (int k = 0; k < r; k++) v += (long long)g[j] * g[k] * d.cartan[j][k] * d.norm2x2[k];
    if (v % 2 != 0) throw std::logic_error("norm bookkeeping error");
    rs.norm2x2_[i] = (int)(v / 2);
  }

  // sum table
  rs.sum_.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; i++)
    for (int j = 0; j < N; j++) {
      std::vector<int> s = rs.roots_[i].coeffs;
      for (int k = 0; k < r; k++) s[k] += rs.roots_[j].coeffs[k];
      auto it = rs.by_coeffs_.find(s);
      if (it != rs.by_coeffs_.end()) rs.sum_[i][j] = it->second;
    }

  // the embedded table, when present, pins the enumeration
  if (const char* tab = embedded_root_table(type, rank)) {
    if (rs.table_text() != tab)
      throw std::logic_error("generated enumeration for " + rs.name() +
                             " disagrees with the embedded table");
  }
  return rs;
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > num_roots())
    throw std::out_of_range("root index " + std::to_string(i) + " out of range for " + name());
}

std::optional<int> RootSystem::sum(int i, int j) const {
  check_index(i);
  check_index(j);
  int k = sum_[i - 1][j - 1];
  return k ? std::optional<int>(k) : std::nullopt;
}

std::optional<int> RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = by_coeffs_.find(coeffs);
  if (it == by_coeffs_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_less(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return false;
  const auto& a = roots_[i - 1].coeffs;
  const auto& b = roots_[j - 1].coeffs;
  for (int k = 0; k < rank_; k++)
    if (b[k] < a[k]) return false;
  return true;
}

int RootSystem::norm2x2(int i) const {
  check_index(i);
  return norm2x2_[i - 1];
}

std::string RootSystem::table_text() const {
  std::ostringstream os;
  for (const auto& rt : roots_) {
    for (int k = 0; k < rank_; k++) {
      if (k) os << ' ';
      os << rt.coeffs[k];
    }
    os << '\n';
  }
  return os.str();
}

uint64_t RootSystem::table_checksum() const { return fnv1a64(table_text()); }

}  // namespace porc
