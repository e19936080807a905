#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace porc {

struct Root {
  std::vector<int> coeffs;  // coefficients over the simple roots
  int height = 0;
  int index = 0;            // 1-based position in the fixed enumeration
};

// Positive root system of a simple type, with the fixed height-graded
// enumeration (ties broken by generation order, pinned by the embedded
// tables in data/roots/).
class RootSystem {
 public:
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  int num_roots() const { return (int)roots_.size(); }
  const Root& root(int i) const { return roots_.at(i - 1); }
  const std::vector<Root>& all_roots() const { return roots_; }

  // index of alpha_i + alpha_j when it is a positive root
  std::optional<int> sum(int i, int j) const;
  // index of an arbitrary coefficient vector when it is a positive root
  std::optional<int> index_of(const std::vector<int>& coeffs) const;
  bool is_positive_root(const std::vector<int>& coeffs) const { return index_of(coeffs).has_value(); }
  // true iff alpha_j - alpha_i is a nonzero nonnegative combination of simples
  bool is_less(int i, int j) const;

  int norm2x2(int i) const;            // 2*(alpha_i, alpha_i)
  int highest_root_index() const { return num_roots(); }

  std::string table_text() const;      // data-file form of the enumeration
  uint64_t table_checksum() const;
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

 private:
  void check_index(int i) const;
  char type_ = 'A';
  int rank_ = 0;
  std::vector<Root> roots_;
  std::vector<int> norm2x2_;                 // per root
  std::vector<std::vector<int>> sum_;        // (i-1)*N+(j-1) -> index or 0
  std::map<std::vector<int>, int> by_coeffs_;
};

uint64_t fnv1a64(const std::string& s);

// Embedded copies of the data/roots/ files; nullptr when a type is not pinned.
const char* embedded_root_table(char type, int rank);

}  // namespace porc
