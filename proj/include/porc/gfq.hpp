#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace porc {

// GF(2^f) with elements as f-bit patterns, multiplication by shift-and-reduce
// plus log/antilog tables for small f.
class FieldCtx {
 public:
  static FieldCtx make(int f);                     // standard modulus (data/moduli.txt)
  static FieldCtx make(int f, uint32_t modulus);   // explicit modulus, verified irreducible
  static uint32_t standard_modulus(int f);
  static std::string moduli_file_text();
  static uint64_t moduli_checksum();

  int f() const { return f_; }
  uint32_t q() const { return q_; }
  uint32_t modulus() const { return mod_; }

  uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;
  uint32_t sqrt(uint32_t a) const;                 // Frobenius is bijective
  int trace(uint32_t x) const;                     // value in GF(2)
  bool in_ker_phi(uint32_t x) const { return trace(x) == 0; }
  std::vector<uint32_t> cube_roots(uint32_t c) const;

 private:
  FieldCtx() = default;
  void init_tables();
  int f_ = 1;
  uint32_t mod_ = 0, q_ = 0;
  std::vector<int> log_;
  std::vector<uint32_t> exp_;
};

// Number of distinct roots in F_q, exhaustive evaluation. Degree <= 8.
int count_roots(const FieldCtx& F, const std::vector<uint32_t>& coeffs_low_to_high);
// Independent oracle: deg gcd(X^q - X, poly) via modular exponentiation.
int count_roots_gcd(const FieldCtx& F, const std::vector<uint32_t>& coeffs_low_to_high);

// Cubic census of the two families (brute force over the full parameter domain).
// A family: p_{a,b}(X) = X^3 + aX + b over (a,b) in (F_q^x)^2.
// B family: p_{b,c,t}(X) = X^3 + (t/b + b^2)X + (t + c) over
//           S = {(b,c,t): b in F_q^x, t in F_q^x \ {b^3}, c in F_q^x \ {t}}.
struct CubicCensus {
  std::map<int, uint64_t> counts;  // i in {0,1,3} -> #parameter tuples with i roots
  uint64_t domain_size = 0;
};
CubicCensus cubic_census_A(const FieldCtx& F);
CubicCensus cubic_census_B(const FieldCtx& F);

}  // namespace porc
