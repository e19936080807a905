#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace porc {

// Exact rational on 64 bits, overflow-checked through 128-bit intermediates.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  static Rat checked(__int128 n, __int128 d);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return Rat(-num, den); }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  std::string str() const;
};

// Dense univariate polynomial with exact rational coefficients.
// Coefficient i multiplies q^i.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c) : c_{c} { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(Rat c) { return Poly(c); }
  static Poly var();                    // q
  static Poly monomial(int deg, Rat c);

  int degree() const { return (int)c_.size() - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rat(0); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly operator*(const Rat& r) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;
  Poly compose(const Poly& inner) const;  // substitute q := inner
  Rat eval(const Rat& x) const;
  long long eval_i64(long long x) const;  // must be an exact integer value

  std::string str(const std::string& v = "q") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// q - 1 and friends
Poly q_poly();
Poly qm1_pow(int e);   // (q-1)^e
Poly q_pow(int e);     // q^e

// Counting polynomial split by the parity of f (q = 2^f):
// even_part applies when f is even (q = 1 mod 3), odd_part when f is odd.
struct PorcPolynomial {
  Poly even_part;
  Poly odd_part;

  PorcPolynomial() = default;
  PorcPolynomial(Poly both) : even_part(both), odd_part(std::move(both)) {}
  PorcPolynomial(Poly e, Poly o) : even_part(std::move(e)), odd_part(std::move(o)) {}

  PorcPolynomial operator+(const PorcPolynomial& x) const {
    return {even_part + x.even_part, odd_part + x.odd_part};
  }
  PorcPolynomial operator*(const PorcPolynomial& x) const {
    return {even_part * x.even_part, odd_part * x.odd_part};
  }
  bool operator==(const PorcPolynomial& x) const {
    return even_part == x.even_part && odd_part == x.odd_part;
  }
  bool parity_independent() const { return even_part == odd_part; }
  const Poly& part(int f) const { return (f % 2 == 0) ? even_part : odd_part; }
  long long eval_at_f(int f) const { return part(f).eval_i64(1LL << f); }
  bool is_zero() const { return even_part.is_zero() && odd_part.is_zero(); }
};

}  // namespace porc
