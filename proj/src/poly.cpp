#include "porc/poly.hpp"

#include <numeric>

namespace porc {


Rat Rat::checked(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  if (d < 0) { n = -n; d = -d; }
  __int128 g = 1;
  {
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    g = a == 0 ? 1 : a;
  }
  n /= g;
  d /= g;
  constexpr __int128 lim = (__int128)9223372036854775807LL;
  if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rat overflow");
  Rat r;
  r.num = (long long)n;
  r.den = (long long)d;
  return r;
}

Rat::Rat(long long n, long long d) { *this = checked(n, d); }

Rat Rat::operator+(const Rat& o) const {
  return checked((__int128)num * o.den + (__int128)o.num * den, (__int128)den * o.den);
}
Rat Rat::operator-(const Rat& o) const {
  return checked((__int128)num * o.den - (__int128)o.num * den, (__int128)den * o.den);
}
Rat Rat::operator*(const Rat& o) const {
  return checked((__int128)num * o.num, (__int128)den * o.den);
}
Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw std::domain_error("Rat: division by zero");
  return checked((__int128)num * o.den, (__int128)den * o.num);
}

std::string Rat::str() const {
  std::string s = std::to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::var() { return monomial(1, Rat(1)); }

Poly Poly::monomial(int deg, Rat c) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); i++) v[i] = v[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); i++) v[i] = v[i] + o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); i++) v[i] = v[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); i++) v[i] = v[i] - o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); i++)
    for (size_t j = 0; j < o.c_.size(); j++) v[i + j] = v[i + j] + c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& r) const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x = x * r;
  return Poly(std::move(v));
}

Poly Poly::pow(int e) const {
  Poly r = constant(Rat(1));
  for (int i = 0; i < e; i++) r = r * *this;
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (int i = degree(); i >= 0; i--) r = r * inner + constant(c_[i]);
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat r(0);
  for (int i = degree(); i >= 0; i--) r = r * x + c_[i];
  return r;
}

long long Poly::eval_i64(long long x) const {
  Rat r = eval(Rat(x));
  if (!r.is_integer()) throw std::domain_error("Poly::eval_i64: value " + r.str() + " not integral");
  return r.num;
}

std::string Poly::str(const std::string& v) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; i--) {
    if (c_[i].is_zero()) continue;
    Rat c = c_[i];
    bool neg = c.num < 0;
    Rat a = neg ? -c : c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    bool unit = a.num == 1 && a.den == 1;
    if (i == 0 || !unit) s += a.str();
    if (i > 0) {
      if (!unit) s += "*";
      s += v;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Poly q_poly() { return Poly::var(); }
Poly q_pow(int e) { return Poly::monomial(e, Rat(1)); }
Poly qm1_pow(int e) { return Poly(std::vector<Rat>{Rat(-1), Rat(1)}).pow(e); }

}  // namespace porc
