#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bec::exact {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string to_string128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int digit = static_cast<int>(neg ? -(v % 10) : (v % 10));
    s.insert(s.begin(), static_cast<char>('0' + digit));
    v /= 10;
  }
  if (neg) s.insert(s.begin(), '-');
  return s;
}

[[noreturn]] inline void rat_overflow(const char* where) {
  throw std::overflow_error(std::string("exact rational overflow in ") + where);
}

inline int128 checked_mul(int128 a, int128 b, const char* where) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) rat_overflow(where);
  return r;
}

inline int128 checked_add(int128 a, int128 b, const char* where) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) rat_overflow(where);
  return r;
}

// Exact rational on 128-bit integers. Always normalized (gcd 1, den > 0).
// Overflow throws instead of wrapping; the series work stays well inside range.
struct Rat {
  int128 num = 0;
  int128 den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }
  Rat(int128 n, int128 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      den = 1;
      return;
    }
    int128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }

  bool is_zero() const { return num == 0; }

  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    int128 g = gcd128(x.den, y.den);
    int128 xb = x.den / g;
    int128 yb = y.den / g;
    Rat r;
    r.num = checked_add(checked_mul(x.num, yb, "add"), checked_mul(y.num, xb, "add"), "add");
    r.den = checked_mul(xb, y.den, "add");
    r.normalize();
    return r;
  }

  friend Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }

  friend Rat operator*(const Rat& x, const Rat& y) {
    // cross-reduce first to keep intermediates small
    int128 g1 = gcd128(x.num, y.den);
    int128 g2 = gcd128(y.num, x.den);
    Rat r;
    r.num = checked_mul(x.num / g1, y.num / g2, "mul");
    r.den = checked_mul(x.den / g2, y.den / g1, "mul");
    r.normalize();
    return r;
  }

  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num == 0) throw std::domain_error("rational division by zero");
    Rat inv;
    inv.num = y.den;
    inv.den = y.num;
    inv.normalize();
    return x * inv;
  }

  Rat& operator+=(const Rat& y) { return *this = *this + y; }
  Rat& operator-=(const Rat& y) { return *this = *this - y; }
  Rat& operator*=(const Rat& y) { return *this = *this * y; }
  Rat& operator/=(const Rat& y) { return *this = *this / y; }

  friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
  friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return to_string128(num);
    return to_string128(num) + "/" + to_string128(den);
  }
};

// Gaussian rational a + i b with exact parts.
struct CRat {
  Rat re;
  Rat im;

  CRat() = default;
  CRat(Rat r) : re(r) {}
  CRat(Rat r, Rat i) : re(r), im(i) {}
  CRat(long long r) : re(r) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  CRat conj() const { return CRat(re, -im); }
  CRat operator-() const { return CRat(-re, -im); }

  friend CRat operator+(const CRat& x, const CRat& y) { return CRat(x.re + y.re, x.im + y.im); }
  friend CRat operator-(const CRat& x, const CRat& y) { return CRat(x.re - y.re, x.im - y.im); }
  friend CRat operator*(const CRat& x, const CRat& y) {
    return CRat(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }
  CRat& operator+=(const CRat& y) { return *this = *this + y; }
  CRat& operator-=(const CRat& y) { return *this = *this - y; }

  friend bool operator==(const CRat& x, const CRat& y) { return x.re == y.re && x.im == y.im; }
  friend bool operator!=(const CRat& x, const CRat& y) { return !(x == y); }

  std::string str() const { return "(" + re.str() + ", " + im.str() + "i)"; }
};

// (2n-1)!! as an exact rational; double_factorial_odd(0) = 1.
inline Rat double_factorial_odd(int n) {
  Rat r(1);
  for (int k = 1; k <= n; ++k) r *= Rat(2 * k - 1);
  return r;
}

}  // namespace bec::exact
