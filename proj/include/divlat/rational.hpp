// Exact rational numbers on 64-bit words with overflow checks.  The library
// only ever forms small rationals (measure masses, residuals, zeta values at
// small arguments), so checked long long arithmetic is enough.

#ifndef DIVLAT_RATIONAL_HPP
#define DIVLAT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace divlat {

class Rational {
 public:
  Rational() : n_(0), d_(1) {}
  Rational(long long n) : n_(n), d_(1) {}
  Rational(long long n, long long d) : n_(n), d_(d) { normalize(); }

  long long num() const { return n_; }
  long long den() const { return d_; }
  bool is_zero() const { return n_ == 0; }
  double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

  Rational operator+(const Rational& o) const { return make(i128(n_) * o.d_ + i128(o.n_) * d_, i128(d_) * o.d_); }
  Rational operator-(const Rational& o) const { return make(i128(n_) * o.d_ - i128(o.n_) * d_, i128(d_) * o.d_); }
  Rational operator*(const Rational& o) const { return make(i128(n_) * o.n_, i128(d_) * o.d_); }
  Rational operator/(const Rational& o) const {
    if (o.n_ == 0) throw std::domain_error("Rational: division by zero");
    return make(i128(n_) * o.d_, i128(d_) * o.n_);
  }
  Rational operator-() const { return Rational(-n_, d_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return i128(n_) * o.d_ < i128(o.n_) * d_; }
  bool operator<=(const Rational& o) const { return i128(n_) * o.d_ <= i128(o.n_) * d_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  Rational abs() const { return n_ < 0 ? Rational(-n_, d_) : *this; }

  // q^e for e possibly negative
  static Rational pow(long long q, long long e) {
    Rational r(1);
    Rational base = e >= 0 ? Rational(q) : Rational(1, q);
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
    return r;
  }

  std::string to_string() const { return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_); }

 private:
  using i128 = __int128;
  long long n_, d_;
  void normalize() {
    if (d_ == 0) throw std::domain_error("Rational: zero denominator");
    if (d_ < 0) {
      n_ = -n_;
      d_ = -d_;
    }
    long long g = std::gcd(n_ < 0 ? -n_ : n_, d_);
    if (g > 1) {
      n_ /= g;
      d_ /= g;
    }
  }
  static Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 a = n < 0 ? -n : n, b = d;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr i128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rational: overflow");
    Rational r;
    r.n_ = static_cast<long long>(n);
    r.d_ = static_cast<long long>(d);
    return r;
  }
};

}  // namespace divlat

#endif
