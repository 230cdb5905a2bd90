// Reduced fractions of polynomials over F_q: the field K = F_q(Y), carrying
// the valuation at infinity v(P/Q) = deg Q - deg P and |x| = q^{-v(x)}.

#ifndef DIVLAT_RATFUNC_HPP
#define DIVLAT_RATFUNC_HPP

#include <string>

#include "divlat/poly.hpp"

namespace divlat {

// Exact power of q (or zero), kept in exponent form to avoid overflow.
struct QPow {
  bool zero = true;
  long long e = 0;  // value is q^e when !zero
  double to_double(int q) const;
  bool operator==(const QPow& o) const { return zero == o.zero && (zero || e == o.e); }
  bool operator<(const QPow& o) const {
    if (zero) return !o.zero;
    return !o.zero && e < o.e;
  }
  bool operator<=(const QPow& o) const { return *this < o || *this == o; }
};

class RatFunc {
 public:
  static constexpr int kValInf = std::numeric_limits<int>::max() / 4;

  RatFunc() = default;
  explicit RatFunc(Field f) : num_(f), den_(Poly::constant(f, 1)) {}       // zero
  RatFunc(Poly num, Poly den);                                             // reduces, den made monic
  explicit RatFunc(Poly num);                                              // num / 1
  static RatFunc constant(Field f, int c) { return RatFunc(Poly::constant(f, c)); }
  static RatFunc one(Field f) { return constant(f, 1); }
  static RatFunc y_power(Field f, int k);                                  // Y^k, k in Z

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return den_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  // valuation at infinity; v(0) = kValInf
  int valuation() const { return is_zero() ? kValInf : den_.degree() - num_.degree(); }
  QPow abs() const { return is_zero() ? QPow{} : QPow{false, -valuation()}; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;

  // integral/fractional split f = [f] + {f} with v({f}) >= 1
  Poly integral_part() const;
  RatFunc fractional_part() const;

  std::string to_string() const;  // "num/den", polynomials in human form
  static RatFunc parse(Field f, const std::string& s);

 private:
  Poly num_, den_;
};

}  // namespace divlat

#endif
