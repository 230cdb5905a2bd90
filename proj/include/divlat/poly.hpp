// Dense univariate polynomials over a runtime finite field F_q.
//
// The coefficient vector never has a trailing zero; the zero polynomial is
// the empty vector and reports the sentinel degree kNegInfDeg (distinct from
// every admissible degree, so that v(0) = +infinity stays unambiguous
// downstream).

#ifndef DIVLAT_POLY_HPP
#define DIVLAT_POLY_HPP

#include <limits>
#include <string>
#include <vector>

#include "divlat/field.hpp"

namespace divlat {

class Poly {
 public:
  static constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 4;

  Poly() = default;
  explicit Poly(Field f) : f_(f) {}                    // zero polynomial
  Poly(Field f, std::vector<int> coeffs);              // trims trailing zeros
  static Poly constant(Field f, int c);
  static Poly monomial(Field f, int c, int deg);       // c * Y^deg
  static Poly y(Field f) { return monomial(f, 1, 1); }

  const Field& field() const { return f_; }
  int degree() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_unit() const { return c_.size() == 1; }      // nonzero constant
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
  int leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<int>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(int c) const;           // c * this
  Poly shifted(int k) const;          // this * Y^k, k >= 0
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly monic() const;                 // scale so the leading coefficient is 1

  // serialization: "c0,c1,...,cd" (element indices); zero serializes as "0"
  std::string to_coeff_string() const;
  // human form, e.g. "Y^3+Y+1"; used in tables and error messages
  std::string to_string() const;

  static Poly from_coeff_string(Field f, const std::string& s);
  // parses sums of [c*]Y[^k] terms and constants, e.g. "Y^3+2*Y+1"
  static Poly parse(Field f, const std::string& expr);

  // total order (degree, then coefficients high-to-low); for canonical maps
  static int compare(const Poly& a, const Poly& b);
  bool operator<(const Poly& o) const { return compare(*this, o) < 0; }

 private:
  Field f_;
  std::vector<int> c_;
  void trim();
};

// Euclidean division: a = q*b + r with deg r < deg b.  Throws on b = 0.
struct PolyDivMod {
  Poly quot, rem;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

// Monic gcd; rejects (0, 0).
Poly poly_gcd(const Poly& a, const Poly& b);

// Extended gcd: g = u*a + v*b, g monic.
struct PolyXgcd {
  Poly g, u, v;
};
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);

Poly poly_lcm(const Poly& a, const Poly& b);

// All monic polynomials of degree d (q^d of them), in index order.
std::vector<Poly> enumerate_monic(Field f, int d, bool irreducible_only = false);

bool poly_is_irreducible(const Poly& f);

}  // namespace divlat

#endif
