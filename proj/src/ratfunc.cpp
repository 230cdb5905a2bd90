#include "divlat/ratfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace divlat {

double QPow::to_double(int q) const { return zero ? 0.0 : std::pow(static_cast<double>(q), static_cast<double>(e)); }

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field(), 1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = poly_divmod(num_, g).quot;
    den_ = poly_divmod(den_, g).quot;
  }
  int lead = den_.leading();
  if (lead != 1) {
    int inv = den_.field().inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc RatFunc::y_power(Field f, int k) {
  return k >= 0 ? RatFunc(Poly::monomial(f, 1, k)) : RatFunc(Poly::constant(f, 1), Poly::monomial(f, 1, -k));
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

Poly RatFunc::integral_part() const { return poly_divmod(num_, den_).quot; }

RatFunc RatFunc::fractional_part() const { return RatFunc(poly_divmod(num_, den_).rem, den_); }

std::string RatFunc::to_string() const {
  if (is_poly()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

RatFunc RatFunc::parse(Field f, const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return RatFunc(Poly::parse(f, s));
  return RatFunc(Poly::parse(f, s.substr(0, slash)), Poly::parse(f, s.substr(slash + 1)));
}

}  // namespace divlat
