// Runtime finite field F_q, q = p^k, with dense operation tables.
//
// Elements are plain ints in [0, q).  For k > 1 an element's index encodes
// the coefficient vector of its representative modulo a fixed monic
// irreducible of degree k over F_p, in base-p digits (index = sum c_i p^i).
// The modulus is the first irreducible in index order, so a given q always
// yields the same field representation.

#ifndef DIVLAT_FIELD_HPP
#define DIVLAT_FIELD_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace divlat {

class Field {
 public:
  Field() = default;  // invalid until assigned
  explicit Field(int q);

  bool valid() const { return t_ != nullptr; }
  int q() const { return t_->q; }
  int p() const { return t_->p; }
  int ext_degree() const { return t_->k; }
  // Digits (base-p coefficients) of the modulus, length k+1, monic.
  const std::vector<int>& modulus() const { return t_->modulus; }

  int add(int a, int b) const { return t_->add[a * t_->q + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return t_->mul[a * t_->q + b]; }
  int neg(int a) const { return t_->neg[a]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero element");
    return t_->inv[a];
  }
  int div(int a, int b) const { return mul(a, inv(b)); }

  // Embedding of nonnegative integers (reduction mod p digit-wise is not
  // meaningful for k > 1; this reduces mod p and lifts as a constant).
  int from_int(long long v) const {
    long long r = v % t_->p;
    if (r < 0) r += t_->p;
    return static_cast<int>(r);
  }

  bool same_as(const Field& o) const { return t_ == o.t_ || (valid() && o.valid() && t_->q == o.t_->q); }

  static bool is_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

 private:
  struct Tables {
    int q = 0, p = 0, k = 0;
    std::vector<int> add, mul, neg, inv;
    std::vector<int> modulus;
  };
  std::shared_ptr<const Tables> t_;
};

}  // namespace divlat

#endif
