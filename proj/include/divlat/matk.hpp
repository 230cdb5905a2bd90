// Square matrices over K = F_q(Y) and over F_q[Y], with the exact linear
// algebra the lattice layer needs: determinants and inverses by Gaussian
// elimination over K, column Hermite form, column reduction to leading-
// coefficient independence, and Smith form over F_q[Y].

#ifndef DIVLAT_MATK_HPP
#define DIVLAT_MATK_HPP

#include <vector>

#include "divlat/ratfunc.hpp"

namespace divlat {

class MatK {
 public:
  MatK() = default;
  MatK(Field f, int n) : f_(f), n_(n), e_(static_cast<size_t>(n) * n, RatFunc(f)) {}
  static MatK identity(Field f, int n);
  static MatK diag(Field f, const std::vector<RatFunc>& d);
  // exp(k) = diag(Y^{k_1}, ..., Y^{k_n}); shifts the i-th directional systole by k_i
  static MatK exp_shift(Field f, const std::vector<int>& k);
  // u_t: lower unipotent with first column (1, t_2, ..., t_n)
  static MatK lower_unipotent(Field f, const std::vector<RatFunc>& t);
  // P sigma: e_i -> e_{sigma[i]} (sigma is 0-based)
  static MatK permutation(Field f, const std::vector<int>& sigma);

  int n() const { return n_; }
  const Field& field() const { return f_; }
  RatFunc& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const RatFunc& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  MatK operator*(const MatK& o) const;
  MatK operator+(const MatK& o) const;
  MatK operator-(const MatK& o) const;
  std::vector<RatFunc> operator*(const std::vector<RatFunc>& v) const;
  bool operator==(const MatK& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const MatK& o) const { return !(*this == o); }

  MatK transpose() const;
  RatFunc det() const;       // exact, Gaussian elimination
  MatK inverse() const;      // throws on singular input
  bool is_identity() const;

  // max |entry|; the zero matrix reports QPow{zero}
  QPow norm() const;
  // min entry valuation of (this - I); +inf (kValInf) when this == I
  int dist_to_identity_val() const;

  MatK scaled(const RatFunc& c) const;
};

QPow vec_norm(const std::vector<RatFunc>& w);

// Matrices over F_q[Y]; columns span R_v-modules.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(Field f, int n) : f_(f), n_(n), e_(static_cast<size_t>(n) * n, Poly(f)) {}
  static PolyMat from_matk_cleared(const MatK& m, Poly* denom_out);  // D*m with D the minimal monic denominator

  int n() const { return n_; }
  const Field& field() const { return f_; }
  Poly& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  bool operator==(const PolyMat& o) const { return n_ == o.n_ && e_ == o.e_; }

  MatK to_matk() const;
  int max_entry_degree() const;   // kNegInfDeg on the zero matrix
  int column_degree(int j) const;

 private:
  Field f_;
  int n_ = 0;
  std::vector<Poly> e_;
};

// Column Hermite normal form: returns H = M * U with U in GL_n(F_q[Y]),
// H lower triangular with monic pivots and deg H[r][j] < deg H[r][r] for
// j < r.  Unique for invertible M; throws on singular input.
PolyMat hermite_form(const PolyMat& m);

// Column reduction: right-multiplies by GL_n(F_q[Y]) until the leading
// coefficient vectors of the columns are F_q-linearly independent, so the
// column degrees are the successive minima exponents.  Columns come out
// sorted by nondecreasing degree.
PolyMat reduce_columns(const PolyMat& m);

// Checks leading-coefficient independence directly (rank over F_q).
bool columns_lc_independent(const PolyMat& m);

// Smith normal form diagonal (monic, ascending divisibility).
std::vector<Poly> smith_diagonal(const PolyMat& m);

}  // namespace divlat

#endif
