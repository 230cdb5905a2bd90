#include "divlat/matk.hpp"

#include <algorithm>
#include <stdexcept>

namespace divlat {

MatK MatK::identity(Field f, int n) {
  MatK m(f, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::one(f);
  return m;
}

MatK MatK::diag(Field f, const std::vector<RatFunc>& d) {
  MatK m(f, static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

MatK MatK::exp_shift(Field f, const std::vector<int>& k) {
  std::vector<RatFunc> d;
  d.reserve(k.size());
  for (int ki : k) d.push_back(RatFunc::y_power(f, ki));
  return diag(f, d);
}

MatK MatK::lower_unipotent(Field f, const std::vector<RatFunc>& t) {
  int n = static_cast<int>(t.size()) + 1;
  MatK m = identity(f, n);
  for (int i = 1; i < n; ++i) m.at(i, 0) = t[i - 1];
  return m;
}

MatK MatK::permutation(Field f, const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  MatK m(f, n);
  for (int i = 0; i < n; ++i) m.at(sigma[i], i) = RatFunc::one(f);
  return m;
}

MatK MatK::operator*(const MatK& o) const {
  MatK r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      RatFunc s(f_);
      for (int k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

MatK MatK::operator+(const MatK& o) const {
  MatK r(f_, n_);
  for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

MatK MatK::operator-(const MatK& o) const {
  MatK r(f_, n_);
  for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

std::vector<RatFunc> MatK::operator*(const std::vector<RatFunc>& v) const {
  std::vector<RatFunc> r(n_, RatFunc(f_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

MatK MatK::transpose() const {
  MatK r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RatFunc MatK::det() const {
  MatK m = *this;
  RatFunc d = RatFunc::one(f_);
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return RatFunc(f_);
    if (piv != c) {
      for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d = d * m.at(c, c);
    RatFunc inv = m.at(c, c).inverse();
    for (int r = c + 1; r < n_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      RatFunc factor = m.at(r, c) * inv;
      for (int j = c; j < n_; ++j) m.at(r, j) = m.at(r, j) - factor * m.at(c, j);
    }
  }
  return d;
}

MatK MatK::inverse() const {
  MatK m = *this;
  MatK inv = identity(f_, n_);
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("MatK::inverse: singular matrix");
    if (piv != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(m.at(piv, j), m.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    RatFunc s = m.at(c, c).inverse();
    for (int j = 0; j < n_; ++j) {
      m.at(c, j) = m.at(c, j) * s;
      inv.at(c, j) = inv.at(c, j) * s;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      RatFunc factor = m.at(r, c);
      for (int j = 0; j < n_; ++j) {
        m.at(r, j) = m.at(r, j) - factor * m.at(c, j);
        inv.at(r, j) = inv.at(r, j) - factor * inv.at(c, j);
      }
    }
  }
  return inv;
}

bool MatK::is_identity() const { return *this == identity(f_, n_); }

QPow MatK::norm() const {
  QPow best;  // zero
  for (const RatFunc& x : e_) {
    QPow a = x.abs();
    if (best < a) best = a;
  }
  return best;
}

int MatK::dist_to_identity_val() const {
  int minv = RatFunc::kValInf;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      RatFunc d = at(i, j) - (i == j ? RatFunc::one(f_) : RatFunc(f_));
      minv = std::min(minv, d.valuation());
    }
  return minv;
}

MatK MatK::scaled(const RatFunc& c) const {
  MatK r(f_, n_);
  for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] * c;
  return r;
}

QPow vec_norm(const std::vector<RatFunc>& w) {
  QPow best;
  for (const RatFunc& x : w) {
    QPow a = x.abs();
    if (best < a) best = a;
  }
  return best;
}

PolyMat PolyMat::from_matk_cleared(const MatK& m, Poly* denom_out) {
  const Field& f = m.field();
  Poly d = Poly::constant(f, 1);
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (!m.at(i, j).is_zero()) d = poly_lcm(d, m.at(i, j).den());
  PolyMat out(f, m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      RatFunc cleared = m.at(i, j) * RatFunc(d);
      if (!cleared.is_poly()) throw std::logic_error("PolyMat: denominator clearing failed");
      out.at(i, j) = cleared.num();
    }
  if (denom_out) *denom_out = d;
  return out;
}

MatK PolyMat::to_matk() const {
  MatK m(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = RatFunc(at(i, j));
  return m;
}

int PolyMat::max_entry_degree() const {
  int d = Poly::kNegInfDeg;
  for (const Poly& p : e_) d = std::max(d, p.degree());
  return d;
}

int PolyMat::column_degree(int j) const {
  int d = Poly::kNegInfDeg;
  for (int i = 0; i < n_; ++i) d = std::max(d, at(i, j).degree());
  return d;
}

PolyMat hermite_form(const PolyMat& m) {
  PolyMat h = m;
  const Field& f = m.field();
  const int n = m.n();
  auto col_addmul = [&](int dst, int src, const Poly& c) {
    for (int i = 0; i < n; ++i) h.at(i, dst) = h.at(i, dst) - c * h.at(i, src);
  };
  for (int r = 0; r < n; ++r) {
    // eliminate row r across columns r..n-1 down to a single pivot
    while (true) {
      int best = -1;
      for (int c = r; c < n; ++c)
        if (!h.at(r, c).is_zero() && (best < 0 || h.at(r, c).degree() < h.at(r, best).degree())) best = c;
      if (best < 0) throw std::domain_error("hermite_form: singular matrix");
      bool done = true;
      for (int c = r; c < n; ++c) {
        if (c == best || h.at(r, c).is_zero()) continue;
        col_addmul(c, best, poly_divmod(h.at(r, c), h.at(r, best)).quot);
        if (!h.at(r, c).is_zero()) done = false;
      }
      if (done) {
        if (best != r)
          for (int i = 0; i < n; ++i) std::swap(h.at(i, best), h.at(i, r));
        break;
      }
    }
    int lead = h.at(r, r).leading();
    if (lead != 1) {
      int s = f.inv(lead);
      for (int i = 0; i < n; ++i) h.at(i, r) = h.at(i, r).scaled(s);
    }
  }
  // reduce entries left of each pivot
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < r; ++j)
      if (!h.at(r, j).is_zero()) col_addmul(j, r, poly_divmod(h.at(r, j), h.at(r, r)).quot);
  return h;
}

bool columns_lc_independent(const PolyMat& m) {
  const Field& f = m.field();
  const int n = m.n();
  // rank over F_q of the leading-coefficient matrix
  std::vector<std::vector<int>> lc(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    int d = m.column_degree(j);
    if (d == Poly::kNegInfDeg) return false;
    for (int i = 0; i < n; ++i) lc[i][j] = m.at(i, j).coeff(d);
  }
  int rank = 0;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (lc[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(lc[piv], lc[rank]);
    int inv = f.inv(lc[rank][c]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || lc[r][c] == 0) continue;
      int factor = f.mul(lc[r][c], inv);
      for (int j = 0; j < n; ++j) lc[r][j] = f.sub(lc[r][j], f.mul(factor, lc[rank][j]));
    }
    ++rank;
  }
  return rank == n;
}

PolyMat reduce_columns(const PolyMat& m) {
  const Field& f = m.field();
  const int n = m.n();
  PolyMat w = m;
  while (true) {
    std::vector<int> deg(n);
    std::vector<std::vector<int>> lc(n, std::vector<int>(n, 0));  // lc[j] = leading vector of column j
    for (int j = 0; j < n; ++j) {
      deg[j] = w.column_degree(j);
      if (deg[j] == Poly::kNegInfDeg) throw std::domain_error("reduce_columns: zero column");
      for (int i = 0; i < n; ++i) lc[j][i] = w.at(i, j).coeff(deg[j]);
    }
    // find an F_q-dependency among the leading vectors
    std::vector<std::vector<int>> rows = lc;
    std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));  // row ops tracker
    for (int j = 0; j < n; ++j) rel[j][j] = 1;
    int dep = -1;
    int rank = 0;
    std::vector<int> pivot_col;
    for (int j = 0; j < n && dep < 0; ++j) {
      // eliminate rows[j] against established pivots
      for (size_t t = 0; t < pivot_col.size(); ++t) {
        int pc = pivot_col[t];
        if (rows[j][pc] == 0) continue;
        int factor = rows[j][pc];  // pivot rows normalized to 1 at pivot
        for (int c = 0; c < n; ++c) rows[j][c] = f.sub(rows[j][c], f.mul(factor, rows[t][c]));
        for (int c = 0; c < n; ++c) rel[j][c] = f.sub(rel[j][c], f.mul(factor, rel[t][c]));
      }
      int pc = -1;
      for (int c = 0; c < n; ++c)
        if (rows[j][c] != 0) {
          pc = c;
          break;
        }
      if (pc < 0) {
        dep = j;
        break;
      }
      int inv = f.inv(rows[j][pc]);
      for (int c = 0; c < n; ++c) rows[j][c] = f.mul(rows[j][c], inv);
      for (int c = 0; c < n; ++c) rel[j][c] = f.mul(rel[j][c], inv);
      if (j != rank) {
        std::swap(rows[j], rows[rank]);
        std::swap(rel[j], rel[rank]);
        std::swap(pivot_col, pivot_col);  // pivot bookkeeping is positional
      }
      pivot_col.push_back(pc);
      ++rank;
    }
    if (dep < 0) break;  // leading vectors independent: reduced
    // rel[dep] holds coefficients c_j with sum_j c_j lc[j] = 0
    int target = -1;
    for (int j = 0; j < n; ++j)
      if (rel[dep][j] != 0 && (target < 0 || deg[j] > deg[target])) target = j;
    int ct_inv = f.inv(rel[dep][target]);
    for (int j = 0; j < n; ++j) {
      if (j == target || rel[dep][j] == 0) continue;
      int c = f.mul(rel[dep][j], ct_inv);
      Poly shift = Poly::monomial(f, c, deg[target] - deg[j]);
      for (int i = 0; i < n; ++i) w.at(i, target) = w.at(i, target) + shift * w.at(i, j);
    }
  }
  // sort columns by nondecreasing degree
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w.column_degree(a) < w.column_degree(b); });
  PolyMat out(f, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out.at(i, j) = w.at(i, order[j]);
  return out;
}

std::vector<Poly> smith_diagonal(const PolyMat& m) {
  const Field& f = m.field();
  const int n = m.n();
  PolyMat a = m;
  for (int k = 0; k < n; ++k) {
    while (true) {
      // move a minimal-degree nonzero entry of the trailing block to (k, k)
      int bi = -1, bj = -1;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (!a.at(i, j).is_zero() && (bi < 0 || a.at(i, j).degree() < a.at(bi, bj).degree())) {
            bi = i;
            bj = j;
          }
      if (bi < 0) throw std::domain_error("smith_diagonal: singular matrix");
      if (bi != k)
        for (int j = 0; j < n; ++j) std::swap(a.at(bi, j), a.at(k, j));
      if (bj != k)
        for (int i = 0; i < n; ++i) std::swap(a.at(i, bj), a.at(i, k));
      bool clean = true;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k).is_zero()) continue;
        Poly qt = poly_divmod(a.at(i, k), a.at(k, k)).quot;
        for (int j = 0; j < n; ++j) a.at(i, j) = a.at(i, j) - qt * a.at(k, j);
        if (!a.at(i, k).is_zero()) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (a.at(k, j).is_zero()) continue;
        Poly qt = poly_divmod(a.at(k, j), a.at(k, k)).quot;
        for (int i = 0; i < n; ++i) a.at(i, j) = a.at(i, j) - qt * a.at(i, k);
        if (!a.at(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the rest of the block by the pivot
      bool fixed = false;
      for (int i = k + 1; i < n && !fixed; ++i)
        for (int j = k + 1; j < n && !fixed; ++j)
          if (!a.at(i, j).is_zero() && !poly_divmod(a.at(i, j), a.at(k, k)).rem.is_zero()) {
            for (int c = 0; c < n; ++c) a.at(k, c) = a.at(k, c) + a.at(i, c);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
  std::vector<Poly> d;
  d.reserve(n);
  for (int k = 0; k < n; ++k) d.push_back(a.at(k, k).monic());
  return d;
}

}  // namespace divlat
