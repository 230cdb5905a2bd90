#include "divlat/latcore.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace divlat {

Lattice::Lattice(const MatK& basis) : f_(basis.field()), n_(basis.n()), basis_(basis) {
  if (n_ < 1) throw std::invalid_argument("Lattice: empty basis");
  PolyMat cleared = PolyMat::from_matk_cleared(basis, &denom_);
  canon_ = hermite_form(cleared);  // throws on singular input
  long long pivot_degs = 0;
  for (int i = 0; i < n_; ++i) pivot_degs += canon_.at(i, i).degree();
  covol_log_ = pivot_degs - static_cast<long long>(n_) * denom_.degree();
}

Lattice Lattice::standard(Field f, int n) { return Lattice(MatK::identity(f, n)); }

MatK Lattice::canonical_basis() const {
  MatK m(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = RatFunc(canon_.at(i, j), denom_);
  return m;
}

bool Lattice::operator==(const Lattice& o) const {
  return n_ == o.n_ && f_.q() == o.f_.q() && denom_ == o.denom_ && canon_ == o.canon_;
}

std::string Lattice::canonical_key() const {
  std::ostringstream os;
  os << n_ << '|' << f_.q() << '|' << denom_.to_coeff_string();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) os << '|' << canon_.at(i, j).to_coeff_string();
  return os.str();
}

bool Lattice::contains(const std::vector<RatFunc>& w) const {
  if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("Lattice::contains: dimension mismatch");
  // solve canon * f = denom * w over F_q[Y] by forward substitution
  std::vector<Poly> rhs;
  rhs.reserve(n_);
  for (const RatFunc& x : w) {
    RatFunc c = x * RatFunc(denom_);
    if (!c.is_poly()) return false;
    rhs.push_back(c.num());
  }
  std::vector<Poly> sol(n_, Poly(f_));
  for (int r = 0; r < n_; ++r) {
    Poly acc = rhs[r];
    for (int j = 0; j < r; ++j) acc = acc - canon_.at(r, j) * sol[j];
    PolyDivMod dm = poly_divmod(acc, canon_.at(r, r));
    if (!dm.rem.is_zero()) return false;
    sol[r] = dm.quot;
  }
  return true;
}

Lattice Lattice::scaled(const RatFunc& c) const {
  if (c.is_zero()) throw std::invalid_argument("Lattice::scaled: zero scalar");
  return Lattice(basis_.scaled(c));
}

Lattice Lattice::shifted(const std::vector<int>& k) const { return transformed(MatK::exp_shift(f_, k)); }

std::string Lattice::serialize() const {
  std::ostringstream os;
  os << "n=" << n_ << " q=" << f_.q() << '\n';
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) os << '\t';
      os << basis_.at(i, j).num().to_string() << '/' << basis_.at(i, j).den().to_string();
    }
    os << '\n';
  }
  return os.str();
}

Lattice Lattice::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  int n = 0, q = 0;
  if (sscanf(header.c_str(), "n=%d q=%d", &n, &q) != 2)
    throw std::invalid_argument("Lattice::deserialize: bad header '" + header + "'");
  Field f(q);
  MatK m(f, n);
  for (int i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("Lattice::deserialize: missing row");
    std::istringstream ls(line);
    for (int j = 0; j < n; ++j) {
      std::string cell;
      if (!(ls >> cell)) throw std::invalid_argument("Lattice::deserialize: missing entry");
      m.at(i, j) = RatFunc::parse(f, cell);
    }
  }
  return Lattice(m);
}

MatK ReducedBasis::basis_over_k() const {
  MatK m = mat.to_matk();
  RatFunc inv_d = RatFunc(Poly::constant(mat.field(), 1), denom);
  return m.scaled(inv_d);
}

ReducedBasis reduce_basis(const Lattice& L) {
  ReducedBasis out;
  out.denom = L.denom();
  out.mat = reduce_columns(L.canon());
  out.norm_exponents.resize(L.n());
  for (int j = 0; j < L.n(); ++j) out.norm_exponents[j] = out.mat.column_degree(j) - out.denom.degree();
  return out;
}

SysValue systole(const Lattice& L) {
  ReducedBasis rb = reduce_basis(L);
  Rational log = Rational(rb.norm_exponents.front()) - Rational(L.norm_covol_log(), L.n());
  return SysValue{log};
}

namespace {

// Smallest norm exponent of a nonzero vector of the module spanned by the
// columns of M over F_q[Y] (M invertible).  For each candidate shell e the
// kernel of "coefficients of (M f)_i above degree e vanish" is computed over
// F_q on the coefficient box deg f_j <= box(e); Cramer's rule certifies the
// box: any w with ||w|| <= q^e has f_j = det M_j(w)/det M of degree at most
// e + sum_{i != j} colderg_i - deg det M.
int min_norm_exponent_kernel(const PolyMat& m, int degree_budget) {
  const Field& f = m.field();
  const int n = m.n();
  long long coldeg_sum = 0;
  int coldeg_min = m.column_degree(0);
  for (int j = 0; j < n; ++j) {
    coldeg_sum += m.column_degree(j);
    coldeg_min = std::min(coldeg_min, m.column_degree(j));
  }
  long long det_deg = 0;
  {
    RatFunc d = m.to_matk().det();
    if (d.is_zero()) throw std::domain_error("svp: singular basis");
    det_deg = d.num().degree() - d.den().degree();
  }
  auto box = [&](int e) { return static_cast<int>(e + coldeg_sum - coldeg_min - det_deg); };

  auto shell_nonempty = [&](int e) -> bool {
    int bf = box(e);
    if (bf < 0) return false;
    if (bf > degree_budget) throw std::runtime_error("svp_bruteforce: certified coefficient box exceeds degree budget");
    int cols = n * (bf + 1);
    int maxdeg = m.max_entry_degree() + bf;  // highest degree appearing in (M f)_i
    int rows_per_coord = maxdeg - e;
    if (rows_per_coord <= 0) return true;  // no constraints: any nonzero f works
    int rows = n * rows_per_coord;
    std::vector<std::vector<int>> a(static_cast<size_t>(rows), std::vector<int>(cols, 0));
    for (int j = 0; j < n; ++j)
      for (int t = 0; t <= bf; ++t) {
        int var = j * (bf + 1) + t;
        for (int i = 0; i < n; ++i) {
          const Poly& mij = m.at(i, j);
          if (mij.is_zero()) continue;
          for (int d = 0; d <= mij.degree(); ++d) {
            int deg = d + t;
            if (deg > e) {
              size_t row = static_cast<size_t>(i) * rows_per_coord + (deg - e - 1);
              a[row][var] = f.add(a[row][var], mij.coeff(d));
            }
          }
        }
      }
    // rank over F_q; kernel nonzero iff rank < cols
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
      int piv = -1;
      for (int r = rank; r < rows; ++r)
        if (a[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[piv], a[rank]);
      int inv = f.inv(a[rank][c]);
      for (int r = 0; r < rows; ++r) {
        if (r == rank || a[r][c] == 0) continue;
        int factor = f.mul(a[r][c], inv);
        for (int cc = c; cc < cols; ++cc) a[r][cc] = f.sub(a[r][cc], f.mul(factor, a[rank][cc]));
      }
      ++rank;
    }
    return rank < cols;
  };

  int e = coldeg_min;  // unit coefficient vectors realize this shell
  while (shell_nonempty(e - 1)) --e;
  return e;
}

}  // namespace

QPow svp_bruteforce(const Lattice& L, int degree_budget) {
  int e = min_norm_exponent_kernel(L.canon(), degree_budget);
  return QPow{false, e - L.denom().degree()};
}

SysValue svp_systole(const Lattice& L, int degree_budget) {
  QPow m = svp_bruteforce(L, degree_budget);
  return SysValue{Rational(m.e) - Rational(L.norm_covol_log(), L.n())};
}

QPow svp_enumerate(const Lattice& L, long long vector_cap) {
  const Field& f = L.field();
  const int n = L.n();
  const long long q = f.q();
  // box: reduced spread + 1, checked against the cap
  ReducedBasis rb = reduce_basis(L);
  int spread = rb.norm_exponents.back() - rb.norm_exponents.front();
  int bf = spread + 1;
  long long total = 1;
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t <= bf; ++t) {
      total *= q;
      if (total > vector_cap) throw std::runtime_error("svp_enumerate: vector budget exceeded");
    }
  }
  const PolyMat& red = rb.mat;
  int best = red.column_degree(0);
  for (long long idx = 1; idx < total; ++idx) {
    long long v = idx;
    std::vector<Poly> coeff(n);
    for (int j = 0; j < n; ++j) {
      std::vector<int> digits(bf + 1);
      for (int t = 0; t <= bf; ++t) {
        digits[t] = static_cast<int>(v % q);
        v /= q;
      }
      coeff[j] = Poly(f, std::move(digits));
    }
    int e = Poly::kNegInfDeg;
    for (int i = 0; i < n; ++i) {
      Poly acc(f);
      for (int j = 0; j < n; ++j) acc = acc + red.at(i, j) * coeff[j];
      e = std::max(e, acc.degree());
    }
    if (e != Poly::kNegInfDeg) best = std::min(best, e);
  }
  return QPow{false, best - L.denom().degree()};
}

std::vector<Poly> smith_type(const Lattice& L) {
  if (!L.is_integral()) throw std::domain_error("smith_type: lattice is not integral");
  return smith_diagonal(L.canon());
}

std::vector<int> local_divisor_valuations(const MatK& g) {
  const int n = g.n();
  if (g.det().is_zero()) throw std::domain_error("local_divisor_valuations: singular matrix");
  // e_k = min valuation over k x k minors; divisor valuations are the gaps
  std::vector<long long> e(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    long long best = RatFunc::kValInf;
    // iterate over k-subsets of rows and columns
    std::vector<int> ridx(k), cidx(k);
    for (int i = 0; i < k; ++i) ridx[i] = i;
    while (true) {
      for (int i = 0; i < k; ++i) cidx[i] = i;
      while (true) {
        MatK sub(g.field(), k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = g.at(ridx[i], cidx[j]);
        RatFunc d = sub.det();
        if (!d.is_zero()) best = std::min(best, static_cast<long long>(d.valuation()));
        int t = k - 1;
        while (t >= 0 && cidx[t] == n - k + t) --t;
        if (t < 0) break;
        ++cidx[t];
        for (int u = t + 1; u < k; ++u) cidx[u] = cidx[u - 1] + 1;
      }
      int t = k - 1;
      while (t >= 0 && ridx[t] == n - k + t) --t;
      if (t < 0) break;
      ++ridx[t];
      for (int u = t + 1; u < k; ++u) ridx[u] = ridx[u - 1] + 1;
    }
    e[k] = best;
  }
  std::vector<int> out(n);
  for (int k = 1; k <= n; ++k) out[k - 1] = static_cast<int>(e[k] - e[k - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

int tree_distance(const MatK& g, const MatK& h) {
  if (g.n() != 2 || h.n() != 2) throw std::invalid_argument("tree_distance: defined for n = 2");
  std::vector<int> a = local_divisor_valuations(g.inverse() * h);
  return a[1] - a[0];
}

bool thin_indicator(const Lattice& L, int eps_exponent) {
  return systole(L).log_q < Rational(eps_exponent);
}

}  // namespace divlat
