// R_v-lattices in K_v^n with rational bases: canonical forms, equality,
// membership, reduction, systoles, Smith types, and the local elementary
// divisors used by the n = 2 tree distance.
//
// Every lattice is given by an invertible basis over K = F_q(Y).  The
// canonical form is the pair (D, H): D the minimal monic denominator with
// D*L integral and H the column Hermite form of a basis of D*L.  Two
// lattices are equal iff their pairs agree, which makes equality and
// membership exact.

#ifndef DIVLAT_LATCORE_HPP
#define DIVLAT_LATCORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "divlat/matk.hpp"
#include "divlat/rational.hpp"

namespace divlat {

// log_q of a normalized systole; always has denominator dividing n
struct SysValue {
  Rational log_q;
  bool operator==(const SysValue& o) const { return log_q == o.log_q; }
  bool operator<(const SysValue& o) const { return log_q < o.log_q; }
};

class Lattice {
 public:
  explicit Lattice(const MatK& basis);  // throws on singular basis
  static Lattice standard(Field f, int n);

  int n() const { return n_; }
  const Field& field() const { return f_; }
  const MatK& basis() const { return basis_; }
  const Poly& denom() const { return denom_; }
  const PolyMat& canon() const { return canon_; }    // Hermite form of denom * L
  MatK canonical_basis() const;                      // (1/denom) * canon

  // log_q( covol(L) / covol(R_v^n) ) = -v(det basis)
  long long norm_covol_log() const { return covol_log_; }
  bool is_unimodular() const { return covol_log_ == 0; }
  bool is_integral() const { return denom_.is_one(); }

  bool operator==(const Lattice& o) const;
  bool operator!=(const Lattice& o) const { return !(*this == o); }
  // stable serialization of the canonical pair, usable as a hash key
  std::string canonical_key() const;

  bool contains(const std::vector<RatFunc>& w) const;

  Lattice transformed(const MatK& g) const { return Lattice(g * basis_); }
  Lattice scaled(const RatFunc& c) const;
  Lattice shifted(const std::vector<int>& k) const;  // exp(k) * L

  // serialization per the wire format: header "n=<n> q=<q>", then the basis
  // row-major as "num/den" entries
  std::string serialize() const;
  static Lattice deserialize(const std::string& text);

 private:
  Field f_;
  int n_ = 0;
  MatK basis_;
  Poly denom_;
  PolyMat canon_;
  long long covol_log_ = 0;
};

// Reduced basis of L: columns have F_q-independent leading coefficient
// vectors after denominator clearing, so b_1 attains min_{w in L\0} ||w||
// and the sorted column norms are the successive minima.
struct ReducedBasis {
  PolyMat mat;                  // columns span denom * L
  Poly denom;
  std::vector<int> norm_exponents;  // log_q ||b_j||, nondecreasing
  MatK basis_over_k() const;        // (1/denom) * mat
};
ReducedBasis reduce_basis(const Lattice& L);

// Normalized systole, exact: log_q sys = min norm exponent - covol_log / n.
SysValue systole(const Lattice& L);

// Independent shortest-vector oracle.  Decides each candidate norm shell by
// exact F_q-linear algebra against a Cramer-certified coefficient box; no
// basis reduction is involved.  Returns ||shortest nonzero vector||.
// Throws when the certified box exceeds the budget.
QPow svp_bruteforce(const Lattice& L, int degree_budget = 512);
// Same value as a normalized systole for direct comparison with systole().
SysValue svp_systole(const Lattice& L, int degree_budget = 512);

// Plain enumeration over a coefficient box (cross-check for small cases).
QPow svp_enumerate(const Lattice& L, long long vector_cap = (1LL << 22));

// Type (I_1 | I_2 | ... | I_n) of an integral lattice: monic Smith
// invariants with R_v^n / L = prod R_v/(I_i).  Rejects nonintegral input.
std::vector<Poly> smith_type(const Lattice& L);

// Valuations (ascending) of the O_v-elementary divisors of g.
std::vector<int> local_divisor_valuations(const MatK& g);

// Distance in the Bruhat-Tits tree between the vertex classes [g O_v^2] and
// [h O_v^2]: the spread of the elementary divisors of g^{-1} h.  n = 2 only.
int tree_distance(const MatK& g, const MatK& h);

// sys(L) < eps for eps = q^{eps_exponent}
bool thin_indicator(const Lattice& L, int eps_exponent);

}  // namespace divlat

#endif
