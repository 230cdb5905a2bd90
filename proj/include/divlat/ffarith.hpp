// Arithmetic functions of the polynomial ring F_q[Y]: factorization, the
// Euler/Moebius/omega functions, ideal counting, the local zeta values on
// negative integers, and the empirically fitted bound constants.

#ifndef DIVLAT_FFARITH_HPP
#define DIVLAT_FFARITH_HPP

#include <utility>
#include <vector>

#include "divlat/poly.hpp"
#include "divlat/rational.hpp"

namespace divlat {

struct Factorization {
  Field field;
  int unit = 1;                                   // scalar in F_q^x
  std::vector<std::pair<Poly, int>> factors;      // distinct monic irreducibles with multiplicity
  Poly reassemble() const;                        // unit * prod p_i^{e_i}
};

// Complete factorization of a monic nonzero polynomial by trial division
// over enumerated monic irreducibles up to half the degree.
Factorization factor_monic(const Poly& f);

// Card (F_q[Y]/s)^x = N(s) * prod_{p | s} (1 - 1/N(p)); s monic nonzero.
long long euler_phi(const Poly& s);

// 0 on squared factors, else (-1)^{#prime factors}; and the number of
// distinct prime factors.
int moebius(const Poly& s);
int omega(const Poly& s);

// Counts {monic f : N(f) <= t} for t = q^n against the genus-zero main term
// q^{n+1}/(q-1); the residual is exactly -1/(q-1).
struct IdealCount {
  long long count = 0;
  Rational main_term;
  Rational residual;
};
IdealCount count_ideals_upto(Field f, long long t);

// Counts {monic I : (I, J) = 1, N(I) <= eps N(J)} for eps = q^{-e}, e >= 1,
// against the sieve prediction eps * q/(q-1) * phi(J).
struct CoprimeCount {
  long long count = 0;
  Rational predicted;
  Rational residual;
};
CoprimeCount count_coprime(const Poly& J, int eps_exponent);

// zeta_v(z) = 1/(1 - q^{1-z}) for integer z <= -1 (genus 0, deg v = 1).
Rational zeta_v_at(Field f, int z);

// c_{K,n} = (n-1)! prod_{i=1}^{n-1} zeta_v(-i) / (q (q-1) prod_{i=2}^{n-1} (q^i - 1)).
// The rational continuation makes zeta_v(-i) negative while the limit mass is
// positive, so both the signed product and its absolute value are exposed.
struct MassConstant {
  Rational signed_value;
  Rational abs_value;
};
MassConstant c_Kn(Field f, int n);

// kappa'(s) = (1/n)(-v(s_*) + max_i log_q(2^{omega(s_i)} max{1, ln ln |s_i|} / |s_i|)).
// Exact in the q-power parts, floating (IEEE double, round-to-nearest) in the
// ln ln factor.
double kappa_prime(Field f, int n, const std::vector<Poly>& s);

// Smallest constants making phi(s) >= c |s| / max{1, ln(-v(s))} and
// omega(s) <= c' (-v(s)) / max{1, ln(-v(s))} hold over all monic s with
// 1 <= deg s <= max_degree, with the per-degree extremes for stability checks.
struct FittedBounds {
  double c_phi = 0;                 // largest valid lower-bound constant
  double c_omega = 0;               // smallest valid upper-bound constant
  std::vector<double> c_phi_by_degree;
  std::vector<double> c_omega_by_degree;
};
FittedBounds arith_bounds_report(Field f, int max_degree);

}  // namespace divlat

#endif
