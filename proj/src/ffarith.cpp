#include "divlat/ffarith.hpp"

#include <cmath>
#include <stdexcept>

namespace divlat {

Poly Factorization::reassemble() const {
  Poly r = Poly::constant(field, unit);
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Factorization factor_monic(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factor_monic: zero polynomial");
  if (!f.is_monic()) throw std::domain_error("factor_monic: input must be monic");
  Factorization out;
  out.field = f.field();
  Poly rest = f;
  // after removing all factors of degree <= d, a leftover of degree < 2(d+1)
  // has a single prime factor
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& p : enumerate_monic(f.field(), d)) {
      int mult = 0;
      while (true) {
        PolyDivMod dm = poly_divmod(rest, p);
        if (!dm.rem.is_zero()) break;
        rest = dm.quot;
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(p, mult);
      if (rest.degree() < 2 * d) break;
    }
  }
  if (rest.degree() > 0) out.factors.emplace_back(rest, 1);
  out.unit = 1;
  return out;
}

long long euler_phi(const Poly& s) {
  if (s.is_zero()) throw std::domain_error("euler_phi: zero polynomial");
  if (!s.is_monic()) throw std::domain_error("euler_phi: input must be monic");
  const long long q = s.field().q();
  long long result = 1;
  for (const auto& [p, e] : factor_monic(s).factors) {
    long long np = 1;
    for (int i = 0; i < p.degree(); ++i) np *= q;
    long long t = np - 1;
    for (int i = 1; i < e; ++i) t *= np;
    result *= t;
  }
  return result;
}

int moebius(const Poly& s) {
  if (s.is_zero()) throw std::domain_error("moebius: zero polynomial");
  if (!s.is_monic()) throw std::domain_error("moebius: input must be monic");
  Factorization fac = factor_monic(s);
  for (const auto& [p, e] : fac.factors)
    if (e > 1) return 0;
  return fac.factors.size() % 2 == 0 ? 1 : -1;
}

int omega(const Poly& s) {
  if (s.is_zero()) throw std::domain_error("omega: zero polynomial");
  if (!s.is_monic()) throw std::domain_error("omega: input must be monic");
  return static_cast<int>(factor_monic(s).factors.size());
}

IdealCount count_ideals_upto(Field f, long long t) {
  if (t < 1) throw std::invalid_argument("count_ideals_upto: t must be a positive power of q");
  const long long q = f.q();
  long long n = 0, v = t;
  while (v % q == 0) {
    v /= q;
    ++n;
  }
  if (v != 1) throw std::invalid_argument("count_ideals_upto: t is not a power of q");
  IdealCount out;
  long long pw = 1;
  for (long long d = 0; d <= n; ++d) {
    out.count += pw;  // q^d monic polynomials of degree d
    pw *= q;
  }
  out.main_term = Rational(pw, q - 1);  // q^{n+1}/(q-1)
  out.residual = Rational(out.count) - out.main_term;
  return out;
}

CoprimeCount count_coprime(const Poly& J, int eps_exponent) {
  if (J.is_zero() || !J.is_monic()) throw std::domain_error("count_coprime: J must be monic nonzero");
  if (eps_exponent < 1) throw std::invalid_argument("count_coprime: eps must lie in (0,1)");
  const Field& f = J.field();
  const long long q = f.q();
  CoprimeCount out;
  int max_deg = J.degree() - eps_exponent;  // N(I) <= eps N(J) <=> deg I <= deg J - e
  for (int d = 0; d <= max_deg; ++d)
    for (const Poly& I : enumerate_monic(f, d))
      if (J.is_one() || poly_gcd(I, J).is_one()) ++out.count;
  out.predicted = Rational::pow(q, -eps_exponent) * Rational(q, q - 1) * Rational(euler_phi(J));
  out.residual = Rational(out.count) - out.predicted;
  return out;
}

Rational zeta_v_at(Field f, int z) {
  if (z >= 0) throw std::invalid_argument("zeta_v_at: argument must be a negative integer");
  Rational denom = Rational(1) - Rational::pow(f.q(), 1LL - z);
  return Rational(1) / denom;
}

MassConstant c_Kn(Field f, int n) {
  if (n < 2) throw std::invalid_argument("c_Kn: n must be at least 2");
  const long long q = f.q();
  Rational num(1);
  for (int i = 1; i <= n - 1; ++i) num = num * Rational(i);  // (n-1)!
  for (int i = 1; i <= n - 1; ++i) num = num * zeta_v_at(f, -i);
  Rational den = Rational(q) * Rational(q - 1);
  for (int i = 2; i <= n - 1; ++i) den = den * (Rational::pow(q, i) - Rational(1));
  MassConstant out;
  out.signed_value = num / den;
  out.abs_value = out.signed_value.abs();
  return out;
}

double kappa_prime(Field f, int n, const std::vector<Poly>& s) {
  if (s.empty()) throw std::invalid_argument("kappa_prime: empty tuple");
  const double lnq = std::log(static_cast<double>(f.q()));
  int neg_v_star = 0;
  for (const Poly& si : s) {
    if (si.is_zero()) throw std::domain_error("kappa_prime: zero component");
    neg_v_star = std::max(neg_v_star, si.degree());
  }
  double max_term = -std::numeric_limits<double>::infinity();
  for (const Poly& si : s) {
    double log_abs = si.degree();                    // log_q |s_i|
    double lnln = std::max(1.0, std::log(std::max(1.0, log_abs * lnq)));
    double term = omega(si) * std::log(2.0) / lnq + std::log(lnln) / lnq - log_abs;
    max_term = std::max(max_term, term);
  }
  return (neg_v_star + max_term) / n;
}

FittedBounds arith_bounds_report(Field f, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("arith_bounds_report: empty range");
  FittedBounds out;
  out.c_phi_by_degree.assign(max_degree + 1, std::numeric_limits<double>::infinity());
  out.c_omega_by_degree.assign(max_degree + 1, 0.0);
  for (int d = 1; d <= max_degree; ++d) {
    for (const Poly& s : enumerate_monic(f, d)) {
      double abs_s = std::pow(static_cast<double>(f.q()), d);
      double denom = std::max(1.0, std::log(static_cast<double>(d)));
      double c1 = static_cast<double>(euler_phi(s)) * denom / abs_s;
      double c2 = static_cast<double>(omega(s)) * denom / d;
      out.c_phi_by_degree[d] = std::min(out.c_phi_by_degree[d], c1);
      out.c_omega_by_degree[d] = std::max(out.c_omega_by_degree[d], c2);
    }
  }
  out.c_phi = std::numeric_limits<double>::infinity();
  for (int d = 1; d <= max_degree; ++d) {
    out.c_phi = std::min(out.c_phi, out.c_phi_by_degree[d]);
    out.c_omega = std::max(out.c_omega, out.c_omega_by_degree[d]);
  }
  return out;
}

}  // namespace divlat
