#include "divlat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace divlat {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(Field f, std::vector<int> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (int c : c_)
    if (c < 0 || c >= f_.q()) throw std::invalid_argument("Poly: coefficient out of field range");
  trim();
}

Poly Poly::constant(Field f, int c) {
  Poly r(f);
  if (c != 0) r.c_ = {c};
  return r;
}

Poly Poly::monomial(Field f, int c, int deg) {
  Poly r(f);
  if (c != 0) {
    r.c_.assign(deg + 1, 0);
    r.c_[deg] = c;
  }
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(f_);
  r.c_ = c_;
  for (int& c : r.c_) c = f_.neg(c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(f_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = f_.add(r.c_[i + j], f_.mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

Poly Poly::scaled(int c) const {
  Poly r(f_);
  if (c == 0) return r;
  r.c_ = c_;
  for (int& x : r.c_) x = f_.mul(x, c);
  r.trim();
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  Poly r(f_);
  r.c_.assign(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
  return scaled(f_.inv(leading()));
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  const Field& f = b.field();
  std::vector<int> rem(a.coeffs());
  int db = b.degree();
  int lead_inv = f.inv(b.leading());
  std::vector<int> quot;
  int da = static_cast<int>(rem.size()) - 1;
  if (da >= db) quot.assign(da - db + 1, 0);
  for (int d = da; d >= db; --d) {
    int c = rem[d];
    if (c == 0) continue;
    int qc = f.mul(c, lead_inv);
    quot[d - db] = qc;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = f.sub(rem[d - db + i], f.mul(qc, b.coeff(i)));
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0) undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).rem;
    x = y;
    y = r;
  }
  return x.monic();
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_xgcd: gcd(0, 0) undefined");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(f, 1), u1(f);
  Poly v0(f), v1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    PolyDivMod d = poly_divmod(r0, r1);
    Poly r2 = d.rem;
    Poly u2 = u0 - d.quot * u1;
    Poly v2 = v0 - d.quot * v1;
    r0 = r1; r1 = r2;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  int s = f.inv(r0.leading());
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("poly_lcm: zero argument");
  return poly_divmod(a * b, poly_gcd(a, b)).quot.monic();
}

std::vector<Poly> enumerate_monic(Field f, int d, bool irreducible_only) {
  if (d < 0) throw std::invalid_argument("enumerate_monic: negative degree");
  long long count = 1;
  for (int i = 0; i < d; ++i) {
    count *= f.q();
    if (count > (1LL << 30)) throw std::invalid_argument("enumerate_monic: q^d too large");
  }
  std::vector<Poly> out;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> c(d + 1, 0);
    long long v = idx;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<int>(v % f.q());
      v /= f.q();
    }
    c[d] = 1;
    Poly p(f, std::move(c));
    if (!irreducible_only || poly_is_irreducible(p)) out.push_back(std::move(p));
  }
  return out;
}

bool poly_is_irreducible(const Poly& p) {
  int d = p.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int dd = 1; dd <= d / 2; ++dd)
    for (const Poly& g : enumerate_monic(p.field(), dd))
      if (poly_divmod(p, g).rem.is_zero()) return false;
  return true;
}

std::string Poly::to_coeff_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    int c = coeff(i);
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0 && c != 1) os << '*';
    if (i > 0) os << 'Y';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly Poly::from_coeff_string(Field f, const std::string& s) {
  std::vector<int> c;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("Poly: bad coefficient token '" + tok + "'");
    c.push_back(v);
  }
  return Poly(f, std::move(c));
}

Poly Poly::parse(Field f, const std::string& expr) {
  // sums/differences of terms: INT, Y, INT*Y, Y^K, INT*Y^K (whitespace ok)
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("Poly::parse: empty expression");
  Poly out(f);
  size_t i = 0;
  int sign = 1;
  while (i < s.size()) {
    if (s[i] == '+') { sign = 1; ++i; continue; }
    if (s[i] == '-') { sign = -1; ++i; continue; }
    long long coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      coeff = std::stoll(s.substr(i, j - i));
      saw_coeff = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int deg = 0;
    if (i < s.size() && (s[i] == 'Y' || s[i] == 'y')) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        size_t j = ++i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("Poly::parse: missing exponent in '" + expr + "'");
        deg = std::stoi(s.substr(i, j - i));
        i = j;
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("Poly::parse: unexpected character in '" + expr + "'");
    }
    int c = f.from_int(coeff);
    if (coeff >= f.p() && f.ext_degree() > 1 && coeff < f.q()) c = static_cast<int>(coeff);  // element index form
    if (sign < 0) c = f.neg(c);
    out = out + Poly::monomial(f, c, deg);
    sign = 1;
  }
  return out;
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
  return 0;
}

}  // namespace divlat
