#include "divlat/field.hpp"

#include <map>
#include <mutex>

namespace divlat {

namespace {

// Digit-vector arithmetic over F_p for building extension field tables.
using Digits = std::vector<int>;

Digits digits_of(int idx, int p, int k) {
  Digits d(k, 0);
  for (int i = 0; i < k; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

int index_of(const Digits& d, int p) {
  int idx = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) idx = idx * p + d[i];
  return idx;
}

// a*b mod m over F_p, deg m = k, a and b of degree < k.
Digits mulmod(const Digits& a, const Digits& b, const Digits& m, int p) {
  int k = static_cast<int>(m.size()) - 1;
  std::vector<int> prod(2 * k - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // reduce by m (monic)
  for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) {
      int pos = d - k + i;
      prod[pos] = ((prod[pos] - c * m[i]) % p + p * p) % p;
    }
  }
  prod.resize(k);
  return prod;
}

bool is_irreducible(const Digits& m, int p) {
  // trial: m of degree k has a nontrivial factor iff it has a monic divisor of
  // degree <= k/2; for the tiny k used here, test all of them by division.
  int k = static_cast<int>(m.size()) - 1;
  for (int dd = 1; dd <= k / 2; ++dd) {
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      Digits f = digits_of(idx, p, dd);
      f.push_back(1);  // monic degree dd
      // long division remainder of m by f
      Digits r = m;
      while (static_cast<int>(r.size()) - 1 >= dd) {
        int lead = r.back();
        if (lead != 0) {
          int shift = static_cast<int>(r.size()) - 1 - dd;
          for (int i = 0; i <= dd; ++i) r[shift + i] = ((r[shift + i] - lead * f[i]) % p + p * p) % p;
        }
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dd) break;
      }
      bool zero = true;
      for (int c : r)
        if (c != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

bool Field::is_prime_power(int q, int* p_out, int* k_out) {
  if (q < 2) return false;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q;  // q prime
  int k = 0;
  int m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

Field::Field(int q) {
  static std::mutex cache_mu;
  static std::map<int, std::shared_ptr<const Tables>> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = cache.find(q);
    if (it != cache.end()) {
      t_ = it->second;
      return;
    }
  }
  int p = 0, k = 0;
  if (!is_prime_power(q, &p, &k)) throw std::invalid_argument("Field: order " + std::to_string(q) + " is not a prime power");
  if (q > 256) throw std::invalid_argument("Field: order above table limit 256");

  auto t = std::make_shared<Tables>();
  t->q = q;
  t->p = p;
  t->k = k;
  // pick the modulus: first monic irreducible of degree k in index order
  if (k == 1) {
    t->modulus = {0, 1};  // identity modulus, arithmetic is plain mod p
  } else {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      Digits m = digits_of(idx, p, k);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        t->modulus = m;
        break;
      }
    }
  }

  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    Digits da = digits_of(a, p, k);
    Digits dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    t->neg[a] = index_of(dn, p);
    for (int b = 0; b < q; ++b) {
      Digits db = digits_of(b, p, k);
      Digits ds(k);
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      t->add[a * q + b] = index_of(ds, p);
      t->mul[a * q + b] = index_of(mulmod(da, db, t->modulus, p), p);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) t->inv[a] = b;

  std::lock_guard<std::mutex> lk(cache_mu);
  cache.emplace(q, t);
  t_ = t;
}

}  // namespace divlat
