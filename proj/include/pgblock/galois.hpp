#pragma once

// Exact arithmetic in GF(q), q = p^e <= 2^16.  Elements are encoded as
// integers n = sum d_i * p^i standing for sum d_i * w^i, where w is the
// residue class of x modulo the defining polynomial.  Multiplication and
// inversion run on log/antilog tables built over a fixed generator.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgblock {

using Fe = std::uint16_t;

struct CubeRoots {
  std::vector<Fe> roots;          // ascending solutions of x^3 = 1
  bool char3_double_root = false; // char 3: x^3 - 1 = (x - 1)^3, mu = 1
};

class Field {
 public:
  // poly, when given, is monic of degree e with base-p coefficients c0..ce.
  // Defaults: x^4+x+1 (q=16), x^2-x+2 (q=25), x^3-x+1 (q=27); otherwise the
  // lexicographically least monic irreducible (high coefficient first).
  explicit Field(int q, std::optional<std::vector<int>> poly = std::nullopt) {
    auto pe = factor_prime_power(q);
    if (!pe) throw std::invalid_argument("Field: " + std::to_string(q) + " is not a prime power");
    q_ = q;
    p_ = pe->first;
    e_ = pe->second;
    if (q_ > (1 << 16)) throw std::invalid_argument("Field: q > 2^16 unsupported");
    if (e_ > 1) {
      poly_ = poly ? validated(*poly) : default_poly();
    } else if (poly && poly->size() != 2) {
      throw std::invalid_argument("Field: prime field takes no extension polynomial");
    }
    build_tables();
  }

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }
  const std::vector<int>& poly() const { return poly_; }

  Fe add(Fe a, Fe b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return digit_add(a, b);
  }
  Fe neg(Fe a) const { return neg_table_[a]; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[std::size_t(log_[a]) + log_[b]];
  }
  Fe inv(Fe a) const {
    if (a == 0) throw std::domain_error("Field: inverse of 0");
    return exp_[q_ - 1 - log_[a]];
  }
  Fe div(Fe a, Fe b) const {
    if (b == 0) throw std::domain_error("Field: division by 0");
    if (a == 0) return 0;
    return exp_[std::size_t(log_[a]) + q_ - 1 - log_[b]];
  }

  // Square-and-multiply on exponents; negative k goes through the inverse.
  Fe pow(Fe a, long long k) const {
    if (a == 0) {
      if (k < 0) throw std::domain_error("Field: 0 to a negative power");
      return k == 0 ? Fe{1} : Fe{0};
    }
    long long m = q_ - 1;
    long long r = ((k % m) + m) % m;
    return exp_[std::size_t((std::int64_t(log_[a]) * r) % m)];
  }

  // Residue class of x; only meaningful for extension fields.
  Fe omega() const {
    if (e_ == 1) throw std::logic_error("Field: omega undefined for prime fields");
    return Fe(p_);
  }

  Fe generator() const { return gen_; }

  bool is_primitive(Fe a) const {
    if (a == 0) return false;
    int d = log_[a];
    return std::gcd(d, q_ - 1) == 1;
  }

  CubeRoots cube_roots_of_unity() const {
    CubeRoots out;
    for (int x = 1; x < q_; ++x)
      if (mul(Fe(x), mul(Fe(x), Fe(x))) == 1) out.roots.push_back(Fe(x));
    out.char3_double_root = (p_ == 3);
    return out;
  }

  Fe product_of_units() const {
    Fe acc = 1;
    for (int x = 1; x < q_; ++x) acc = mul(acc, Fe(x));
    return acc;
  }

  bool operator==(const Field& o) const { return q_ == o.q_ && poly_ == o.poly_; }

  static std::optional<std::pair<int, int>> factor_prime_power(int q) {
    if (q < 2) return std::nullopt;
    int p = 2;
    while (q % p != 0) {
      ++p;
      if (p * p > q) { p = q; break; }
    }
    int e = 0, m = q;
    while (m % p == 0) { m /= p; ++e; }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, e);
  }

  // Trial division over GF(p) by every monic polynomial of degree 1..deg/2.
  static bool is_irreducible(const std::vector<int>& poly, int p) {
    int deg = int(poly.size()) - 1;
    if (deg == 1) return true;
    std::vector<int> divisor;
    for (int d = 1; 2 * d <= deg; ++d) {
      long long total = 1;
      for (int i = 0; i < d; ++i) total *= p;
      divisor.assign(d + 1, 0);
      divisor[d] = 1;
      for (long long n = 0; n < total; ++n) {
        long long m = n;
        for (int i = 0; i < d; ++i) { divisor[i] = int(m % p); m /= p; }
        if (divides(divisor, poly, p)) return false;
      }
    }
    return true;
  }

 private:
  static bool divides(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> r = b;
    int da = int(a.size()) - 1, db = int(b.size()) - 1;
    for (int i = db - da; i >= 0; --i) {
      int c = r[i + da] % p;
      if (c)
        for (int j = 0; j <= da; ++j) r[i + j] = ((r[i + j] - c * a[j]) % p + p * p) % p;
    }
    for (int v : r)
      if (v % p != 0) return false;
    return true;
  }

  std::vector<int> validated(std::vector<int> poly) const {
    if (int(poly.size()) != e_ + 1 || poly[e_] != 1)
      throw std::invalid_argument("Field: polynomial must be monic of degree e");
    for (int& c : poly) {
      c %= p_;
      if (c < 0) c += p_;
    }
    if (!is_irreducible(poly, p_))
      throw std::invalid_argument("Field: polynomial is reducible over GF(p)");
    return poly;
  }

  std::vector<int> default_poly() const {
    if (q_ == 16) return {1, 1, 0, 0, 1};
    if (q_ == 25) return {2, 4, 1};
    if (q_ == 27) return {1, 2, 0, 1};
    // ascending n enumerates (c_{e-1}, ..., c_0) lexicographically
    long long total = 1;
    for (int i = 0; i < e_; ++i) total *= p_;
    std::vector<int> cand(e_ + 1, 0);
    cand[e_] = 1;
    for (long long n = 0; n < total; ++n) {
      long long m = n;
      for (int i = 0; i < e_; ++i) { cand[i] = int(m % p_); m /= p_; }
      if (is_irreducible(cand, p_)) return cand;
    }
    throw std::logic_error("Field: no irreducible polynomial found");
  }

  Fe digit_add(Fe a, Fe b) const {
    if (e_ == 1) {
      int s = a + b;
      return Fe(s >= p_ ? s - p_ : s);
    }
    int out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
      int da = (a / powp_[i]) % p_, db = (b / powp_[i]) % p_;
      int s = da + db;
      if (s >= p_) s -= p_;
      out += s * mult;
      mult *= p_;
    }
    return Fe(out);
  }

  Fe raw_mul(Fe a, Fe b) const {
    if (e_ == 1) return Fe((std::uint32_t(a) * b) % p_);
    // schoolbook product in the w-basis, reduced by w^e = -(c0 + ... + c_{e-1} w^{e-1})
    std::vector<int> prod(2 * e_, 0);
    for (int i = 0; i < e_; ++i) {
      int da = (a / powp_[i]) % p_;
      if (!da) continue;
      for (int j = 0; j < e_; ++j) {
        int db = (b / powp_[j]) % p_;
        prod[i + j] = (prod[i + j] + da * db) % p_;
      }
    }
    for (int i = 2 * e_ - 1; i >= e_; --i) {
      int c = prod[i];
      if (!c) continue;
      prod[i] = 0;
      for (int j = 0; j < e_; ++j)
        prod[i - e_ + j] = ((prod[i - e_ + j] - c * poly_[j]) % p_ + p_ * p_) % p_;
    }
    int out = 0;
    for (int i = e_ - 1; i >= 0; --i) out = out * p_ + prod[i];
    return Fe(out);
  }

  Fe raw_pow(Fe a, long long k) const {
    Fe r = 1, base = a;
    while (k) {
      if (k & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      k >>= 1;
    }
    return r;
  }

  void build_tables() {
    powp_.assign(e_ + 1, 1);
    for (int i = 1; i <= e_; ++i) powp_[i] = powp_[i - 1] * p_;

    neg_table_.resize(q_);
    for (int a = 0; a < q_; ++a) {
      int out = 0;
      for (int i = 0; i < e_; ++i) {
        int d = (a / powp_[i]) % p_;
        out += ((p_ - d) % p_) * powp_[i];
      }
      neg_table_[a] = Fe(out);
    }
    if (q_ <= 512) {
      add_table_.resize(std::size_t(q_) * q_);
      for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) add_table_[std::size_t(a) * q_ + b] = digit_add(Fe(a), Fe(b));
    }

    // least primitive element; order tested against the prime factors of q-1
    std::vector<int> factors;
    {
      int m = q_ - 1;
      for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
          factors.push_back(d);
          while (m % d == 0) m /= d;
        }
      if (m > 1) factors.push_back(m);
    }
    gen_ = 0;
    for (int g = 2; g < q_; ++g) {
      bool prim = true;
      for (int f : factors)
        if (raw_pow(Fe(g), (q_ - 1) / f) == 1) { prim = false; break; }
      if (prim) { gen_ = Fe(g); break; }
    }
    if (gen_ == 0 && q_ == 2) gen_ = 1;
    if (gen_ == 0) throw std::logic_error("Field: no generator found");

    exp_.resize(2 * std::size_t(q_ - 1));
    log_.assign(q_, 0);
    Fe v = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      exp_[i] = v;
      exp_[i + q_ - 1] = v;
      log_[v] = i;
      v = raw_mul(v, gen_);
    }
  }

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> poly_;   // c0..ce, empty for prime fields
  std::vector<int> powp_;
  Fe gen_ = 0;
  std::vector<Fe> exp_;     // doubled so mul/div need no modulo
  std::vector<int> log_;
  std::vector<Fe> neg_table_;
  std::vector<Fe> add_table_;  // built for q <= 512, digit arithmetic otherwise
};

}  // namespace pgblock
