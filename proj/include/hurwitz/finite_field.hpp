#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "core.hpp"
#include "cyclotomic.hpp"

// GF(p) and GF(p^3) with a deterministic polynomial basis, the quadratic
// extension GF(q^2) = GF(q)(sqrt(eps)), and the norm-one torus of order q+1.
// Elements are integer codes: for n = 3 the code is c0 + c1*p + c2*p^2, and
// the canonical element ordering is the integer order on codes (equivalently
// tuple order on (c2, c1, c0)).

namespace hurwitz {

inline bool is_prime_ll(long long x) { return detail::is_prime_ll(x); }

inline std::vector<long long> distinct_prime_factors(long long x) {
  std::vector<long long> out;
  for (auto [p, e] : detail::factorize(x)) out.push_back(p);
  return out;
}

struct FiniteField {
  long long p = 0;
  int n = 1;
  long long q = 0;
  std::array<long long, 3> mod{};  // n == 3: x^3 + mod[2] x^2 + mod[1] x + mod[0]

  // deterministic field: for n = 3 the modulus is the lexicographically least
  // monic irreducible cubic (coefficients ordered x^2, x, 1)
  static FiniteField make(long long p, int n) {
    if (!is_prime_ll(p)) throw value_error("make_field: p must be prime");
    if (n != 1 && n != 3) throw value_error("make_field: n must be 1 or 3");
    if (p == 2 || p == 3 || p == 7)
      throw value_error("make_field: characteristic 2, 3, 7 not supported");
    FiniteField F;
    F.p = p;
    F.n = n;
    F.q = n == 1 ? p : detail::checked_mul(detail::checked_mul(p, p, "q"), p, "q");
    if (n == 3) {
      // a cubic over a field is irreducible iff it has no root
      bool found = false;
      for (long long a = 0; a < p && !found; ++a)
        for (long long b = 0; b < p && !found; ++b)
          for (long long c = 0; c < p && !found; ++c) {
            bool has_root = false;
            for (long long t = 0; t < p; ++t) {
              long long v = ((t * t % p) * t + a * t % p * t + b * t + c) % p;
              if (v == 0) {
                has_root = true;
                break;
              }
            }
            if (!has_root) {
              F.mod = {c, b, a};
              found = true;
            }
          }
      if (!found) throw internal_error("no irreducible cubic found");
    }
    return F;
  }

  long long from_int(long long v) const { return detail::modnorm(v, p); }

  std::array<long long, 3> decode(long long a) const {
    return {a % p, (a / p) % p, a / (p * p)};
  }
  long long encode(const std::array<long long, 3>& c) const {
    return c[0] + c[1] * p + c[2] * p * p;
  }

  long long add(long long a, long long b) const {
    if (n == 1) return (a + b) % p;
    auto x = decode(a), y = decode(b);
    return encode({(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p});
  }
  long long neg(long long a) const {
    if (n == 1) return a == 0 ? 0 : p - a;
    auto x = decode(a);
    for (auto& v : x) v = v == 0 ? 0 : p - v;
    return encode(x);
  }
  long long sub(long long a, long long b) const { return add(a, neg(b)); }

  long long mul(long long a, long long b) const {
    if (n == 1) return detail::mulmod(a, b, p);
    auto x = decode(a), y = decode(b);
    long long h[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h[i + j] = (h[i + j] + x[i] * y[j]) % p;
    // reduce by x^3 = -(mod[2] x^2 + mod[1] x + mod[0])
    for (int d = 4; d >= 3; --d) {
      long long c = h[d];
      if (c == 0) continue;
      h[d] = 0;
      h[d - 1] = (h[d - 1] + (p - mod[2]) % p * c) % p;
      h[d - 2] = (h[d - 2] + (p - mod[1]) % p * c) % p;
      h[d - 3] = (h[d - 3] + (p - mod[0]) % p * c) % p;
    }
    return encode({h[0], h[1], h[2]});
  }

  long long pow(long long a, long long e) const {
    if (e < 0) throw value_error("field pow: negative exponent");
    long long acc = 1;
    while (e > 0) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  long long inv(long long a) const {
    if (a == 0) throw value_error("field inv: zero");
    if (n == 1) return detail::inv_mod(a, p);
    return pow(a, q - 2);
  }

  // Tr: GF(q) -> GF(p)
  long long trace(long long a) const {
    if (n == 1) return a;
    long long s = add(add(a, pow(a, p)), pow(a, p * p));
    return s % p;  // the trace lies in the prime field, code = constant coeff
  }
};

// smallest (which = 0) or second-smallest (which = 1) generator of GF(q)^*
// under the canonical element ordering
inline long long multiplicative_generator(const FiniteField& F, int which = 0) {
  auto fac = distinct_prime_factors(F.q - 1);
  int found = 0;
  for (long long c = 2; c < F.q; ++c) {
    bool gen = true;
    for (long long f : fac)
      if (F.pow(c, (F.q - 1) / f) == 1) {
        gen = false;
        break;
      }
    if (gen && found++ == which) return c;
  }
  throw internal_error("no generator found");
}

// GF(q^2) = GF(q)(sqrt(eps)); elements a + b*sqrt(eps) with combined code a + q*b
struct Fq2Elt {
  long long a = 0, b = 0;
  friend auto operator<=>(const Fq2Elt&, const Fq2Elt&) = default;
};

struct Fq2 {
  FiniteField F;
  long long eps = 0;

  Fq2Elt one() const { return {1, 0}; }
  long long code(const Fq2Elt& e) const { return e.a + F.q * e.b; }
  Fq2Elt decode(long long c) const { return {c % F.q, c / F.q}; }

  Fq2Elt mul(const Fq2Elt& x, const Fq2Elt& y) const {
    return {F.add(F.mul(x.a, y.a), F.mul(eps, F.mul(x.b, y.b))),
            F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
  }
  Fq2Elt conj(const Fq2Elt& x) const { return {x.a, F.neg(x.b)}; }
  long long norm(const Fq2Elt& x) const {
    return F.sub(F.mul(x.a, x.a), F.mul(eps, F.mul(x.b, x.b)));
  }
  Fq2Elt pow(Fq2Elt x, long long e) const {
    Fq2Elt acc = one();
    while (e > 0) {
      if (e & 1) acc = mul(acc, x);
      x = mul(x, x);
      e >>= 1;
    }
    return acc;
  }
};

// norm-one torus T < GF(q^2)^*, cyclic of order q+1, with dlog table for its
// chosen generator tau (smallest generator under the code ordering)
struct Torus {
  Fq2 K;
  Fq2Elt tau;
  std::vector<long long> pow_code;                    // code of tau^k, k = 0..q
  std::vector<std::pair<long long, long long>> dlog;  // (code, k) sorted by code

  static Torus make(const Fq2& K, const std::vector<long long>& dlog_fx,
                    int which = 0) {
    const FiniteField& F = K.F;
    long long q = F.q;
    std::vector<long long> codes;
    // b^2 = (a^2 - 1)/eps has solutions exactly when that value is 0 or an
    // even power of eps
    for (long long a = 0; a < q; ++a) {
      long long v = F.mul(F.sub(F.mul(a, a), 1), F.inv(K.eps));
      if (v == 0) {
        codes.push_back(K.code({a, 0}));
        continue;
      }
      long long d = dlog_fx[static_cast<size_t>(v)];
      if (d < 0 || d % 2) continue;
      long long b = F.pow(multiplier_base(F, dlog_fx), d / 2);
      codes.push_back(K.code({a, b}));
      codes.push_back(K.code({a, F.neg(b)}));
    }
    std::sort(codes.begin(), codes.end());
    if (static_cast<long long>(codes.size()) != q + 1)
      throw internal_error("torus enumeration found " +
                           std::to_string(codes.size()) + " elements");
    Torus T;
    T.K = K;
    auto fac = distinct_prime_factors(q + 1);
    int found = 0;
    bool have = false;
    for (long long c : codes) {
      Fq2Elt z = K.decode(c);
      bool gen = true;
      for (long long f : fac) {
        Fq2Elt w = K.pow(z, (q + 1) / f);
        if (w.a == 1 && w.b == 0) {
          gen = false;
          break;
        }
      }
      if (gen && found++ == which) {
        T.tau = z;
        have = true;
        break;
      }
    }
    if (!have) throw internal_error("no torus generator found");
    T.pow_code.reserve(static_cast<size_t>(q + 1));
    Fq2Elt acc = K.one();
    for (long long k = 0; k <= q; ++k) {
      T.pow_code.push_back(K.code(acc));
      T.dlog.emplace_back(K.code(acc), k);
      acc = K.mul(acc, T.tau);
    }
    if (!(acc.a == 1 && acc.b == 0))
      throw internal_error("torus generator order check failed");
    std::sort(T.dlog.begin(), T.dlog.end());
    return T;
  }

  long long dlog_of(const Fq2Elt& z) const {
    long long c = K.code(z);
    auto it = std::lower_bound(dlog.begin(), dlog.end(),
                               std::make_pair(c, -1LL));
    if (it == dlog.end() || it->first != c)
      throw value_error("element is not in the norm-one torus");
    return it->second;
  }

 private:
  // the eps used to build dlog_fx: recover it as the element with dlog 1
  static long long multiplier_base(const FiniteField& F,
                                   const std::vector<long long>& dlog_fx) {
    for (long long c = 0; c < F.q; ++c)
      if (dlog_fx[static_cast<size_t>(c)] == 1) return c;
    throw internal_error("dlog table has no base element");
  }
};

}  // namespace hurwitz
