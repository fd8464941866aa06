#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "core.hpp"

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A value is a sparse map {exponent -> rational coefficient} over the tensor
// power basis: zeta_n^e is basic iff for every prime power p^a || n the CRT
// component of e lies in [0, phi(p^a)).  An exponent with an overflowing
// component is rewritten with
//
//     zeta^{(p-1)p^{a-1} + r} = - sum_{k=0}^{p-2} zeta^{r + k p^{a-1}}
//
// (one step per overflowing prime, no cascading).  The representation is
// unique, so equality of values is equality of maps.

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline long long rat_to_ll(const Rational& r, const char* what = "value") {
  if (!is_integral(r))
    throw internal_error(std::string(what) + " is not an integer: " + r.str());
  BigInt n = numerator(r);
  if (n > std::numeric_limits<long long>::max() ||
      n < std::numeric_limits<long long>::min())
    throw limit_error(std::string(what) + " exceeds 64-bit range");
  return n.convert_to<long long>();
}

namespace detail {

inline bool is_prime_ll(long long x) {
  if (x < 2) return false;
  for (long long s : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL,
                      31LL, 37LL}) {
    if (x == s) return true;
    if (x % s == 0) return false;
  }
  // deterministic Miller-Rabin for 64-bit with the base set above
  long long d = x - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  auto powmod = [&](long long b, long long e) {
    long long acc = 1;
    b %= x;
    while (e > 0) {
      if (e & 1) acc = mulmod(acc, b, x);
      b = mulmod(b, b, x);
      e >>= 1;
    }
    return acc;
  };
  for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL,
                      31LL, 37LL}) {
    long long y = powmod(a, d);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      y = mulmod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// prime factorization by trial division; factors beyond 2^21 must leave a
// prime (or unit) remainder, which covers every conductor the engine builds
inline std::vector<std::pair<long long, int>> factorize(long long x) {
  if (x < 1) throw value_error("factorize: argument must be positive");
  std::vector<std::pair<long long, int>> f;
  for (long long p = 2; p * p <= x && p <= (1LL << 21); p += (p == 2 ? 1 : 2)) {
    if (x % p) continue;
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (x > 1) {
    if (!is_prime_ll(x))
      throw limit_error("factorize: composite cofactor beyond trial range");
    f.emplace_back(x, 1);
  }
  return f;
}

inline long long inv_mod(long long a, long long m) {
  long long t = 0, nt = 1, r = m, nr = detail::modnorm(a, m);
  while (nr != 0) {
    long long qt = r / nr;
    std::swap(t -= qt * nt, nt);
    std::swap(r -= qt * nr, nr);
  }
  if (r != 1) throw value_error("inv_mod: not invertible");
  return modnorm(t, m);
}

}  // namespace detail

class CycCtx {
 public:
  struct Component {
    long long p = 0;     // prime
    long long pa = 0;    // p^a
    long long phi = 0;   // (p-1) p^{a-1}
    long long step = 0;  // p^{a-1}
    long long u = 0;     // (n/pa)^{-1} mod pa
    long long idem = 0;  // (n/pa) * u mod n, the CRT idempotent
  };

  long long n = 1;
  std::vector<Component> comps;

  static std::shared_ptr<const CycCtx> get(long long n) {
    if (n < 1) throw value_error("conductor must be positive");
    static std::map<long long, std::shared_ptr<const CycCtx>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<CycCtx>();
    ctx->n = n;
    for (auto [p, a] : detail::factorize(n)) {
      Component c;
      c.p = p;
      c.pa = 1;
      for (int i = 0; i < a; ++i)
        c.pa = detail::checked_mul(c.pa, p, "conductor component");
      c.step = c.pa / p;
      c.phi = c.step * (p - 1);
      long long m = n / c.pa;
      c.u = detail::inv_mod(m, c.pa);
      c.idem = detail::mulmod(m, c.u, n);
      ctx->comps.push_back(c);
    }
    cache[n] = ctx;
    return ctx;
  }

  long long component(long long e, size_t i) const {
    return detail::mulmod(e, comps[i].u, comps[i].pa);
  }

  long long recombine(const std::vector<long long>& c) const {
    __int128 acc = 0;
    for (size_t i = 0; i < comps.size(); ++i) {
      long long x = detail::mulmod(c[i], n / comps[i].pa, comps[i].pa);
      acc += static_cast<__int128>(x) * comps[i].idem % n;
    }
    long long r = static_cast<long long>(acc % n);
    return r < 0 ? r + n : r;
  }
};

inline long long lcm_checked(long long a, long long b) {
  long long g = std::gcd(a, b);
  return detail::checked_mul(a / g, b, "lcm");
}

class Cyc {
 public:
  Cyc() : ctx_(CycCtx::get(1)) {}
  explicit Cyc(const Rational& r, long long conductor = 1)
      : ctx_(CycCtx::get(conductor)) {
    if (r != 0) t_[0] = r;
  }
  explicit Cyc(long long v, long long conductor = 1)
      : Cyc(Rational(v), conductor) {}

  // zeta_conductor^e, reduced to the canonical basis
  static Cyc root(long long conductor, long long e) {
    Cyc r(Rational(0), conductor);
    r.add_raw(e, Rational(1));
    r.prune();
    return r;
  }

  long long conductor() const { return ctx_->n; }
  bool is_zero() const { return t_.empty(); }
  bool is_rational() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
  }
  Rational rational_value() const {
    if (t_.empty()) return Rational(0);
    if (!is_rational()) throw internal_error("cyclotomic value is irrational: " + str());
    return t_.begin()->second;
  }
  const std::map<long long, Rational>& terms() const { return t_; }

  Cyc promoted(long long conductor) const {
    if (conductor == ctx_->n) return *this;
    if (conductor % ctx_->n != 0)
      throw value_error("promotion target is not a multiple of the conductor");
    Cyc r(Rational(0), conductor);
    long long f = conductor / ctx_->n;
    for (const auto& [e, c] : t_) r.add_raw(detail::mulmod(e, f, conductor), c);
    r.prune();
    return r;
  }

  Cyc& operator+=(const Cyc& o) {
    if (o.ctx_->n != ctx_->n) {
      long long n = lcm_checked(ctx_->n, o.ctx_->n);
      if (n != ctx_->n) *this = promoted(n);
      return *this += o.promoted(n);
    }
    for (const auto& [e, c] : o.t_) t_[e] += c;
    prune();
    return *this;
  }
  Cyc& operator-=(const Cyc& o) { return *this += -o; }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }

  Cyc& operator*=(const Rational& s) {
    if (s == 0) {
      t_.clear();
      return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
  }
  friend Cyc operator*(Cyc a, const Rational& s) { return a *= s; }
  friend Cyc operator*(const Rational& s, Cyc a) { return a *= s; }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    long long n = lcm_checked(a.ctx_->n, b.ctx_->n);
    if (n != a.ctx_->n) return aligned(a, n) * b;
    if (n != b.ctx_->n) return a * aligned(b, n);
    Cyc r(Rational(0), n);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_raw(ea + eb >= n ? ea + eb - n : ea + eb, ca * cb);
    r.prune();
    return r;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    if (a.ctx_->n == b.ctx_->n) return a.t_ == b.t_;
    long long n = lcm_checked(a.ctx_->n, b.ctx_->n);
    return aligned(a, n).t_ == aligned(b, n).t_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // exponent substitution e -> j*e; a field automorphism when gcd(j, n) = 1
  Cyc galois(long long j) const {
    long long n = ctx_->n;
    j = detail::modnorm(j, n);
    if (std::gcd(j, n) != 1)
      throw value_error("galois exponent must be a unit mod the conductor");
    Cyc r(Rational(0), n);
    for (const auto& [e, c] : t_) r.add_raw(detail::mulmod(j, e, n), c);
    r.prune();
    return r;
  }
  Cyc conj() const { return ctx_->n == 1 ? *this : galois(ctx_->n - 1); }

  // canonical string form, e.g. "-1/2 + 1*z^3 + -2*z^7" (terms by exponent)
  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << c.str();
      if (e != 0) os << "*z^" << e;
    }
    return os.str();
  }

 private:
  std::shared_ptr<const CycCtx> ctx_;
  std::map<long long, Rational> t_;

  static Cyc aligned(const Cyc& a, long long n) { return a.promoted(n); }

  void prune() {
    for (auto it = t_.begin(); it != t_.end();)
      it = (it->second == 0) ? t_.erase(it) : std::next(it);
  }

  void add_raw(long long e, const Rational& c) {
    if (c == 0) return;
    const CycCtx& C = *ctx_;
    e = detail::modnorm(e, C.n);
    if (C.n == 1) {
      t_[0] += c;
      return;
    }
    size_t m = C.comps.size();
    std::vector<long long> comp(m);
    std::vector<size_t> over;
    for (size_t i = 0; i < m; ++i) {
      comp[i] = C.component(e, i);
      if (comp[i] >= C.comps[i].phi) over.push_back(i);
    }
    if (over.empty()) {
      t_[e] += c;
      return;
    }
    Rational sign = (over.size() % 2) ? -c : c;
    std::vector<long long> kidx(over.size(), 0);
    std::vector<long long> comp2 = comp;
    for (;;) {
      for (size_t t = 0; t < over.size(); ++t) {
        const auto& cp = C.comps[over[t]];
        comp2[over[t]] = (comp[over[t]] - cp.phi) + kidx[t] * cp.step;
      }
      t_[C.recombine(comp2)] += sign;
      size_t t = 0;
      for (; t < over.size(); ++t) {
        if (++kidx[t] <= C.comps[over[t]].p - 2) break;
        kidx[t] = 0;
      }
      if (t == over.size()) break;
    }
  }
};

// Gauss periods over GF(q), q an odd prime: xi sums zeta_q over the nonzero
// squares, xi' over the nonsquares; xi + xi' = -1 always and
// xi * xi' = (1 - q)/4 when q = 1 mod 4, (1 + q)/4 when q = 3 mod 4.
inline std::pair<Cyc, Cyc> gauss_periods(long long q) {
  if (q < 3 || !detail::is_prime_ll(q))
    throw value_error("gauss_periods: q must be an odd prime (use the traced form for cubes)");
  std::vector<char> sq(static_cast<size_t>(q), 0);
  for (long long a = 1; a < q; ++a) sq[static_cast<size_t>(detail::mulmod(a, a, q))] = 1;
  Cyc xi(Rational(0), q);
  for (long long e = 1; e < q; ++e)
    if (sq[static_cast<size_t>(e)]) xi += Cyc::root(q, e);
  Cyc xip = Cyc(Rational(-1), q) - xi;
  return {xi, xip};
}

// Gauss periods for GF(p^n) read through the trace form: xi sums
// zeta_p^{Tr(x)} over the nonzero squares x.  The caller supplies the traces;
// this is the explicit interpretation used for q = p^3.
inline std::pair<Cyc, Cyc> gauss_periods_traced(
    long long p, const std::vector<long long>& traces_of_squares,
    const std::vector<long long>& traces_of_nonsquares) {
  Cyc xi(Rational(0), p), xip(Rational(0), p);
  for (long long t : traces_of_squares) xi += Cyc::root(p, detail::modnorm(t, p));
  for (long long t : traces_of_nonsquares) xip += Cyc::root(p, detail::modnorm(t, p));
  return {xi, xip};
}

}  // namespace hurwitz
