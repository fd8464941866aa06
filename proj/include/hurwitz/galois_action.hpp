#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hurwitz/core.hpp"
#include "hurwitz/riemann_roch.hpp"

// Action of Gal(Q(zeta_N)/Q) = (Z/N)^x on isomorphism classes of irreducibles,
// invariance testing against a generating set of units, and the fixed-space
// fast formula for L(D) on the reduced divisor domain.

namespace hurwitz {

namespace detail_gal {

inline std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) n /= d, ++e;
      out.push_back({d, e});
    }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline long long powmod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b = detail::modnorm(b, m);
  while (e > 0) {
    if (e & 1) r = detail::mulmod(r, b, m);
    b = detail::mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// smallest primitive root mod an odd prime power ell^e
inline long long primitive_root(long long ell, int e) {
  std::vector<long long> ps;
  for (auto& [f, ee] : factorize(ell - 1)) ps.push_back(f);
  long long g = 2;
  for (;; ++g) {
    bool ok = true;
    for (long long f : ps)
      if (powmod(g, (ell - 1) / f, ell) == 1) { ok = false; break; }
    if (ok) break;
  }
  if (e == 1) return g;
  long long m = ell * ell;
  if (powmod(g, ell - 1, m) == 1) g += ell;
  return g;  // primitive mod ell^2 stays primitive mod all ell^e
}

inline long long inv_mod(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a1 = detail::modnorm(a, m);
  while (a1 != 0) {
    long long t = g / a1;
    g -= t * a1;
    std::swap(g, a1);
    x -= t * x1;
    std::swap(x, x1);
  }
  if (g != 1) throw internal_error("inv_mod: arguments not coprime");
  return detail::modnorm(x, m);
}

}  // namespace detail_gal

// Generators of (Z/N)^x for N = lcm(p, q-1, q+1), lifted through the CRT so
// each generator is 1 modulo the complementary factor.
inline std::vector<long long> galois_generators(const Context& C) {
  std::map<long long, long long> pp;  // prime -> prime power in N
  for (long long part : {C.p, C.q - 1, C.q + 1})
    for (auto& [f, e] : detail_gal::factorize(part)) {
      long long fe = 1;
      for (int t = 0; t < e; ++t) fe = detail::checked_mul(fe, f, "conductor factor");
      pp[f] = std::max(pp[f], fe);
    }
  long long N = C.N;
  std::vector<long long> gens;
  for (auto& [f, fe] : pp) {
    std::vector<long long> local;
    if (f == 2) {
      if (fe == 2) continue;  // (Z/2)^x trivial
      if (fe == 4) local = {3};
      else local = {fe - 1, 5};
    } else {
      int e = 0;
      for (long long t = fe; t > 1; t /= f) ++e;
      local = {detail_gal::primitive_root(f, e)};
    }
    long long M = N / fe;
    long long Minv = detail_gal::inv_mod(M % fe, fe);
    for (long long g : local) {
      // x = 1 + M*((g-1)*Minv mod fe): x = g mod fe, x = 1 mod M
      long long t = detail::mulmod(detail::modnorm(g - 1, fe), Minv, fe);
      long long x = (1 + detail::mulmod(M % N, t, N)) % N;
      gens.push_back(x);
    }
  }
  return gens;
}

// The label permutation induced by sigma_j.  Exponents multiply by j and fold
// into the canonical window; the split pair swaps exactly when j is a
// quadratic non-residue mod p.
inline IrrepLabel permute_label(const Context& C, long long j, const IrrepLabel& l) {
  long long jm = detail::modnorm(j, C.N);
  if (std::gcd(jm, C.N) != 1)
    throw value_error("permute_label: j = " + std::to_string(j) +
                      " is not a unit modulo " + std::to_string(C.N));
  switch (l.fam) {
    case Family::Triv:
    case Family::Steinberg:
      return l;
    case Family::Principal:
    case Family::Discrete: {
      long long m = l.fam == Family::Principal ? C.q - 1 : C.q + 1;
      long long e = detail::mulmod(jm % m, l.k, m);
      e = std::min(e, m - e);
      if (e <= 0 || e % 2 != 0 || 2 * e >= m)
        throw internal_error("permute_label: exponent left the label window");
      return l.fam == Family::Principal ? lbl_W(e) : lbl_X(e);
    }
    default: {
      long long ls = detail_gal::powmod(jm % C.p, (C.p - 1) / 2, C.p);
      if (ls == 1) return l;
      switch (l.fam) {
        case Family::WPrime: return lbl_wpp();
        case Family::WDoublePrime: return lbl_wp();
        case Family::XPrime: return lbl_xpp();
        default: return lbl_xp();
      }
    }
  }
}

inline CharDecomp apply_galois(const Context& C, long long j, const CharDecomp& d) {
  CharDecomp out;
  for (const auto& [l, m] : d) dec_add(out, permute_label(C, j, l), m);
  return out;
}

struct InvarianceWitness {
  bool invariant = true;
  long long j = 0;
  IrrepLabel from = lbl_triv(), to = lbl_triv();
  long long mult_from = 0, mult_to = 0;
};

inline InvarianceWitness is_invariant(const Context& C, const CharDecomp& d) {
  for (long long j : galois_generators(C))
    for (const auto& l : irreps(C)) {
      IrrepLabel lj = permute_label(C, j, l);
      long long a = dec_get(d, l), b = dec_get(d, lj);
      if (a != b) return {false, j, l, lj, a, b};
    }
  return {};
}

// L(D) through fixed-space dimensions, valid on the reduced divisor domain.
// The multiplicity of pi is
//   (r1 + r2 + r3/2 + r7/6 - 1/2) dim pi
//     + (1/2 - r2) dim pi^H2 + (1/2 - r3/2) dim pi^H3 + (1/2 - r7/6) dim pi^H7,
// an exact integer label by label.
inline CharDecomp fast_ld(const Context& C, const Divisor& D, bool allow_special = false) {
  if (D.r2 < 0 || D.r2 > 1 || D.r3 < 0 || D.r3 > 2)
    throw value_error("fast_ld: requires a reduced divisor with r2 in {0,1} "
                      "and r3 in {0,1,2}");
  if (D.r7 != 0 && D.r7 != 3 && D.r7 != 6)
    throw value_error("fast_ld: r7 must be one of {0, 3, 6}");
  long long s = divisor_s(D);
  if (s <= 0)
    throw divisor_error("deg D = " + std::to_string(divisor_degree(C, D)) +
                        " <= 0: the Riemann-Roch assembly is only certified "
                        "for positive-degree divisors");
  if (s == 1 && !allow_special)
    throw divisor_error(
        "deg D = 2g-2, so D is linearly equivalent to the canonical divisor "
        "and is special; request the formula value explicitly to bypass");
  Rational lead = Rational(-1, 2) + D.r1 + D.r2 + Rational(D.r3, 2) + Rational(D.r7, 6);
  Rational c2 = Rational(1, 2) - D.r2;
  Rational c3 = Rational(1, 2) - Rational(D.r3, 2);
  Rational c7 = Rational(1, 2) - Rational(D.r7, 6);
  CharDecomp out;
  for (const auto& l : irreps(C)) {
    Rational v = lead * irrep_dim(C, l);
    v += c2 * fixed_dim(C, l, 2);
    v += c3 * fixed_dim(C, l, 3);
    v += c7 * fixed_dim(C, l, 7);
    if (!is_integral(v))
      throw internal_error("fast_ld: non-integer multiplicity for " + to_string(l));
    dec_set(out, l, rat_to_ll(v, "fast_ld multiplicity"));
  }
  if (decomp_dim(C, out) != divisor_degree(C, D) + 1 - C.g)
    throw internal_error("fast_ld: dimension identity failed");
  return out;
}

}  // namespace hurwitz
