#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/core.hpp"
#include "hurwitz/cyclotomic.hpp"
#include "hurwitz/finite_field.hpp"

// The group G = PSL(2,q) for Hurwitz-admissible q: canonical matrix
// representatives, conjugacy classes, full enumeration at small q, and the
// cyclic subgroups H_2, H_3, H_7 generated by the special torus elements.

namespace hurwitz {

struct Admissibility {
  long long q = 0;
  bool admissible = false;
  std::string reason;  // empty iff admissible
  long long p = 0;     // characteristic, when q is a prime or a prime cube
  int n = 0;           // q = p^n
  long long mod4 = 0, mod3 = 0, mod7 = 0, mod8 = 0, mod12 = 0, mod28 = 0,
            mod84 = 0, mod168 = 0;
  long long group_order = 0;  // q(q^2-1)/2, admissible only
  long long genus = 0;        // 1 + q(q^2-1)/168, admissible only
};

// G = PSL(2,q) acts as the full automorphism group of a Hurwitz curve exactly
// when q is a prime congruent to +-1 mod 7, or the cube of a prime congruent
// to +-2 or +-3 mod 7, with gcd(q, 42) = 1 so that the three branch orders
// 2, 3, 7 are all prime to the characteristic.
inline Admissibility classify_q(long long q) {
  Admissibility A;
  A.q = q;
  if (q < 2) {
    A.reason = "q must be an integer >= 2";
    return A;
  }
  A.mod4 = q % 4;
  A.mod3 = q % 3;
  A.mod7 = q % 7;
  A.mod8 = q % 8;
  A.mod12 = q % 12;
  A.mod28 = q % 28;
  A.mod84 = q % 84;
  A.mod168 = q % 168;
  long long d = std::gcd(q, 42LL);
  if (d != 1) {
    A.reason = "gcd(q, 42) = " + std::to_string(d) +
               "; q must be coprime to 2*3*7";
    return A;
  }
  if (is_prime_ll(q)) {
    A.p = q;
    A.n = 1;
    if (A.mod7 != 1 && A.mod7 != 6) {
      A.reason = "prime q must satisfy q = +-1 mod 7 (q mod 7 = " +
                 std::to_string(A.mod7) + ")";
      return A;
    }
  } else {
    long long r = std::llround(std::cbrt(static_cast<double>(q)));
    long long p = 0;
    for (long long c = std::max(2LL, r - 2); c <= r + 2; ++c)
      if (c * c * c == q) p = c;
    if (p == 0 || !is_prime_ll(p)) {
      A.reason = "q is neither a prime nor the cube of a prime";
      return A;
    }
    A.p = p;
    A.n = 3;
    long long pm7 = p % 7;
    if (pm7 == 1 || pm7 == 6) {
      A.reason = "q = p^3 requires p = +-2 or +-3 mod 7 (p mod 7 = " +
                 std::to_string(pm7) + ")";
      return A;
    }
  }
  A.admissible = true;
  long long q2m1 = detail::checked_mul(q - 1, q + 1, "q^2-1");
  A.group_order = detail::checked_mul(q, q2m1 / 2, "group order");
  // q^2 - 1 is divisible by 168 for every admissible q (q odd, prime to 3,
  // q = +-1 mod 7), so the genus formula is exact integer arithmetic.
  if (q2m1 % 168 != 0)
    throw internal_error("classify_q: q^2-1 not divisible by 168");
  A.genus = 1 + detail::checked_mul(q, q2m1 / 168, "genus");
  static const long long good84[] = {1, 13, 29, 41, 43, 55, 71, 83};
  if (std::find(std::begin(good84), std::end(good84), A.mod84) ==
      std::end(good84))
    throw internal_error("classify_q: admissible q with q mod 84 = " +
                         std::to_string(A.mod84));
  return A;
}

inline long long group_order(long long q) {
  Admissibility A = classify_q(q);
  if (!A.admissible) throw inadmissible_error("q = " + std::to_string(q) + ": " + A.reason);
  return A.group_order;
}

inline long long genus(long long q) {
  Admissibility A = classify_q(q);
  if (!A.admissible) throw inadmissible_error("q = " + std::to_string(q) + ": " + A.reason);
  return A.genus;
}

// An element of PSL(2,q): the pair {M, -M} stored as the representative whose
// (a,b,c,d) code tuple is lexicographically smaller.
struct ProjMat {
  long long a = 1, b = 0, c = 0, d = 1;
  friend auto operator<=>(const ProjMat&, const ProjMat&) = default;
};

inline ProjMat pm_canonical(const FiniteField& F, long long a, long long b,
                            long long c, long long d) {
  long long na = F.neg(a), nb = F.neg(b), nc = F.neg(c), nd = F.neg(d);
  if (std::array{na, nb, nc, nd} < std::array{a, b, c, d})
    return {na, nb, nc, nd};
  return {a, b, c, d};
}

inline ProjMat pm_make(const FiniteField& F, long long a, long long b,
                       long long c, long long d) {
  long long det = F.sub(F.mul(a, d), F.mul(b, c));
  if (det != F.from_int(1))
    throw internal_error("pm_make: determinant is not 1");
  return pm_canonical(F, a, b, c, d);
}

inline ProjMat pm_identity(const FiniteField& F) {
  return {F.from_int(1), 0, 0, F.from_int(1)};
}

inline ProjMat pm_mul(const FiniteField& F, const ProjMat& x, const ProjMat& y) {
  return pm_canonical(F, F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
                      F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
                      F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
                      F.add(F.mul(x.c, y.b), F.mul(x.d, y.d)));
}

inline ProjMat pm_inv(const FiniteField& F, const ProjMat& x) {
  return pm_canonical(F, x.d, F.neg(x.b), F.neg(x.c), x.a);
}

inline ProjMat pm_pow(const FiniteField& F, ProjMat x, long long e) {
  ProjMat r = pm_identity(F);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = pm_mul(F, r, x);
    x = pm_mul(F, x, x);
  }
  return r;
}

// One of the three special elements i, omega, phi of order 4, 6, 14 in the
// ambient cyclic group: it lives in F^x when ell divides (q-1)/2, otherwise
// in the norm-one torus T, and squares to an element of order ell whose image
// in PSL(2,q) generates H_ell.
struct SpecialElt {
  int ell = 0;          // 2, 3, or 7
  bool split = false;   // true: in F^x; false: in T
  long long exponent = 0;  // power of eps resp. tau
  long long fx = 0;     // field element code, split case
  Fq2Elt tz{1, 0};      // torus element, nonsplit case
  ProjMat mat;          // image in PSL(2,q), of projective order ell
};

struct SubgroupHandle {
  int order = 0;
  ProjMat generator;
  std::vector<ProjMat> elements;  // generator^0 .. generator^(order-1)
};

struct ContextOptions {
  int eps_choice = 0;     // index into the ascending generator list of F^x
  int tau_choice = 0;     // same for the torus
  long long enum_cap = 0; // 0: read HURWITZ_ENUM_CAP, default 200000
};

inline constexpr long long kDefaultEnumCap = 200000;
inline constexpr long long kMaxContextQ = 2000000;

// Everything per-q the rest of the engine needs: the field with discrete
// logs, the quadratic extension and its norm-one torus, the special elements,
// and the conjugacy-class inventory.
class Context {
 public:
  Admissibility adm;
  long long q = 0, p = 0;
  int n = 0;
  FiniteField F;
  long long eps = 0;                    // chosen generator of F^x
  std::vector<long long> pow_eps;       // eps^k, k in [0, q-1)
  std::vector<long long> dlog_fx;       // inverse table; dlog_fx[0] = -1
  Fq2 K;
  Torus T;
  long long N = 1;                      // lcm(p, q-1, q+1): conductor of all
                                        // character values
  long long order = 0, g = 0;
  long long inv2 = 0;
  SpecialElt s2, s3, s7;
  ContextOptions opt;

  std::vector<ClassLabel> classes;      // serialization order
  std::vector<long long> class_sizes;
  std::map<ClassLabel, size_t> class_index;

  long long h_fx = 0;  // (q-1)/2: eps^h = -1
  long long h_t = 0;   // (q+1)/2: tau^h = -1

  static Context make(long long q, const ContextOptions& opt = {});
  static const Context& get(long long q);

  // quadratic-residue character of F^x
  int chi(long long x) const {
    if (x == 0) throw value_error("chi(0) is undefined");
    return dlog_fx[static_cast<size_t>(x)] % 2 == 0 ? 1 : -1;
  }

  long long canon_split_exponent(long long k) const {
    long long m = q - 1;
    k = detail::modnorm(k, m);
    if (k % h_fx == 0) throw value_error("split exponent reduces to the identity");
    long long cands[4] = {k, m - k, (k + h_fx) % m, (m - k + h_fx) % m};
    return *std::min_element(std::begin(cands), std::end(cands));
  }

  long long canon_nonsplit_exponent(long long k) const {
    long long m = q + 1;
    k = detail::modnorm(k, m);
    if (k % h_t == 0) throw value_error("nonsplit exponent reduces to the identity");
    long long cands[4] = {k, m - k, (k + h_t) % m, (m - k + h_t) % m};
    return *std::min_element(std::begin(cands), std::end(cands));
  }

  long long class_size(const ClassLabel& c) const {
    switch (c.kind) {
      case ClassKind::Identity:
        return 1;
      case ClassKind::UnipotentMain:
      case ClassKind::UnipotentTwisted:
        return (q * q - 1) / 2;
      case ClassKind::Split:
        // the involution class (2k = (q-1)/2) has half the generic size
        return 2 * c.k == h_fx ? q * (q + 1) / 2 : q * (q + 1);
      case ClassKind::NonSplit:
        return 2 * c.k == h_t ? q * (q - 1) / 2 : q * (q - 1);
    }
    throw internal_error("class_size: bad label");
  }

  ProjMat class_rep(const ClassLabel& c) const {
    switch (c.kind) {
      case ClassKind::Identity:
        return pm_identity(F);
      case ClassKind::UnipotentMain:
        return pm_make(F, F.from_int(1), F.from_int(1), 0, F.from_int(1));
      case ClassKind::UnipotentTwisted:
        return pm_make(F, F.from_int(1), eps, 0, F.from_int(1));
      case ClassKind::Split: {
        long long x = pow_eps[static_cast<size_t>(c.k)];
        return pm_make(F, x, 0, 0, F.inv(x));
      }
      case ClassKind::NonSplit: {
        Fq2Elt z = K.decode(T.pow_code[static_cast<size_t>(c.k)]);
        return pm_make(F, z.a, F.mul(eps, z.b), z.b, z.a);
      }
    }
    throw internal_error("class_rep: bad label");
  }

  // Gauss periods xi, xi' at this q (xi sums the character of the squares);
  // available whenever the split-series character values are needed.
  const std::pair<Cyc, Cyc>& gauss() const {
    if (!gauss_) throw limit_error("Gauss periods unavailable: q too large for table arithmetic");
    return *gauss_;
  }
  bool has_gauss() const { return gauss_.has_value(); }

  long long resolve_enum_cap() const {
    if (opt.enum_cap > 0) return opt.enum_cap;
    if (const char* e = std::getenv("HURWITZ_ENUM_CAP")) {
      char* end = nullptr;
      long long v = std::strtoll(e, &end, 10);
      if (end && *end == '\0' && v > 0) return v;
      throw value_error("HURWITZ_ENUM_CAP must be a positive integer");
    }
    return kDefaultEnumCap;
  }

 private:
  std::optional<std::pair<Cyc, Cyc>> gauss_;

  static SpecialElt make_special(const Context& C, int ell);
};

inline SpecialElt Context::make_special(const Context& C, int ell) {
  SpecialElt s;
  s.ell = ell;
  const FiniteField& F = C.F;
  if (((C.q - 1) / 2) % ell == 0) {
    s.split = true;
    s.exponent = (C.q - 1) / (2 * ell);
    s.fx = C.pow_eps[static_cast<size_t>(s.exponent)];
    s.mat = pm_make(F, s.fx, 0, 0, F.inv(s.fx));
  } else {
    if (((C.q + 1) / 2) % ell != 0)
      throw internal_error("special element: 2*ell divides neither q-1 nor q+1");
    s.split = false;
    s.exponent = (C.q + 1) / (2 * ell);
    s.tz = C.K.decode(C.T.pow_code[static_cast<size_t>(s.exponent)]);
    s.mat = pm_make(F, s.tz.a, F.mul(C.eps, s.tz.b), s.tz.b, s.tz.a);
  }
  if (pm_pow(F, s.mat, ell) != pm_identity(F) || s.mat == pm_identity(F))
    throw internal_error("special element has wrong projective order");
  return s;
}

inline Context Context::make(long long q, const ContextOptions& opt) {
  Admissibility A = classify_q(q);
  if (!A.admissible)
    throw inadmissible_error("q = " + std::to_string(q) + ": " + A.reason);
  if (q > kMaxContextQ)
    throw limit_error("q exceeds the supported bound " + std::to_string(kMaxContextQ));
  Context C;
  C.adm = A;
  C.q = q;
  C.p = A.p;
  C.n = A.n;
  C.opt = opt;
  C.F = FiniteField::make(A.p, A.n);
  C.eps = multiplicative_generator(C.F, opt.eps_choice);
  C.pow_eps.assign(static_cast<size_t>(q - 1), 0);
  C.dlog_fx.assign(static_cast<size_t>(q), -1);
  long long x = C.F.from_int(1);
  for (long long k = 0; k < q - 1; ++k) {
    C.pow_eps[static_cast<size_t>(k)] = x;
    if (C.dlog_fx[static_cast<size_t>(x)] != -1)
      throw internal_error("eps is not a generator");
    C.dlog_fx[static_cast<size_t>(x)] = k;
    x = C.F.mul(x, C.eps);
  }
  if (x != C.F.from_int(1)) throw internal_error("eps order defect");
  C.K = Fq2{C.F, C.eps};
  C.T = Torus::make(C.K, C.dlog_fx, opt.tau_choice);
  C.N = lcm_checked(lcm_checked(A.p, q - 1), q + 1);
  C.order = A.group_order;
  C.g = A.genus;
  C.inv2 = C.F.inv(C.F.from_int(2));
  C.h_fx = (q - 1) / 2;
  C.h_t = (q + 1) / 2;
  C.s2 = make_special(C, 2);
  C.s3 = make_special(C, 3);
  C.s7 = make_special(C, 7);

  C.classes.push_back({ClassKind::Identity, 0});
  C.classes.push_back({ClassKind::UnipotentMain, 0});
  C.classes.push_back({ClassKind::UnipotentTwisted, 0});
  for (long long k = 1; k <= (q - 1) / 4; ++k)
    C.classes.push_back({ClassKind::Split, k});
  for (long long k = 1; k <= (q + 1) / 4; ++k)
    C.classes.push_back({ClassKind::NonSplit, k});
  if (static_cast<long long>(C.classes.size()) != 3 + (q - 1) / 2)
    throw internal_error("class inventory count is off");
  long long total = 0;
  for (size_t i = 0; i < C.classes.size(); ++i) {
    C.class_index[C.classes[i]] = i;
    C.class_sizes.push_back(C.class_size(C.classes[i]));
    total = detail::checked_add(total, C.class_sizes.back(), "class sizes");
  }
  if (total != C.order)
    throw internal_error("class sizes do not sum to the group order");

  if (A.n == 3) {
    // read the periods through the trace form: the additive character of
    // GF(q) restricted along Tr to the prime field
    std::vector<long long> tr_sq, tr_nsq;
    for (long long c = 1; c < q; ++c) {
      long long t = C.F.trace(c);
      (C.dlog_fx[static_cast<size_t>(c)] % 2 == 0 ? tr_sq : tr_nsq).push_back(t);
    }
    C.gauss_ = gauss_periods_traced(A.p, tr_sq, tr_nsq);
  } else if (q <= kDefaultEnumCap) {
    C.gauss_ = gauss_periods(q);
  }
  return C;
}

inline const Context& Context::get(long long q) {
  static std::mutex mu;
  static std::map<long long, std::shared_ptr<const Context>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::make_shared<const Context>(make(q))).first;
  return *it->second;
}

// Conjugacy class of g.  Split/nonsplit elements are recognized by whether
// trace^2 - 4 is a square; the eigenvalue exponent is read off the discrete
// log tables and canonicalized under inversion and the sign shift.  For the
// two unipotent classes, conjugating the rank-one nilpotent part N = g - 1 by
// [[alpha,beta],[gamma,delta]] scales its entries by squares only: the lower
// left entry of u*N becomes -u*gamma^2 and the upper right u*alpha^2, so
// chi(-c) (or chi(b) when c = 0) is constant on the orbit.
inline ClassLabel class_of(const Context& C, const ProjMat& g) {
  const FiniteField& F = C.F;
  if (g == pm_identity(F)) return {ClassKind::Identity, 0};
  long long t = F.add(g.a, g.d);
  long long disc = F.sub(F.mul(t, t), F.from_int(4));
  if (disc == 0) {
    long long a = g.a, b = g.b, c = g.c;
    if (t == F.from_int(-2)) {  // flip to the trace=+2 representative
      a = F.neg(a);
      b = F.neg(b);
      c = F.neg(c);
    }
    long long u = c != 0 ? F.neg(c) : b;
    return {C.chi(u) == 1 ? ClassKind::UnipotentMain : ClassKind::UnipotentTwisted, 0};
  }
  long long dl = C.dlog_fx[static_cast<size_t>(disc)];
  if (dl % 2 == 0) {
    // eigenvalues (t +- sqrt(disc))/2 in F^x
    long long s = C.pow_eps[static_cast<size_t>(dl / 2)];
    long long lam = F.mul(F.add(t, s), C.inv2);
    return {ClassKind::Split, C.canon_split_exponent(C.dlog_fx[static_cast<size_t>(lam)])};
  }
  // eigenvalues in the norm-one torus: disc = eps * w^2
  long long w = C.pow_eps[static_cast<size_t>((dl - 1) / 2)];
  Fq2Elt z{F.mul(t, C.inv2), F.mul(w, C.inv2)};
  return {ClassKind::NonSplit, C.canon_nonsplit_exponent(C.T.dlog_of(z))};
}

// All of PSL(2,q), each element once, ordered by the canonical (a,b,c,d)
// code tuple.  Guarded by the enumeration cap: the closed-form paths cover
// everything this stream is used to cross-check.
inline std::vector<ProjMat> enumerate_group(const Context& C) {
  long long cap = C.resolve_enum_cap();
  if (C.order > cap)
    throw cap_error("enumeration of |G| = " + std::to_string(C.order) +
                    " elements exceeds the cap " + std::to_string(cap) +
                    " (raise HURWITZ_ENUM_CAP, or use the closed-form paths)");
  const FiniteField& F = C.F;
  std::vector<ProjMat> out;
  out.reserve(static_cast<size_t>(C.order));
  long long q = C.q;
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b) {
      if (a == 0) {
        if (b == 0) continue;
        // determinant -bc = 1
        long long c = F.neg(F.inv(b));
        for (long long d = 0; d < q; ++d) {
          ProjMat m{a, b, c, d};
          if (pm_canonical(F, a, b, c, d) == m) out.push_back(m);
        }
      } else {
        long long ia = F.inv(a);
        for (long long c = 0; c < q; ++c) {
          long long d = F.mul(ia, F.add(F.from_int(1), F.mul(b, c)));
          ProjMat m{a, b, c, d};
          if (pm_canonical(F, a, b, c, d) == m) out.push_back(m);
        }
      }
    }
  if (static_cast<long long>(out.size()) != C.order)
    throw internal_error("enumeration produced " + std::to_string(out.size()) +
                         " elements, expected " + std::to_string(C.order));
  return out;
}

inline SubgroupHandle subgroup(const Context& C, int ell) {
  if (ell != 2 && ell != 3 && ell != 7)
    throw value_error("subgroup order must be 2, 3, or 7");
  const SpecialElt& s = ell == 2 ? C.s2 : ell == 3 ? C.s3 : C.s7;
  SubgroupHandle H;
  H.order = ell;
  H.generator = s.mat;
  ProjMat x = pm_identity(C.F);
  for (int t = 0; t < ell; ++t) {
    H.elements.push_back(x);
    x = pm_mul(C.F, x, s.mat);
  }
  if (x != pm_identity(C.F))
    throw internal_error("subgroup generator order defect");
  return H;
}

}  // namespace hurwitz
