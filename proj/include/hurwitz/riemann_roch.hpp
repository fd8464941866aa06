#pragma once

#include <map>
#include <string>
#include <utility>

#include "hurwitz/core.hpp"
#include "hurwitz/induced.hpp"

// The ramification module, equivariant degrees of invariant divisors, and the
// G-module structure of L(D) and L(K).  The compositional path through the
// induced characters is authoritative; the consolidated closed forms are
// rebuilt from it and cross-checked entrywise on every call.

namespace hurwitz {

inline long long floordiv(long long a, long long b) {
  long long v = a / b, r = a % b;
  return r != 0 && (r < 0) != (b < 0) ? v - 1 : v;
}

inline CharDecomp regular_character(const Context& C) {
  CharDecomp d;
  for (const auto& l : irreps(C)) dec_set(d, l, irrep_dim(C, l));
  return d;
}

// Literal residue rule for the base multiplicity: floor for
// q mod 84 in {1,13,29,43}, ceiling for {41,55,71,83}.
inline long long base_m(long long q) {
  Admissibility A = classify_q(q);
  if (!A.admissible)
    throw inadmissible_error("q = " + std::to_string(q) + ": " + A.reason);
  switch (A.mod84) {
    case 1:
    case 13:
    case 29:
    case 43:
      return q + q / 84;
    case 41:
    case 55:
    case 71:
    case 83:
      return q + (q + 83) / 84;
  }
  throw internal_error("base_m: impossible residue");
}

// The multiplicity of V in the ramification module, in closed form:
// (85q + 21 s2 + 28 s3 + 36 s7)/84 with s_ell = +1 when the order-2*ell
// special element lies in the torus and -1 when it lies in F^x.  Differs
// from base_m exactly when q = 1 or 83 mod 84.
inline long long exact_m(const Context& C) {
  long long s2 = C.s2.split ? -1 : 1;
  long long s3 = C.s3.split ? -1 : 1;
  long long s7 = C.s7.split ? -1 : 1;
  long long num = 85 * C.q + 21 * s2 + 28 * s3 + 36 * s7;
  if (num % 84 != 0) throw internal_error("exact_m: numerator not divisible by 84");
  return num / 84;
}

// N_alpha / N_beta: for each W(a), how many of the special elements lying in
// F^x have alpha_a nontrivial on them; for each X(a), the same over the
// special elements lying in T.
inline std::pair<std::map<IrrepLabel, int>, std::map<IrrepLabel, int>> n_values(
    const Context& C) {
  std::map<IrrepLabel, int> na, nb;
  const SpecialElt* specials[3] = {&C.s2, &C.s3, &C.s7};
  for (const auto& l : irreps(C)) {
    if (l.fam == Family::Principal) {
      int c = 0;
      for (const SpecialElt* s : specials)
        if (s->split && special_value_nontrivial(l, *s)) ++c;
      na[l] = c;
    } else if (l.fam == Family::Discrete) {
      int c = 0;
      for (const SpecialElt* s : specials)
        if (!s->split && special_value_nontrivial(l, *s)) ++c;
      nb[l] = c;
    }
  }
  return {na, nb};
}

// The four-case consolidated formula for the ramification module, driven by
// the exact base multiplicity.
inline CharDecomp gamma_closed(const Context& C) {
  long long m = exact_m(C);
  auto [na, nb] = n_values(C);
  CharDecomp d;
  dec_set(d, lbl_steinberg(), m);
  for (const auto& [l, c] : na) dec_set(d, l, m + c);
  for (const auto& [l, c] : nb) dec_set(d, l, m - c);
  long long sp = 0;
  switch (C.q % 8) {
    case 1: sp = m / 2; break;
    case 5: sp = (m + 1) / 2; break;
    case 3: sp = (m - 1) / 2; break;
    case 7: sp = m / 2; break;
  }
  if (C.q % 4 == 1) {
    if ((C.q % 8 == 1 && m % 2 != 0) || (C.q % 8 == 5 && m % 2 == 0))
      throw internal_error("gamma_closed: split coefficient is not integral");
    dec_set(d, lbl_wp(), sp);
    dec_set(d, lbl_wpp(), sp);
  } else {
    if ((C.q % 8 == 3 && m % 2 == 0) || (C.q % 8 == 7 && m % 2 != 0))
      throw internal_error("gamma_closed: split coefficient is not integral");
    dec_set(d, lbl_xp(), sp);
    dec_set(d, lbl_xpp(), sp);
  }
  return d;
}

// The fixed-space route: mult of pi is sum over ell of
// (dim pi - dim pi^{H_ell})/2.  Exact but slower (cyclotomic sums).
inline CharDecomp gamma_fixed_dim(const Context& C) {
  CharDecomp d;
  for (const auto& l : irreps(C)) {
    long long dim = irrep_dim(C, l);
    long long acc = 0;
    for (int ell : {2, 3, 7}) {
      long long diff = dim - fixed_dim(C, l, ell);
      if (diff % 2 != 0)
        throw internal_error("gamma_fixed_dim: odd codimension for " + to_string(l));
      acc += diff / 2;
    }
    dec_set(d, l, acc);
  }
  return d;
}

struct RamificationModule {
  CharDecomp total;
  CharDecomp h2, h3, h7;
};

inline RamificationModule ramification_module(const Context& C) {
  RamificationModule R;
  CharDecomp ind2 = induced_closed_form(C, 2, 1);
  for (const auto& [l, m] : ind2) {
    if (m % 2 != 0)
      throw internal_error("ramification_module: odd entry in Ind theta_2");
    dec_set(R.h2, l, m / 2);
  }
  R.h3 = induced_closed_form(C, 3, 1);
  R.h7 = dec_sum(dec_sum(induced_closed_form(C, 7, 1), induced_closed_form(C, 7, 2)),
                 induced_closed_form(C, 7, 4));
  R.total = dec_sum(dec_sum(R.h2, R.h3), R.h7);
  if (dec_get(R.total, lbl_triv()) != 0)
    throw internal_error("ramification_module: trivial summand present");
  long long want_dim = detail::checked_mul(85, C.g - 1, "ramification dim");
  if (decomp_dim(C, R.total) != want_dim)
    throw internal_error("ramification_module: dimension is not 85(g-1)");
  if (dec_get(R.total, lbl_steinberg()) != exact_m(C))
    throw internal_error("ramification_module: base multiplicity defect");
  if (R.total != gamma_closed(C))
    throw internal_error("ramification_module: compositional total disagrees "
                         "with the consolidated formula");
  return R;
}

inline long long divisor_s(const Divisor& D) {
  return 42 * D.r1 + 21 * D.r2 + 14 * D.r3 + 6 * D.r7;
}

inline long long divisor_degree(const Context& C, const Divisor& D) {
  return detail::checked_mul(divisor_s(D), C.order / 42, "divisor degree");
}

// deg_eq(D): reduce each r_ell by ell into the pullback part, then add the
// residual induced characters.  Additive in D; negative coefficients flow
// through the floor reduction.
inline CharDecomp equivariant_degree(const Context& C, const Divisor& D) {
  long long q2 = floordiv(D.r2, 2), q3 = floordiv(D.r3, 3), q7 = floordiv(D.r7, 7);
  long long s2 = D.r2 - 2 * q2, s3 = D.r3 - 3 * q3, s7 = D.r7 - 7 * q7;
  long long c1 = D.r1 + q2 + q3 + q7;
  CharDecomp d = dec_scaled(regular_character(C), c1);
  if (s2 == 1) d = dec_sum(d, induced_closed_form(C, 2, 1));
  for (long long t = 0; t < s3; ++t)
    d = dec_sum(d, induced_closed_form(C, 3, t + 1));
  for (long long t = 0; t < s7; ++t)
    d = dec_sum(d, induced_closed_form(C, 7, t + 1));
  return d;
}

inline constexpr Divisor canonical_divisor() { return {-2, 1, 2, 6}; }

// L(D) through the equivariant Euler characteristic.  Divisors of degree
// <= 0 are rejected; degree exactly 2g-2 means D ~ K (the only degree at
// which our divisor lattice meets a special divisor), rejected unless the
// caller explicitly asks for the formula value, whose trivial-isotypic entry
// is then one short of the honest module.
inline CharDecomp riemann_roch(const Context& C, const Divisor& D,
                               bool allow_special = false) {
  long long s = divisor_s(D);
  if (s <= 0)
    throw divisor_error("deg D = " + std::to_string(divisor_degree(C, D)) +
                        " <= 0: the Riemann-Roch assembly is only certified "
                        "for positive-degree divisors");
  if (s == 1 && !allow_special)
    throw divisor_error(
        "deg D = 2g-2, so D is linearly equivalent to the canonical divisor "
        "and is special; request the formula value explicitly to bypass");
  CharDecomp d = dec_sum(regular_character(C), equivariant_degree(C, D));
  d = dec_diff(d, ramification_module(C).total);
  long long want = divisor_degree(C, D) + 1 - C.g;
  if (decomp_dim(C, d) != want)
    throw internal_error("riemann_roch: dimension identity failed");
  if (s >= 2)
    for (const auto& [l, m] : d)
      if (m < 0)
        throw internal_error("riemann_roch: negative multiplicity for " + to_string(l));
  return d;
}

// L(K): the eight-residue-case closed form mod 168, driven by the exact base
// multiplicity, cross-checked against Gamma - C[G] + Triv.
inline CharDecomp canonical_module(const Context& C) {
  long long c = exact_m(C) - C.q;
  auto [na, nb] = n_values(C);
  CharDecomp d;
  dec_set(d, lbl_steinberg(), c);
  for (const auto& [l, n] : na) dec_set(d, l, c - 1 + n);
  for (const auto& [l, n] : nb) dec_set(d, l, c + 1 - n);
  long long num = 0;
  switch (C.q % 8) {
    case 1: num = c - 1; break;
    case 5: num = c; break;
    case 3: num = c; break;
    case 7: num = c + 1; break;
  }
  if (num % 2 != 0)
    throw internal_error("canonical_module: split coefficient is not integral");
  if (C.q % 4 == 1) {
    dec_set(d, lbl_wp(), num / 2);
    dec_set(d, lbl_wpp(), num / 2);
  } else {
    dec_set(d, lbl_xp(), num / 2);
    dec_set(d, lbl_xpp(), num / 2);
  }
  CharDecomp ref = dec_diff(ramification_module(C).total, regular_character(C));
  dec_add(ref, lbl_triv(), 1);
  if (d != ref)
    throw internal_error("canonical_module: case formula disagrees with "
                         "Gamma - C[G] + Triv");
  if (decomp_dim(C, d) != C.g)
    throw internal_error("canonical_module: dimension is not g");
  for (const auto& [l, m] : d)
    if (m < 0)
      throw internal_error("canonical_module: negative multiplicity for " + to_string(l));
  return d;
}

// H^1(X, C) as a G-module: two copies of L(K) (Hodge decomposition; L(K) is
// conjugation-stable since the split pair always occurs with equal
// multiplicity).
inline CharDecomp h1_module(const Context& C) {
  CharDecomp d = dec_scaled(canonical_module(C), 2);
  if (decomp_dim(C, d) != 2 * C.g)
    throw internal_error("h1_module: dimension is not 2g");
  return d;
}

}  // namespace hurwitz
