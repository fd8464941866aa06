#pragma once

#include <map>
#include <vector>

#include "hurwitz/char_table.hpp"
#include "hurwitz/core.hpp"
#include "hurwitz/psl2.hpp"

// Decompositions of Ind_{H_ell}^G theta_ell^k for ell in {2,3,7}: a closed
// form per residue class of q (mod 8, 12, 28), a reciprocity oracle that
// restricts each irreducible to the ell subgroup elements, and a fully
// independent brute-force path through explicit induced character values.
// theta_ell sends the chosen generator of H_ell to zeta_ell.

namespace hurwitz {

inline void check_induced_query(int ell, long long k) {
  if (ell != 2 && ell != 3 && ell != 7)
    throw value_error("induction subgroup order must be 2, 3, or 7");
  if (k < 1 || k > ell - 1)
    throw value_error("theta exponent must satisfy 1 <= k <= ell-1");
}

// The twelve residue-case decompositions.  For each ell the generic
// multiplicity on V, all W(a), and all X(a) is (q -+ 1)/ell according to
// whether 2*ell divides q-1 or q+1; the family on the same side as the
// special element deviates on the labels whose character is nontrivial
// (resp. maps to zeta_ell^{+-k}, for ell = 7) on it, and the split pair
// takes the printed per-case value.
inline CharDecomp induced_closed_form(const Context& C, int ell, long long k) {
  check_induced_query(ell, k);
  long long q = C.q;
  const SpecialElt& s = ell == 2 ? C.s2 : ell == 3 ? C.s3 : C.s7;
  bool dev_on_w = s.split;  // special element in F^x: alpha side deviates
  long long base = dev_on_w ? (q - 1) / ell : (q + 1) / ell;
  long long split_mult = 0;
  long long dev = 0;
  if (ell == 2) {
    dev = 2;
    switch (q % 8) {
      case 1: split_mult = (q - 1) / 4; break;
      case 5: split_mult = (q + 3) / 4; break;
      case 3: split_mult = (q - 3) / 4; break;
      case 7: split_mult = (q + 1) / 4; break;
      default: throw internal_error("induced_closed_form: even q leaked through");
    }
  } else {
    dev = 1;
    split_mult = base / 2;  // (q -+ 1)/(2*ell), integral on the matching side
  }
  auto deviates = [&](const IrrepLabel& l) {
    if (ell == 7) {
      long long e = l.k / 2 % 7;  // alpha_k(phi) resp. beta_k(phi) = zeta_7^e
      long long kk = k % 7;
      return e == kk || e == 7 - kk;
    }
    return special_value_nontrivial(l, s);
  };
  CharDecomp d;
  for (const auto& l : irreps(C)) {
    switch (l.fam) {
      case Family::Triv:
        break;
      case Family::Steinberg:
        dec_set(d, l, base);
        break;
      case Family::WPrime:
      case Family::WDoublePrime:
      case Family::XPrime:
      case Family::XDoublePrime:
        dec_set(d, l, split_mult);
        break;
      case Family::Principal:
        dec_set(d, l, base + (dev_on_w && deviates(l) ? dev : 0));
        break;
      case Family::Discrete:
        dec_set(d, l, base - (!dev_on_w && deviates(l) ? dev : 0));
        break;
    }
  }
  long long dim = 0;
  for (const auto& [l, m] : d)
    dim = detail::checked_add(dim, detail::checked_mul(m, irrep_dim(C, l), "dim"), "dim");
  if (dim != C.order / ell)
    throw internal_error("induced_closed_form: dimension defect at q = " +
                         std::to_string(q) + ", ell = " + std::to_string(ell));
  return d;
}

// Frobenius reciprocity: mult of pi equals <theta^k, Res_{H_ell} pi>,
// an average over the ell subgroup elements.
inline CharDecomp induced_oracle(const Context& C, int ell, long long k) {
  check_induced_query(ell, k);
  SubgroupHandle H = subgroup(C, ell);
  std::vector<ClassLabel> cls;
  for (const auto& h : H.elements) cls.push_back(class_of(C, h));
  CharDecomp d;
  for (const auto& pi : irreps(C)) {
    Cyc acc;
    for (int t = 0; t < ell; ++t)
      acc += Cyc::root(ell, detail::modnorm(k * t, ell)) *
             char_value(C, pi, cls[static_cast<size_t>(t)]).conj();
    acc = acc * Rational(1, ell);
    if (!acc.is_rational() || !is_integral(acc.rational_value()))
      throw internal_error("induced_oracle: non-integer multiplicity for " +
                           to_string(pi));
    long long m = rat_to_ll(acc.rational_value());
    if (m < 0)
      throw internal_error("induced_oracle: negative multiplicity for " + to_string(pi));
    dec_set(d, pi, m);
  }
  return d;
}

// Belt-and-suspenders path: compute the induced character value on every
// conjugacy class by summing theta over the conjugates that land in H_ell,
// then decompose with exact inner products.  Needs full enumeration.
inline ClassFunction induced_character_brute(const Context& C, int ell, long long k) {
  check_induced_query(ell, k);
  SubgroupHandle H = subgroup(C, ell);
  std::map<ProjMat, int> in_h;
  for (int t = 0; t < ell; ++t)
    in_h[H.elements[static_cast<size_t>(t)]] = t;
  std::vector<ProjMat> G = enumerate_group(C);
  ClassFunction f;
  for (const auto& c : C.classes) {
    ProjMat r = C.class_rep(c);
    Cyc acc;
    for (const auto& x : G) {
      ProjMat y = pm_mul(C.F, pm_mul(C.F, x, r), pm_inv(C.F, x));
      auto it = in_h.find(y);
      if (it != in_h.end())
        acc += Cyc::root(ell, detail::modnorm(static_cast<long long>(k) * it->second, ell));
    }
    f[c] = acc * Rational(1, ell);
  }
  return f;
}

inline CharDecomp induced_brute(const Context& C, int ell, long long k) {
  ClassFunction ind = induced_character_brute(C, ell, k);
  CharDecomp d;
  for (const auto& pi : irreps(C)) {
    Cyc v = inner_product(C, ind, character(C, pi));
    if (!v.is_rational() || !is_integral(v.rational_value()))
      throw internal_error("induced_brute: non-integer multiplicity for " + to_string(pi));
    long long m = rat_to_ll(v.rational_value());
    if (m < 0)
      throw internal_error("induced_brute: negative multiplicity for " + to_string(pi));
    dec_set(d, pi, m);
  }
  return d;
}

inline long long decomp_dim(const Context& C, const CharDecomp& d) {
  long long dim = 0;
  for (const auto& [l, m] : d)
    dim = detail::checked_add(dim, detail::checked_mul(m, irrep_dim(C, l), "dim"), "dim");
  return dim;
}

}  // namespace hurwitz
