#pragma once

#include <map>
#include <vector>

#include "hurwitz/core.hpp"
#include "hurwitz/cyclotomic.hpp"
#include "hurwitz/psl2.hpp"

// The complete character table of PSL(2,q) over exact cyclotomics.  Rows are
// IrrepLabels, columns ClassLabels; the split pair W'/W'' (q = 1 mod 4) or
// X'/X'' (q = 3 mod 4) carries the Gauss periods on the unipotent classes,
// with the primed member the one whose UnipotentMain value involves xi.

namespace hurwitz {

inline long long irrep_dim(const Context& C, const IrrepLabel& l) {
  switch (l.fam) {
    case Family::Triv:
      return 1;
    case Family::Steinberg:
      return C.q;
    case Family::WPrime:
    case Family::WDoublePrime:
      return (C.q + 1) / 2;
    case Family::XPrime:
    case Family::XDoublePrime:
      return (C.q - 1) / 2;
    case Family::Discrete:
      return C.q - 1;
    case Family::Principal:
      return C.q + 1;
  }
  throw internal_error("irrep_dim: bad label");
}

inline void check_irrep_label(const Context& C, const IrrepLabel& l) {
  bool q1mod4 = C.q % 4 == 1;
  switch (l.fam) {
    case Family::Triv:
    case Family::Steinberg:
      if (l.k != 0) throw value_error("irrep label carries a spurious exponent");
      return;
    case Family::WPrime:
    case Family::WDoublePrime:
      if (!q1mod4) throw value_error("W'/W'' exist only for q = 1 mod 4");
      if (l.k != 0) throw value_error("irrep label carries a spurious exponent");
      return;
    case Family::XPrime:
    case Family::XDoublePrime:
      if (q1mod4) throw value_error("X'/X'' exist only for q = 3 mod 4");
      if (l.k != 0) throw value_error("irrep label carries a spurious exponent");
      return;
    case Family::Principal:
      if (l.k <= 0 || l.k >= (C.q - 1) / 2 || l.k % 2 != 0)
        throw value_error("W(k) requires even k with 0 < k < (q-1)/2");
      return;
    case Family::Discrete:
      if (l.k <= 0 || l.k >= (C.q + 1) / 2 || l.k % 2 != 0)
        throw value_error("X(k) requires even k with 0 < k < (q+1)/2");
      return;
  }
  throw value_error("bad irrep label");
}

// Inventory in serialization order: Triv, V, the split pair, X(k) ascending,
// W(k) ascending.  This coincides with the natural order on IrrepLabel.
inline std::vector<IrrepLabel> irreps(const Context& C) {
  std::vector<IrrepLabel> out;
  out.push_back(lbl_triv());
  out.push_back(lbl_steinberg());
  if (C.q % 4 == 1) {
    out.push_back(lbl_wp());
    out.push_back(lbl_wpp());
  } else {
    out.push_back(lbl_xp());
    out.push_back(lbl_xpp());
  }
  for (long long k = 2; k < (C.q + 1) / 2; k += 2) out.push_back(lbl_X(k));
  for (long long k = 2; k < (C.q - 1) / 2; k += 2) out.push_back(lbl_W(k));
  if (static_cast<long long>(out.size()) != (C.q + 5) / 2)
    throw internal_error("irrep inventory count is off");
  return out;
}

namespace detail_ct {

// zeta_m^e + zeta_m^-e
inline Cyc two_cos(long long m, long long e) {
  e = detail::modnorm(e, m);
  return Cyc::root(m, e) + Cyc::root(m, detail::modnorm(-e, m));
}

inline Cyc sign_pow(long long k) { return Cyc(k % 2 == 0 ? 1 : -1); }

}  // namespace detail_ct

inline Cyc char_value(const Context& C, const IrrepLabel& pi, const ClassLabel& c) {
  check_irrep_label(C, pi);
  if (C.class_index.find(c) == C.class_index.end())
    throw value_error("class label does not belong to this q");
  long long q = C.q;
  if (c.kind == ClassKind::Identity) return Cyc(irrep_dim(C, pi));
  switch (pi.fam) {
    case Family::Triv:
      return Cyc(1);
    case Family::Steinberg:
      switch (c.kind) {
        case ClassKind::Split:
          return Cyc(1);
        case ClassKind::NonSplit:
          return Cyc(-1);
        default:
          return Cyc(0);
      }
    case Family::Principal:  // W(k): alpha(eps) = zeta_{q-1}^k
      switch (c.kind) {
        case ClassKind::Split:
          return detail_ct::two_cos(q - 1, pi.k * c.k);
        case ClassKind::UnipotentMain:
        case ClassKind::UnipotentTwisted:
          return Cyc(1);
        default:
          return Cyc(0);
      }
    case Family::Discrete:  // X(k): beta(tau) = zeta_{q+1}^k
      switch (c.kind) {
        case ClassKind::NonSplit:
          return -detail_ct::two_cos(q + 1, pi.k * c.k);
        case ClassKind::UnipotentMain:
        case ClassKind::UnipotentTwisted:
          return Cyc(-1);
        default:
          return Cyc(0);
      }
    case Family::WPrime:
    case Family::WDoublePrime: {
      bool primed = pi.fam == Family::WPrime;
      switch (c.kind) {
        case ClassKind::Split:
          return detail_ct::sign_pow(c.k);
        case ClassKind::UnipotentMain:
          return Cyc(1) + (primed ? C.gauss().first : C.gauss().second);
        case ClassKind::UnipotentTwisted:
          return Cyc(1) + (primed ? C.gauss().second : C.gauss().first);
        default:
          return Cyc(0);
      }
    }
    case Family::XPrime:
    case Family::XDoublePrime: {
      bool primed = pi.fam == Family::XPrime;
      switch (c.kind) {
        case ClassKind::NonSplit:
          return -detail_ct::sign_pow(c.k);
        case ClassKind::UnipotentMain:
          return primed ? C.gauss().first : C.gauss().second;
        case ClassKind::UnipotentTwisted:
          return primed ? C.gauss().second : C.gauss().first;
        default:
          return Cyc(0);
      }
    }
  }
  throw internal_error("char_value: bad label");
}

using ClassFunction = std::map<ClassLabel, Cyc>;

inline ClassFunction character(const Context& C, const IrrepLabel& pi) {
  ClassFunction f;
  for (const auto& c : C.classes) f[c] = char_value(C, pi, c);
  return f;
}

inline Cyc inner_product(const Context& C, const ClassFunction& f,
                         const ClassFunction& h) {
  Cyc acc;
  for (size_t i = 0; i < C.classes.size(); ++i) {
    const ClassLabel& c = C.classes[i];
    auto fi = f.find(c), hi = h.find(c);
    if (fi == f.end() || hi == h.end())
      throw value_error("inner_product: class function not defined on all classes");
    acc += Rational(C.class_sizes[i]) * (fi->second * hi->second.conj());
  }
  return acc * Rational(1, C.order);
}

// dim of the H_ell-fixed subspace: average of the character over the cyclic
// subgroup generated by the special element.
inline long long fixed_dim(const Context& C, const IrrepLabel& pi, int ell) {
  const SubgroupHandle H = subgroup(C, ell);
  Cyc acc;
  for (const auto& h : H.elements) acc += char_value(C, pi, class_of(C, h));
  acc = acc * Rational(1, ell);
  if (!acc.is_rational() || !is_integral(acc.rational_value()))
    throw internal_error("fixed_dim: non-integer invariant dimension for " +
                         to_string(pi));
  long long v = rat_to_ll(acc.rational_value());
  if (v < 0) throw internal_error("fixed_dim: negative dimension");
  return v;
}

// First orthogonality: <chi_pi, chi_rho> = delta.  Exact; returns true iff
// every pair checks out.
inline bool check_row_orthogonality(const Context& C) {
  auto labels = irreps(C);
  std::vector<ClassFunction> chars;
  chars.reserve(labels.size());
  for (const auto& l : labels) chars.push_back(character(C, l));
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i; j < labels.size(); ++j) {
      Cyc v = inner_product(C, chars[i], chars[j]);
      if (v != Cyc(i == j ? 1 : 0)) return false;
    }
  return true;
}

// Second orthogonality: sum_pi chi_pi(c) conj(chi_pi(c')) = delta_{cc'} |C_G(c)|.
inline bool check_column_orthogonality(const Context& C) {
  auto labels = irreps(C);
  std::vector<std::vector<Cyc>> cols(C.classes.size());
  for (size_t ci = 0; ci < C.classes.size(); ++ci)
    for (const auto& l : labels)
      cols[ci].push_back(char_value(C, l, C.classes[ci]));
  for (size_t ci = 0; ci < C.classes.size(); ++ci)
    for (size_t cj = ci; cj < C.classes.size(); ++cj) {
      Cyc acc;
      for (size_t r = 0; r < labels.size(); ++r)
        acc += cols[ci][r] * cols[cj][r].conj();
      Cyc want = ci == cj ? Cyc(C.order / C.class_sizes[ci]) : Cyc(0);
      if (acc != want) return false;
    }
  return true;
}

// All canonical coefficients of every character value are integers.
inline bool check_algebraic_integrality(const Context& C) {
  for (const auto& l : irreps(C))
    for (const auto& c : C.classes) {
      Cyc v = char_value(C, l, c);
      for (const auto& [e, coef] : v.terms())
        if (!is_integral(coef)) return false;
    }
  return true;
}

// The value of alpha_k (resp. beta_k) on a special element s, returned as an
// exponent of zeta_{2*ell}: the generator to the power (q -+ 1)/(2*ell) maps
// under the k-th character to zeta_{2*ell}^k.
inline long long special_value_exp(const IrrepLabel& pi, const SpecialElt& s) {
  return detail::modnorm(pi.k, 2 * s.ell);
}

inline bool special_value_nontrivial(const IrrepLabel& pi, const SpecialElt& s) {
  return special_value_exp(pi, s) != 0;
}

}  // namespace hurwitz
