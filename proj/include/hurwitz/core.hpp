#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

// Shared vocabulary for the PSL(2,q) equivariant Riemann-Roch engine:
// irreducible-module labels, conjugacy-class labels, equivariant divisors,
// decomposition vectors, and the error taxonomy the CLI maps to exit codes.

namespace hurwitz {

struct hz_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// q fails the admissibility test (CLI exit 2)
struct inadmissible_error : hz_error {
  using hz_error::hz_error;
};
// divisor outside the operation's domain (CLI exit 3)
struct divisor_error : hz_error {
  using hz_error::hz_error;
};
// group enumeration would exceed the configured cap (CLI exit 5)
struct cap_error : hz_error {
  using hz_error::hz_error;
};
// documented scalar range exceeded (CLI exit 5)
struct limit_error : hz_error {
  using hz_error::hz_error;
};
// malformed argument (CLI exit 64)
struct value_error : hz_error {
  using hz_error::hz_error;
};
// an identity the engine guarantees failed to hold (CLI exit 4)
struct internal_error : hz_error {
  using hz_error::hz_error;
};

namespace detail {

inline long long checked_mul(long long a, long long b, const char* what) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > std::numeric_limits<long long>::max() ||
      r < std::numeric_limits<long long>::min())
    throw limit_error(std::string("overflow in ") + what);
  return static_cast<long long>(r);
}

inline long long checked_add(long long a, long long b, const char* what) {
  __int128 r = static_cast<__int128>(a) + b;
  if (r > std::numeric_limits<long long>::max() ||
      r < std::numeric_limits<long long>::min())
    throw limit_error(std::string("overflow in ") + what);
  return static_cast<long long>(r);
}

// (a*b) mod m for any a, b and m > 0; result in [0, m)
inline long long mulmod(long long a, long long b, long long m) {
  __int128 r = (static_cast<__int128>(a) % m) * (b % m) % m;
  if (r < 0) r += m;
  return static_cast<long long>(r);
}

inline long long modnorm(long long a, long long m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

}  // namespace detail

// The (q+5)/2 irreducible modules of PSL(2,q), q odd.  Enumerator order is the
// canonical emission order: Triv, Steinberg, split pair, X(k) asc, W(k) asc.
enum class Family : int {
  Triv = 0,          // trivial module, dim 1
  Steinberg = 1,     // dim q
  WPrime = 2,        // dim (q+1)/2, q = 1 mod 4; unipotent-main value 1 + xi
  WDoublePrime = 3,  // dim (q+1)/2; unipotent-main value 1 + xi'
  XPrime = 4,        // dim (q-1)/2, q = 3 mod 4; unipotent-main value xi
  XDoublePrime = 5,  // dim (q-1)/2; unipotent-main value xi'
  Discrete = 6,      // X(k), dim q-1; beta(tau) = zeta_{q+1}^k
  Principal = 7,     // W(k), dim q+1; alpha(eps) = zeta_{q-1}^k
};

struct IrrepLabel {
  Family fam = Family::Triv;
  long long k = 0;  // exponent for Discrete/Principal, 0 otherwise
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

inline IrrepLabel lbl_triv() { return {Family::Triv, 0}; }
inline IrrepLabel lbl_steinberg() { return {Family::Steinberg, 0}; }
inline IrrepLabel lbl_wp() { return {Family::WPrime, 0}; }
inline IrrepLabel lbl_wpp() { return {Family::WDoublePrime, 0}; }
inline IrrepLabel lbl_xp() { return {Family::XPrime, 0}; }
inline IrrepLabel lbl_xpp() { return {Family::XDoublePrime, 0}; }
inline IrrepLabel lbl_W(long long k) { return {Family::Principal, k}; }
inline IrrepLabel lbl_X(long long k) { return {Family::Discrete, k}; }

inline std::string to_string(const IrrepLabel& l) {
  switch (l.fam) {
    case Family::Triv: return "Triv";
    case Family::Steinberg: return "V";
    case Family::WPrime: return "W'";
    case Family::WDoublePrime: return "W''";
    case Family::XPrime: return "X'";
    case Family::XDoublePrime: return "X''";
    case Family::Discrete: return "X(" + std::to_string(l.k) + ")";
    case Family::Principal: return "W(" + std::to_string(l.k) + ")";
  }
  return "?";
}

enum class ClassKind : int {
  Identity = 0,
  UnipotentMain = 1,     // orbit of [[1,1],[0,1]]
  UnipotentTwisted = 2,  // orbit of [[1,eps],[0,1]]
  Split = 3,             // diagonalizable over GF(q); exponent k mod q-1
  NonSplit = 4,          // eigenvalues in the norm-one torus; exponent k mod q+1
};

struct ClassLabel {
  ClassKind kind = ClassKind::Identity;
  long long k = 0;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

inline std::string to_string(const ClassLabel& c) {
  switch (c.kind) {
    case ClassKind::Identity: return "Identity";
    case ClassKind::UnipotentMain: return "UnipMain";
    case ClassKind::UnipotentTwisted: return "UnipTwisted";
    case ClassKind::Split: return "Split(" + std::to_string(c.k) + ")";
    case ClassKind::NonSplit: return "NonSplit(" + std::to_string(c.k) + ")";
  }
  return "?";
}

// Equivariant divisor r1*D1 + r2*D2 + r3*D3 + r7*D7 over the four branch orbits.
struct Divisor {
  long long r1 = 0, r2 = 0, r3 = 0, r7 = 0;
  friend auto operator<=>(const Divisor&, const Divisor&) = default;
};

inline std::string to_string(const Divisor& d) {
  return "(" + std::to_string(d.r1) + "," + std::to_string(d.r2) + "," +
         std::to_string(d.r3) + "," + std::to_string(d.r7) + ")";
}

// Sparse multiplicity vector over irreducible labels; zero entries are pruned,
// so equality of maps is equality of decompositions.
using CharDecomp = std::map<IrrepLabel, long long>;

inline long long dec_get(const CharDecomp& d, const IrrepLabel& l) {
  auto it = d.find(l);
  return it == d.end() ? 0 : it->second;
}

inline void dec_set(CharDecomp& d, const IrrepLabel& l, long long v) {
  if (v == 0)
    d.erase(l);
  else
    d[l] = v;
}

inline void dec_add(CharDecomp& d, const IrrepLabel& l, long long v) {
  dec_set(d, l, detail::checked_add(dec_get(d, l), v, "decomposition entry"));
}

inline CharDecomp dec_sum(const CharDecomp& a, const CharDecomp& b) {
  CharDecomp r = a;
  for (const auto& [l, v] : b) dec_add(r, l, v);
  return r;
}

inline CharDecomp dec_diff(const CharDecomp& a, const CharDecomp& b) {
  CharDecomp r = a;
  for (const auto& [l, v] : b) dec_add(r, l, -v);
  return r;
}

inline CharDecomp dec_scaled(const CharDecomp& a, long long s) {
  CharDecomp r;
  for (const auto& [l, v] : a)
    dec_set(r, l, detail::checked_mul(v, s, "decomposition scale"));
  return r;
}

}  // namespace hurwitz
