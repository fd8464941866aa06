#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "hurwitz/diagnostics.hpp"
#include "hurwitz/verify.hpp"

// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every check is exact; there are no tolerances anywhere.

using namespace hurwitz;

namespace {

int g_failures = 0;

void fail(const std::string& why) { throw std::runtime_error(why); }

template <class F>
void criterion(int n, const char* name, F f) {
  auto t0 = std::chrono::steady_clock::now();
  std::string why;
  try {
    f();
  } catch (const std::exception& e) {
    why = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  double sec = std::chrono::duration<double>(t1 - t0).count();
  if (why.empty()) {
    std::printf("criterion %d PASS  %-34s (%.2fs)\n", n, name, sec);
  } else {
    ++g_failures;
    std::printf("criterion %d FAIL  %-34s (%.2fs): %s\n", n, name, sec,
                why.c_str());
  }
  std::fflush(stdout);
}

const long long kAdmissible97[] = {13, 29, 41, 43, 71, 83, 97};

void c1_admissibility() {
  for (long long q : {13LL, 29LL, 41LL, 43LL, 83LL, 97LL, 113LL, 125LL, 127LL}) {
    Admissibility A = classify_q(q);
    if (!A.admissible) fail("q = " + std::to_string(q) + " rejected");
    if (A.genus != 1 + q * (q * q - 1) / 168)
      fail("genus mismatch at q = " + std::to_string(q));
    if (A.group_order != q * (q * q - 1) / 2 ||
        A.group_order != 84 * (A.genus - 1))
      fail("order mismatch at q = " + std::to_string(q));
  }
  for (long long q : {7LL, 8LL, 11LL, 27LL, 343LL})
    if (classify_q(q).admissible) fail("q = " + std::to_string(q) + " accepted");
}

void c2_chartable() {
  for (long long q : kAdmissible97) {
    const Context& C = Context::get(q);
    if (static_cast<long long>(irreps(C).size()) != 3 + (q - 1) / 2)
      fail("irrep count at q = " + std::to_string(q));
    long long sq = 0;
    for (const auto& l : irreps(C)) sq += irrep_dim(C, l) * irrep_dim(C, l);
    if (sq != C.order) fail("dimension sum at q = " + std::to_string(q));
    if (!check_row_orthogonality(C))
      fail("row orthogonality at q = " + std::to_string(q));
    if (!check_column_orthogonality(C))
      fail("column orthogonality at q = " + std::to_string(q));
  }
}

void c3_induction() {
  for (long long q : {13LL, 29LL, 41LL, 43LL}) {
    const Context& C = Context::get(q);
    for (int ell : {2, 3, 7})
      for (long long k = 1; k < ell; ++k)
        if (induced_closed_form(C, ell, k) != induced_oracle(C, ell, k))
          fail("closed vs oracle at q = " + std::to_string(q) + " ell = " +
               std::to_string(ell) + " k = " + std::to_string(k));
  }
  for (long long q : {13LL, 29LL}) {
    const Context& C = Context::get(q);
    for (int ell : {2, 3, 7})
      for (long long k = 1; k < ell; ++k)
        if (induced_brute(C, ell, k) != induced_closed_form(C, ell, k))
          fail("brute vs closed at q = " + std::to_string(q) + " ell = " +
               std::to_string(ell) + " k = " + std::to_string(k));
  }
  // least admissible member of every residue class mod 168 below 500
  for (long long q : {71LL, 83LL, 97LL, 113LL, 125LL, 127LL, 139LL, 167LL,
                      223LL, 337LL, 421LL, 491LL}) {
    const Context& C = Context::get(q);
    for (int ell : {2, 3, 7})
      for (long long k = 1; k < ell; ++k)
        if (induced_closed_form(C, ell, k) != induced_oracle(C, ell, k))
          fail("closed vs oracle at q = " + std::to_string(q));
  }
}

void c4_ramification() {
  for (long long q : kAdmissible97) {
    const Context& C = Context::get(q);
    RamificationModule R = ramification_module(C);  // == closed form internally
    if (R.total != gamma_closed(C))
      fail("closed-form route at q = " + std::to_string(q));
    if (R.total != gamma_fixed_dim(C))
      fail("fixed-dimension route at q = " + std::to_string(q));
    if (decomp_dim(C, R.total) != 85 * (C.g - 1))
      fail("dimension at q = " + std::to_string(q));
    if (dec_get(R.total, lbl_triv()) != 0)
      fail("trivial multiplicity at q = " + std::to_string(q));
  }
  const Context& C13 = Context::get(13);
  CharDecomp want = {{lbl_steinberg(), 13}, {lbl_wp(), 7},  {lbl_wpp(), 7},
                     {lbl_X(2), 12},        {lbl_X(4), 12}, {lbl_X(6), 12},
                     {lbl_W(2), 15},        {lbl_W(4), 14}};
  if (ramification_module(C13).total != want) fail("q = 13 fixture");
}

void c5_riemann_roch() {
  for (long long q : kAdmissible97) {
    const Context& C = Context::get(q);
    for (long long r1 : {0, 1})
      for (long long r2 : {0, 1})
        for (long long r3 : {0, 1, 2})
          for (long long r7 = 0; r7 <= 6; ++r7) {
            Divisor D{r1, r2, r3, r7};
            if (divisor_degree(C, D) <= 0) continue;
            CharDecomp ld = riemann_roch(C, D);
            if (decomp_dim(C, ld) != divisor_degree(C, D) + 1 - C.g)
              fail("dimension identity at q = " + std::to_string(q));
            for (const auto& [l, m] : ld)
              if (m < 0) fail("negative multiplicity at q = " + std::to_string(q));
          }
  }
  const Context& C13 = Context::get(13);
  CharDecomp want = {{lbl_triv(), 1}, {lbl_steinberg(), 2}, {lbl_wp(), 1},
                     {lbl_wpp(), 1},  {lbl_X(2), 1},        {lbl_X(4), 2},
                     {lbl_X(6), 2},   {lbl_W(2), 1},        {lbl_W(4), 2}};
  CharDecomp got = riemann_roch(C13, {0, 0, 0, 1});
  if (got != want || decomp_dim(C13, got) != 143) fail("q = 13 order-7 fixture");
}

void c6_canonical() {
  for (long long q : kAdmissible97) {
    const Context& C = Context::get(q);
    CharDecomp K = canonical_module(C);
    if (decomp_dim(C, K) != C.g) fail("dim L(K) at q = " + std::to_string(q));
    if (decomp_dim(C, h1_module(C)) != 2 * C.g)
      fail("dim H1 at q = " + std::to_string(q));
    // the one-trivial-summand divergence against the intermediate expression
    CharDecomp inter = dec_diff(ramification_module(C).total, regular_character(C));
    CharDecomp delta = dec_diff(K, inter);
    if (delta != CharDecomp{{lbl_triv(), 1}})
      fail("expected divergence shape at q = " + std::to_string(q));
  }
}

void c7_galois() {
  for (long long q : kAdmissible97) {
    const Context& C = Context::get(q);
    if (!is_invariant(C, ramification_module(C).total).invariant)
      fail("ramification invariance at q = " + std::to_string(q));
    for (long long r2 : {0, 1})
      for (long long r3 : {0, 1, 2})
        for (long long r7 : {0, 3, 6, 7, 10, 13}) {
          if (r7 % 7 != 0 && r7 % 7 != 3 && r7 % 7 != 6) continue;
          Divisor D{0, r2, r3, r7};
          if (!is_invariant(C, equivariant_degree(C, D)).invariant)
            fail("degree invariance at q = " + std::to_string(q));
        }
    for (long long r1 : {0, 1})
      for (long long r2 : {0, 1})
        for (long long r3 : {0, 1, 2})
          for (long long r7 : {0, 3, 6}) {
            Divisor D{r1, r2, r3, r7};
            if (divisor_s(D) < 2) continue;
            if (fast_ld(C, D) != riemann_roch(C, D))
              fail("fast path at q = " + std::to_string(q));
          }
  }
}

void c8_divergence_ledger() {
  const Context& C = Context::get(13);
  VerifyReport r = run_verify(C, false);
  if (!r.pass()) fail("self-check report failed");
  bool found = false;
  for (const auto& s : r.suites) {
    if (s.name != "tabulated-forms") continue;
    for (const auto& c : s.checks)
      if (c.name == "degree table at (0,1,0,0)" && c.pass &&
          c.expected_divergence &&
          c.detail.find("tabulated 7/2 vs assembly 4") != std::string::npos)
        found = true;
  }
  if (!found) fail("expected order-2 table divergence not reported");
}

}  // namespace

int main() {
  criterion(1, "admissibility and constants", c1_admissibility);
  criterion(2, "character table integrity", c2_chartable);
  criterion(3, "induction oracle equivalence", c3_induction);
  criterion(4, "ramification module routes", c4_ramification);
  criterion(5, "riemann-roch identities", c5_riemann_roch);
  criterion(6, "canonical module", c6_canonical);
  criterion(7, "galois invariance and fast path", c7_galois);
  criterion(8, "expected-divergence ledger", c8_divergence_ledger);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
