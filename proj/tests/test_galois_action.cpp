#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "hurwitz/galois_action.hpp"

using namespace hurwitz;

TEST_CASE("generators span the unit group of the conductor") {
  const Context& C = Context::get(13);
  auto gens = galois_generators(C);
  for (long long g : gens) REQUIRE(std::gcd(g, C.N) == 1);

  std::set<long long> closure = {1};
  for (bool grew = true; grew;) {
    grew = false;
    for (long long x : std::set<long long>(closure))
      for (long long g : gens) {
        long long y = detail::mulmod(x, g, C.N);
        if (closure.insert(y).second) grew = true;
      }
  }
  long long phi = 0;
  for (long long x = 1; x < C.N; ++x)
    if (std::gcd(x, C.N) == 1) ++phi;
  REQUIRE(static_cast<long long>(closure.size()) == phi);
  REQUIRE(phi == 288);
}

TEST_CASE("label permutation matches the cyclotomic action on values") {
  SECTION("q = 13") {
    const Context& C = Context::get(13);
    for (long long j : {5LL, 25LL, 1091LL}) {
      std::set<IrrepLabel> image;
      for (const auto& l : irreps(C)) {
        IrrepLabel lj = permute_label(C, j, l);
        image.insert(lj);
        for (const auto& c : C.classes) {
          CAPTURE(j, to_string(l), to_string(c));
          REQUIRE(char_value(C, lj, c) == char_value(C, l, c).galois(j));
        }
      }
      REQUIRE(image.size() == irreps(C).size());  // a permutation, not a fold
    }
    REQUIRE(permute_label(C, 1091, lbl_W(2)) == lbl_W(2));
    REQUIRE(permute_label(C, 5, lbl_triv()) == lbl_triv());
    REQUIRE(permute_label(C, 5, lbl_steinberg()) == lbl_steinberg());
    REQUIRE_THROWS_AS(permute_label(C, 2, lbl_W(2)), value_error);  // gcd(2, N) > 1
  }
  SECTION("q = 43: conjugation swaps the discrete pair") {
    const Context& C = Context::get(43);
    REQUIRE(permute_label(C, C.N - 1, lbl_xp()) == lbl_xpp());
    for (long long j : galois_generators(C))
      for (const auto& l : irreps(C)) {
        IrrepLabel lj = permute_label(C, j, l);
        for (const auto& c : C.classes)
          REQUIRE(char_value(C, lj, c) == char_value(C, l, c).galois(j));
      }
  }
}

TEST_CASE("rationality of the ramification module") {
  for (long long q : {13LL, 29LL, 43LL}) {
    CAPTURE(q);
    const Context& C = Context::get(q);
    REQUIRE(is_invariant(C, ramification_module(C).total).invariant);
    REQUIRE(is_invariant(C, regular_character(C)).invariant);
    REQUIRE(is_invariant(C, canonical_module(C)).invariant);
  }
}

TEST_CASE("invariance of induced characters") {
  const Context& C = Context::get(13);
  REQUIRE(is_invariant(C, induced_closed_form(C, 2, 1)).invariant);
  REQUIRE(is_invariant(C, induced_closed_form(C, 3, 1)).invariant);
  // a single order-7 induction is moved by the action
  InvarianceWitness w = is_invariant(C, induced_closed_form(C, 7, 1));
  REQUIRE(!w.invariant);
  REQUIRE(w.from.fam == Family::Discrete);
  REQUIRE(w.to.fam == Family::Discrete);
  REQUIRE(w.mult_from != w.mult_to);
  // but the sum over a full coset of indices is restored
  CharDecomp s = dec_sum(dec_sum(induced_closed_form(C, 7, 1),
                                 induced_closed_form(C, 7, 2)),
                         induced_closed_form(C, 7, 3));
  REQUIRE(is_invariant(C, s).invariant);
}

TEST_CASE("equivariant degree invariance depends on r7 mod 7") {
  const Context& C = Context::get(13);
  InvarianceWitness w7 = is_invariant(C, equivariant_degree(C, {0, 0, 0, 1}));
  REQUIRE(!w7.invariant);
  REQUIRE(is_invariant(C, equivariant_degree(C, {0, 0, 0, 3})).invariant);
  for (long long r2 = 0; r2 <= 2; ++r2)
    for (long long r3 = 0; r3 <= 3; ++r3)
      for (long long r7 : {0, 3, 6, 7, 10, 13, 14, 17}) {
        Divisor D{0, r2, r3, r7};
        long long rm = r7 % 7;
        if (rm == 0 || rm == 3 || rm == 6) {
          CAPTURE(r2, r3, r7);
          REQUIRE(is_invariant(C, equivariant_degree(C, D)).invariant);
        }
      }
}

TEST_CASE("a witness pins down the non-invariant case") {
  const Context& C = Context::get(13);
  CharDecomp d = equivariant_degree(C, {0, 0, 0, 1});
  REQUIRE(dec_get(d, lbl_X(2)) == 1);
  REQUIRE(dec_get(d, lbl_X(6)) == 2);
  // j = 157 is 1 mod 12 and 3 mod 14, so it fixes the split side and
  // multiplies discrete indices by 3
  REQUIRE(permute_label(C, 157, lbl_X(2)) == lbl_X(6));
  REQUIRE(permute_label(C, 157, lbl_W(2)) == lbl_W(2));
  REQUIRE(dec_get(d, permute_label(C, 157, lbl_X(2))) != dec_get(d, lbl_X(2)));
}

TEST_CASE("fast path agrees with the assembly route") {
  const Context& C = Context::get(13);
  for (Divisor D : {Divisor{0, 0, 0, 3}, {0, 1, 1, 0}, {1, 0, 0, 0},
                    {1, 1, 2, 6}, {0, 1, 2, 3}, {3, 0, 2, 6}}) {
    CAPTURE(D.r1, D.r2, D.r3, D.r7);
    REQUIRE(fast_ld(C, D) == riemann_roch(C, D));
  }
  const Context& C29 = Context::get(29);
  REQUIRE(fast_ld(C29, {0, 1, 2, 3}) == riemann_roch(C29, {0, 1, 2, 3}));
  REQUIRE(fast_ld(C, canonical_divisor(), true) ==
          riemann_roch(C, canonical_divisor(), true));
}

TEST_CASE("fast path guards") {
  const Context& C = Context::get(13);
  REQUIRE_THROWS_AS(fast_ld(C, {0, 0, 0, 1}), value_error);   // r7 out of domain
  REQUIRE_THROWS_AS(fast_ld(C, {0, 2, 0, 3}), value_error);   // r2 out of domain
  REQUIRE_THROWS_AS(fast_ld(C, {0, 0, 3, 3}), value_error);   // r3 out of domain
  REQUIRE_THROWS_AS(fast_ld(C, {0, 0, 0, 0}), divisor_error);
  REQUIRE_THROWS_AS(fast_ld(C, canonical_divisor()), divisor_error);
}
