#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hurwitz/galois_action.hpp"
#include "hurwitz/records.hpp"

// hurwitz: exact PSL(2,q)-module decompositions attached to Hurwitz curves.
//
// Exit codes: 0 ok, 1 verification failure, 2 inadmissible q, 3 bad divisor,
// 4 internal identity failure, 5 resource limit, 64 bad usage.

namespace {

using namespace hurwitz;

constexpr int kOk = 0, kVerifyFail = 1, kInadmissible = 2, kBadDivisor = 3,
              kInternal = 4, kResource = 5, kUsage = 64;

constexpr long long kMaxOrbitCoeff = 1000;

void print_decomp(const Context& C, const CharDecomp& d) {
  std::printf("  %-10s %10s %14s\n", "label", "dim", "mult");
  for (const auto& [l, m] : d)
    std::printf("  %-10s %10lld %14lld\n", to_string(l).c_str(), irrep_dim(C, l), m);
}

int emit_simple(const json& j, const Context& C, const CharDecomp& d,
                const std::string& format, const std::string& headline) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%s\n", headline.c_str());
    print_decomp(C, d);
    std::printf("  dim %lld (expected %lld)\n", j["dim"].get<long long>(),
                j["expected_dim"].get<long long>());
  }
  return j["dimension_identity"].get<bool>() ? kOk : kInternal;
}

int cmd_classify(long long q, const std::string& format) {
  Admissibility A = classify_q(q);
  json j = record_classify(A);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (A.admissible) {
    std::printf("q = %lld: admissible (q = %lld^%d)\n", q, A.p, A.n);
    std::printf("  genus       %lld\n", A.genus);
    std::printf("  group order %lld\n", A.group_order);
    std::printf("  residues    mod 4: %lld  mod 3: %lld  mod 7: %lld  mod 8: %lld  mod 84: %lld  mod 168: %lld\n",
                A.mod4, A.mod3, A.mod7, A.mod8, A.mod84, A.mod168);
  } else {
    std::printf("q = %lld: inadmissible: %s\n", q, A.reason.c_str());
  }
  return A.admissible ? kOk : kInadmissible;
}

int cmd_chartable(long long q, const std::string& format) {
  const Context& C = Context::get(q);
  json j = record_chartable(C);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("character table of PSL(2,%lld), conductor %lld, z = exp(2*pi*i/%lld)\n",
                q, C.N, C.N);
    std::printf("%-10s", "class");
    for (const auto& c : C.classes) std::printf(" | %s", to_string(c).c_str());
    std::printf("\n%-10s", "size");
    for (const auto& c : C.classes) std::printf(" | %lld", C.class_size(c));
    std::printf("\n");
    for (const auto& l : irreps(C)) {
      std::printf("%-10s", to_string(l).c_str());
      for (const auto& c : C.classes)
        std::printf(" | %s", char_value(C, l, c).promoted(C.N).str().c_str());
      std::printf("\n");
    }
    std::printf("orthogonality: rows %s, columns %s\n",
                j["orthogonality"]["rows"].get<bool>() ? "ok" : "FAILED",
                j["orthogonality"]["columns"].get<bool>() ? "ok" : "FAILED");
  }
  bool ok = j["orthogonality"]["rows"].get<bool>() &&
            j["orthogonality"]["columns"].get<bool>() &&
            j["dimension_identity"].get<bool>();
  return ok ? kOk : kInternal;
}

int cmd_induced(long long q, int ell, long long k, const std::string& format) {
  const Context& C = Context::get(q);
  check_induced_query(ell, k);
  CharDecomp d = induced_closed_form(C, ell, k);
  json j = record_induced(C, ell, k, d);
  return emit_simple(j, C, d, format,
                     "induced character (ell = " + std::to_string(ell) +
                         ", k = " + std::to_string(k) + ") at q = " +
                         std::to_string(q));
}

int cmd_gamma(long long q, const std::string& format) {
  const Context& C = Context::get(q);
  RamificationModule R = ramification_module(C);
  json j = record_gamma(C, R);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("ramification module at q = %lld\n", q);
    print_decomp(C, R.total);
    std::printf("  dim %lld (expected %lld)\n", decomp_dim(C, R.total), 85 * (C.g - 1));
    for (const auto& [name, part] :
         {std::pair<const char*, const CharDecomp*>{"order-2 part", &R.h2},
          {"order-3 part", &R.h3},
          {"order-7 part", &R.h7}})
      std::printf("  %s: dim %lld\n", name, decomp_dim(C, *part));
  }
  return j["dimension_identity"].get<bool>() ? kOk : kInternal;
}

int cmd_degeq(long long q, const Divisor& D, const std::string& format) {
  const Context& C = Context::get(q);
  CharDecomp d = equivariant_degree(C, D);
  json j = record_degeq(C, D, d);
  return emit_simple(j, C, d, format,
                     "equivariant degree at q = " + std::to_string(q) +
                         ", divisor (" + std::to_string(D.r1) + ", " +
                         std::to_string(D.r2) + ", " + std::to_string(D.r3) +
                         ", " + std::to_string(D.r7) + ")");
}

int cmd_ld(long long q, const Divisor& D, bool fast, bool allow_special,
           const std::string& format) {
  const Context& C = Context::get(q);
  bool fast_ok = fast && D.r2 >= 0 && D.r2 <= 1 && D.r3 >= 0 && D.r3 <= 2 &&
                 (D.r7 == 0 || D.r7 == 3 || D.r7 == 6);
  CharDecomp d = fast_ok ? fast_ld(C, D, allow_special)
                         : riemann_roch(C, D, allow_special);
  json j = record_ld(C, D, d);
  return emit_simple(j, C, d, format,
                     "L(D) at q = " + std::to_string(q) + ", divisor (" +
                         std::to_string(D.r1) + ", " + std::to_string(D.r2) +
                         ", " + std::to_string(D.r3) + ", " +
                         std::to_string(D.r7) + ")");
}

int cmd_canonical(long long q, const std::string& format) {
  const Context& C = Context::get(q);
  CharDecomp K = canonical_module(C);
  CharDecomp h1 = h1_module(C);
  json j = record_canonical(C, K, h1);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("canonical module L(K) at q = %lld\n", q);
    print_decomp(C, K);
    std::printf("  dim %lld (expected g = %lld)\n", decomp_dim(C, K), C.g);
    std::printf("H1(X, C) = 2 L(K): dim %lld (expected 2g = %lld)\n",
                decomp_dim(C, h1), 2 * C.g);
  }
  bool ok = j["dimension_identity"].get<bool>() &&
            j["h1"]["dimension_identity"].get<bool>();
  return ok ? kOk : kInternal;
}

int cmd_verify(long long q, bool deep, const std::string& format) {
  const Context& C = Context::get(q);
  VerifyReport r = run_verify(C, deep);
  if (format == "json") {
    std::cout << record_verify(r).dump(2) << "\n";
  } else {
    std::printf("verify q = %lld%s\n", q, deep ? " (deep)" : "");
    for (const auto& s : r.suites) {
      if (s.skipped) {
        std::printf("[skip] %-16s %s\n", s.name.c_str(), s.skip_reason.c_str());
        continue;
      }
      std::printf("[%s] %-16s %zu checks\n", s.pass() ? "pass" : "FAIL",
                  s.name.c_str(), s.checks.size());
      for (const auto& c : s.checks) {
        if (!c.pass)
          std::printf("       FAIL %s: %s\n", c.name.c_str(), c.detail.c_str());
        else if (c.expected_divergence)
          std::printf("       EXPECTED %s: %s\n", c.name.c_str(), c.detail.c_str());
      }
    }
    std::printf("verify %s\n", r.pass() ? "PASS" : "FAIL");
  }
  return r.pass() ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact PSL(2,q)-module decompositions for Hurwitz curves"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  long long q = 0;
  Divisor D{0, 0, 0, 0};
  int ell = 0;
  long long k = 0;
  bool fast = false, allow_special = false, deep = false;

  auto add_q = [&](CLI::App* c) { c->add_option("q", q, "prime power q")->required(); };
  auto add_div = [&](CLI::App* c) {
    auto range = CLI::Range(-kMaxOrbitCoeff, kMaxOrbitCoeff);
    c->add_option("r1", D.r1, "coefficient of the free orbit")->required()->check(range);
    c->add_option("r2", D.r2, "coefficient of the order-2 orbit")->required()->check(range);
    c->add_option("r3", D.r3, "coefficient of the order-3 orbit")->required()->check(range);
    c->add_option("r7", D.r7, "coefficient of the order-7 orbit")->required()->check(range);
  };

  CLI::App* c_classify = app.add_subcommand("classify", "admissibility of q");
  add_q(c_classify);
  CLI::App* c_chartable = app.add_subcommand("chartable", "exact character table");
  add_q(c_chartable);
  CLI::App* c_induced =
      app.add_subcommand("induced", "induced character of a torsion subgroup");
  add_q(c_induced);
  c_induced->add_option("ell", ell, "subgroup order (2, 3, or 7)")->required();
  c_induced->add_option("k", k, "character index (1 <= k < ell)")->required();
  CLI::App* c_gamma = app.add_subcommand("gamma", "ramification module");
  add_q(c_gamma);
  CLI::App* c_degeq = app.add_subcommand("degeq", "equivariant degree of a divisor");
  add_q(c_degeq);
  add_div(c_degeq);
  CLI::App* c_ld = app.add_subcommand("ld", "decomposition of L(D)");
  add_q(c_ld);
  add_div(c_ld);
  c_ld->add_flag("--fast", fast, "use the fixed-space fast path when applicable");
  c_ld->add_flag("--allow-special", allow_special,
                 "return the Euler-characteristic value when deg D = 2g-2");
  CLI::App* c_canonical = app.add_subcommand("canonical", "L(K) and H1");
  add_q(c_canonical);
  CLI::App* c_verify = app.add_subcommand("verify", "run self-check suites");
  add_q(c_verify);
  c_verify->add_flag("--deep", deep, "enable full group enumeration suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(c_classify)) return cmd_classify(q, format);
    if (app.got_subcommand(c_chartable)) return cmd_chartable(q, format);
    if (app.got_subcommand(c_induced)) return cmd_induced(q, ell, k, format);
    if (app.got_subcommand(c_gamma)) return cmd_gamma(q, format);
    if (app.got_subcommand(c_degeq)) return cmd_degeq(q, D, format);
    if (app.got_subcommand(c_ld)) return cmd_ld(q, D, fast, allow_special, format);
    if (app.got_subcommand(c_canonical)) return cmd_canonical(q, format);
    if (app.got_subcommand(c_verify)) return cmd_verify(q, deep, format);
  } catch (const inadmissible_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInadmissible;
  } catch (const divisor_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadDivisor;
  } catch (const cap_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kResource;
  } catch (const limit_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kResource;
  } catch (const value_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const hz_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInternal;
  }
  return kUsage;
}
