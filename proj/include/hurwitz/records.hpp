#pragma once

#include <string>

#include "json.hpp"

#include "hurwitz/verify.hpp"

// Machine-readable output records.  Field order is fixed (ordered_json) and
// decompositions follow the natural label order, so output is byte-stable
// for fixed inputs.  Every record embeds its own dimension identity.

namespace hurwitz {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json decomp_to_json(const Context& C, const CharDecomp& d) {
  json arr = json::array();
  for (const auto& [l, m] : d)
    arr.push_back({{"label", to_string(l)},
                   {"dimension", irrep_dim(C, l)},
                   {"multiplicity", m}});
  return arr;
}

inline json divisor_to_json(const Divisor& D) {
  return {{"r1", D.r1}, {"r2", D.r2}, {"r3", D.r3}, {"r7", D.r7}};
}

inline json record_envelope(const Context& C, const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["q"] = C.q;
  j["p"] = C.p;
  j["n"] = C.n;
  j["genus"] = C.g;
  j["group_order"] = C.order;
  return j;
}

inline json record_classify(const Admissibility& A) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "classify";
  j["q"] = A.q;
  j["admissible"] = A.admissible;
  if (!A.admissible) {
    j["reason"] = A.reason;
    return j;
  }
  j["p"] = A.p;
  j["n"] = A.n;
  j["genus"] = A.genus;
  j["group_order"] = A.group_order;
  j["residues"] = {{"mod4", A.mod4},   {"mod3", A.mod3},   {"mod7", A.mod7},
                   {"mod8", A.mod8},   {"mod12", A.mod12}, {"mod28", A.mod28},
                   {"mod84", A.mod84}, {"mod168", A.mod168}};
  return j;
}

inline json record_chartable(const Context& C) {
  json j = record_envelope(C, "chartable");
  j["conductor"] = C.N;
  j["note"] = "z = exp(2*pi*i/" + std::to_string(C.N) + ")";
  json classes = json::array();
  for (const auto& c : C.classes)
    classes.push_back({{"label", to_string(c)}, {"size", C.class_size(c)}});
  j["classes"] = classes;
  json rows = json::array();
  long long sq = 0;
  for (const auto& l : irreps(C)) {
    long long d = irrep_dim(C, l);
    sq += d * d;
    json vals = json::array();
    for (const auto& c : C.classes)
      vals.push_back(char_value(C, l, c).promoted(C.N).str());
    rows.push_back({{"label", to_string(l)}, {"dimension", d}, {"values", vals}});
  }
  j["irreps"] = rows;
  j["orthogonality"] = {{"rows", check_row_orthogonality(C)},
                        {"columns", check_column_orthogonality(C)}};
  j["dim"] = sq;
  j["expected_dim"] = C.order;
  j["dimension_identity"] = sq == C.order;
  return j;
}

inline json record_induced(const Context& C, int ell, long long k,
                           const CharDecomp& d) {
  json j = record_envelope(C, "induced");
  j["ell"] = ell;
  j["k"] = k;
  j["provenance"] = "closed-form";
  j["decomposition"] = decomp_to_json(C, d);
  long long dim = decomp_dim(C, d);
  j["dim"] = dim;
  j["expected_dim"] = C.order / ell;
  j["dimension_identity"] = dim == C.order / ell;
  return j;
}

inline json record_gamma(const Context& C, const RamificationModule& R) {
  json j = record_envelope(C, "gamma");
  j["decomposition"] = decomp_to_json(C, R.total);
  long long dim = decomp_dim(C, R.total);
  j["dim"] = dim;
  j["expected_dim"] = 85 * (C.g - 1);
  j["dimension_identity"] = dim == 85 * (C.g - 1);
  json parts;
  const std::pair<const char*, const CharDecomp*> ps[] = {
      {"order2", &R.h2}, {"order3", &R.h3}, {"order7", &R.h7}};
  for (auto [name, part] : ps)
    parts[name] = {{"decomposition", decomp_to_json(C, *part)},
                   {"dim", decomp_dim(C, *part)}};
  j["parts"] = parts;
  return j;
}

inline json record_degeq(const Context& C, const Divisor& D, const CharDecomp& d) {
  json j = record_envelope(C, "degeq");
  j["divisor"] = divisor_to_json(D);
  j["degree"] = divisor_degree(C, D);
  j["decomposition"] = decomp_to_json(C, d);
  long long dim = decomp_dim(C, d);
  j["dim"] = dim;
  j["expected_dim"] = divisor_degree(C, D);
  j["dimension_identity"] = dim == divisor_degree(C, D);
  return j;
}

inline json record_ld(const Context& C, const Divisor& D, const CharDecomp& d) {
  json j = record_envelope(C, "ld");
  j["divisor"] = divisor_to_json(D);
  j["degree"] = divisor_degree(C, D);
  j["decomposition"] = decomp_to_json(C, d);
  long long dim = decomp_dim(C, d);
  j["dim"] = dim;
  j["expected_dim"] = divisor_degree(C, D) + 1 - C.g;
  j["dimension_identity"] = dim == divisor_degree(C, D) + 1 - C.g;
  return j;
}

inline json record_canonical(const Context& C, const CharDecomp& K,
                             const CharDecomp& h1) {
  json j = record_envelope(C, "canonical");
  j["decomposition"] = decomp_to_json(C, K);
  long long dim = decomp_dim(C, K);
  j["dim"] = dim;
  j["expected_dim"] = C.g;
  j["dimension_identity"] = dim == C.g;
  long long hdim = decomp_dim(C, h1);
  j["h1"] = {{"decomposition", decomp_to_json(C, h1)},
             {"dim", hdim},
             {"expected_dim", 2 * C.g},
             {"dimension_identity", hdim == 2 * C.g}};
  return j;
}

inline json record_verify(const VerifyReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify";
  j["q"] = r.q;
  j["deep"] = r.deep;
  j["pass"] = r.pass();
  json suites = json::array();
  for (const auto& s : r.suites) {
    json js;
    js["name"] = s.name;
    js["pass"] = s.pass();
    js["skipped"] = s.skipped;
    if (s.skipped) js["skip_reason"] = s.skip_reason;
    json checks = json::array();
    for (const auto& c : s.checks)
      checks.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"expected_divergence", c.expected_divergence},
                        {"detail", c.detail}});
    js["checks"] = checks;
    suites.push_back(js);
  }
  j["suites"] = suites;
  return j;
}

}  // namespace hurwitz
