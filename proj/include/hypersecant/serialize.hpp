#pragma once

#include "hypersecant/circular_order.hpp"
#include "hypersecant/groebner.hpp"
#include "hypersecant/poly.hpp"

#include "json.hpp"

#include <set>
#include <string>
#include <vector>

namespace hypersecant {

using nlohmann::json;

// JSON encodings: a polynomial is an array of term strings in the text
// grammar (descending term order), a monomial is an array of factor
// strings, a vertex set an array of [a, b] pairs.

inline json monomial_json(const Monomial& m) {
  json out = json::array();
  for (const auto& [v, e] : m.factors()) out.push_back(e > 1 ? v.to_string() + "^" + std::to_string(e) : v.to_string());
  return out;
}

inline Monomial monomial_from_json(const json& j) {
  std::string text;
  for (const auto& f : j) text += (text.empty() ? "" : "*") + f.get<std::string>();
  return text.empty() ? Monomial() : parse_monomial(text);
}

inline json polynomial_json(const Polynomial& p, const CircularTermOrder& order) {
  json out = json::array();
  for (const auto& [m, c] : sorted_terms(order, p)) out.push_back(format_term(m, c));
  return out;
}

inline Polynomial polynomial_from_json(const json& j) {
  Polynomial p;
  for (const auto& t : j) p += parse_polynomial(t.get<std::string>());
  return p;
}

inline json order_json(const CircularTermOrder& order) {
  return {{"blocks", "circular"}, {"inner", to_string(order.inner())}};
}

inline json vertex_set_json(const std::vector<Edge>& vs) {
  json out = json::array();
  for (const auto& e : vs) out.push_back({e.a, e.b});
  return out;
}

inline json certificate_json(const GroebnerCertificate& cert) {
  json checks = json::array();
  for (const auto& c : cert.checks) {
    json entry = {{"check", c.name}, {"pass", c.pass}};
    entry["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
    checks.push_back(entry);
  }
  json failing = json::array();
  for (const auto& p : cert.pair_outcomes)
    if (!p.reduces_to_zero) failing.push_back({{"pair", {p.first, p.second}}, {"remainder_terms", p.remainder.term_count()}});
  // Wall time is left out so output stays byte-identical across runs.
  return {{"n", cert.n},
          {"kind", to_string(cert.kind)},
          {"order", cert.order},
          {"generator_count", cert.generator_count},
          {"checks", checks},
          {"cited_theory", cert.cited_theory},
          {"spair_stats",
           {{"pairs", cert.spair_stats.pairs},
            {"skipped_coprime", cert.spair_stats.skipped},
            {"reduction_steps", cert.spair_stats.reduction_steps},
            {"max_intermediate_terms", cert.spair_stats.max_intermediate_terms},
            {"failing_pairs", failing}}},
          {"pass", cert.passed()}};
}

inline std::string certificate_text(const GroebnerCertificate& cert) {
  std::string s = "certificate n=" + std::to_string(cert.n) + " kind=" + to_string(cert.kind) + " order=" + cert.order +
                  " generators=" + std::to_string(cert.generator_count) + "\n";
  for (const auto& c : cert.checks) {
    s += (c.pass ? "PASS " : "FAIL ") + c.name;
    if (!c.pass) s += ": " + c.witness;
    s += "\n";
  }
  for (const auto& t : cert.cited_theory) s += "CITED " + t + "\n";
  if (cert.spair_stats.pairs > 0)
    s += "spairs=" + std::to_string(cert.spair_stats.pairs) + " skipped=" + std::to_string(cert.spair_stats.skipped) +
         " steps=" + std::to_string(cert.spair_stats.reduction_steps) +
         " max_terms=" + std::to_string(cert.spair_stats.max_intermediate_terms) + "\n";
  s += cert.passed() ? "RESULT PASS\n" : "RESULT FAIL\n";
  return s;
}

// Algebra-script: identifiers x_a_b, a variable declaration block and a
// comma-separated generator list, readable by common computer algebra
// systems after trivial wrapping.

inline std::string script_identifier(Variable v) {
  switch (v.kind) {
    case VarKind::edge:
      return "x_" + std::to_string(v.a) + "_" + std::to_string(v.b);
    case VarKind::param_t:
      return "t_" + std::to_string(v.a);
    case VarKind::param_u:
      return "u_" + std::to_string(v.a);
  }
  return "?";
}

inline std::string script_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += script_identifier(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline std::string script_polynomial(const Polynomial& p, const CircularTermOrder& order) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : sorted_terms(order, p)) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mag != 1 || m.is_one()) s += mag.str() + (m.is_one() ? "" : "*");
    if (!m.is_one()) s += script_monomial(m);
  }
  return s;
}

inline std::string algebra_script(int n, const std::vector<std::string>& generators, const std::string& title) {
  std::string s = "// " + title + "\n";
  s += "variables = [";
  bool first = true;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      s += (first ? "" : ", ") + script_identifier(Variable::x(a, b));
      first = false;
    }
  s += "];\ngenerators = [\n";
  for (std::size_t g = 0; g < generators.size(); ++g)
    s += "  " + generators[g] + (g + 1 < generators.size() ? ",\n" : "\n");
  s += "];\n";
  return s;
}

}  // namespace hypersecant
