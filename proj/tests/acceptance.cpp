// Acceptance gate: one PASS/FAIL line per criterion, each with its exact
// tolerance and runtime budget. Exit status 0 iff every criterion passes.

#include "hypersecant/cli.hpp"
#include "hypersecant/hypersecant.hpp"
#include "properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hypersecant;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::string()> body;  // empty string = pass, else the witness
};

std::string join_first(const std::vector<std::string>& failures) {
  if (failures.empty()) return {};
  return std::to_string(failures.size()) + " failure(s); first: " + failures.front();
}

std::string reproduce(const AdmissibleSequence& s, const char* printed) {
  const auto d = diff_terms(master_polynomial(s), parse_polynomial(printed));
  return d.empty() ? "" : join_first(d);
}

std::string generic_count() {
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (int n = 10; n <= 11; ++n)
    for (const auto& s : admissible_sequences(n, 2)) {
      std::set<int> idx(s.i().begin(), s.i().end());
      idx.insert(s.j().begin(), s.j().end());
      if (idx.size() != 10) continue;
      ++checked;
      const Polynomial f = master_polynomial(s);
      if (f.term_count() != 32) bad.push_back(s.to_string() + ": " + std::to_string(f.term_count()) + " terms");
      for (const auto& [m, c] : f)
        if (c != 1 && c != -1) bad.push_back(s.to_string() + ": coefficient " + c.str());
    }
  if (checked == 0) return "no sequence with 10 distinct indices was generated";
  return join_first(bad);
}

std::string pentagon_initial_secant() {
  const Monomial want = parse_monomial("x[1,2]*x[2,3]*x[3,4]*x[4,5]*x[1,5]");
  if (secant_initial_ideal(5) != MonomialIdeal({want})) return "library ideal differs";
  std::ostringstream out, err;
  if (cli::run({"initial-secant", "--n", "5"}, out, err) != 0) return "CLI failed: " + err.str();
  std::istringstream in(out.str());
  std::vector<std::string> ls;
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) ls.push_back(l);
  if (ls.size() != 1) return "CLI printed " + std::to_string(ls.size()) + " generators";
  if (parse_monomial(ls[0]) != want) return "CLI printed " + ls[0];
  return {};
}

std::string family_completeness() {
  std::vector<std::string> bad;
  for (int n : {6, 7, 8}) {
    const MonomialIdeal families = secant_initial_ideal(n);
    const MonomialIdeal brute = secant_of_edge_ideal(build_graph(n), max_odd_up_to(n));
    if (!(families == brute))
      bad.push_back("n=" + std::to_string(n) + ": families " + std::to_string(families.size()) + " vs brute force " +
                    std::to_string(brute.size()));
    std::set<unsigned> degrees, odd;
    for (const auto& m : brute.generators()) degrees.insert(m.degree());
    for (int d = 3; d <= n; d += 2) odd.insert(static_cast<unsigned>(d));
    if (degrees != odd) bad.push_back("n=" + std::to_string(n) + ": occurring degrees differ from the odd numbers in [3,n]");
  }
  return join_first(bad);
}

std::string membership_sweep() {
  std::vector<std::string> bad;
  for (int n = 3; n <= 8; ++n) {
    for (const auto& g : toric_gb_polynomials(n))
      if (!substitute_rank(g, 1).is_zero()) bad.push_back("toric n=" + std::to_string(n) + ": " + to_string(g));
    if (n < 4) continue;
    for (const auto& g : secant_gb(n))
      if (!substitute_rank(g, 2).is_zero()) bad.push_back("secant n=" + std::to_string(n) + ": " + to_string(g));
  }
  return join_first(bad);
}

std::string leading_term_lemma() {
  std::vector<std::string> bad;
  for (auto inner : {InnerOrder::grevlex, InnerOrder::lex})
    for (int n = 3; n <= 8; ++n) {
      const CircularTermOrder o(n, inner);
      for (const auto& s : all_admissible_sequences(n))
        if (leading_monomial(o, master_polynomial(s)) != cycle_monomial(s))
          bad.push_back(o.descriptor() + " n=" + std::to_string(n) + " " + s.to_string());
      for (const auto& b : circular_sextuples(n)) {
        const Monomial anti = Monomial::of_edges({{b[0], b[5]}, {b[1], b[4]}, {b[2], b[3]}});
        if (leading_monomial(o, off_diagonal_minor_3x3(b)) != anti)
          bad.push_back(o.descriptor() + " n=" + std::to_string(n) + " minor " + anti.to_string());
      }
    }
  return join_first(bad);
}

std::string crossing_ladder() {
  std::vector<std::string> bad;
  for (int k = 1; k <= 4; ++k) {
    const int len = 2 * k + 1;
    const auto base = base_involution(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      const ConjugationSubset s{k, mask};
      const int want = len * (len - 1) / 2 - len + s.size();
      const int got = crossing_number(conjugate(base, s));
      if (got != want)
        bad.push_back("k=" + std::to_string(k) + " mask=" + std::to_string(mask) + ": " + std::to_string(got) +
                      " != " + std::to_string(want));
    }
  }
  return join_first(bad);
}

std::string prolongation() {
  std::vector<std::string> bad;
  for (int n = 5; n <= 7; ++n)
    for (const auto& s : all_admissible_sequences(n))
      if (!verify_prolongation(n, master_polynomial(s), s.k())) bad.push_back("n=" + std::to_string(n) + " " + s.to_string());
  return join_first(bad);
}

std::string buchberger_certification() {
  std::vector<std::string> bad;
  for (auto inner : {InnerOrder::grevlex, InnerOrder::lex}) {
    for (int n = 4; n <= 7; ++n) {
      const auto c = buchberger_verify(toric_gb_polynomials(n), CircularTermOrder(n, inner));
      if (!c.passed()) bad.push_back("toric " + c.order + " n=" + std::to_string(n) + ": " + c.checks.front().witness);
    }
    for (int n = 4; n <= 6; ++n) {
      const CircularTermOrder o(n, inner);
      const auto sc = buchberger_verify(secant_gb(n), o);
      if (!sc.passed()) bad.push_back("secant " + sc.order + " n=" + std::to_string(n) + ": " + sc.checks.front().witness);
      const auto sy = buchberger_verify(symbolic_square_gb(n), o);
      if (!sy.passed()) bad.push_back("symbolic " + sy.order + " n=" + std::to_string(n) + ": " + sy.checks.front().witness);
    }
  }
  return join_first(bad);
}

std::string delightfulness() {
  std::vector<std::string> bad;
  for (auto inner : {InnerOrder::grevlex, InnerOrder::lex})
    for (int n = 4; n <= 7; ++n) {
      const CircularTermOrder o(n, inner);
      for (auto kind : {IdealKind::secant, IdealKind::symbolic_square}) {
        const auto c = delightful_check(n, kind, o, false);
        for (const auto& ch : c.checks)
          if (!ch.pass) bad.push_back(to_string(kind) + " " + c.order + " n=" + std::to_string(n) + ": " + ch.witness);
      }
    }
  for (int n = 4; n <= 7; ++n) {
    const auto in = initial_edge_ideal(n);
    if (!(symbolic_square_of_edge_ideal(build_graph(n)) == in * in + secant_of_edge_ideal(build_graph(n), max_odd_up_to(n))))
      bad.push_back("identity fails at n=" + std::to_string(n));
  }
  return join_first(bad);
}

std::string property_suites() {
  std::vector<std::string> bad;
  for (const auto& r : properties::all(1000, 20261014)) {
    if (r.cases < 1000) bad.push_back(r.name + ": only " + std::to_string(r.cases) + " cases");
    if (!r.ok()) bad.push_back(r.name + ": " + std::to_string(r.failures) + " failure(s), first " + r.first_failure);
  }
  return join_first(bad);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pentad reproduction, exact", 1,
       [] { return reproduce(AdmissibleSequence({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}), kPrintedPentad); }},
      {2, "cubic reproduction, exact", 1, [] { return reproduce(AdmissibleSequence({1, 3, 5}, {2, 4, 6}), kPrintedCubic); }},
      {3, "k=2 with 10 distinct indices gives 32 terms, coefficients +-1", 1, generic_count},
      {4, "n=5 secant initial ideal is the pentagon monomial, exact", 1, pentagon_initial_secant},
      {5, "family union equals brute-force secant edge ideal, n=6,7,8, exact", 600, family_completeness},
      {6, "membership sweep n<=8, exact", 300, membership_sweep},
      {7, "leading-term lemma n<=8, both inner orders, exact", 120, leading_term_lemma},
      {8, "crossing-number ladder k<=4, all subsets, exact", 60, crossing_ladder},
      {9, "prolongation with bound k, n<=7, exact", 600, prolongation},
      {10, "Buchberger: toric n<=7, secant and symbolic n<=6, both inner orders", 1800, buchberger_certification},
      {11, "delightfulness equalities and symbolic identity n<=7, both inner orders", 300, delightfulness},
      {12, "property suites, >=1000 cases each, zero failures", 600, property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string witness;
    try {
      witness = c.body();
    } catch (const std::exception& e) {
      witness = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (witness.empty() && secs > c.budget_seconds) witness = "runtime over budget";
    const bool pass = witness.empty();
    failed += pass ? 0 : 1;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.3f s / budget %.0f s", secs, c.budget_seconds);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " (" << timing << ")";
    if (!pass) std::cout << " -- " << witness;
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << criteria.size() - static_cast<std::size_t>(failed)
            << "/" << criteria.size() << ")" << std::endl;
  return failed == 0 ? 0 : 1;
}
