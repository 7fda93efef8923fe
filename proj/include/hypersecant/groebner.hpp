#pragma once

// Multivariate division and Buchberger certification against circular term
// orders, the candidate Groebner bases for the secant ideal and the symbolic
// square of I_n, and the delightfulness certificate tying them to the
// combinatorial initial ideals.
//
// The engine only verifies: it never completes a basis. All reducers must
// have leading coefficient +1 or -1 so every step stays integral.

#include "hypersecant/circular_order.hpp"
#include "hypersecant/hypersimplex.hpp"
#include "hypersecant/master.hpp"
#include "hypersecant/monomial_ideal.hpp"
#include "hypersecant/noncrossing.hpp"
#include "hypersecant/parallel.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypersecant {

namespace detail {

inline constexpr std::size_t kMaxDenseVars = 128;

struct DenseMono {
  std::array<std::uint8_t, kMaxDenseVars> e{};
  std::array<std::uint64_t, 2> support{};

  void set(std::size_t r, unsigned x) {
    if (x > 255) throw Error("exponent overflow in dense monomial");
    e[r] = static_cast<std::uint8_t>(x);
    if (x)
      support[r / 64] |= std::uint64_t{1} << (r % 64);
    else
      support[r / 64] &= ~(std::uint64_t{1} << (r % 64));
  }

  bool divides(const DenseMono& m) const {
    if ((support[0] & ~m.support[0]) || (support[1] & ~m.support[1])) return false;
    for (std::size_t w = 0; w < 2; ++w)
      for (std::uint64_t s = support[w]; s; s &= s - 1) {
        const std::size_t r = w * 64 + static_cast<std::size_t>(std::countr_zero(s));
        if (e[r] > m.e[r]) return false;
      }
    return true;
  }

  bool coprime(const DenseMono& m) const { return !(support[0] & m.support[0]) && !(support[1] & m.support[1]); }

  friend DenseMono operator*(DenseMono a, const DenseMono& b) {
    for (std::size_t w = 0; w < 2; ++w)
      for (std::uint64_t s = b.support[w]; s; s &= s - 1) {
        const std::size_t r = w * 64 + static_cast<std::size_t>(std::countr_zero(s));
        a.set(r, unsigned{a.e[r]} + b.e[r]);
      }
    return a;
  }

  /// m / *this, assuming divides(m).
  DenseMono quotient_of(const DenseMono& m) const {
    DenseMono q = m;
    for (std::size_t w = 0; w < 2; ++w)
      for (std::uint64_t s = support[w]; s; s &= s - 1) {
        const std::size_t r = w * 64 + static_cast<std::size_t>(std::countr_zero(s));
        q.set(r, unsigned{m.e[r]} - e[r]);
      }
    return q;
  }

  friend DenseMono lcm(DenseMono a, const DenseMono& b) {
    for (std::size_t w = 0; w < 2; ++w)
      for (std::uint64_t s = b.support[w]; s; s &= s - 1) {
        const std::size_t r = w * 64 + static_cast<std::size_t>(std::countr_zero(s));
        if (b.e[r] > a.e[r]) a.set(r, b.e[r]);
      }
    return a;
  }

  friend bool operator==(const DenseMono&, const DenseMono&) = default;
};

struct DenseTerm {
  DenseMono m;
  Integer c;
};

/// Terms sorted descending under the order; front() is the leading term.
using DensePoly = std::vector<DenseTerm>;

class DenseRing {
 public:
  explicit DenseRing(const CircularTermOrder& order) : order_(order) {
    if (order.variable_count() > kMaxDenseVars)
      throw Error("groebner engine supports at most " + std::to_string(kMaxDenseVars) + " edge variables (n <= 16)");
  }

  const CircularTermOrder& order() const { return order_; }

  DenseMono dense(const Monomial& m) const {
    DenseMono d;
    for (const auto& [v, e] : m.factors()) {
      if (!v.is_edge()) throw Error("groebner engine: non-edge variable " + v.to_string());
      const auto r = static_cast<std::size_t>(order_.rank(v.edge()));
      d.set(r, unsigned{d.e[r]} + e);
    }
    return d;
  }

  Monomial sparse(const DenseMono& d) const {
    std::vector<Monomial::Factor> fs;
    for (std::size_t r = 0; r < order_.variable_count(); ++r)
      if (d.e[r]) fs.emplace_back(Variable::x(order_.edge_at(r)), d.e[r]);
    return Monomial::from_factors(std::move(fs));
  }

  bool greater(const DenseMono& a, const DenseMono& b) const { return order_.compare_dense(a.e, b.e) > 0; }

  DensePoly dense(const Polynomial& p) const {
    DensePoly out;
    out.reserve(p.term_count());
    for (const auto& [m, c] : p) out.push_back({dense(m), c});
    std::sort(out.begin(), out.end(), [&](const DenseTerm& a, const DenseTerm& b) { return greater(a.m, b.m); });
    return out;
  }

  Polynomial sparse(const DensePoly& p) const {
    Polynomial out;
    for (const auto& t : p) out.add_term(sparse(t.m), t.c);
    return out;
  }

 private:
  const CircularTermOrder& order_;
};

struct ReduceStats {
  std::size_t steps = 0;
  std::size_t max_terms = 0;
};

inline void require_unit_lead(const DensePoly& g) {
  if (g.empty()) throw Error("groebner engine: zero polynomial in reducer list");
  if (g.front().c != 1 && g.front().c != -1)
    throw Error("groebner engine: reducer leading coefficient " + g.front().c.str() + " is not a unit");
}

/// Full normal form: repeatedly take the largest remaining term, cancel it
/// with the first reducer whose leading monomial divides it, or move it to
/// the remainder. `on_step` sees the leading monomial before each step.
template <typename OnStep>
DensePoly reduce_dense(const DenseRing& ring, const DensePoly& f, const std::vector<DensePoly>& basis,
                       ReduceStats& stats, OnStep&& on_step) {
  for (const auto& g : basis) require_unit_lead(g);
  auto desc = [&ring](const DenseMono& a, const DenseMono& b) { return ring.greater(a, b); };
  std::map<DenseMono, Integer, decltype(desc)> work(desc);
  for (const auto& t : f) work.emplace_hint(work.end(), t.m, t.c);
  DensePoly remainder;
  stats.max_terms = std::max(stats.max_terms, work.size());
  while (!work.empty()) {
    auto lead = work.begin();
    on_step(lead->first);
    const DensePoly* reducer = nullptr;
    for (const auto& g : basis)
      if (g.front().m.divides(lead->first)) {
        reducer = &g;
        break;
      }
    if (reducer == nullptr) {
      remainder.push_back({lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    ++stats.steps;
    const DenseMono q = reducer->front().m.quotient_of(lead->first);
    const Integer factor = lead->second * reducer->front().c;  // lead coefficient is +-1
    work.erase(lead);
    for (std::size_t t = 1; t < reducer->size(); ++t) {
      const auto& term = (*reducer)[t];
      auto [it, inserted] = work.try_emplace(q * term.m, Integer(0));
      it->second -= factor * term.c;
      if (it->second == 0) work.erase(it);
    }
    stats.max_terms = std::max(stats.max_terms, work.size() + remainder.size());
  }
  return remainder;
}

inline DensePoly reduce_dense(const DenseRing& ring, const DensePoly& f, const std::vector<DensePoly>& basis,
                              ReduceStats& stats) {
  return reduce_dense(ring, f, basis, stats, [](const DenseMono&) {});
}

inline DensePoly s_polynomial_dense(const DenseRing& ring, const DensePoly& f, const DensePoly& g) {
  if (f.empty() || g.empty()) throw Error("s_polynomial of the zero polynomial");
  const DenseMono l = lcm(f.front().m, g.front().m);
  const DenseMono qf = f.front().m.quotient_of(l);
  const DenseMono qg = g.front().m.quotient_of(l);
  // lc(g) * qf * f - lc(f) * qg * g; the leading terms cancel exactly.
  auto desc = [&ring](const DenseMono& a, const DenseMono& b) { return ring.greater(a, b); };
  std::map<DenseMono, Integer, decltype(desc)> acc(desc);
  auto add = [&acc](const DenseMono& m, const Integer& c) {
    auto [it, inserted] = acc.try_emplace(m, Integer(0));
    it->second += c;
    if (it->second == 0) acc.erase(it);
  };
  for (std::size_t t = 1; t < f.size(); ++t) add(qf * f[t].m, f[t].c * g.front().c);
  for (std::size_t t = 1; t < g.size(); ++t) add(qg * g[t].m, -(g[t].c * f.front().c));
  DensePoly out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back({m, c});
  return out;
}

}  // namespace detail

/// Normal form of f modulo G (reducers tried in list order).
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const CircularTermOrder& order) {
  const detail::DenseRing ring(order);
  std::vector<detail::DensePoly> dense_basis;
  for (const auto& g : basis) dense_basis.push_back(ring.dense(g));
  detail::ReduceStats stats;
  return ring.sparse(detail::reduce_dense(ring, ring.dense(f), dense_basis, stats));
}

/// Leading monomials seen at each reduction step, for monotonicity checks.
inline std::vector<Monomial> reduction_trace(const Polynomial& f, const std::vector<Polynomial>& basis,
                                             const CircularTermOrder& order) {
  const detail::DenseRing ring(order);
  std::vector<detail::DensePoly> dense_basis;
  for (const auto& g : basis) dense_basis.push_back(ring.dense(g));
  detail::ReduceStats stats;
  std::vector<Monomial> trace;
  detail::reduce_dense(ring, ring.dense(f), dense_basis, stats,
                       [&](const detail::DenseMono& m) { trace.push_back(ring.sparse(m)); });
  return trace;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const CircularTermOrder& order) {
  const detail::DenseRing ring(order);
  const auto df = ring.dense(f);
  const auto dg = ring.dense(g);
  detail::require_unit_lead(df);
  detail::require_unit_lead(dg);
  Polynomial out;
  for (const auto& t : detail::s_polynomial_dense(ring, df, dg)) out.add_term(ring.sparse(t.m), t.c);
  return out;
}

enum class IdealKind { toric, secant, symbolic_square };

inline std::string to_string(IdealKind k) {
  switch (k) {
    case IdealKind::toric:
      return "toric";
    case IdealKind::secant:
      return "secant";
    case IdealKind::symbolic_square:
      return "symbolic-square";
  }
  return "?";
}

struct CertificateCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when pass
};

struct PairOutcome {
  std::size_t first = 0;
  std::size_t second = 0;
  bool skipped = false;  // coprime leading monomials
  bool reduces_to_zero = true;
  Polynomial remainder;
};

struct SpairStats {
  std::size_t pairs = 0;
  std::size_t skipped = 0;
  std::size_t reduction_steps = 0;
  std::size_t max_intermediate_terms = 0;
  double wall_seconds = 0;
};

struct GroebnerCertificate {
  int n = 0;
  IdealKind kind = IdealKind::toric;
  std::string order;
  std::size_t generator_count = 0;
  std::vector<CertificateCheck> checks;
  std::vector<std::string> cited_theory;
  std::vector<PairOutcome> pair_outcomes;  // sorted by (first, second)
  SpairStats spair_stats;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.pass; });
  }
};

/// Every S-pair of G reduces to zero modulo G; pairs with coprime leading
/// monomials are skipped (product criterion).
inline GroebnerCertificate buchberger_verify(const std::vector<Polynomial>& basis, const CircularTermOrder& order,
                                             unsigned threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  const detail::DenseRing ring(order);
  std::vector<detail::DensePoly> dense_basis;
  for (const auto& g : basis) {
    dense_basis.push_back(ring.dense(g));
    detail::require_unit_lead(dense_basis.back());
  }
  GroebnerCertificate cert;
  cert.n = order.n();
  cert.order = order.descriptor();
  cert.generator_count = basis.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) pairs.emplace_back(a, b);

  std::vector<PairOutcome> outcomes(pairs.size());
  std::vector<detail::ReduceStats> stats(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    const auto [a, b] = pairs[p];
    PairOutcome& out = outcomes[p];
    out.first = a;
    out.second = b;
    if (dense_basis[a].front().m.coprime(dense_basis[b].front().m)) {
      out.skipped = true;
      return;
    }
    const auto s = detail::s_polynomial_dense(ring, dense_basis[a], dense_basis[b]);
    const auto r = detail::reduce_dense(ring, s, dense_basis, stats[p]);
    out.reduces_to_zero = r.empty();
    if (!r.empty()) out.remainder = ring.sparse(r);
  });

  std::size_t failures = 0;
  std::string witness;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    cert.spair_stats.pairs++;
    if (outcomes[p].skipped) cert.spair_stats.skipped++;
    cert.spair_stats.reduction_steps += stats[p].steps;
    cert.spair_stats.max_intermediate_terms = std::max(cert.spair_stats.max_intermediate_terms, stats[p].max_terms);
    if (!outcomes[p].reduces_to_zero) {
      if (failures++ == 0)
        witness = "S(g" + std::to_string(outcomes[p].first) + ", g" + std::to_string(outcomes[p].second) +
                  ") has remainder " + to_string(outcomes[p].remainder, order);
    }
  }
  cert.pair_outcomes = std::move(outcomes);
  cert.checks.push_back({"buchberger: all S-pairs reduce to zero", failures == 0,
                         failures == 0 ? "" : std::to_string(failures) + " failing pair(s); first: " + witness});
  cert.spair_stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

/// Minor of the symmetric matrix (x[ab]) with rows b1,b2,b3 and columns
/// b4,b5,b6, signed so the antidiagonal x[b1,b6]x[b2,b5]x[b3,b4] has
/// coefficient +1. Indices must be distinct and in circular order (a
/// rotation of an increasing sequence).
inline Polynomial off_diagonal_minor_3x3(const CircularSextuple& b) {
  int descents = 0;
  for (std::size_t p = 0; p < 6; ++p) {
    if (b[p] < 1) throw Error("off_diagonal_minor_3x3: indices are 1-based");
    for (std::size_t q = p + 1; q < 6; ++q)
      if (b[p] == b[q]) throw Error("off_diagonal_minor_3x3: indices must be distinct");
    if (b[(p + 1) % 6] < b[p]) ++descents;
  }
  if (descents != 1) throw Error("off_diagonal_minor_3x3: indices must be in circular order");
  static constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static constexpr std::array<int, 6> signs{1, -1, -1, 1, 1, -1};
  Polynomial minor;
  for (std::size_t p = 0; p < perms.size(); ++p) {
    std::vector<Edge> es;
    for (std::size_t r = 0; r < 3; ++r) es.emplace_back(b[r], b[3 + static_cast<std::size_t>(perms[p][r])]);
    minor.add_term(Monomial::of_edges(es), -signs[p]);
  }
  return minor;
}

/// A candidate Groebner basis element with the monomial its leading term
/// should be and, for products, the factors that witness membership.
struct Candidate {
  Polynomial poly;
  Monomial expected_lead;
  std::string origin;
  std::vector<Polynomial> factors;
};

inline std::vector<Candidate> secant_candidates(int n) {
  require_n(n, 4, "secant_gb");
  std::vector<Candidate> out;
  for (const auto& s : all_admissible_sequences(n))
    out.push_back({master_polynomial(s), cycle_monomial(s), "master " + s.to_string(), {}});
  for (const auto& b : circular_sextuples(n)) {
    std::string name = "minor";
    for (int x : b) name += " " + std::to_string(x);
    out.push_back({off_diagonal_minor_3x3(b), nested_triple_monomial(b), name, {}});
  }
  return out;
}

inline std::vector<Candidate> symbolic_square_candidates(int n) {
  require_n(n, 4, "symbolic_square_gb");
  std::vector<Candidate> out;
  for (const auto& b : circular_sextuples(n)) {
    std::string name = "minor";
    for (int x : b) name += " " + std::to_string(x);
    out.push_back({off_diagonal_minor_3x3(b), nested_triple_monomial(b), name, {}});
  }
  if (n >= 6)
    for (const auto& s : admissible_sequences(n, 1))
      out.push_back({master_polynomial(s), cycle_monomial(s), "master " + s.to_string(), {}});
  const auto toric = toric_gb(n);
  for (std::size_t a = 0; a < toric.size(); ++a)
    for (std::size_t b = a; b < toric.size(); ++b) {
      const Polynomial fa = toric[a].polynomial();
      const Polynomial fb = toric[b].polynomial();
      out.push_back({fa * fb, toric[a].lead * toric[b].lead,
                     "product of toric generators " + std::to_string(a) + " and " + std::to_string(b), {fa, fb}});
    }
  return out;
}

inline std::vector<Polynomial> polynomials_of(const std::vector<Candidate>& cs) {
  std::vector<Polynomial> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.poly);
  return out;
}

/// Master polynomials of every admissible sequence plus the 3x3 off-diagonal
/// minors of every circular sextuple.
inline std::vector<Polynomial> secant_gb(int n) { return polynomials_of(secant_candidates(n)); }

/// 3x3 off-diagonal minors, degree-3 master polynomials, and products of
/// pairs (with repetition) of the toric generators.
inline std::vector<Polynomial> symbolic_square_gb(int n) { return polynomials_of(symbolic_square_candidates(n)); }

namespace detail {

inline std::string first_difference(const MonomialIdeal& got, const MonomialIdeal& want) {
  for (const auto& m : want.generators())
    if (!std::binary_search(got.generators().begin(), got.generators().end(), m))
      return "missing generator " + m.to_string();
  for (const auto& m : got.generators())
    if (!std::binary_search(want.generators().begin(), want.generators().end(), m))
      return "extra generator " + m.to_string();
  return {};
}

}  // namespace detail

/// Certifies in(<G>) = in(I_n)^{2} (or in(I_n)^(2)) for the candidate
/// basis G: membership of every candidate, leading terms, equality of the
/// leading-term ideal with the brute-force combinatorial ideal, and
/// optionally Buchberger's criterion.
inline GroebnerCertificate delightful_check(int n, IdealKind kind, const CircularTermOrder& order,
                                            bool with_buchberger, unsigned threads = 1) {
  if (kind == IdealKind::toric) throw Error("delightful_check: kind must be secant or symbolic-square");
  if (order.n() != n) throw Error("delightful_check: order is for a different n");
  const auto start = std::chrono::steady_clock::now();
  const auto candidates = kind == IdealKind::secant ? secant_candidates(n) : symbolic_square_candidates(n);

  std::vector<char> member(candidates.size(), 0);
  std::vector<Monomial> leads(candidates.size());
  parallel_for(candidates.size(), threads, [&](std::size_t c) {
    const Candidate& cand = candidates[c];
    leads[c] = leading_monomial(order, cand.poly);
    if (!cand.factors.empty())
      member[c] = std::all_of(cand.factors.begin(), cand.factors.end(),
                              [n](const Polynomial& f) { return in_toric_ideal(n, f); });
    else
      member[c] = in_secant_ideal(n, cand.poly);
  });

  GroebnerCertificate cert;
  cert.n = n;
  cert.kind = kind;
  cert.order = order.descriptor();
  cert.generator_count = candidates.size();

  auto first_failure = [&](auto&& bad) -> std::string {
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (bad(c)) return candidates[c].origin + ": " + to_string(candidates[c].poly, order);
    return {};
  };
  const std::string member_witness = first_failure([&](std::size_t c) { return !member[c]; });
  cert.checks.push_back({kind == IdealKind::secant ? "membership: every candidate lies in the secant ideal"
                                                   : "membership: every candidate lies in I^2 or the secant ideal",
                         member_witness.empty(), member_witness});
  std::string lead_witness;
  for (std::size_t c = 0; c < candidates.size() && lead_witness.empty(); ++c)
    if (leads[c] != candidates[c].expected_lead)
      lead_witness = candidates[c].origin + ": leading monomial " + leads[c].to_string() + ", expected " +
                     candidates[c].expected_lead.to_string();
  cert.checks.push_back({"leading terms match the combinatorial generators", lead_witness.empty(), lead_witness});

  const NoncrossingGraph g(n);
  const MonomialIdeal target =
      kind == IdealKind::secant ? secant_of_edge_ideal(g, max_odd_up_to(n), threads) : symbolic_square_of_edge_ideal(g);
  const MonomialIdeal lead_ideal(leads);
  const std::string ideal_witness = detail::first_difference(lead_ideal, target);
  cert.checks.push_back({kind == IdealKind::secant ? "initial ideal equals the secant of the noncrossing edge ideal"
                                                   : "initial ideal equals the symbolic square of the noncrossing edge ideal",
                         ideal_witness.empty(), ideal_witness});

  cert.cited_theory.push_back("in(I^{2}) is contained in in(I)^{2} for every term order");
  if (kind == IdealKind::symbolic_square) {
    cert.cited_theory.push_back("in(I^(2)) is contained in in(I)^(2) when I and in(I) are radical");
    cert.cited_theory.push_back("I^2 + I^{2} is contained in I^(2)");
  }

  if (with_buchberger) {
    GroebnerCertificate bb = buchberger_verify(polynomials_of(candidates), order, threads);
    cert.checks.push_back(bb.checks.front());
    cert.pair_outcomes = std::move(bb.pair_outcomes);
    cert.spair_stats = bb.spair_stats;
  }
  cert.spair_stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

}  // namespace hypersecant
