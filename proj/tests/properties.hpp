#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// gate. Each returns the number of cases run and the first failure seen.

#include "oracles.hpp"

#include <functional>
#include <string>

namespace properties {

using namespace hypersecant;

struct Report {
  explicit Report(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
  bool ok() const { return failures == 0; }
};

inline InnerOrder random_inner(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? InnerOrder::grevlex : InnerOrder::lex;
}

inline int random_n(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Antisymmetry, transitivity, multiplicativity, 1 minimal, and agreement
// with the weight-matrix reference.
inline Report term_order_axioms(std::size_t cases, std::uint64_t seed) {
  Report r("term-order axioms");
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const int n = random_n(rng, 4, 10);
    const InnerOrder inner = random_inner(rng);
    const CircularTermOrder order(n, inner);
    const oracle::MatrixOrder reference(n, inner);
    const Monomial a = oracle::random_edge_monomial(rng, n, 5);
    const Monomial b = oracle::random_edge_monomial(rng, n, 5);
    const Monomial x = oracle::random_edge_monomial(rng, n, 5);
    const Monomial m = oracle::random_edge_monomial(rng, n, 3);
    const auto ab = order.compare(a, b);
    const auto bx = order.compare(b, x);
    const auto ax = order.compare(a, x);
    bool ok = ab == (0 <=> order.compare(b, a));
    ok = ok && ((ab == 0) == (a == b));
    if (ab >= 0 && bx >= 0) ok = ok && ax >= 0;
    if (ab <= 0 && bx <= 0) ok = ok && ax <= 0;
    ok = ok && order.compare(a * m, b * m) == ab;
    ok = ok && (a.is_one() ? order.compare(a, Monomial()) == 0 : order.compare(a, Monomial()) > 0);
    ok = ok && reference.compare(a, b) == ab;
    r.check(ok, [&] {
      return "n=" + std::to_string(n) + " " + to_string(inner) + " a=" + a.to_string() + " b=" + b.to_string() +
             " x=" + x.to_string() + " m=" + m.to_string();
    });
  }
  return r;
}

// Commutative ring laws over Z[x].
inline Report ring_laws(std::size_t cases, std::uint64_t seed) {
  Report r("ring laws");
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const int n = random_n(rng, 3, 7);
    const Polynomial p = oracle::random_polynomial(rng, n, 4, 3);
    const Polynomial q = oracle::random_polynomial(rng, n, 4, 3);
    const Polynomial s = oracle::random_polynomial(rng, n, 4, 3);
    const Polynomial one{Integer(1)}, zero;
    bool ok = p + q == q + p && p * q == q * p;
    ok = ok && (p + q) + s == p + (q + s) && (p * q) * s == p * (q * s);
    ok = ok && p * (q + s) == p * q + p * s;
    ok = ok && p + zero == p && p * one == p && (p * zero).is_zero() && (p - p).is_zero();
    ok = ok && (p.is_zero() || q.is_zero() || (p * q).degree() == p.degree() + q.degree());
    r.check(ok, [&] { return "p=" + to_string(p) + " q=" + to_string(q) + " s=" + to_string(s); });
  }
  return r;
}

// d(pq) = d(p) q + p d(q), and mixed partials commute.
inline Report leibniz_rule(std::size_t cases, std::uint64_t seed) {
  Report r("Leibniz rule");
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const int n = random_n(rng, 3, 6);
    const Polynomial p = oracle::random_polynomial(rng, n, 4, 4);
    const Polynomial q = oracle::random_polynomial(rng, n, 4, 4);
    const Variable v = Variable::x(oracle::random_edge(rng, n));
    const Variable w = Variable::x(oracle::random_edge(rng, n));
    bool ok = partial_derivative(p * q, v) == partial_derivative(p, v) * q + p * partial_derivative(q, v);
    ok = ok && partial_derivative(partial_derivative(p, v), w) == partial_derivative(partial_derivative(p, w), v);
    r.check(ok, [&] { return "p=" + to_string(p) + " q=" + to_string(q) + " v=" + v.to_string(); });
  }
  return r;
}

// substitute_rank is a ring homomorphism and agrees with numeric
// evaluation of the parameterization.
inline Report substitution_homomorphism(std::size_t cases, std::uint64_t seed) {
  Report r("substitute_rank homomorphism");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (std::size_t c = 0; c < cases; ++c) {
    const int n = random_n(rng, 3, 6);
    const int rank = random_n(rng, 1, 2);
    const Polynomial p = oracle::random_polynomial(rng, n, 3, 3);
    const Polynomial q = oracle::random_polynomial(rng, n, 3, 3);
    bool ok = substitute_rank(p + q, rank) == substitute_rank(p, rank) + substitute_rank(q, rank);
    ok = ok && substitute_rank(p * q, rank) == substitute_rank(p, rank) * substitute_rank(q, rank);
    std::vector<Integer> t(static_cast<std::size_t>(n + 1)), u(static_cast<std::size_t>(n + 1));
    for (int a = 1; a <= n; ++a) {
      t[static_cast<std::size_t>(a)] = d(rng);
      u[static_cast<std::size_t>(a)] = d(rng);
    }
    // Evaluate the image in t, u directly.
    Integer image = 0;
    for (const auto& [m, coef] : substitute_rank(p, rank)) {
      Integer term = coef;
      for (const auto& [var, e] : m.factors())
        for (unsigned k = 0; k < e; ++k)
          term *= var.kind == VarKind::param_t ? t[static_cast<std::size_t>(var.a)] : u[static_cast<std::size_t>(var.a)];
      image += term;
    }
    ok = ok && image == oracle::evaluate_rank(p, t, u, rank);
    r.check(ok, [&] { return "rank " + std::to_string(rank) + " p=" + to_string(p) + " q=" + to_string(q); });
  }
  return r;
}

// Reduction by the quadratic toric basis: leading monomials strictly
// decrease, the remainder is standard, and f - remainder lies in I_n.
inline Report reduction_monotonicity(std::size_t cases, std::uint64_t seed) {
  Report r("reduction termination and monotonicity");
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const int n = random_n(rng, 4, 8);
    const CircularTermOrder order(n, random_inner(rng));
    const auto basis = toric_gb_polynomials(n);
    const Polynomial f = oracle::random_polynomial(rng, n, 4, 4);
    const auto trace = reduction_trace(f, basis, order);
    const Polynomial rem = reduce(f, basis, order);
    bool ok = true;
    for (std::size_t s = 1; s < trace.size(); ++s) ok = ok && order.greater(trace[s - 1], trace[s]);
    for (const auto& [m, coef] : rem)
      for (const auto& g : basis) ok = ok && !leading_monomial(order, g).divides(m);
    ok = ok && in_toric_ideal(n, f - rem);
    r.check(ok, [&] { return "n=" + std::to_string(n) + " " + order.descriptor() + " f=" + to_string(f); });
  }
  return r;
}

inline std::vector<Report> all(std::size_t cases, std::uint64_t seed) {
  return {term_order_axioms(cases, seed), ring_laws(cases, seed + 1), leibniz_rule(cases, seed + 2),
          substitution_homomorphism(cases, seed + 3), reduction_monotonicity(cases, seed + 4)};
}

}  // namespace properties
