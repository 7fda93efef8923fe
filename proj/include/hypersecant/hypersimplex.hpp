#pragma once

// The toric ideal I_n of the second hypersimplex (kernel of x[i,j] -> t_i t_j),
// its quadratic Groebner basis for circular orders, and exact membership
// oracles for I_n and its secant ideal.

#include "hypersecant/circular_order.hpp"
#include "hypersecant/monomial_ideal.hpp"
#include "hypersecant/poly.hpp"

#include <vector>

namespace hypersecant {

/// Chords of the n-gon cross iff they share an endpoint or their endpoints
/// interleave around the circle.
inline bool crosses(int n, Edge e, Edge f) {
  if (!e.valid_for(n) || !f.valid_for(n)) throw Error("crosses: edge outside K_" + std::to_string(n));
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return true;
  const bool fa_inside = e.a < f.a && f.a < e.b;
  const bool fb_inside = e.a < f.b && f.b < e.b;
  return fa_inside != fb_inside;
}

/// lead - trail, with lead a noncrossing pair and trail its crossing exchange.
struct BinomialGenerator {
  Monomial lead;
  Monomial trail;

  Polynomial polynomial() const {
    Polynomial p(lead);
    p.add_term(trail, -1);
    return p;
  }
};

inline void require_n(int n, int min_n, const char* what) {
  if (n < min_n) throw Error(std::string(what) + ": requires n >= " + std::to_string(min_n));
  if (n > 255) throw Error(std::string(what) + ": n too large");
}

/// For i<j<k<l: x[i,j]x[k,l] - x[i,k]x[j,l] and x[i,l]x[j,k] - x[i,k]x[j,l],
/// ordered by (i,j,k,l) then family.
inline std::vector<BinomialGenerator> toric_gb(int n) {
  require_n(n, 3, "toric_gb");
  std::vector<BinomialGenerator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const Monomial crossing = Monomial::of_edges({Edge(i, k), Edge(j, l)});
          out.push_back({Monomial::of_edges({Edge(i, j), Edge(k, l)}), crossing});
          out.push_back({Monomial::of_edges({Edge(i, l), Edge(j, k)}), crossing});
        }
  return out;
}

inline std::vector<Polynomial> toric_gb_polynomials(int n) {
  std::vector<Polynomial> out;
  for (const auto& g : toric_gb(n)) out.push_back(g.polynomial());
  return out;
}

inline std::vector<Edge> all_edges(int n) {
  std::vector<Edge> es;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) es.emplace_back(a, b);
  return es;
}

/// in(I_n): generated by the products of noncrossing edge pairs.
inline MonomialIdeal initial_edge_ideal(int n) {
  require_n(n, 3, "initial_edge_ideal");
  const auto es = all_edges(n);
  std::vector<Monomial> gens;
  for (std::size_t p = 0; p < es.size(); ++p)
    for (std::size_t q = p + 1; q < es.size(); ++q)
      if (!crosses(n, es[p], es[q])) gens.push_back(Monomial::of_edges({es[p], es[q]}));
  return MonomialIdeal(std::move(gens));
}

inline void require_edges_within(int n, const Polynomial& p) {
  for (const auto& [m, c] : p)
    for (const auto& [v, e] : m.factors())
      if (!v.is_edge() || !v.edge().valid_for(n))
        throw Error("polynomial uses " + v.to_string() + ", not an edge variable of K_" + std::to_string(n));
}

inline bool in_toric_ideal(int n, const Polynomial& p) {
  require_edges_within(n, p);
  return substitute_rank(p, 1).is_zero();
}

inline bool in_secant_ideal(int n, const Polynomial& p) {
  require_edges_within(n, p);
  if (!p.is_homogeneous()) throw Error("in_secant_ideal: polynomial must be homogeneous");
  return substitute_rank(p, 2).is_zero();
}

}  // namespace hypersecant
