#pragma once

// Circular block term orders on the edge variables of K_n.
//
// Edges are grouped by circular distance d = min(b-a, n-(b-a)) into blocks
// 1..floor(n/2); block 1 (boundary edges) dominates. Monomials are compared
// block by block, each block under the inner order (grevlex or lex), with
// variables inside a block ranked ascending by (a, b), first = largest.

#include "hypersecant/poly.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hypersecant {

enum class InnerOrder { grevlex, lex };

inline std::string to_string(InnerOrder o) { return o == InnerOrder::grevlex ? "grevlex" : "lex"; }

inline InnerOrder parse_inner_order(std::string_view s) {
  if (s.starts_with("inner=")) s.remove_prefix(6);
  if (s == "grevlex") return InnerOrder::grevlex;
  if (s == "lex") return InnerOrder::lex;
  throw Error("unknown inner order '" + std::string(s) + "' (expected grevlex or lex)");
}

/// Circular distance class of e in K_n, in 1..floor(n/2).
inline int edge_class(int n, Edge e) {
  if (!e.valid_for(n)) throw Error("edge " + Variable::x(e).to_string() + " is not an edge of K_" + std::to_string(n));
  const int d = e.b - e.a;
  return std::min(d, n - d);
}

class CircularTermOrder {
 public:
  explicit CircularTermOrder(int n, InnerOrder inner = InnerOrder::grevlex) : n_(n), inner_(inner) {
    if (n < 2) throw Error("circular order needs n >= 2");
    std::vector<std::pair<int, Edge>> keyed;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) keyed.emplace_back(edge_class(n, Edge(a, b)), Edge(a, b));
    std::sort(keyed.begin(), keyed.end());
    rank_.assign(static_cast<std::size_t>(n + 1) * (n + 1), -1);
    block_begin_.push_back(0);
    for (std::size_t r = 0; r < keyed.size(); ++r) {
      const auto& [cls, e] = keyed[r];
      if (r > 0 && keyed[r - 1].first != cls) block_begin_.push_back(r);
      rank_[slot(e)] = static_cast<int>(r);
      by_rank_.push_back(e);
    }
    block_begin_.push_back(keyed.size());
  }

  int n() const { return n_; }
  InnerOrder inner() const { return inner_; }
  int block_count() const { return n_ / 2; }
  std::size_t variable_count() const { return by_rank_.size(); }

  /// Block-major position of an edge variable (0 = largest variable).
  int rank(Edge e) const {
    if (!e.valid_for(n_)) throw Error("edge " + Variable::x(e).to_string() + " outside K_" + std::to_string(n_));
    return rank_[slot(e)];
  }
  Edge edge_at(std::size_t r) const { return by_rank_.at(r); }
  /// Half-open rank ranges of the blocks, in block order.
  const std::vector<std::size_t>& block_bounds() const { return block_begin_; }

  /// Dense exponent vector in rank layout; rejects parameter variables.
  std::vector<unsigned> dense(const Monomial& m) const {
    std::vector<unsigned> v(variable_count(), 0);
    for (const auto& [var, e] : m.factors()) {
      if (!var.is_edge()) throw Error("term order compares edge monomials only, got " + var.to_string());
      v[static_cast<std::size_t>(rank(var.edge()))] += e;
    }
    return v;
  }

  /// Comparison of dense exponent vectors laid out by rank().
  template <typename Vec>
  std::strong_ordering compare_dense(const Vec& x, const Vec& y) const {
    for (std::size_t blk = 0; blk + 1 < block_begin_.size(); ++blk) {
      const std::size_t lo = block_begin_[blk];
      const std::size_t hi = block_begin_[blk + 1];
      if (inner_ == InnerOrder::lex) {
        for (std::size_t r = lo; r < hi; ++r)
          if (x[r] != y[r]) return x[r] > y[r] ? std::strong_ordering::greater : std::strong_ordering::less;
        continue;
      }
      unsigned dx = 0, dy = 0;
      for (std::size_t r = lo; r < hi; ++r) {
        dx += x[r];
        dy += y[r];
      }
      if (dx != dy) return dx > dy ? std::strong_ordering::greater : std::strong_ordering::less;
      for (std::size_t r = hi; r-- > lo;)
        if (x[r] != y[r]) return x[r] < y[r] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering compare(const Monomial& m1, const Monomial& m2) const {
    if (m1 == m2) {
      dense(m1);  // validation only
      return std::strong_ordering::equal;
    }
    return compare_dense(dense(m1), dense(m2));
  }

  bool greater(const Monomial& m1, const Monomial& m2) const { return compare(m1, m2) > 0; }

  std::string descriptor() const { return "circular/" + to_string(inner_); }

 private:
  std::size_t slot(Edge e) const { return static_cast<std::size_t>(e.a) * (n_ + 1) + e.b; }

  int n_;
  InnerOrder inner_;
  std::vector<int> rank_;
  std::vector<Edge> by_rank_;
  std::vector<std::size_t> block_begin_;
};

/// Terms of p sorted descending under order.
inline std::vector<std::pair<Monomial, Integer>> sorted_terms(const CircularTermOrder& order, const Polynomial& p) {
  std::vector<std::pair<std::vector<unsigned>, std::pair<Monomial, Integer>>> keyed;
  keyed.reserve(p.term_count());
  for (const auto& [m, c] : p) keyed.push_back({order.dense(m), {m, c}});
  std::sort(keyed.begin(), keyed.end(),
            [&](const auto& l, const auto& r) { return order.compare_dense(l.first, r.first) > 0; });
  std::vector<std::pair<Monomial, Integer>> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

inline std::pair<Monomial, Integer> leading_term(const CircularTermOrder& order, const Polynomial& p) {
  if (p.is_zero()) throw Error("leading_term of the zero polynomial");
  auto best = p.begin();
  auto best_dense = order.dense(best->first);
  for (auto it = std::next(p.begin()); it != p.end(); ++it) {
    auto d = order.dense(it->first);
    if (order.compare_dense(d, best_dense) > 0) {
      best = it;
      best_dense = std::move(d);
    }
  }
  return *best;
}

inline Monomial leading_monomial(const CircularTermOrder& order, const Polynomial& p) {
  return leading_term(order, p).first;
}

/// Text form with terms emitted in descending order.
inline std::string to_string(const Polynomial& p, const CircularTermOrder& order) {
  return format_terms(sorted_terms(order, p));
}

}  // namespace hypersecant
