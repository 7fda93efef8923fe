#pragma once

// The noncrossing graph G_n, induced odd cycles, secant and symbolic-square
// ideals of edge ideals, and the admissible index sequences that name the
// odd cycles of G_n combinatorially.

#include "hypersecant/hypersimplex.hpp"
#include "hypersecant/monomial_ideal.hpp"
#include "hypersecant/parallel.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hypersecant {

/// Vertices are the chords of the n-gon ordered by (a, b); two chords are
/// adjacent iff they do not cross.
class NoncrossingGraph {
 public:
  explicit NoncrossingGraph(int n) : n_(n), vertices_(all_edges(n)) {
    require_n(n, 3, "build_graph");
    const std::size_t v = vertices_.size();
    adj_.assign(v, std::vector<char>(v, 0));
    for (std::size_t p = 0; p < v; ++p)
      for (std::size_t q = p + 1; q < v; ++q)
        adj_[p][q] = adj_[q][p] = !crosses(n, vertices_[p], vertices_[q]);
  }

  int n() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Edge>& vertices() const { return vertices_; }
  const Edge& vertex(std::size_t p) const { return vertices_.at(p); }
  bool adjacent(std::size_t p, std::size_t q) const { return adj_.at(p).at(q) != 0; }

  std::size_t index_of(Edge e) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), e);
    if (it == vertices_.end() || *it != e) throw Error("edge not in graph");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t degree(std::size_t p) const {
    return static_cast<std::size_t>(std::count(adj_.at(p).begin(), adj_.at(p).end(), 1));
  }

  /// Adjacent vertex pairs (p < q) in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> adjacencies() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < vertex_count(); ++p)
      for (std::size_t q = p + 1; q < vertex_count(); ++q)
        if (adj_[p][q]) out.emplace_back(p, q);
    return out;
  }

 private:
  int n_;
  std::vector<Edge> vertices_;
  std::vector<std::vector<char>> adj_;
};

inline NoncrossingGraph build_graph(int n) { return NoncrossingGraph(n); }

using VertexSet = std::vector<Edge>;

inline Monomial vertex_set_monomial(const VertexSet& vs) { return Monomial::of_edges(vs); }

namespace detail {

// Depth-first subset search in increasing vertex order, keeping every
// chosen vertex at induced degree <= 2 and able to reach degree 2 using
// the still-unvisited vertices.
class InducedCycleSearch {
 public:
  InducedCycleSearch(const NoncrossingGraph& g, std::size_t max_len) : g_(g), max_len_(max_len) {
    const std::size_t v = g.vertex_count();
    if (v > 64) throw Error("induced_odd_cycles: brute force supports at most 64 graph vertices (n <= 11)");
    nbr_.assign(v, 0);
    for (std::size_t p = 0; p < v; ++p)
      for (std::size_t q = 0; q < v; ++q)
        if (g.adjacent(p, q)) nbr_[p] |= std::uint64_t{1} << q;
  }

  /// All induced odd cycles whose smallest vertex is `first`.
  std::vector<std::uint64_t> rooted_at(std::size_t first) {
    found_.clear();
    chosen_ = std::uint64_t{1} << first;
    extend(first + 1);
    return found_;
  }

 private:
  void extend(std::size_t next) {
    const int size = std::popcount(chosen_);
    if (size >= 3 && (size % 2 == 1) && is_cycle()) found_.push_back(chosen_);
    if (static_cast<std::size_t>(size) >= max_len_) return;
    const std::size_t v = g_.vertex_count();
    for (std::size_t q = next; q < v; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      const std::uint64_t with = chosen_ | bit;
      if (std::popcount(nbr_[q] & chosen_) > 2) continue;
      if (!degrees_ok(with, q + 1)) continue;
      chosen_ = with;
      extend(q + 1);
      chosen_ &= ~bit;
    }
  }

  bool degrees_ok(std::uint64_t set, std::size_t next) const {
    const std::uint64_t rest = next >= 64 ? 0 : (~std::uint64_t{0} << next) & mask_all();
    for (std::uint64_t s = set; s; s &= s - 1) {
      const auto p = static_cast<std::size_t>(std::countr_zero(s));
      const int d = std::popcount(nbr_[p] & set);
      if (d > 2) return false;
      if (d + std::popcount(nbr_[p] & rest) < 2) return false;
    }
    return true;
  }

  bool is_cycle() const {
    for (std::uint64_t s = chosen_; s; s &= s - 1)
      if (std::popcount(nbr_[static_cast<std::size_t>(std::countr_zero(s))] & chosen_) != 2) return false;
    // 2-regular: connected iff a walk from one vertex reaches all.
    std::uint64_t seen = chosen_ & (~chosen_ + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t nxt = 0;
      for (std::uint64_t s = frontier; s; s &= s - 1) nxt |= nbr_[static_cast<std::size_t>(std::countr_zero(s))];
      nxt &= chosen_ & ~seen;
      seen |= nxt;
      frontier = nxt;
    }
    return seen == chosen_;
  }

  std::uint64_t mask_all() const {
    const std::size_t v = g_.vertex_count();
    return v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
  }

  const NoncrossingGraph& g_;
  std::size_t max_len_;
  std::vector<std::uint64_t> nbr_;
  std::vector<std::uint64_t> found_;
  std::uint64_t chosen_ = 0;
};

}  // namespace detail

/// Brute-force enumeration of vertex sets V, 3 <= |V| <= max_len odd, whose
/// induced subgraph is a cycle. Sorted by size, then lexicographically.
inline std::vector<VertexSet> induced_odd_cycles(const NoncrossingGraph& g, int max_len, unsigned threads = 1) {
  if (max_len < 3 || max_len % 2 == 0) throw Error("induced_odd_cycles: max_len must be odd and >= 3");
  const std::size_t v = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> per_root(v);
  parallel_for(v, threads, [&](std::size_t first) {
    detail::InducedCycleSearch search(g, static_cast<std::size_t>(max_len));
    per_root[first] = search.rooted_at(first);
  });
  std::vector<VertexSet> out;
  for (const auto& sets : per_root)
    for (std::uint64_t s : sets) {
      VertexSet vs;
      for (; s; s &= s - 1) vs.push_back(g.vertex(static_cast<std::size_t>(std::countr_zero(s))));
      out.push_back(std::move(vs));
    }
  std::sort(out.begin(), out.end(), [](const VertexSet& l, const VertexSet& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  return out;
}

/// Largest odd number <= n (at least 3).
inline int max_odd_up_to(int n) { return std::max(3, n % 2 == 1 ? n : n - 1); }

/// I(G)^{2}: generated by x_V over induced odd cycles V.
inline MonomialIdeal secant_of_edge_ideal(const NoncrossingGraph& g, int max_len, unsigned threads = 1) {
  std::vector<Monomial> gens;
  for (const auto& vs : induced_odd_cycles(g, max_len, threads)) gens.push_back(vertex_set_monomial(vs));
  return MonomialIdeal(std::move(gens));
}

/// I(G)^(2): triangles of g plus products of two (not necessarily disjoint)
/// edges of g.
inline MonomialIdeal symbolic_square_of_edge_ideal(const NoncrossingGraph& g) {
  std::vector<Monomial> gens;
  const std::size_t v = g.vertex_count();
  for (std::size_t p = 0; p < v; ++p)
    for (std::size_t q = p + 1; q < v; ++q) {
      if (!g.adjacent(p, q)) continue;
      for (std::size_t r = q + 1; r < v; ++r)
        if (g.adjacent(p, r) && g.adjacent(q, r))
          gens.push_back(Monomial::of_edges({g.vertex(p), g.vertex(q), g.vertex(r)}));
    }
  std::vector<Monomial> edges;
  for (const auto& [p, q] : g.adjacencies()) edges.push_back(Monomial::of_edges({g.vertex(p), g.vertex(q)}));
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a; b < edges.size(); ++b) gens.push_back(edges[a] * edges[b]);
  return MonomialIdeal(std::move(gens));
}

// ---------------------------------------------------------------------------
// Admissible sequences.

/// Index data i_1 <= j_1 < i_2 <= j_2 < ... < i_{2k+1} <= j_{2k+1} read
/// cyclically, winding once around the circle. Stored rotated so that i_1
/// is the smallest i; then every comparison but possibly the last
/// (i_{2k+1} -> j_{2k+1}) is an increase in 1..n.
class AdmissibleSequence {
 public:
  AdmissibleSequence(std::vector<int> i, std::vector<int> j) : i_(std::move(i)), j_(std::move(j)) {
    if (i_.size() != j_.size()) throw Error("admissible sequence: i and j must have equal length");
    if (i_.size() < 3 || i_.size() % 2 == 0) throw Error("admissible sequence: length must be odd and >= 3");
    k_ = static_cast<int>(i_.size() - 1) / 2;
    for (int x : i_)
      if (x < 1) throw Error("admissible sequence: indices are 1-based");
    for (int x : j_)
      if (x < 1) throw Error("admissible sequence: indices are 1-based");
    validate_winding();
    canonicalize();
    for (int l = 0; l < length(); ++l)
      if (i_[l] == j_[partner(l)])
        throw Error("admissible sequence: cycle monomial would contain the loop x[" + std::to_string(i_[l]) + "," +
                    std::to_string(i_[l]) + "]");
  }

  int k() const { return k_; }
  int length() const { return 2 * k_ + 1; }
  const std::vector<int>& i() const { return i_; }
  const std::vector<int>& j() const { return j_; }
  int max_index() const {
    return std::max(*std::max_element(i_.begin(), i_.end()), *std::max_element(j_.begin(), j_.end()));
  }
  /// 0-based position l + k - 1 (mod 2k+1) of the j paired with i_l.
  int partner(int l) const { return (l + k_ - 1) % length(); }

  bool injective() const {
    for (int l = 0; l < length(); ++l)
      if (i_[l] == j_[l]) return false;
    return true;
  }

  std::string to_string() const {
    auto list = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    };
    return "i=(" + list(i_) + ") j=(" + list(j_) + ")";
  }

  friend auto operator<=>(const AdmissibleSequence& l, const AdmissibleSequence& r) {
    if (auto c = l.i_ <=> r.i_; c != 0) return c;
    return l.j_ <=> r.j_;
  }
  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;

 private:
  void validate_winding() const {
    // Walking i_1, j_1, i_2, ..., j_{2k+1} and back to i_1, steps i->j may
    // be stationary, steps j->i must move, and exactly one step decreases.
    int descents = 0;
    const int len = length();
    for (int l = 0; l < len; ++l) {
      if (j_[l] < i_[l]) ++descents;
      const int next_i = i_[(l + 1) % len];
      if (next_i == j_[l]) throw Error("admissible sequence: j_l < i_{l+1} must be strict");
      if (next_i < j_[l]) ++descents;
    }
    if (descents != 1) throw Error("admissible sequence: indices must wind exactly once around the circle");
  }

  void canonicalize() {
    const auto shift = static_cast<std::size_t>(std::min_element(i_.begin(), i_.end()) - i_.begin());
    std::rotate(i_.begin(), i_.begin() + static_cast<std::ptrdiff_t>(shift), i_.end());
    std::rotate(j_.begin(), j_.begin() + static_cast<std::ptrdiff_t>(shift), j_.end());
  }

  int k_ = 1;
  std::vector<int> i_;
  std::vector<int> j_;
};

/// prod_l x[i_l, j_{l+k-1}].
inline Monomial cycle_monomial(const AdmissibleSequence& s) {
  std::vector<Edge> es;
  for (int l = 0; l < s.length(); ++l) es.emplace_back(s.i()[l], s.j()[s.partner(l)]);
  return Monomial::of_edges(es);
}

/// All canonical admissible sequences of length 2k+1 with indices in 1..n,
/// in lexicographic order.
inline std::vector<AdmissibleSequence> admissible_sequences(int n, int k) {
  if (k < 1) throw Error("admissible_sequences: k must be >= 1");
  require_n(n, 3, "admissible_sequences");
  const int len = 2 * k + 1;
  std::vector<AdmissibleSequence> out;
  std::vector<int> i(static_cast<std::size_t>(len)), j(static_cast<std::size_t>(len));
  // Recursive fill in chain order; only the final j may wrap below i_1.
  auto fill = [&](auto&& self, int pos, int lo) -> void {
    const int l = pos / 2;
    const bool is_j = pos % 2 == 1;
    if (pos == 2 * len - 1) {
      auto emit = [&](int v) {
        j[static_cast<std::size_t>(l)] = v;
        if (k == 1 && v == i[static_cast<std::size_t>(l)]) return;
        out.emplace_back(i, j);
      };
      for (int v = lo; v <= n; ++v) emit(v);
      for (int v = 1; v < i[0]; ++v) emit(v);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      (is_j ? j : i)[static_cast<std::size_t>(l)] = v;
      if (k == 1 && is_j && v == i[static_cast<std::size_t>(l)]) continue;
      self(self, pos + 1, is_j ? v + 1 : v);
    }
  };
  fill(fill, 0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every admissible sequence for n, all k with 2k+1 <= n.
inline std::vector<AdmissibleSequence> all_admissible_sequences(int n) {
  std::vector<AdmissibleSequence> out;
  for (int k = 1; 2 * k + 1 <= n; ++k) {
    auto part = admissible_sequences(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Six chord endpoints taken in circular order starting at a rotation of
/// a 6-subset b_1 < ... < b_6; the nested triple is b1b6, b2b5, b3b4.
using CircularSextuple = std::array<int, 6>;

/// The three rotations (by 0, 1, 2) of every 6-subset of [n]; rotating by 3
/// repeats the same nested triple.
inline std::vector<CircularSextuple> circular_sextuples(int n) {
  std::vector<CircularSextuple> out;
  std::array<int, 6> c{};
  for (c[0] = 1; c[0] <= n; ++c[0])
    for (c[1] = c[0] + 1; c[1] <= n; ++c[1])
      for (c[2] = c[1] + 1; c[2] <= n; ++c[2])
        for (c[3] = c[2] + 1; c[3] <= n; ++c[3])
          for (c[4] = c[3] + 1; c[4] <= n; ++c[4])
            for (c[5] = c[4] + 1; c[5] <= n; ++c[5])
              for (int r = 0; r < 3; ++r) {
                CircularSextuple s;
                for (int p = 0; p < 6; ++p) s[static_cast<std::size_t>(p)] = c[static_cast<std::size_t>((p + r) % 6)];
                out.push_back(s);
              }
  return out;
}

inline Monomial nested_triple_monomial(const CircularSextuple& s) {
  return Monomial::of_edges({Edge(s[0], s[5]), Edge(s[1], s[4]), Edge(s[2], s[3])});
}

/// The combinatorial generators of in(I_n)^{2}: cycle monomials of all
/// admissible sequences plus the nested triples.
inline MonomialIdeal secant_initial_ideal(int n) {
  require_n(n, 3, "secant_initial_ideal");
  std::vector<Monomial> gens;
  for (const auto& s : all_admissible_sequences(n)) gens.push_back(cycle_monomial(s));
  for (const auto& s : circular_sextuples(n)) gens.push_back(nested_triple_monomial(s));
  return MonomialIdeal(std::move(gens));
}

/// in(I_n)^(2) from the families: squares of in(I_n) plus the degree-3
/// secant generators.
inline MonomialIdeal symbolic_initial_ideal(int n) {
  require_n(n, 3, "symbolic_initial_ideal");
  const MonomialIdeal in = initial_edge_ideal(n);
  std::vector<Monomial> cubic;
  if (n >= 6) {
    for (const auto& s : admissible_sequences(n, 1)) cubic.push_back(cycle_monomial(s));
    for (const auto& s : circular_sextuples(n)) cubic.push_back(nested_triple_monomial(s));
  }
  return in * in + MonomialIdeal(std::move(cubic));
}

}  // namespace hypersecant
