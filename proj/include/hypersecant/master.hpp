#pragma once

// Master polynomials. Work happens on 4k+2 formal letters arranged around a
// circle as I_1, J_1, I_2, J_2, ..., I_{2k+1}, J_{2k+1}; letter I_l sits at
// position 2(l-1) and J_l at 2(l-1)+1 (0-based l below). Perfect matchings
// on the letters map to monomials through an assignment of letters to
// vertex indices, which may identify I_l with J_l.

#include "hypersecant/circular_order.hpp"
#include "hypersecant/hypersimplex.hpp"
#include "hypersecant/noncrossing.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hypersecant {

using Letter = int;

inline Letter letter_i(int l) { return 2 * l; }
inline Letter letter_j(int l) { return 2 * l + 1; }

inline std::string letter_name(Letter p) {
  return (p % 2 == 0 ? "I" : "J") + std::to_string(p / 2 + 1);
}

/// Concrete vertex index assigned to each formal letter.
class LetterSet {
 public:
  explicit LetterSet(const AdmissibleSequence& s) : k_(s.k()), assignment_(static_cast<std::size_t>(4 * s.k() + 2)) {
    for (int l = 0; l < s.length(); ++l) {
      assignment_[static_cast<std::size_t>(letter_i(l))] = s.i()[static_cast<std::size_t>(l)];
      assignment_[static_cast<std::size_t>(letter_j(l))] = s.j()[static_cast<std::size_t>(l)];
    }
  }

  int k() const { return k_; }
  int size() const { return 4 * k_ + 2; }
  int operator[](Letter p) const { return assignment_.at(static_cast<std::size_t>(p)); }

 private:
  int k_;
  std::vector<int> assignment_;
};

/// A fixed-point-free involution on the 4k+2 letters, stored as a partner
/// table.
class PairingInvolution {
 public:
  explicit PairingInvolution(std::vector<Letter> partner) : partner_(std::move(partner)) {
    const auto size = static_cast<Letter>(partner_.size());
    if (size == 0 || size % 2 != 0) throw Error("pairing involution needs an even, nonzero letter count");
    for (Letter p = 0; p < size; ++p) {
      const Letter q = partner_[static_cast<std::size_t>(p)];
      if (q < 0 || q >= size || q == p || partner_[static_cast<std::size_t>(q)] != p)
        throw Error("pairing involution: partner table is not a fixed-point-free involution");
    }
  }

  int letter_count() const { return static_cast<int>(partner_.size()); }
  int k() const { return (letter_count() - 2) / 4; }
  Letter partner(Letter p) const { return partner_.at(static_cast<std::size_t>(p)); }

  /// Pairs (p, q) with p < q, sorted.
  std::vector<std::pair<Letter, Letter>> pairs() const {
    std::vector<std::pair<Letter, Letter>> out;
    for (Letter p = 0; p < letter_count(); ++p)
      if (p < partner(p)) out.emplace_back(p, partner(p));
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [p, q] : pairs()) s += (s.empty() ? "" : " ") + letter_name(p) + letter_name(q);
    return s;
  }

  friend bool operator==(const PairingInvolution&, const PairingInvolution&) = default;

 private:
  std::vector<Letter> partner_;
};

/// Subset S of {1..2k+1} selecting transpositions (I_l, J_{l-1}); bit l-1
/// of the mask stands for l.
struct ConjugationSubset {
  int k = 1;
  std::uint64_t mask = 0;

  int length() const { return 2 * k + 1; }
  bool contains(int l) const { return (mask >> l) & 1u; }  // 0-based l
  int size() const { return std::popcount(mask); }
  int sign() const { return size() % 2 == 0 ? 1 : -1; }
  static ConjugationSubset full(int k) { return {k, (std::uint64_t{1} << (2 * k + 1)) - 1}; }
};

/// Pairs I_l with J_{l+k-1}.
inline PairingInvolution base_involution(int k) {
  if (k < 1) throw Error("base_involution: k must be >= 1");
  const int len = 2 * k + 1;
  std::vector<Letter> partner(static_cast<std::size_t>(2 * len));
  for (int l = 0; l < len; ++l) {
    const Letter p = letter_i(l);
    const Letter q = letter_j((l + k - 1) % len);
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
  }
  return PairingInvolution(std::move(partner));
}

/// sigma * inv * sigma^{-1} with sigma the product of the selected
/// transpositions; the conjugate pairs sigma(p) with sigma(q).
inline PairingInvolution conjugate(const PairingInvolution& inv, const ConjugationSubset& s) {
  const int len = s.length();
  if (inv.letter_count() != 2 * len) throw Error("conjugate: subset and involution disagree on k");
  if (len < 64 && (s.mask >> len) != 0) throw Error("conjugate: subset mask out of range");
  std::vector<Letter> sigma(static_cast<std::size_t>(2 * len));
  for (Letter p = 0; p < 2 * len; ++p) sigma[static_cast<std::size_t>(p)] = p;
  for (int l = 0; l < len; ++l) {
    if (!s.contains(l)) continue;
    const Letter a = letter_i(l);
    const Letter b = letter_j((l + len - 1) % len);
    std::swap(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)]);
  }
  std::vector<Letter> partner(static_cast<std::size_t>(2 * len));
  for (Letter p = 0; p < 2 * len; ++p)
    partner[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p)])] = sigma[static_cast<std::size_t>(inv.partner(p))];
  return PairingInvolution(std::move(partner));
}

/// Number of interleaving pairs of chords among the letter pairs on the
/// fixed cyclic arrangement.
inline int crossing_number(const PairingInvolution& inv) {
  const auto ps = inv.pairs();
  int count = 0;
  for (std::size_t x = 0; x < ps.size(); ++x)
    for (std::size_t y = x + 1; y < ps.size(); ++y) {
      const auto [a, b] = ps[x];
      const auto [c, d] = ps[y];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ++count;
    }
  return count;
}

class LoopError : public Error {
 public:
  using Error::Error;
};

/// prod over pairs {p, q} of x[assign(p), assign(q)].
inline Monomial involution_monomial(const PairingInvolution& inv, const LetterSet& letters) {
  if (inv.letter_count() != letters.size()) throw Error("involution_monomial: letter count mismatch");
  std::vector<Edge> es;
  for (const auto& [p, q] : inv.pairs()) {
    if (letters[p] == letters[q])
      throw LoopError("involution pairs " + letter_name(p) + " with " + letter_name(q) + ", both assigned index " +
                      std::to_string(letters[p]));
    es.emplace_back(letters[p], letters[q]);
  }
  return Monomial::of_edges(es);
}

/// sum over S of (-1)^|S| times the monomial of the S-conjugate of the base
/// involution, specialized through the assignment (terms may cancel).
inline Polynomial master_polynomial(const AdmissibleSequence& s) {
  const int k = s.k();
  if (2 * k + 1 >= 63) throw Error("master_polynomial: k too large");
  const PairingInvolution base = base_involution(k);
  const LetterSet letters(s);
  Polynomial f;
  const std::uint64_t subsets = std::uint64_t{1} << (2 * k + 1);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const ConjugationSubset sub{k, mask};
    f.add_term(involution_monomial(conjugate(base, sub), letters), sub.sign());
  }
  return f;
}

inline bool verify_membership(int n, const AdmissibleSequence& s) {
  if (s.max_index() > n) throw Error("verify_membership: sequence uses indices beyond n");
  const Polynomial f = master_polynomial(s);
  return !f.is_zero() && in_secant_ideal(n, f);
}

/// Every derivative of f of order 1..bound lies in I_n. Derivative multisets
/// range over variables of f in nondecreasing order; a zero derivative
/// prunes its extensions.
inline bool verify_prolongation(int n, const Polynomial& f, int bound) {
  if (!f.is_homogeneous()) throw Error("verify_prolongation: polynomial must be homogeneous");
  if (bound < 0) throw Error("verify_prolongation: bound must be >= 0");
  require_edges_within(n, f);
  std::set<Variable> vars;
  for (const auto& [m, c] : f)
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  const std::vector<Variable> order(vars.begin(), vars.end());
  auto walk = [&](auto&& self, const Polynomial& g, std::size_t from, int depth) -> bool {
    if (depth == bound) return true;
    for (std::size_t x = from; x < order.size(); ++x) {
      const Polynomial d = partial_derivative(g, order[x]);
      if (d.is_zero()) continue;
      if (!in_toric_ideal(n, d)) return false;
      if (!self(self, d, x, depth + 1)) return false;
    }
    return true;
  };
  return walk(walk, f, 0, 0);
}

inline bool verify_leading_term(int n, const AdmissibleSequence& s, const CircularTermOrder& order) {
  if (order.n() != n) throw Error("verify_leading_term: order is for a different n");
  const Polynomial f = master_polynomial(s);
  if (f.is_zero()) return false;
  return leading_monomial(order, f) == cycle_monomial(s);
}

}  // namespace hypersecant
