#pragma once

#include "hypersecant/poly.hpp"

#include <algorithm>
#include <vector>

namespace hypersecant {

/// A monomial ideal held by its inclusion-minimal generators, sorted in
/// canonical monomial order. Two ideals are equal iff their minimal
/// generator sets are.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> gens) : gens_(minimalize(std::move(gens))) {}

  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  friend MonomialIdeal operator+(const MonomialIdeal& p, const MonomialIdeal& q) {
    std::vector<Monomial> all = p.gens_;
    all.insert(all.end(), q.gens_.begin(), q.gens_.end());
    return MonomialIdeal(std::move(all));
  }

  friend MonomialIdeal operator*(const MonomialIdeal& p, const MonomialIdeal& q) {
    std::vector<Monomial> all;
    all.reserve(p.size() * q.size());
    for (const auto& a : p.gens_)
      for (const auto& b : q.gens_) all.push_back(a * b);
    return MonomialIdeal(std::move(all));
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// Removes duplicates and any monomial divisible by another one.
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
      const auto dx = x.degree(), dy = y.degree();
      return dx != dy ? dx < dy : x < y;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
      // Sorted by degree, so only earlier (lower or equal degree) entries can divide g.
      if (std::none_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); }))
        kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

 private:
  std::vector<Monomial> gens_;
};

}  // namespace hypersecant
