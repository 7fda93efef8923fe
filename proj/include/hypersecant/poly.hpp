#pragma once

// Exact sparse multivariate polynomials over arbitrary-precision integers.
//
// Variables are edge variables x[a,b] (1 <= a < b) and the parameter
// variables t[i], u[i] used by the rank-r parameterizations. A Monomial is a
// sorted list of (variable, exponent) pairs with no zero exponents; a
// Polynomial maps monomials to nonzero coefficients. Both are plain values.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypersecant {

using Integer = boost::multiprecision::cpp_int;

/// Raised for malformed input: invalid indices, bad text, violated
/// preconditions.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An unordered pair of distinct vertices, stored with a < b.
struct Edge {
  int a = 1;
  int b = 2;

  Edge() = default;
  Edge(int p, int q) : a(std::min(p, q)), b(std::max(p, q)) {
    if (p == q) throw Error("edge endpoints must be distinct: " + std::to_string(p));
    if (a < 1) throw Error("edge endpoints are 1-based, got " + std::to_string(a));
  }

  bool valid_for(int n) const { return a >= 1 && b <= n && a < b; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class VarKind : std::uint8_t { edge = 0, param_t = 1, param_u = 2 };

struct Variable {
  VarKind kind = VarKind::edge;
  std::uint16_t a = 0;
  std::uint16_t b = 0;  // unused (0) for parameter variables

  static Variable x(Edge e) {
    return {VarKind::edge, static_cast<std::uint16_t>(e.a), static_cast<std::uint16_t>(e.b)};
  }
  static Variable x(int p, int q) { return x(Edge(p, q)); }
  static Variable t(int i) { return param(VarKind::param_t, i); }
  static Variable u(int i) { return param(VarKind::param_u, i); }

  bool is_edge() const { return kind == VarKind::edge; }
  Edge edge() const {
    if (!is_edge()) throw Error("not an edge variable");
    return Edge(a, b);
  }

  std::string to_string() const {
    switch (kind) {
      case VarKind::edge:
        return "x[" + std::to_string(a) + "," + std::to_string(b) + "]";
      case VarKind::param_t:
        return "t[" + std::to_string(a) + "]";
      case VarKind::param_u:
        return "u[" + std::to_string(a) + "]";
    }
    return "?";
  }

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;

 private:
  static Variable param(VarKind kind, int i) {
    if (i < 1) throw Error("parameter index must be >= 1");
    return {kind, static_cast<std::uint16_t>(i), 0};
  }
};

class Monomial {
 public:
  using Factor = std::pair<Variable, unsigned>;

  Monomial() = default;
  explicit Monomial(Variable v, unsigned e = 1) {
    if (e > 0) factors_.emplace_back(v, e);
  }
  Monomial(std::initializer_list<Variable> vars) {
    for (const auto& v : vars) *this *= Monomial(v);
  }
  /// Product of the edge variables, exponents accumulating on repeats.
  static Monomial of_edges(std::span<const Edge> edges) {
    Monomial m;
    for (const auto& e : edges) m *= Monomial(Variable::x(e));
    return m;
  }
  static Monomial of_edges(std::initializer_list<Edge> edges) {
    return of_edges(std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [v, e] : factors) {
      if (e == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == v)
        m.factors_.back().second += e;
      else
        m.factors_.emplace_back(v, e);
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  unsigned exponent(Variable v) const {
    auto it = find(v);
    return it != factors_.end() && it->first == v ? it->second : 0;
  }

  bool is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second == 1; });
  }

  bool edges_only() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.first.is_edge(); });
  }

  /// True iff every exponent of *this is <= the matching exponent of m.
  bool divides(const Monomial& m) const {
    auto it = m.factors_.begin();
    for (const auto& [v, e] : factors_) {
      while (it != m.factors_.end() && it->first < v) ++it;
      if (it == m.factors_.end() || it->first != v || it->second < e) return false;
    }
    return true;
  }

  /// m / *this; requires divides(m).
  Monomial quotient_of(const Monomial& m) const {
    if (!divides(m)) throw Error("monomial quotient: not divisible");
    Monomial q;
    auto it = factors_.begin();
    for (const auto& [v, e] : m.factors_) {
      unsigned sub = 0;
      if (it != factors_.end() && it->first == v) sub = (it++)->second;
      if (e > sub) q.factors_.emplace_back(v, e - sub);
    }
    return q;
  }

  friend Monomial lcm(const Monomial& p, const Monomial& q) { return merge(p, q, true); }
  friend Monomial gcd(const Monomial& p, const Monomial& q) {
    Monomial g;
    auto it = q.factors_.begin();
    for (const auto& [v, e] : p.factors_) {
      while (it != q.factors_.end() && it->first < v) ++it;
      if (it != q.factors_.end() && it->first == v) g.factors_.emplace_back(v, std::min(e, it->second));
    }
    return g;
  }

  Monomial& operator*=(const Monomial& o) { return *this = merge(*this, o, false); }
  friend Monomial operator*(Monomial p, const Monomial& q) { return p *= q; }

  /// Factors in storage order joined by '*', exponents as ^e; "1" for the unit.
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
      if (!s.empty()) s += '*';
      s += v.to_string();
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor>::const_iterator find(Variable v) const {
    return std::lower_bound(factors_.begin(), factors_.end(), v,
                            [](const Factor& f, const Variable& x) { return f.first < x; });
  }

  static Monomial merge(const Monomial& p, const Monomial& q, bool take_max) {
    Monomial r;
    r.factors_.reserve(p.factors_.size() + q.factors_.size());
    auto i = p.factors_.begin();
    auto j = q.factors_.begin();
    while (i != p.factors_.end() || j != q.factors_.end()) {
      if (j == q.factors_.end() || (i != p.factors_.end() && i->first < j->first)) {
        r.factors_.push_back(*i++);
      } else if (i == p.factors_.end() || j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, take_max ? std::max(i->second, j->second) : i->second + j->second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Factor> factors_;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(const Monomial& m, Integer c = 1) { add_term(m, std::move(c)); }
  explicit Polynomial(Integer c) { add_term(Monomial(), std::move(c)); }
  static Polynomial variable(Variable v) { return Polynomial(Monomial(v)); }
  static Polynomial x(int a, int b) { return variable(Variable::x(a, b)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  TermMap::const_iterator begin() const { return terms_.begin(); }
  TermMap::const_iterator end() const { return terms_.end(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }

  bool edges_only() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.edges_only(); });
  }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial times(const Monomial& m, const Integer& c = 1) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Formal partial derivative with respect to a single variable.
inline Polynomial partial_derivative(const Polynomial& p, Variable v) {
  Polynomial r;
  for (const auto& [m, c] : p) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(Monomial(v).quotient_of(m), c * e);
  }
  return r;
}

/// Iterated derivative over a multiset of edges; repeated edges produce the
/// falling-factorial multipliers.
inline Polynomial partial_derivative(const Polynomial& p, std::span<const Edge> a) {
  if (a.empty()) throw Error("partial_derivative: empty derivative multiset");
  Polynomial r = p;
  for (const auto& e : a) {
    r = partial_derivative(r, Variable::x(e));
    if (r.is_zero()) break;
  }
  return r;
}
inline Polynomial partial_derivative(const Polynomial& p, std::initializer_list<Edge> a) {
  return partial_derivative(p, std::span<const Edge>(a.begin(), a.size()));
}

/// Image under x[a,b] -> sum_{s<r} P_s[a] P_s[b], with P_0 = t and P_1 = u.
inline Polynomial substitute_rank(const Polynomial& p, int r) {
  if (r < 1) throw Error("substitute_rank: rank must be >= 1");
  if (r > 2) throw Error("substitute_rank: only ranks 1 and 2 have parameter families");
  std::map<Variable, Polynomial> image;
  auto image_of = [&](Variable v) -> const Polynomial& {
    auto it = image.find(v);
    if (it != image.end()) return it->second;
    Polynomial q = Polynomial(Monomial{Variable::t(v.a), Variable::t(v.b)});
    if (r == 2) q += Polynomial(Monomial{Variable::u(v.a), Variable::u(v.b)});
    return image.emplace(v, std::move(q)).first->second;
  };
  Polynomial result;
  for (const auto& [m, c] : p) {
    Polynomial term{Integer(c)};
    for (const auto& [v, e] : m.factors()) {
      if (!v.is_edge()) throw Error("substitute_rank: input must use edge variables only");
      for (unsigned k = 0; k < e; ++k) term = term * image_of(v);
    }
    result += term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text grammar: terms "+c*f1*f2^e ..." joined by spaces; factors x[i,j], t[i],
// u[i]. Parsing also accepts omitted coefficients and arbitrary factor order.

inline std::string format_term(const Monomial& m, const Integer& c) {
  std::string s = c < 0 ? "-" : "+";
  Integer mag = c < 0 ? Integer(-c) : c;
  s += mag.str();
  if (!m.is_one()) s += "*" + m.to_string();
  return s;
}

/// Terms in the given order; see circular_order.hpp for term-order emission.
template <typename TermRange>
std::string format_terms(const TermRange& terms) {
  std::string s;
  for (const auto& [m, c] : terms) {
    if (!s.empty()) s += ' ';
    s += format_term(m, c);
  }
  return s.empty() ? "0" : s;
}

inline std::string to_string(const Polynomial& p) { return format_terms(p.terms()); }

namespace detail {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  Polynomial polynomial() {
    Polynomial p;
    skip();
    if (consume('0') && done()) return p;
    pos_ = 0;
    bool first = true;
    while (!done()) {
      int sign = 1;
      skip();
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_++] == '-') ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      skip();
      auto [m, c] = term();
      p.add_term(m, c * sign);
      first = false;
      skip();
    }
    return p;
  }

  Monomial monomial() {
    skip();
    if (consume('1')) {
      skip();
      if (!done()) fail("trailing input after unit monomial");
      return {};
    }
    Monomial m = factors();
    skip();
    if (!done()) fail("trailing input after monomial");
    return m;
  }

 private:
  std::pair<Monomial, Integer> term() {
    Integer c = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = Integer(digits());
      skip();
      if (!consume('*')) return {Monomial(), c};
      skip();
    }
    return {factors(), c};
  }

  Monomial factors() {
    std::vector<Monomial::Factor> fs;
    while (true) {
      skip();
      fs.push_back(factor());
      skip();
      if (!consume('*')) break;
    }
    return Monomial::from_factors(std::move(fs));
  }

  Monomial::Factor factor() {
    const char kind = peek();
    if (kind != 'x' && kind != 't' && kind != 'u') fail("expected variable x[..], t[..] or u[..]");
    ++pos_;
    expect('[');
    const int a = std::stoi(digits());
    Variable v;
    if (kind == 'x') {
      expect(',');
      skip();
      const int b = std::stoi(digits());
      v = Variable::x(a, b);
    } else {
      v = kind == 't' ? Variable::t(a) : Variable::u(a);
    }
    expect(']');
    unsigned e = 1;
    if (consume('^')) {
      e = static_cast<unsigned>(std::stoul(digits()));
      if (e == 0) fail("zero exponent");
    }
    return {v, e};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool consume(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!consume(ch)) fail(std::string("expected '") + ch + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) { return detail::TextParser(text).polynomial(); }
inline Monomial parse_monomial(std::string_view text) { return detail::TextParser(text).monomial(); }

}  // namespace hypersecant
