#pragma once

// Sparse multivariate polynomials over Rational in the fixed variable
// universe. Values are immutable in spirit: every operation returns a new
// Poly and never mutates its arguments, so concurrent evaluation is safe.
//
// Invariants maintained by every constructor and operation:
//   * no zero coefficients are stored,
//   * equality of Poly values is equality of their term maps.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binform/monomial.hpp"
#include "binform/rational.hpp"

namespace binform {

class Poly {
 public:
  using Map = std::unordered_map<Monomial, Rational, MonomialHash>;

  Poly() = default;

  static Poly zero() { return Poly(); }

  static Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(monomial_one(), c);
    return p;
  }

  static Poly one() { return constant(1); }

  static Poly variable(Var v, int k = 1) {
    Poly p;
    if (k == 0) return one();
    p.terms_.emplace(monomial_of(v, k), Rational(1));
    return p;
  }

  static Poly term(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Terms in descending canonical (graded-lex) order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
      return monomial_less(r.first, l.first);
    });
    return v;
  }

  // Leading term under the canonical order; p must be nonzero.
  std::pair<Monomial, Rational> leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    auto it = terms_.begin();
    const Monomial* best = &it->first;
    for (++it; it != terms_.end(); ++it)
      if (monomial_less(*best, it->first)) best = &it->first;
    return {*best, terms_.at(*best)};
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  int degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }

  template <class Pred>
  int degree_if(Pred keep) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_if(keep));
    return d;
  }

  // Every term has the same degree over the variables selected by `keep`;
  // the zero polynomial is homogeneous of any degree.
  template <class Pred>
  bool is_homogeneous_if(Pred keep, int deg) const {
    for (const auto& [m, c] : terms_)
      if (m.degree_if(keep) != deg) return false;
    return true;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    add_scaled(o, Rational(1));
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    add_scaled(o, Rational(-1));
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    const Poly& s = a.term_count() <= b.term_count() ? a : b;
    const Poly& l = a.term_count() <= b.term_count() ? b : a;
    Poly r;
    if (s.is_zero() || l.is_zero()) return r;
    r.terms_.reserve(l.term_count() + l.term_count() / 2);
    Rational tmp;  // hoisted accumulator, reused across all term products
    for (const auto& [ms, cs] : s.terms_) {
      for (const auto& [ml, cl] : l.terms_) {
        mpq_mul(tmp.get_mpq_t(), cs.get_mpq_t(), cl.get_mpq_t());
        auto [it, fresh] = r.terms_.try_emplace(ms.times(ml));
        if (fresh)
          mpq_set(it->second.get_mpq_t(), tmp.get_mpq_t());
        else
          mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(),
                  tmp.get_mpq_t());
      }
    }
    r.prune();
    return r;
  }

  friend Poly operator+(const Poly& p, const Rational& c) { return p + constant(c); }
  friend Poly operator+(const Rational& c, const Poly& p) { return p + constant(c); }
  friend Poly operator-(const Poly& p, const Rational& c) { return p - constant(c); }
  friend Poly operator-(const Rational& c, const Poly& p) { return constant(c) - p; }

  friend Poly operator*(const Rational& c, const Poly& p) {
    Poly r;
    if (c == 0) return r;
    r.terms_.reserve(p.term_count());
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
  }
  friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

  Poly pow(long k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    Poly acc = one(), base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      if (k >>= 1) base = base * base;
    }
    return acc;
  }

  // k-fold exact partial derivative with respect to v.
  Poly derivative(Var v, int k = 1) const {
    if (k < 0) throw std::invalid_argument("derivative: negative order");
    Poly cur = *this;
    for (int step = 0; step < k; ++step) {
      Poly next;
      next.terms_.reserve(cur.term_count());
      for (const auto& [m, c] : cur.terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial d = m;
        d.set_exponent(v, e - 1);
        next.terms_.emplace(d, c * e);
      }
      cur = std::move(next);
      if (cur.is_zero()) break;
    }
    return cur;
  }

  // Simultaneous substitution of polynomials for variables.
  Poly substitute(const std::map<Var, Poly>& bindings) const {
    // Powers of each binding are cached up to the largest exponent seen.
    std::map<Var, std::vector<Poly>> powers;
    for (const auto& [v, p] : bindings) powers[v] = {one()};
    auto power_of = [&](Var v, int k) -> const Poly& {
      auto& ladder = powers[v];
      while (static_cast<int>(ladder.size()) <= k)
        ladder.push_back(ladder.back() * bindings.at(v));
      return ladder[k];
    };
    Poly out;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      Poly factor = constant(c);
      for (const auto& [v, p] : bindings) {
        int e = m.exponent(v);
        if (e == 0) continue;
        rest.set_exponent(v, 0);
        factor = factor * power_of(v, e);
      }
      out += factor * Poly::variable_monomial(rest);
    }
    return out;
  }

  static Poly variable_monomial(const Monomial& m) {
    Poly p;
    p.terms_.emplace(m, Rational(1));
    return p;
  }

 private:
  void add_scaled(const Poly& o, const Rational& scale) {
    for (const auto& [m, c] : o.terms_) {
      auto [it, fresh] = terms_.try_emplace(m);
      if (fresh)
        it->second = c * scale;
      else
        it->second += c * scale;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Map terms_;
};

inline bool is_a_var(Var v) { return static_cast<int>(v) < kAVarCount; }

inline int a_degree(const Poly& p) {
  return p.degree_if([](Var v) { return is_a_var(v); });
}

// Tests p == c * q for a nonzero rational c, by cross-multiplying leading
// coefficients; (0, 0) compares proportional with ratio 1.
inline std::optional<Rational> proportional(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) return Rational(1);
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  if (p.term_count() != q.term_count()) return std::nullopt;
  const Rational lp = p.leading_term().second;
  const Rational lq = q.leading_term().second;
  // p * lc(q) == q * lc(p), checked term by term.
  for (const auto& [m, c] : p.terms()) {
    if (c * lq != q.coefficient(m) * lp) return std::nullopt;
  }
  return Rational(lp / lq);
}

// p = content * primitive with primitive integer, coprime coefficients and
// positive leading coefficient. Errors on p = 0.
inline std::pair<Rational, Poly> content_and_primitive(const Poly& p) {
  if (p.is_zero())
    throw std::invalid_argument("content_and_primitive: zero polynomial");
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (p.leading_term().second < 0) content = -content;
  Poly primitive = Rational(1 / content) * p;
  return {content, primitive};
}

}  // namespace binform
