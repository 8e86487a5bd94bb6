#pragma once

// Graded binary and bihomogeneous forms, transvectants, Cayley's Omega
// operator, polarization, and Gordan-series decomposition/reconstruction.
//
// A Form is homogeneous of a declared order in one variable pair (x or y)
// and homogeneous of a declared degree in the a-variables; parameters
// (q0, q1, q2, alpha, ...) ride along unconstrained in the coefficients.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binform/poly.hpp"

namespace binform {

enum class Pair { x, y };

inline Var pair_first(Pair p) { return p == Pair::x ? Var::x1 : Var::y1; }
inline Var pair_second(Pair p) { return p == Pair::x ? Var::x2 : Var::y2; }
inline Pair other_pair(Pair p) { return p == Pair::x ? Pair::y : Pair::x; }

inline int pair_degree(const Monomial& m, Pair p) {
  return m.exponent(pair_first(p)) + m.exponent(pair_second(p));
}

struct Form {
  Poly body;
  int order = 0;
  int adeg = 0;
  Pair pair = Pair::x;

  Form() = default;

  Form(Poly b, int order_, int adeg_, Pair pair_ = Pair::x)
      : body(std::move(b)), order(order_), adeg(adeg_), pair(pair_) {
    validate();
  }

  static Form zero(int order, int adeg, Pair pair = Pair::x) {
    Form f;
    f.order = order;
    f.adeg = adeg;
    f.pair = pair;
    return f;
  }

  bool is_zero() const { return body.is_zero(); }

  bool operator==(const Form& o) const {
    return body == o.body && order == o.order && adeg == o.adeg && pair == o.pair;
  }

  void validate() const {
    if (order < 0 || adeg < 0) throw std::invalid_argument("Form: negative grading");
    Pair op = other_pair(pair);
    for (const auto& [m, c] : body.terms()) {
      if (pair_degree(m, pair) != order)
        throw std::invalid_argument("Form: body not homogeneous of declared order");
      if (pair_degree(m, op) != 0)
        throw std::invalid_argument("Form: body involves the other variable pair");
      if (m.degree_if([](Var v) { return is_a_var(v); }) != adeg)
        throw std::invalid_argument("Form: body not homogeneous of declared a-degree");
    }
  }
};

struct BiForm {
  Poly body;
  int xorder = 0;
  int yorder = 0;
  int adeg = 0;

  BiForm() = default;

  BiForm(Poly b, int xo, int yo, int ad)
      : body(std::move(b)), xorder(xo), yorder(yo), adeg(ad) {
    validate();
  }

  static BiForm zero(int xo, int yo, int ad) {
    BiForm g;
    g.xorder = xo;
    g.yorder = yo;
    g.adeg = ad;
    return g;
  }

  bool is_zero() const { return body.is_zero(); }

  bool operator==(const BiForm& o) const {
    return body == o.body && xorder == o.xorder && yorder == o.yorder &&
           adeg == o.adeg;
  }

  void validate() const {
    for (const auto& [m, c] : body.terms()) {
      if (pair_degree(m, Pair::x) != xorder || pair_degree(m, Pair::y) != yorder)
        throw std::invalid_argument("BiForm: body not bihomogeneous of declared orders");
      if (m.degree_if([](Var v) { return is_a_var(v); }) != adeg)
        throw std::invalid_argument("BiForm: body not homogeneous of declared a-degree");
    }
  }
};

// --- variable-pair plumbing -------------------------------------------------

inline Poly rename_pair(const Poly& p, Pair from, Pair to) {
  if (from == to) return p;
  return p.substitute({{pair_first(from), Poly::variable(pair_first(to))},
                       {pair_second(from), Poly::variable(pair_second(to))}});
}

// {.}_{y:=x}
inline Poly diagonal_y_to_x(const Poly& p) {
  return p.substitute({{Var::y1, Poly::variable(Var::x1)},
                       {Var::y2, Poly::variable(Var::x2)}});
}

inline Form form_in_pair(const Form& f, Pair to) {
  if (f.pair == to) return f;
  return Form(rename_pair(f.body, f.pair, to), f.order, f.adeg, to);
}

// A(x)B(y) as a bihomogeneous form.
inline BiForm outer_product(const Form& a, const Form& b) {
  Poly ax = rename_pair(a.body, a.pair, Pair::x);
  Poly by = rename_pair(b.body, b.pair, Pair::y);
  return BiForm(ax * by, a.order, b.order, a.adeg + b.adeg);
}

// --- transvectants ----------------------------------------------------------

// The bare formula on polynomial bodies: orders m, n in the chosen pair,
// content in other variables inert. No convention handling; r <= min(m, n)
// is assumed by the caller.
inline Poly transvectant_poly(const Poly& a, int m, const Poly& b, int n, int r,
                              Pair pair = Pair::x) {
  Var u1 = pair_first(pair), u2 = pair_second(pair);
  // da[i] = d^r a / du1^{r-i} du2^i, and symmetrically for b.
  std::vector<Poly> da(r + 1), db(r + 1);
  Poly arow = a, brow = b;
  for (int i = 0; i <= r; ++i) {
    da[i] = arow.derivative(u1, r - i);
    db[i] = brow.derivative(u1, r - i);
    if (i < r) {
      arow = arow.derivative(u2);
      brow = brow.derivative(u2);
    }
  }
  Poly sum;
  for (int i = 0; i <= r; ++i) {
    if (da[i].is_zero() || db[r - i].is_zero()) continue;
    Rational c(binomial(r, i) * ((i % 2) ? -1 : 1));
    sum += c * (da[i] * db[r - i]);
  }
  Rational scale(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n));
  scale.canonicalize();
  return scale * sum;
}

// (A, B)_r with the classical convention (A, B)_r = 0 for r > min(m, n).
inline Form transvectant(const Form& a, const Form& b, int r) {
  if (a.pair != b.pair)
    throw std::invalid_argument("transvectant: mixed variable pairs");
  if (r < 0) throw std::invalid_argument("transvectant: negative index");
  int m = a.order, n = b.order;
  if (r > std::min(m, n))
    return Form::zero(std::max(m + n - 2 * r, 0), a.adeg + b.adeg, a.pair);
  return Form(transvectant_poly(a.body, m, b.body, n, r, a.pair), m + n - 2 * r,
              a.adeg + b.adeg, a.pair);
}

// x-transvectant of a bihomogeneous form with an x-form; y rides along.
inline BiForm transvectant_x(const BiForm& g, const Form& b, int r) {
  if (b.pair != Pair::x)
    throw std::invalid_argument("transvectant_x: second argument must be an x-form");
  int m = g.xorder, n = b.order;
  if (r < 0) throw std::invalid_argument("transvectant_x: negative index");
  if (r > std::min(m, n))
    return BiForm::zero(std::max(m + n - 2 * r, 0), g.yorder, g.adeg + b.adeg);
  return BiForm(transvectant_poly(g.body, m, b.body, n, r, Pair::x),
                m + n - 2 * r, g.yorder, g.adeg + b.adeg);
}

// --- Omega calculus ---------------------------------------------------------

// k-fold application of d^2/dx1 dy2 - d^2/dx2 dy1.
inline Poly omega_poly(const Poly& g, int k = 1) {
  Poly cur = g;
  for (int step = 0; step < k; ++step) {
    cur = cur.derivative(Var::x1).derivative(Var::y2) -
          cur.derivative(Var::x2).derivative(Var::y1);
    if (cur.is_zero()) break;
  }
  return cur;
}

inline BiForm omega(const BiForm& g, int k = 1) {
  int xo = g.xorder - k, yo = g.yorder - k;
  Poly body = omega_poly(g.body, k);
  if (xo < 0 || yo < 0) return BiForm::zero(std::max(xo, 0), std::max(yo, 0), g.adeg);
  return BiForm(std::move(body), xo, yo, g.adeg);
}

// (x y) = x1 y2 - x2 y1.
inline BiForm bracket() {
  Poly b = Poly::variable(Var::x1) * Poly::variable(Var::y2) -
           Poly::variable(Var::x2) * Poly::variable(Var::y1);
  return BiForm(std::move(b), 1, 1, 0);
}

// pi_r(G) = (m-r)!(n-r)!/(m!n!) {Omega^r G}_{y:=x}; defined only in range.
inline Form pi_r(const BiForm& g, int r) {
  int m = g.xorder, n = g.yorder;
  if (r < 0 || r > std::min(m, n))
    throw std::invalid_argument("pi_r: index out of range");
  Rational scale(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n));
  scale.canonicalize();
  return Form(scale * diagonal_y_to_x(omega_poly(g.body, r)), m + n - 2 * r,
              g.adeg, Pair::x);
}

// Polarization of an order-p x-form into orders (s, t), s + t = p:
// ((p-t)!/p!) (y1 d/dx1 + y2 d/dx2)^t theta. On l^p this gives l(x)^s l(y)^t.
inline BiForm polarize(const Form& theta, int s, int t) {
  if (theta.pair != Pair::x)
    throw std::invalid_argument("polarize: expected an x-form");
  if (s < 0 || t < 0 || s + t != theta.order)
    throw std::invalid_argument("polarize: orders must satisfy s + t = p");
  Poly cur = theta.body;
  for (int step = 0; step < t; ++step) {
    cur = Poly::variable(Var::y1) * cur.derivative(Var::x1) +
          Poly::variable(Var::y2) * cur.derivative(Var::x2);
  }
  Rational scale(factorial(s), factorial(theta.order));
  scale.canonicalize();
  return BiForm(scale * cur, s, t, theta.adeg);
}

// --- Gordan series ----------------------------------------------------------

// Coefficients C(m,r) C(n,r) / C(m+n-r+1, r) of the symbolic Gordan series.
inline Rational gordan_coefficient(int m, int n, int r) {
  Rational c(binomial(m, r) * binomial(n, r), binomial(m + n - r + 1, r));
  c.canonicalize();
  return c;
}

// A(x) B(y) = sum_r c_r (x y)^r polarize((A,B)_r, m-r, n-r); the returned
// list is [(c_r, (A,B)_r)] and the reconstruction is verified exactly.
inline std::vector<std::pair<Rational, Form>> gordan_series(const Form& a,
                                                            const Form& b) {
  int m = a.order, n = b.order;
  std::vector<std::pair<Rational, Form>> series;
  Poly recon;
  const BiForm br = bracket();
  Poly brpow = Poly::one();
  for (int r = 0; r <= std::min(m, n); ++r) {
    Rational c = gordan_coefficient(m, n, r);
    Form tr = transvectant(a, b, r);
    recon += c * (brpow * polarize(tr, m - r, n - r).body);
    series.emplace_back(std::move(c), std::move(tr));
    brpow = brpow * br.body;
  }
  if (recon != outer_product(a, b).body)
    throw std::logic_error("gordan_series: reconstruction identity failed");
  return series;
}

// i-th component of the coefficient-absorbed Gordan decomposition
// G = sum_i (x y)^i polarize(A_i, p-i, q-i), extracted as
// A_i = (p+q-2i+1)!/(i! (p+q-i+1)!) {Omega^i G}_{y:=x}.
inline Form gordan_extract(const BiForm& g, int i) {
  int p = g.xorder, q = g.yorder;
  if (i < 0 || i > std::min(p, q))
    throw std::invalid_argument("gordan_extract: index out of range");
  Rational scale(factorial(p + q - 2 * i + 1),
                 factorial(i) * factorial(p + q - i + 1));
  scale.canonicalize();
  return Form(scale * diagonal_y_to_x(omega_poly(g.body, i)), p + q - 2 * i,
              g.adeg, Pair::x);
}

// Reassembles a bihomogeneous form of orders (p, q) from its absorbed
// Gordan components.
inline BiForm gordan_reconstruct(const std::vector<Form>& comps, int p, int q,
                                 int adeg) {
  Poly acc;
  const Poly br = bracket().body;
  Poly brpow = Poly::one();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    acc += brpow * polarize(comps[i], p - static_cast<int>(i),
                            q - static_cast<int>(i))
                       .body;
    brpow = brpow * br;
  }
  return BiForm(std::move(acc), p, q, adeg);
}

// --- coefficients of the Omega-cancellation lemmas ---------------------------

// mu(p,q; l,i) = l!/(l-i)! (p+q-l+2i+1)!/(p+q-l+i+1)! for l >= i, else 0.
inline Rational mu_coefficient(int p, int q, int l, int i) {
  if (l < i) return 0;
  if (p + q - l + i + 1 < 0 || p + q - l + 2 * i + 1 < 0) return 0;
  Rational c(falling(l, i) * factorial(p + q - l + 2 * i + 1),
             factorial(p + q - l + i + 1));
  c.canonicalize();
  return c;
}

// nu(p1,q1,p2,q2; u): the {Omega^u a_x^p1 a_y^q1 b_x^p2 b_y^q2}_{y:=x}
// pairing count, an alternating sum over the feasible removal split t.
inline Rational nu_coefficient(int p1, int q1, int p2, int q2, int u) {
  if (p1 < 0 || q1 < 0 || p2 < 0 || q2 < 0 || u < 0) return 0;
  int lo = std::max(0, u - std::min(q1, p2));
  int hi = std::min({p1, q2, u});
  Integer sum = 0;
  for (int t = lo; t <= hi; ++t) {
    Integer term = binomial(u, t) * falling(p1, t) * falling(q1, u - t) *
                   falling(p2, u - t) * falling(q2, t);
    if ((u - t) % 2) term = -term;
    sum += term;
  }
  return Rational(sum);
}

}  // namespace binform
