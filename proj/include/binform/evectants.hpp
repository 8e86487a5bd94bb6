#pragma once

// Evectant calculus for covariants of binary d-ics.
//
// For a covariant Phi of degree-order (m, n), the bihomogeneous form
// Gamma = (1/m) [E(x) o Phi(y)], with E(x) the evectant operator
// sum_i (d/da_i) x1^i (-x2)^{d-i}, decomposes under the Gordan series into
// covariants A_0..A_{min(d,n)} (the evectants of Phi) satisfying the exact
// Euler reconstruction sum_i (A_i, F)_{d-i} = Phi. The transvectant theorem
// below computes the evectants of (Phi, Psi)_r from those of Phi and Psi
// without differentiating anything, which is what makes the evectant of the
// degree-18 Hermite invariant reachable by iteration.

#include <utility>
#include <vector>

#include "binform/covariants.hpp"

namespace binform {

struct EvectantSequence {
  Covariant source;
  std::vector<Covariant> components;  // A_0 .. A_{min(d, n)}
};

// Builds the sequence and verifies the Euler reconstruction
// sum_i (A_i, F)_{d-i} = source exactly, plus all degree-order bookkeeping.
inline EvectantSequence make_evectant_sequence(Covariant source,
                                               std::vector<Covariant> comps) {
  const int d = source.d, m = source.degree, n = source.order;
  if (static_cast<int>(comps.size()) != std::min(d, n) + 1)
    throw std::invalid_argument("EvectantSequence: wrong component count");
  const Covariant f = generic_form(d);
  Poly euler;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    const Covariant& a = comps[i];
    if (a.d != d || a.degree != m - 1 || a.order != d + n - 2 * i)
      throw std::invalid_argument("EvectantSequence: component grading mismatch");
    euler += transvectant(a.form, f.form, d - i).body;
  }
  if (euler != source.form.body)
    throw std::logic_error("EvectantSequence: Euler reconstruction failed");
  return EvectantSequence{std::move(source), std::move(comps)};
}

// Gamma = (1/m) [E(x) o Phi(y)], bihomogeneous of orders (d, n) with
// (Gamma, F)_d = Phi(y).
inline BiForm evectant_operator(const Covariant& phi) {
  if (phi.degree < 1)
    throw std::invalid_argument("evectant_operator: source must have degree >= 1");
  const int d = phi.d;
  Poly phi_y = rename_pair(phi.form.body, phi.form.pair, Pair::y);
  Poly acc;
  for (int i = 0; i <= d; ++i) {
    Poly di = phi_y.derivative(a_var(i));
    if (di.is_zero()) continue;
    Rational sign(((d - i) % 2) ? -1 : 1);
    acc += sign * (di * Poly::variable(Var::x1, i) * Poly::variable(Var::x2, d - i));
  }
  Rational inv_m(1, phi.degree);
  inv_m.canonicalize();
  return BiForm(inv_m * acc, d, phi.order, phi.degree - 1);
}

// The evectants of Phi, extracted from Gamma by the Omega-cancellation
// coefficients; Euler reconstruction is verified on construction.
inline EvectantSequence evectant_sequence(const Covariant& phi) {
  BiForm gamma = evectant_operator(phi);
  const int d = phi.d, n = phi.order;
  std::vector<Covariant> comps;
  for (int i = 0; i <= std::min(d, n); ++i)
    comps.emplace_back(gordan_extract(gamma, i), d);
  return make_evectant_sequence(phi, std::move(comps));
}

// Classical evectant of an invariant: (1/m) sum_i dI/da_i (-x2)^{d-i} x1^i,
// the A_0 component of its evectant sequence.
inline Covariant classical_evectant(const Covariant& inv) {
  if (inv.order != 0)
    throw std::invalid_argument("classical_evectant: source must be an invariant");
  if (inv.degree < 1)
    throw std::invalid_argument("classical_evectant: source must have degree >= 1");
  const int d = inv.d;
  Poly acc;
  for (int i = 0; i <= d; ++i) {
    Poly di = inv.form.body.derivative(a_var(i));
    if (di.is_zero()) continue;
    Rational sign(((d - i) % 2) ? -1 : 1);
    acc += sign * (di * Poly::variable(Var::x1, i) * Poly::variable(Var::x2, d - i));
  }
  Rational inv_m(1, inv.degree);
  inv_m.canonicalize();
  return Covariant(Form(inv_m * acc, d, inv.degree - 1), d);
}

// --- evectants of a transvectant ----------------------------------------------

namespace detail {

// lambda(i,k; n,n') of the removal count, with r from the enclosing call.
inline Rational ev_lambda(int r, int i, int k, int n, int nprime) {
  Rational c(binomial(r, k) * falling(i, k) * falling(n - i, r - k) *
             falling(nprime, r));
  if (k % 2) c = -c;
  return c;
}

inline Rational ev_kappa(int d, int n, int nprime, int r, int s, int m_total) {
  Rational c(factorial(n - r) * factorial(nprime - r) *
                 factorial(d + n + nprime - 2 * r - 2 * s + 1),
             factorial(n) * factorial(nprime) * factorial(s) *
                 factorial(d + n + nprime - 2 * r - s + 1) * m_total);
  c.canonicalize();
  return c;
}

}  // namespace detail

// Evectants C_0..C_{min(d, n+n'-2r)} of Theta = (Phi, Psi)_r, computed from
// the evectants of Phi and Psi alone:
//   C_s = sum_i xi_i (A_i, Psi)_{r-i+s} + sum_i eta_i (B_i, Phi)_{r-i+s}.
// Transvectant indices outside [0, min(orders)] contribute zero.
inline EvectantSequence transvectant_evectants(const Covariant& phi,
                                               const Covariant& psi,
                                               const EvectantSequence& a_seq,
                                               const EvectantSequence& b_seq,
                                               int r) {
  const int d = phi.d;
  const int m = phi.degree, n = phi.order;
  const int mp = psi.degree, np = psi.order;
  if (psi.d != d) throw std::invalid_argument("transvectant_evectants: mixed d");
  if (r < 0 || r > std::min(n, np))
    throw std::invalid_argument("transvectant_evectants: index out of range");
  if (static_cast<int>(a_seq.components.size()) != std::min(d, n) + 1 ||
      static_cast<int>(b_seq.components.size()) != std::min(d, np) + 1 ||
      a_seq.source.degree != m || a_seq.source.order != n ||
      b_seq.source.degree != mp || b_seq.source.order != np)
    throw std::invalid_argument("transvectant_evectants: sequences do not match the sources");

  Covariant theta = covariant_transvectant(phi, psi, r);
  const int smax = std::min(d, n + np - 2 * r);

  auto add_contribution = [&](Poly& acc, const Covariant& comp,
                              const Covariant& other, int idx,
                              const Rational& coeff) {
    if (coeff == 0 || idx < 0) return;
    if (idx > std::min(comp.order, other.order)) return;
    if (comp.form.is_zero()) return;
    acc += coeff * transvectant(comp.form, other.form, idx).body;
  };

  std::vector<Covariant> comps;
  for (int s = 0; s <= smax; ++s) {
    Poly acc;
    Rational kappa = detail::ev_kappa(d, n, np, r, s, m + mp);
    // xi-side: evectants of Phi against Psi
    for (int i = 0; i <= std::min(d, n); ++i) {
      Rational xi = 0;
      int klo = std::max({0, r - n + i, i - s});
      int khi = std::min(i, r);
      for (int k = klo; k <= khi; ++k) {
        xi += detail::ev_lambda(r, i, k, n, np) *
              mu_coefficient(d - i + k, n + np - 2 * r - i + k, s, i - k) *
              nu_coefficient(d - i, n - i - r + k, k, np - r, s - i + k);
      }
      xi *= kappa * m;
      add_contribution(acc, a_seq.components[i], psi, r - i + s, xi);
    }
    // eta-side: evectants of Psi against Phi, with (-1)^r
    for (int i = 0; i <= std::min(d, np); ++i) {
      Rational eta = 0;
      int klo = std::max({0, r - np + i, i - s});
      int khi = std::min(i, r);
      for (int k = klo; k <= khi; ++k) {
        eta += detail::ev_lambda(r, i, k, np, n) *
               mu_coefficient(d - i + k, n + np - 2 * r - i + k, s, i - k) *
               nu_coefficient(d - i, np - i - r + k, k, n - r, s - i + k);
      }
      eta *= kappa * mp;
      if (r % 2) eta = -eta;
      add_contribution(acc, b_seq.components[i], phi, r - i + s, eta);
    }
    comps.emplace_back(Form(std::move(acc), d + n + np - 2 * r - 2 * s,
                            m + mp - 1),
                       d);
  }
  return make_evectant_sequence(std::move(theta), std::move(comps));
}

// --- the covariance differential equations -------------------------------------

// The three sl2 annihilation equations satisfied by any covariant.
inline bool covariance_pde_check(const Covariant& phi) {
  const int d = phi.d;
  const Poly& p = phi.form.body;
  Var u1 = pair_first(phi.form.pair), u2 = pair_second(phi.form.pair);

  Poly lower, raise, toral;
  for (int i = 0; i <= d; ++i) {
    Poly di = p.derivative(a_var(i));
    if (di.is_zero()) continue;
    if (i + 1 <= d) lower += Rational(d - i) * (Poly::variable(a_var(i + 1)) * di);
    if (i - 1 >= 0) raise += Rational(i) * (Poly::variable(a_var(i - 1)) * di);
    toral += Rational(d - 2 * i) * (Poly::variable(a_var(i)) * di);
  }
  if (lower != Poly::variable(u1) * p.derivative(u2)) return false;
  if (raise != Poly::variable(u2) * p.derivative(u1)) return false;
  return toral == Poly::variable(u1) * p.derivative(u1) -
                      Poly::variable(u2) * p.derivative(u2);
}

// The three coordinate-invariant identities
// sum_i omega_{i,q} (A_i, F)_{d-i-1+q} = 0 (q = 0, 1, 2) that the evectant
// sequence of any covariant satisfies.
inline bool omega_identity_check(const EvectantSequence& seq) {
  const int d = seq.source.d, m = seq.source.degree, n = seq.source.order;
  const Covariant f = generic_form(d);
  for (int q = 0; q <= 2; ++q) {
    Poly acc;
    for (int i = 0; i < static_cast<int>(seq.components.size()); ++i) {
      Rational w;
      if (q == 0) {
        w = Rational(d - i);
      } else if (q == 1) {
        w = frac((d - i) * (2 * i - n), d * (n + 2)) + frac(m * i - n, m * d);
      } else {
        w = Rational(i * (n - i) * (d - i + n + 1));
      }
      int idx = d - i - 1 + q;
      if (w == 0 || idx < 0) continue;
      const Covariant& a = seq.components[i];
      if (idx > std::min(a.order, f.order) || a.form.is_zero()) continue;
      acc += w * transvectant(a.form, f.form, idx).body;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

// (([E(x) o Phi(y)], F(x))_{d-1}, U(x))_2 = (n/d) {(Phi, U)_1}_{x:=y},
// the quadratic-form phrasing of the covariance equations.
inline bool phi_diffeq_check(const Covariant& phi, const Form& u) {
  if (u.order != 2) throw std::invalid_argument("phi_diffeq_check: U must have order 2");
  const int d = phi.d, n = phi.order;
  Poly phi_y = rename_pair(phi.form.body, phi.form.pair, Pair::y);
  Poly e;
  for (int i = 0; i <= d; ++i) {
    Poly di = phi_y.derivative(a_var(i));
    if (di.is_zero()) continue;
    Rational sign(((d - i) % 2) ? -1 : 1);
    e += sign * (di * Poly::variable(Var::x1, i) * Poly::variable(Var::x2, d - i));
  }
  Poly step1 = transvectant_poly(e, d, generic_form(d).form.body, d, d - 1, Pair::x);
  Poly lhs = transvectant_poly(step1, 2, u.body, 2, 2, Pair::x);
  Poly rhs_x = transvectant(phi.form, Form(u.body, 2, u.adeg, phi.form.pair), 1).body;
  Rational scale(n, d);
  scale.canonicalize();
  Poly rhs = scale * rename_pair(rhs_x, Pair::x, Pair::y);
  return lhs == rhs;
}

// --- the evectant of the Hermite invariant --------------------------------------

namespace detail {

// Route (a): iterate the transvectant theorem along
// H = (theta22^7, F * theta39)_14, with products as 0-th transvectants.
inline Poly hermite_evectant_iterative() {
  const Covariant f = generic_form(5);
  EvectantSequence seq_f = evectant_sequence(f);

  Covariant t22 = theta(22);
  EvectantSequence seq22 = transvectant_evectants(f, f, seq_f, seq_f, 4);
  Covariant t26 = theta(26);
  EvectantSequence seq26 = transvectant_evectants(f, f, seq_f, seq_f, 2);
  EvectantSequence seq39 = transvectant_evectants(f, t26, seq_f, seq26, 1);
  Covariant t39 = theta(39);

  Covariant f39 = covariant_product(f, t39);
  EvectantSequence seq_f39 = transvectant_evectants(f, t39, seq_f, seq39, 0);

  Covariant pow = t22;
  EvectantSequence seq_pow = seq22;
  for (int k = 2; k <= 7; ++k) {
    seq_pow = transvectant_evectants(pow, t22, seq_pow, seq22, 0);
    pow = covariant_product(pow, t22);
  }

  EvectantSequence seq_h =
      transvectant_evectants(pow, f39, seq_pow, seq_f39, 14);
  return seq_h.components[0].form.body;
}

}  // namespace detail

inline Poly hermite_evectant_by_iteration() {
  return cached_poly("hermite-evectant-iterative", "d5",
                     detail::hermite_evectant_iterative);
}

inline Poly hermite_evectant_by_differentiation() {
  return cached_poly("hermite-evectant-direct", "d5", [] {
    return classical_evectant(hermite_invariant()).form.body;
  });
}

// E_H, computed by both routes, which must agree bit for bit.
inline const Covariant& hermite_evectant() {
  static const Covariant e = [] {
    Poly iter = hermite_evectant_by_iteration();
    Poly direct = hermite_evectant_by_differentiation();
    if (iter != direct)
      throw std::logic_error("hermite_evectant: iterative and direct routes disagree");
    return Covariant(Form(std::move(direct), 5, 17), 5);
  }();
  return e;
}

// Fast path for the evectants of theta22^7: Gamma may be assembled as
// (1/2) theta22(y)^6 [E(x) o theta22(y)] instead of six iterations.
inline EvectantSequence theta22_pow7_evectants_fast() {
  const Covariant t22 = theta(22);
  Poly t22y = rename_pair(t22.form.body, t22.form.pair, Pair::y);
  Poly e22;
  for (int i = 0; i <= 5; ++i) {
    Poly di = t22y.derivative(a_var(i));
    if (di.is_zero()) continue;
    Rational sign(((5 - i) % 2) ? -1 : 1);
    e22 += sign * (di * Poly::variable(Var::x1, i) * Poly::variable(Var::x2, 5 - i));
  }
  BiForm gamma(frac(1, 2) * (t22y.pow(6) * e22), 5, 14, 13);
  std::vector<Covariant> comps;
  for (int i = 0; i <= 5; ++i) comps.emplace_back(gordan_extract(gamma, i), 5);
  return make_evectant_sequence(covariant_power(t22, 7), std::move(comps));
}

}  // namespace binform
