#pragma once

// The reproduction suite around the canonical family
// F_Q = x1 (q0 x1^4 + 2 q1 x1^2 x2^2 + q2 x2^4): the syzygies U and V, the
// sigma_tau Wronskian Gamma_tau and its K_tau factor, the special triples,
// the Morley-form Wronskian Lambda, the involution Q -> Q', and the
// singular-locus predicate.

#include <array>
#include <optional>
#include <vector>

#include "binform/evectants.hpp"

namespace binform {

struct Triple {
  Rational alpha, beta, gamma;

  bool operator==(const Triple& o) const {
    return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
  }
};

struct QPoint {
  Poly q0, q1, q2;

  static QPoint symbolic() {
    return {Poly::variable(Var::q0), Poly::variable(Var::q1),
            Poly::variable(Var::q2)};
  }
  static QPoint rational(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0 && b == 0 && c == 0)
      throw std::invalid_argument("QPoint: all components zero");
    return {Poly::constant(a), Poly::constant(b), Poly::constant(c)};
  }
};

// U = theta33 theta22 - alpha theta40 F, of degree-order (5,5).
inline Covariant syzygy_U(const Poly& alpha) {
  Poly body = theta(33).form.body * theta(22).form.body -
              alpha * (theta(40).form.body * generic_form(5).form.body);
  return Covariant(Form(std::move(body), 5, 5), 5);
}
inline Covariant syzygy_U(const Rational& alpha) {
  return syzygy_U(Poly::constant(alpha));
}

// V = theta51 theta22^2 - beta theta40^2 F - gamma theta80 F, degree-order (9,5).
inline Covariant syzygy_V(const Poly& beta, const Poly& gamma) {
  const Poly& f = generic_form(5).form.body;
  Poly body = theta(51).form.body * covariant_power(theta(22), 2).form.body -
              beta * (covariant_power(theta(40), 2).form.body * f) -
              gamma * (theta(80).form.body * f);
  return Covariant(Form(std::move(body), 5, 9), 5);
}
inline Covariant syzygy_V(const Rational& beta, const Rational& gamma) {
  return syzygy_V(Poly::constant(beta), Poly::constant(gamma));
}

// The five order-5 forms (x1^2, F)_1, (x1 x2, F)_1, (x2^2, F)_1, U, V whose
// Wronskian is Gamma_tau; optionally specialized by the given bindings.
inline std::vector<Form> sigma_tau_images(const Poly& alpha, const Poly& beta,
                                          const Poly& gamma,
                                          const std::map<Var, Poly>* bindings = nullptr) {
  const Poly& f = generic_form(5).form.body;
  auto maybe_spec = [&](Poly p) {
    if (bindings) p = p.substitute(*bindings);
    return p;
  };
  Poly fb = maybe_spec(f);
  std::vector<Form> rows;
  for (const char* mono : {"x1^2", "x1*x2", "x2^2"})
    rows.emplace_back(transvectant_poly(parse_poly(mono), 2, fb, 5, 1), 5,
                      bindings ? 0 : 1);
  rows.emplace_back(maybe_spec(syzygy_U(alpha).form.body), 5, bindings ? 0 : 5);
  rows.emplace_back(maybe_spec(syzygy_V(beta, gamma).form.body), 5,
                    bindings ? 0 : 9);
  return rows;
}

// Gamma_tau for a rational triple, as a covariant of degree-order (17,5).
// Satisfies (Gamma_tau, F)_5 = constant * H.
inline Covariant gamma_tau(const Triple& tau) {
  std::vector<Form> rows = sigma_tau_images(Poly::constant(tau.alpha),
                                            Poly::constant(tau.beta),
                                            Poly::constant(tau.gamma));
  return Covariant(wronskian(rows), 5);
}

// Gamma_tau(F_Q) with alpha, beta, gamma kept symbolic.
inline Form gamma_tau_fq_symbolic() {
  auto bind = fq_bindings();
  std::vector<Form> rows =
      sigma_tau_images(Poly::variable(Var::alpha), Poly::variable(Var::beta),
                       Poly::variable(Var::gamma), &bind);
  return wronskian(rows);
}

// K_tau: the degree-8 factor of Gamma_tau(F_Q), coefficients affine in
// (alpha, beta, gamma).
inline Poly ktau_expression() {
  Poly a = Poly::variable(Var::alpha), b = Poly::variable(Var::beta),
       g = Poly::variable(Var::gamma);
  auto c = [](long v) { return Poly::constant(Rational(v)); };
  return (c(75000) * g + c(28125)) * parse_poly("q0^4*q2^4") +
         (c(520000) * a + c(42000) * g - c(22500) - c(960000) * b) *
             parse_poly("q0^3*q1^2*q2^3") +
         (c(-1344000) * b + c(292800) * g + c(872000) * a + c(6750)) *
             parse_poly("q0^2*q1^4*q2^2") +
         (c(121200) * g - c(900) - c(576000) * b + c(408000) * a) *
             parse_poly("q0*q1^6*q2") +
         (c(12744) * g - c(69120) * b + c(43200) * a + c(45)) * parse_poly("q1^8");
}

// F_{Q'} as a polynomial in q0, q1, q2, x1, x2.
inline Poly fq_prime() {
  return parse_poly("q0*q2-6/5*q1^2") * parse_poly("x1^5") +
         parse_poly("2*q1*q2") * parse_poly("x1^3*x2^2") -
         parse_poly("q2^2") * parse_poly("x1*x2^4");
}

// Global prefactor in Gamma_tau(F_Q) = c q2^3 (q0q2+3q1^2)(5q0q2-q1^2) K_tau F_{Q'}.
inline Rational gamma_tau_fq_constant() {
  return Rational(-1) * rational_pow(2, 20) * rational_pow(3, 5) /
         rational_pow(5, 15);
}

// --- special triples ------------------------------------------------------------

struct SpecialTriple {
  std::array<int, 3> rst;
  Triple tau;
  Rational delta;  // normalizer with delta * K_tau = q2^r (...)^s (...)^t
};

// Enumerates nonnegative (r,s,t) with r + 2s + 2t = 8 and solves the linear
// system K_tau = delta' * q2^r (q0q2+3q1^2)^s (5q0q2-q1^2)^t for
// (alpha, beta, gamma, delta'); returns the solvable cases with delta = 1/delta'.
inline std::vector<SpecialTriple> solve_special_triples() {
  Poly k = ktau_expression();
  const Poly zero = Poly::zero();
  std::map<Var, Poly> kill_all = {{Var::alpha, zero}, {Var::beta, zero},
                                  {Var::gamma, zero}};
  Poly k0 = k.substitute(kill_all);
  auto coeff_poly = [&](Var v) {
    std::map<Var, Poly> one_on = kill_all;
    one_on[v] = Poly::one();
    return k.substitute(one_on) - k0;
  };
  Poly ka = coeff_poly(Var::alpha), kb = coeff_poly(Var::beta),
       kg = coeff_poly(Var::gamma);

  std::vector<SpecialTriple> found;
  for (int r = 8; r >= 0; --r) {
    if ((8 - r) % 2) continue;
    for (int s = 0; 2 * s <= 8 - r; ++s) {
      int t = (8 - r - 2 * s) / 2;
      Poly product = Poly::variable(Var::q2, r) *
                     parse_poly("q0*q2+3*q1^2").pow(s) *
                     parse_poly("5*q0*q2-q1^2").pow(t);
      // union of q-monomial supports, one linear equation each
      std::map<Monomial, std::array<Rational, 5>, decltype(&monomial_less)>
          eqs(&monomial_less);
      auto collect = [&](const Poly& p, int slot) {
        for (const auto& [m, c] : p.terms()) eqs[m][slot] = c;
      };
      collect(ka, 0);
      collect(kb, 1);
      collect(kg, 2);
      collect(product, 3);
      collect(k0, 4);
      LinearSystem sys;
      for (const auto& [m, row] : eqs) {
        sys.matrix.push_back({row[0], row[1], row[2], -row[3]});
        sys.rhs.push_back(-row[4]);
      }
      SolveOutcome out = exact_solve(sys);
      if (!out.unique() || out.solution[3] == 0) continue;
      found.push_back(SpecialTriple{
          {r, s, t},
          Triple{out.solution[0], out.solution[1], out.solution[2]},
          Rational(1 / out.solution[3])});
    }
  }
  return found;
}

// --- the Jacobian triple ----------------------------------------------------------

// The specific tau with (E_H, U)_5 = (E_H, V)_5 = 0: alpha from exact
// proportionality (E_H, theta33 theta22)_5 = alpha theta40 H, and (beta, gamma)
// from rational specializations of (E_H, theta51 theta22^2)_5 =
// (beta theta40^2 + gamma theta80) H, verified symbolically afterwards.
inline Triple jacobian_triple() {
  const Covariant& eh = hermite_evectant();
  const Poly& h = hermite_invariant().form.body;

  Poly lhs_a =
      transvectant(eh.form,
                   covariant_product(theta(33), theta(22)).form, 5)
          .body;
  Poly rhs_a = theta(40).form.body * h;
  Rational alpha = 0;
  if (!lhs_a.is_zero()) {
    auto r = proportional(lhs_a, rhs_a);
    if (!r) throw std::logic_error("jacobian_triple: (E_H, theta33 theta22)_5 is not a multiple of theta40 H");
    alpha = *r;
  }

  Poly k = transvectant(eh.form,
                        covariant_product(theta(51),
                                          covariant_power(theta(22), 2))
                            .form,
                        5)
               .body;
  Poly p1 = covariant_power(theta(40), 2).form.body * h;
  Poly p2 = theta(80).form.body * h;

  std::vector<Form> probes = default_probes(8);
  std::optional<std::pair<Rational, Rational>> bg;
  for (std::size_t i = 0; i < probes.size() && !bg; ++i) {
    for (std::size_t j = i + 1; j < probes.size() && !bg; ++j) {
      auto eval = [&](const Poly& p, const Form& probe) {
        Poly v = p.substitute(specialization_bindings(probe, 5));
        return v.is_zero() ? Rational(0) : v.leading_term().second;
      };
      LinearSystem sys;
      sys.matrix = {{eval(p1, probes[i]), eval(p2, probes[i])},
                    {eval(p1, probes[j]), eval(p2, probes[j])}};
      sys.rhs = {eval(k, probes[i]), eval(k, probes[j])};
      SolveOutcome out = exact_solve(sys);
      if (out.unique()) bg = {out.solution[0], out.solution[1]};
    }
  }
  if (!bg) throw std::logic_error("jacobian_triple: every probe pair degenerated");
  if (k != bg->first * p1 + bg->second * p2)
    throw std::logic_error("jacobian_triple: symbolic verification of (beta, gamma) failed");
  return Triple{alpha, bg->first, bg->second};
}

// --- involution and singular locus ------------------------------------------------

// Q -> Q' = [q0 q2 - (6/5) q1^2, q1 q2, -q2^2].
inline QPoint involution(const QPoint& q) {
  return QPoint{q.q0 * q.q2 - frac(6, 5) * (q.q1 * q.q1), q.q1 * q.q2,
                -(q.q2 * q.q2)};
}

// F_Q lies in the singular locus iff q2 (q0q2 + 3q1^2)(5q0q2 - q1^2) = 0;
// cross-checked against the vanishing of theta51 at F_Q.
inline bool singular_membership(const Rational& q0, const Rational& q1,
                                const Rational& q2) {
  if (q0 == 0 && q1 == 0 && q2 == 0)
    throw std::invalid_argument("singular_membership: Q must be nonzero");
  bool predicate =
      q2 * (q0 * q2 + 3 * q1 * q1) * (5 * q0 * q2 - q1 * q1) == 0;
  Poly fq = Poly::constant(q0) * parse_poly("x1^5") +
            Poly::constant(2 * q1) * parse_poly("x1^3*x2^2") +
            Poly::constant(q2) * parse_poly("x1*x2^4");
  bool t51_vanishes = covariant_at(theta(51), Form(fq, 5, 0)).is_zero();
  if (predicate != t51_vanishes)
    throw std::logic_error("singular_membership: theta51 cross-check disagrees");
  return predicate;
}

// --- the Cayley-method Wronskian ----------------------------------------------------

// mu_F(A) = (A, (F, theta33)_1)_1 + (1/6) A (F, theta33)_2, linear in A.
inline Form morley_mu(const Form& f5, const Form& a1) {
  if (f5.order != 5 || a1.order != 1)
    throw std::invalid_argument("morley_mu: expected a quintic and a linear form");
  Form t33 = covariant_at(theta(33), f5);
  Form ft1 = transvectant(f5, t33, 1);
  Form ft2 = transvectant(f5, t33, 2);
  Poly body = transvectant(a1, ft1, 1).body + frac(1, 6) * (a1.body * ft2.body);
  return Form(std::move(body), 5, a1.adeg + f5.adeg + t33.adeg);
}

// Lambda: the Wronskian of {x1^2 theta33, x1 x2 theta33, x2^2 theta33,
// mu(x1), mu(x2)} at the given quintic.
inline Form lambda_wronskian(const Form& f5) {
  Form t33 = covariant_at(theta(33), f5);
  std::vector<Form> rows;
  for (const char* mono : {"x1^2", "x1*x2", "x2^2"})
    rows.emplace_back(parse_poly(mono) * t33.body, 5, t33.adeg);
  rows.push_back(morley_mu(f5, Form(parse_poly("x1"), 1, 0)));
  rows.push_back(morley_mu(f5, Form(parse_poly("x2"), 1, 0)));
  return wronskian(rows);
}

// Product of the three diagonal intersections of a quartic's root pairs is
// proportional to quartic_T of the product.
inline bool triple_intersection_check(const Form& a, const Form& b,
                                      const Form& c, const Form& d) {
  for (const Form* f : {&a, &b, &c, &d})
    if (f->order != 1)
      throw std::invalid_argument("triple_intersection_check: expected linear forms");
  auto quad = [](const Form& u, const Form& v) {
    return Form(u.body * v.body, 2, u.adeg + v.adeg);
  };
  Poly prod = transvectant(quad(a, b), quad(c, d), 1).body *
              transvectant(quad(a, c), quad(b, d), 1).body *
              transvectant(quad(a, d), quad(b, c), 1).body;
  Form g(a.body * b.body * c.body * d.body, 4,
         a.adeg + b.adeg + c.adeg + d.adeg);
  return proportional(prod, quartic_T(g).body).has_value();
}

}  // namespace binform
