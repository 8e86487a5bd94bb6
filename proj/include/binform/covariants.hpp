#pragma once

// Covariants of binary d-ics: the generic d-ic, Cayley-Sylvester dimension
// counts, the quintic fundamental-system catalog (vartheta_mq), the Hermite
// invariant, the sextic covariant T of quartics, and exact expression of a
// covariant in a basis by specialization.

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "binform/cache.hpp"
#include "binform/linalg.hpp"

namespace binform {

struct Covariant {
  Form form;
  int d = 0;       // order of the source binary form
  int degree = 0;  // degree in a0..ad
  int order = 0;   // order in x
  int weight = 0;  // (d * degree - order) / 2

  Covariant() = default;

  // A zero form may sit in a slot whose nominal weight is negative (that is
  // precisely why it vanishes); the nonnegativity requirement binds only for
  // nonzero covariants.
  Covariant(Form f, int d_) : form(std::move(f)), d(d_) {
    degree = form.adeg;
    order = form.order;
    int w2 = d * degree - order;
    if (w2 % 2 != 0 || (w2 < 0 && !form.is_zero()))
      throw std::invalid_argument("Covariant: weight (d*m - q)/2 is not a nonnegative integer");
    weight = w2 / 2;
  }

  bool is_invariant() const { return order == 0; }
};

inline Covariant covariant_transvectant(const Covariant& a, const Covariant& b,
                                        int r) {
  if (a.d != b.d) throw std::invalid_argument("covariant_transvectant: mixed d");
  return Covariant(transvectant(a.form, b.form, r), a.d);
}

inline Covariant covariant_product(const Covariant& a, const Covariant& b) {
  return covariant_transvectant(a, b, 0);
}

inline Covariant covariant_power(const Covariant& a, int k) {
  return Covariant(
      Form(a.form.body.pow(k), k * a.order, k * a.degree, a.form.pair), a.d);
}

// The generic d-ic F = sum_i C(d,i) a_i x1^{d-i} x2^i, of degree-order (1, d).
inline Covariant generic_form(int d) {
  if (d < 1 || d >= kAVarCount)
    throw std::invalid_argument("generic_form: d out of supported range");
  Poly f;
  for (int i = 0; i <= d; ++i) {
    Monomial m;
    m.set_exponent(a_var(i), 1);
    m.set_exponent(Var::x1, d - i);
    m.set_exponent(Var::x2, i);
    f += Poly::term(m, Rational(binomial(d, i)));
  }
  return Covariant(Form(std::move(f), d, 1), d);
}

// Cayley's bracket notation (c_0,...,c_n)(u, v)^n = sum C(n,i) c_i u^{n-i} v^i.
inline Poly cayley_form(const std::vector<Poly>& c, const Poly& u, const Poly& v) {
  const int n = static_cast<int>(c.size()) - 1;
  Poly acc;
  for (int i = 0; i <= n; ++i)
    acc += Rational(binomial(n, i)) * (c[i] * u.pow(n - i) * v.pow(i));
  return acc;
}

// --- Cayley-Sylvester dimension counts ---------------------------------------

// Partitions of n into at most k parts, none exceeding l. DP over admitted
// part sizes 1..l; adding one more copy of the current size consumes one of
// the k part slots.
inline long long partitions_bounded(long long n, int k, int l) {
  if (n < 0 || k < 0 || l < 0) return 0;
  if (n == 0) return 1;
  if (n > static_cast<long long>(k) * l) return 0;
  std::vector<std::vector<long long>> dp(
      k + 1, std::vector<long long>(n + 1, 0));  // dp[parts][sum] at current l
  for (int parts = 0; parts <= k; ++parts) dp[parts][0] = 1;
  for (int part = 1; part <= l; ++part) {
    for (int parts = 1; parts <= k; ++parts)
      for (long long s = part; s <= n; ++s) dp[parts][s] += dp[parts - 1][s - part];
  }
  return dp[k][n];
}

// zeta_{m,q} = p((dm-q)/2, d, m) - p((dm-q-2)/2, d, m) for dm - q even
// and nonnegative; 0 otherwise.
inline long long cayley_sylvester(int d, int m, int q) {
  long long w2 = static_cast<long long>(d) * m - q;
  if (w2 < 0 || w2 % 2 != 0) return 0;
  return partitions_bounded(w2 / 2, d, m) - partitions_bounded(w2 / 2 - 1, d, m);
}

// --- specialization ----------------------------------------------------------

// Coefficients c_i of an order-d form written as sum C(d,i) c_i x1^{d-i} x2^i.
inline std::vector<Poly> form_coefficients(const Form& f, int d) {
  if (f.order != d) throw std::invalid_argument("form_coefficients: order mismatch");
  std::vector<Poly> c(d + 1);
  for (int i = 0; i <= d; ++i) {
    Rational inv(1, binomial(d, i));
    inv.canonicalize();
    c[i] = inv * pair_coefficient(f.body, d - i, i, f.pair);
  }
  return c;
}

inline std::map<Var, Poly> specialization_bindings(const Form& f, int d) {
  std::vector<Poly> c = form_coefficients(f, d);
  std::map<Var, Poly> bind;
  for (int i = 0; i <= d; ++i) bind[a_var(i)] = c[i];
  return bind;
}

// Value of a covariant at a particular form: a_i -> coefficients of f.
inline Form covariant_at(const Covariant& cov, const Form& f) {
  Poly body = cov.form.body.substitute(specialization_bindings(f, cov.d));
  const int adeg = a_degree(body);
  return Form(std::move(body), cov.order, adeg, cov.form.pair);
}

// F_Q = x1 (q0 x1^4 + 2 q1 x1^2 x2^2 + q2 x2^4).
inline Form canonical_FQ() {
  Poly p = parse_poly("q0*x1^5+2*q1*x1^3*x2^2+q2*x1*x2^4");
  return Form(std::move(p), 5, 0);
}

// a_i bindings that specialize the generic quintic to F_Q.
inline std::map<Var, Poly> fq_bindings() {
  return specialization_bindings(canonical_FQ(), 5);
}

// Deterministic integer probe quintics: the classical
// x1^5 + x2^5 + (x1 + x2)^5 first, then small-coefficient quintics.
inline std::vector<Form> default_probes(int count) {
  std::vector<Form> probes;
  probes.emplace_back(parse_poly("x1^5+x2^5") +
                          parse_poly("x1+x2").pow(5),
                      5, 0);
  for (int k = 1; static_cast<int>(probes.size()) < count; ++k) {
    Poly p;
    for (int i = 0; i <= 5; ++i) {
      int c = ((3 + 5 * k + 7 * i + k * i) % 7) - 3;
      if (c == 0) continue;
      p += Poly::term(
          [&] {
            Monomial m;
            m.set_exponent(Var::x1, 5 - i);
            m.set_exponent(Var::x2, i);
            return m;
          }(),
          Rational(c));
    }
    if (p.is_zero()) continue;
    probes.emplace_back(std::move(p), 5, 0);
  }
  return probes;
}

// --- expression in a basis ----------------------------------------------------

struct CovariantBasis {
  std::vector<std::string> names;
  std::vector<Covariant> entries;

  void add(std::string name, Covariant c) {
    if (!entries.empty() &&
        (c.degree != entries[0].degree || c.order != entries[0].order))
      throw std::invalid_argument("CovariantBasis: mixed degree-orders");
    names.push_back(std::move(name));
    entries.push_back(std::move(c));
  }
};

// Exact coefficients with target = sum c_i basis_i, determined by
// specializing to probe quintics and verified symbolically afterwards.
inline std::vector<Rational> express_in_basis(const Covariant& target,
                                              const CovariantBasis& basis,
                                              const std::vector<Form>& probes) {
  if (basis.entries.empty())
    throw std::invalid_argument("express_in_basis: empty basis");
  for (const Covariant& e : basis.entries)
    if (e.degree != target.degree || e.order != target.order)
      throw std::invalid_argument("express_in_basis: degree-order mismatch");

  const int q = target.order;
  const int ncols = static_cast<int>(basis.entries.size());
  if (probes.empty())
    throw std::runtime_error("express_in_basis: rank-deficient probe set; supply more probes");
  LinearSystem sys;
  for (const Form& probe : probes) {
    std::vector<Form> spec;
    spec.reserve(ncols);
    for (const Covariant& e : basis.entries) spec.push_back(covariant_at(e, probe));
    Form tspec = covariant_at(target, probe);
    for (int t = 0; t <= q; ++t) {
      std::vector<Rational> row(ncols);
      for (int j = 0; j < ncols; ++j) {
        Poly cj = pair_coefficient(spec[j].body, q - t, t);
        row[j] = cj.is_zero() ? Rational(0) : cj.leading_term().second;
      }
      Poly ct = pair_coefficient(tspec.body, q - t, t);
      sys.matrix.push_back(std::move(row));
      sys.rhs.push_back(ct.is_zero() ? Rational(0) : ct.leading_term().second);
    }
  }

  SolveOutcome out = exact_solve(sys);
  if (out.status == SolveStatus::underdetermined)
    throw std::runtime_error("express_in_basis: rank-deficient probe set; supply more probes");
  if (out.status == SolveStatus::inconsistent)
    throw std::runtime_error("express_in_basis: target is not in the span of the basis");

  Poly recon;
  for (int j = 0; j < ncols; ++j)
    recon += out.solution[j] * basis.entries[j].form.body;
  if (recon != target.form.body)
    throw std::runtime_error("express_in_basis: specialization solution failed symbolic verification");
  return out.solution;
}

// --- the quintic catalog -------------------------------------------------------

namespace detail {

struct ThetaCatalog {
  std::shared_mutex mtx;
  std::map<int, Covariant> entries;
};

inline ThetaCatalog& theta_catalog() {
  static ThetaCatalog c;
  return c;
}

Covariant compute_theta(int name);  // defined below

}  // namespace detail

inline const std::vector<int>& theta_names() {
  static const std::vector<int> names = {22, 26, 33, 39, 40, 44, 51, 80, 82};
  return names;
}

// vartheta_{mq}: the named generator of the quintic fundamental system.
// Memoized behind a single-writer/multi-reader guard; entries are immutable
// once computed.
inline Covariant theta(int name) {
  auto& cat = detail::theta_catalog();
  {
    std::shared_lock<std::shared_mutex> lock(cat.mtx);
    auto it = cat.entries.find(name);
    if (it != cat.entries.end()) return it->second;
  }
  Covariant value = detail::compute_theta(name);
  std::unique_lock<std::shared_mutex> lock(cat.mtx);
  return cat.entries.emplace(name, std::move(value)).first->second;
}

// Basis of the 5-dimensional space of degree-order (9,5) covariants.
inline CovariantBasis basis_95() {
  Covariant f = generic_form(5);
  CovariantBasis b;
  b.add("theta51*theta22^2",
        covariant_product(theta(51), covariant_power(theta(22), 2)));
  b.add("theta51*theta44", covariant_product(theta(51), theta(44)));
  b.add("theta40*theta33*theta22",
        covariant_product(covariant_product(theta(40), theta(33)), theta(22)));
  b.add("theta40^2*F", covariant_product(covariant_power(theta(40), 2), f));
  b.add("theta80*F", covariant_product(theta(80), f));
  return b;
}

namespace detail {

inline Covariant compute_theta(int name) {
  const Covariant f = generic_form(5);
  switch (name) {
    case 22: return covariant_transvectant(f, f, 4);
    case 26: return covariant_transvectant(f, f, 2);
    case 33: return covariant_transvectant(theta(22), f, 2);
    case 39: return covariant_transvectant(f, theta(26), 1);
    case 40: return covariant_transvectant(theta(22), theta(22), 2);
    case 44: return covariant_transvectant(theta(22), theta(26), 2);
    case 51: return covariant_transvectant(covariant_power(theta(22), 2), f, 4);
    case 80: return covariant_transvectant(covariant_power(theta(22), 3), theta(26), 6);
    case 82: {
      // Not defined in the fundamental-system table; dim A_{8,2} = 1, so any
      // nonzero candidate is correct up to scalar. Normalized so that the
      // expansion of (F, theta82)_1 over basis_95 has first coefficient -7/10.
      std::vector<Covariant> candidates;
      candidates.push_back(covariant_transvectant(
          covariant_power(theta(22), 2), theta(44), 3));
      candidates.push_back(covariant_transvectant(
          covariant_power(theta(22), 3), theta(26), 5));
      candidates.push_back(covariant_transvectant(
          covariant_product(theta(40), theta(22)), theta(22), 1));
      for (Covariant& cand : candidates) {
        if (cand.form.is_zero()) continue;
        Covariant probe = covariant_transvectant(f, cand, 1);
        std::vector<Rational> c =
            express_in_basis(probe, basis_95(), default_probes(4));
        if (c[0] == 0) continue;
        Rational scale = frac(-7, 10) / c[0];
        return Covariant(Form(scale * cand.form.body, cand.order, cand.degree,
                              cand.form.pair),
                         cand.d);
      }
      throw std::logic_error("theta82: no nonzero candidate found");
    }
    default:
      throw std::invalid_argument("theta: unknown catalog name " + std::to_string(name));
  }
}

}  // namespace detail

// --- the Hermite invariant -----------------------------------------------------

// H = (theta22^7, F * theta39)_14, the degree-18 skew invariant of quintics.
// Heavy; computed once and persisted in the content-addressed cache.
inline const Covariant& hermite_invariant() {
  static const Covariant h = [] {
    Poly body = cached_poly("hermite-invariant", "d5", [] {
      Covariant lhs = covariant_power(theta(22), 7);
      Covariant rhs = covariant_product(generic_form(5), theta(39));
      return covariant_transvectant(lhs, rhs, 14).form.body;
    });
    return Covariant(Form(std::move(body), 0, 18), 5);
  }();
  return h;
}

// T(G) = (G, (G, G)_2)_1 for a binary quartic.
inline Form quartic_T(const Form& g) {
  if (g.order != 4) throw std::invalid_argument("quartic_T: expected an order-4 form");
  return transvectant(g, transvectant(g, g, 2), 1);
}

}  // namespace binform
