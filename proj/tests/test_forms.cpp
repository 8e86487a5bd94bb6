#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "binform/forms.hpp"
#include "binform/serialize.hpp"

using namespace binform;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Form F(const char* s, int order, int adeg = 0) { return Form(P(s), order, adeg); }

// The generic quintic, built inline to keep this suite self-contained.
Form generic_quintic() {
  Poly f;
  for (int i = 0; i <= 5; ++i) {
    Monomial m;
    m.set_exponent(a_var(i), 1);
    m.set_exponent(Var::x1, 5 - i);
    m.set_exponent(Var::x2, i);
    f += Poly::term(m, Rational(binomial(5, i)));
  }
  return Form(f, 5, 1);
}

Form random_form(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coef(-4, 4);
  Poly p;
  for (int i = 0; i <= order; ++i) {
    Monomial m;
    m.set_exponent(Var::x1, order - i);
    m.set_exponent(Var::x2, i);
    p += Poly::term(m, Rational(coef(rng)));
  }
  return Form(p, order, 0);
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("form validation") {
  CHECK_THROWS_AS(Form(P("x1^2+x1"), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Form(P("x1*y1"), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Form(P("a0*x1"), 1, 0), std::invalid_argument);
  CHECK_NOTHROW(Form(P("q0*x1^2+alpha*x2^2"), 2, 0));
  CHECK_NOTHROW(Form::zero(3, 1));
}

TEST_CASE("transvectant examples") {
  Form f = F("x1^5+x2^5", 5);
  CHECK(transvectant(f, f, 4).body == P("2*x1*x2"));

  Form a = F("x1^2+x1*x2", 2), b = F("x2^3", 3);
  CHECK(transvectant(a, b, 0).body == a.body * b.body);

  // odd transvectants of a form with itself vanish
  Form g = generic_quintic();
  for (int r : {1, 3, 5}) CHECK(transvectant(g, g, r).is_zero());

  // out of range: zero by convention, with the grading carried through
  Form z = transvectant(f, f, 9);
  CHECK(z.is_zero());
  CHECK(z.adeg == 0);
  CHECK_THROWS_AS(transvectant(f, form_in_pair(f, Pair::y), 1),
                  std::invalid_argument);
}

TEST_CASE("transvectant grading and bilinearity") {
  std::mt19937 rng(2026);
  for (int round = 0; round < 25; ++round) {
    int m = 2 + round % 4, n = 1 + round % 5;
    Form a = random_form(rng, m), b = random_form(rng, n);
    for (int r = 0; r <= std::min(m, n); ++r) {
      Form t = transvectant(a, b, r);
      CHECK(t.order == m + n - 2 * r);
      CHECK(t.adeg == a.adeg + b.adeg);
    }
    Form a2 = random_form(rng, m);
    int r = std::min(m, n);
    Poly lhs = transvectant(Form(a.body + a2.body, m, 0), b, r).body;
    CHECK(lhs == transvectant(a, b, r).body + transvectant(a2, b, r).body);
  }

  Form gq = generic_quintic();
  Form t = transvectant(gq, gq, 4);
  CHECK(t.order == 2);
  CHECK(t.adeg == 2);
}

TEST_CASE("omega operator") {
  CHECK(omega_poly(P("x1*y2")) == Poly::one());
  CHECK(omega_poly(P("x1*y1")) == Poly::zero());
  CHECK(omega_poly(P("x1*y2"), 2) == Poly::zero());

  // Omega((x y) G) = (p+q+2) G + (x y) Omega(G)
  std::mt19937 rng(5);
  Poly br = bracket().body;
  for (int round = 0; round < 20; ++round) {
    int p = round % 3 + 1, q = round % 2 + 1;
    Form gx = random_form(rng, p);
    Form gy = random_form(rng, q);
    Poly g = outer_product(gx, gy).body;
    CHECK(omega_poly(br * g) == Rational(p + q + 2) * g + br * omega_poly(g));
  }
}

TEST_CASE("bracket") {
  BiForm br = bracket();
  CHECK(diagonal_y_to_x(br.body) == Poly::zero());
  CHECK((br.body * br.body).term_count() == 3);
  CHECK(omega_poly(br.body) == Poly::constant(2));
}

TEST_CASE("pi_r") {
  Form a = F("x1^2-3*x2^2", 2), b = F("x2^3+x1*x2^2", 3);
  CHECK(pi_r(outer_product(a, b), 0).body == a.body * b.body);

  BiForm g(P("x1^2*y2"), 2, 1, 0);
  CHECK(pi_r(g, 1).body == P("x1"));
  CHECK_THROWS_AS(pi_r(g, 2), std::invalid_argument);

  std::mt19937 rng(11);
  for (int round = 0; round < 20; ++round) {
    int m = 1 + round % 4, n = 1 + (round / 2) % 4;
    Form x = random_form(rng, m), y = random_form(rng, n);
    for (int r = 0; r <= std::min(m, n); ++r)
      CHECK(pi_r(outer_product(x, y), r).body == transvectant(x, y, r).body);
  }
}

TEST_CASE("polarize") {
  CHECK(polarize(F("x1^2", 2), 1, 1).body == P("x1*y1"));
  CHECK(polarize(F("x1^3+3*x1^2*x2+3*x1*x2^2+x2^3", 3), 2, 1).body ==
        P("x1^2+2*x1*x2+x2^2") * P("y1+y2"));
  Form th = F("x1^3-2*x1*x2^2", 3);
  CHECK(polarize(th, 3, 0).body == th.body);
  CHECK(polarize(th, 0, 3).body == rename_pair(th.body, Pair::x, Pair::y));
  CHECK_THROWS_AS(polarize(th, 2, 2), std::invalid_argument);
}

TEST_CASE("gordan series") {
  auto series = gordan_series(F("x1^2", 2), F("x2", 1));
  REQUIRE(series.size() == 2);
  CHECK(series[0].first == Rational(1));
  CHECK(series[1].first == frac(2, 3));
  CHECK(series[0].second.body == P("x1^2*x2"));
  CHECK(series[1].second.body == P("x1"));

  // single-term reconstruction when (x1, x1)_1 = 0
  auto diag = gordan_series(F("x1", 1), F("x1", 1));
  CHECK(diag[1].second.is_zero());

  // reconstruction identity over all monomial pairs of orders <= 4
  // (gordan_series throws internally if the identity fails)
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
          Form a(Poly::variable(Var::x1, m - i) * Poly::variable(Var::x2, i), m, 0);
          Form b(Poly::variable(Var::x1, n - j) * Poly::variable(Var::x2, j), n, 0);
          CHECK_NOTHROW(gordan_series(a, b));
        }
}

TEST_CASE("pi_r recovers the r-term of the Gordan series") {
  // pi_r((xy)^r polarize((A,B)_r)) = scale * mu * (A,B)_r with the stated
  // coefficient from the cancellation lemma
  std::mt19937 rng(13);
  for (int round = 0; round < 12; ++round) {
    int m = 1 + round % 4, n = 1 + (round / 3) % 4;
    Form a = random_form(rng, m), b = random_form(rng, n);
    for (int r = 0; r <= std::min(m, n); ++r) {
      Form tr = transvectant(a, b, r);
      if (tr.is_zero()) continue;
      BiForm term(bracket().body.pow(r) * polarize(tr, m - r, n - r).body, m, n,
                  0);
      Rational scale(factorial(m - r) * factorial(n - r),
                     factorial(m) * factorial(n));
      scale.canonicalize();
      Rational expect = scale * mu_coefficient(m - r, n - r, r, r);
      CHECK(pi_r(term, r).body == expect * tr.body);
    }
  }
}

TEST_CASE("gordan extraction round trip") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
          Form a(Poly::variable(Var::x1, m - i) * Poly::variable(Var::x2, i), m, 0);
          Form b(Poly::variable(Var::x1, n - j) * Poly::variable(Var::x2, j), n, 0);
          BiForm g = outer_product(a, b);
          std::vector<Form> comps;
          for (int k = 0; k <= std::min(m, n); ++k)
            comps.push_back(gordan_extract(g, k));
          CHECK(gordan_reconstruct(comps, m, n, 0).body == g.body);
        }

  // bracket powers decompose into a single component
  BiForm br2(bracket().body * bracket().body, 2, 2, 0);
  CHECK(gordan_extract(br2, 0).is_zero());
  CHECK(gordan_extract(br2, 1).is_zero());
  Form c2 = gordan_extract(br2, 2);
  CHECK(c2.order == 0);
  CHECK(!c2.is_zero());

  // xorder = 0: the whole content sits in the i = 0 component
  BiForm yonly(P("y1*y2"), 0, 2, 0);
  Form only = gordan_extract(yonly, 0);
  CHECK(only.body == P("x1*x2"));
  CHECK(gordan_reconstruct({only}, 0, 2, 0).body == yonly.body);
  CHECK_THROWS_AS(gordan_extract(yonly, 1), std::invalid_argument);
}

TEST_CASE("mu and nu coefficients") {
  CHECK(mu_coefficient(3, 4, 0, 0) == Rational(1));
  CHECK(mu_coefficient(2, 2, 1, 2) == Rational(0));
  CHECK(nu_coefficient(1, 0, 0, 1, 2) == Rational(0));

  // Omega-cancellation lemma on concrete linear forms a = x1 + 2 x2, b = 3 x1 - x2
  Form a1 = F("x1+2*x2", 1), b1 = F("3*x1-x2", 1);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int i = 0; i <= 2; ++i)
        for (int l = 0; l <= 4; ++l) {
          Poly axp = a1.body.pow(p);
          Poly byq = rename_pair(b1.body.pow(q), Pair::x, Pair::y);
          Poly lhs = diagonal_y_to_x(
              omega_poly(bracket().body.pow(i) * axp * byq, l));
          Poly rhs = (l >= i)
                         ? mu_coefficient(p, q, l, i) *
                               diagonal_y_to_x(omega_poly(axp * byq, l - i))
                         : Poly::zero();
          CHECK(lhs == rhs);
        }

  // nu lemma: {Omega^u a_x^p1 a_y^q1 b_x^p2 b_y^q2}_{y:=x}
  //           = nu * (a b)^u a_x^{p1+q1-u} b_x^{p2+q2-u}
  Poly ab = P("-7");  // (a b) = a1 b2 - a2 b1 = (1)(-1) - (2)(3)
  for (int p1 = 0; p1 <= 2; ++p1)
    for (int q1 = 0; q1 <= 2; ++q1)
      for (int p2 = 0; p2 <= 2; ++p2)
        for (int q2 = 0; q2 <= 2; ++q2)
          for (int u = 0; u <= 3; ++u) {
            if (p1 + q1 - u < 0 || p2 + q2 - u < 0) continue;
            Poly lhs = diagonal_y_to_x(omega_poly(
                a1.body.pow(p1) *
                    rename_pair(a1.body.pow(q1), Pair::x, Pair::y) *
                    b1.body.pow(p2) *
                    rename_pair(b1.body.pow(q2), Pair::x, Pair::y),
                u));
            Poly rhs = nu_coefficient(p1, q1, p2, q2, u) * ab.pow(u) *
                       a1.body.pow(p1 + q1 - u) * b1.body.pow(p2 + q2 - u);
            CHECK(lhs == rhs);
          }
}

TEST_CASE("duality pairing is nondegenerate for m <= 5") {
  for (int m = 1; m <= 5; ++m) {
    std::vector<std::vector<Rational>> pairing(m + 1,
                                               std::vector<Rational>(m + 1));
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) {
        Form a(Poly::variable(Var::x1, m - i) * Poly::variable(Var::x2, i), m, 0);
        Form b(Poly::variable(Var::x1, m - j) * Poly::variable(Var::x2, j), m, 0);
        Form t = transvectant(a, b, m);
        pairing[i][j] = t.is_zero() ? Rational(0) : t.body.leading_term().second;
      }
    CHECK(det_rational(pairing) != 0);
  }
}
