#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "binform/poly.hpp"
#include "binform/serialize.hpp"

using namespace binform;

namespace {

Poly P(const char* s) { return parse_poly(s); }

// Deterministic small polynomials in a0, a1, x1, x2 for property checks.
Poly random_poly(std::mt19937& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_int_distribution<int> coef(-6, 6);
  Poly p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    m.set_exponent(Var::a0, expo(rng));
    m.set_exponent(Var::a1, expo(rng));
    m.set_exponent(Var::x1, expo(rng));
    m.set_exponent(Var::x2, expo(rng));
    p += Poly::term(m, Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK(P("x1+x2") * P("x1-x2") == P("x1^2-x2^2"));
  CHECK(P("x1^2+3*a0*x1") + Poly::zero() == P("x1^2+3*a0*x1"));
  CHECK(P("2/3*x1") * P("3/2*x2") == P("x1*x2"));
  CHECK(P("x1") - P("x1") == Poly::zero());
}

TEST_CASE("power") {
  CHECK(P("x1+x2").pow(2) == P("x1^2+2*x1*x2+x2^2"));
  CHECK(P("a0*x1-5").pow(0) == Poly::one());
  CHECK(P("x1^3").pow(3) == P("x1^9"));
  CHECK(Poly::zero().pow(0) == Poly::one());
  CHECK(Poly::zero().pow(4) == Poly::zero());
}

TEST_CASE("derivative") {
  CHECK(P("x1^5").derivative(Var::x1, 4) == P("120*x1"));
  CHECK(P("a0*x1^2").derivative(Var::a0) == P("x1^2"));
  CHECK(P("x2^3").derivative(Var::x1) == Poly::zero());
  CHECK(P("x1^2*x2").derivative(Var::x1, 3) == Poly::zero());
}

TEST_CASE("substitute") {
  // q := (1,0,0) kills all but the leading term of x1(q0 x1^4 + 2 q1 x1^2 x2^2 + q2 x2^4)
  Poly fq = P("q0*x1^5+2*q1*x1^3*x2^2+q2*x1*x2^4");
  Poly spec = fq.substitute({{Var::q0, Poly::one()},
                             {Var::q1, Poly::zero()},
                             {Var::q2, Poly::zero()}});
  CHECK(spec == P("x1^5"));

  Poly br = P("x1*y2-x2*y1");
  CHECK(br.substitute({{Var::y1, P("x1")}, {Var::y2, P("x2")}}) == Poly::zero());

  // simultaneous, not sequential
  Poly swap = P("x1*x2^2").substitute({{Var::x1, P("x2")}, {Var::x2, P("x1")}});
  CHECK(swap == P("x1^2*x2"));
}

TEST_CASE("proportional") {
  CHECK(proportional(P("2*x1*x2"), P("x1*x2")) == Rational(2));
  CHECK(!proportional(P("x1^2"), P("x1*x2")).has_value());
  CHECK(proportional(Poly::zero(), Poly::zero()) == Rational(1));
  CHECK(!proportional(Poly::zero(), P("x1")).has_value());
  CHECK(!proportional(P("x1"), Poly::zero()).has_value());
  CHECK(!proportional(P("x1+x2"), P("x1")).has_value());
  CHECK(proportional(P("-3/4*x1^2+x2^2"), P("3*x1^2-4*x2^2")) == frac(-1, 4));
}

TEST_CASE("content and primitive") {
  auto [c1, p1] = content_and_primitive(P("4*x1^2+6*x2^2"));
  CHECK(c1 == Rational(2));
  CHECK(p1 == P("2*x1^2+3*x2^2"));

  auto [c2, p2] = content_and_primitive(P("-x1"));
  CHECK(c2 == Rational(-1));
  CHECK(p2 == P("x1"));

  auto [c3, p3] = content_and_primitive(P("24/125*x2^3"));
  CHECK(c3 == frac(24, 125));
  CHECK(p3 == P("x2^3"));

  CHECK_THROWS_AS(content_and_primitive(Poly::zero()), std::invalid_argument);
}

TEST_CASE("ring axioms on pseudo-random polys") {
  std::mt19937 rng(20260811);
  for (int round = 0; round < 60; ++round) {
    Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("derivatives commute") {
  std::mt19937 rng(7);
  for (int round = 0; round < 40; ++round) {
    Poly p = random_poly(rng);
    CHECK(p.derivative(Var::x1).derivative(Var::x2) ==
          p.derivative(Var::x2).derivative(Var::x1));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(99);
  std::map<Var, Poly> bind = {{Var::x1, P("a0+x2")}, {Var::a1, P("2*x1")}};
  for (int round = 0; round < 40; ++round) {
    Poly p = random_poly(rng), q = random_poly(rng);
    CHECK((p * q).substitute(bind) == p.substitute(bind) * q.substitute(bind));
    CHECK((p + q).substitute(bind) == p.substitute(bind) + q.substitute(bind));
  }
}

TEST_CASE("proportional detects scalings") {
  std::mt19937 rng(3);
  for (int round = 0; round < 40; ++round) {
    Poly p = random_poly(rng);
    if (p.is_zero()) continue;
    Rational c = frac(round % 7 - 3, 1 + round % 5);
    if (c == 0) continue;
    CHECK(proportional(c * p, p) == c);
  }
}

TEST_CASE("serialization round trip and canonical order") {
  CHECK(poly_to_string(Poly::zero()) == "0");
  CHECK(poly_to_string(P("x2+x1")) == "x1+x2");
  CHECK(poly_to_string(P("-x1^2 + 2/3 * a0 - 1")) == "-x1^2+2/3*a0-1");
  CHECK(poly_to_string(P("x1*x2*2")) == "2*x1*x2");

  std::mt19937 rng(42);
  for (int round = 0; round < 40; ++round) {
    Poly p = random_poly(rng);
    CHECK(parse_poly(poly_to_string(p)) == p);
  }

  // graded before lex: degree dominates, then earlier variable wins
  CHECK(poly_to_string(P("a0 + x1*x2 + x2^2 + x1^2")) ==
        "x1^2+x1*x2+x2^2+a0");
  CHECK(poly_to_string(P("alpha*q0 + a8*xi")) == "a8*xi+q0*alpha");
}

TEST_CASE("parser rejects junk") {
  CHECK_THROWS_AS(parse_poly("x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x1^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("(x1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x1^999"), std::invalid_argument);
}

TEST_CASE("arbitrary-precision coefficients round trip") {
  Rational huge = rational_from_string("123456789012345678901234567891/7");
  Poly big = Poly::term(monomial_of(Var::a0, 3), huge);
  big += Poly::term(monomial_of(Var::x1, 2),
                    -rational_from_string("98765432109876543210987654321"));
  Poly back = parse_poly(poly_to_string(big));
  CHECK(back == big);
  CHECK(back.coefficient(monomial_of(Var::a0, 3)) == huge);
  CHECK(poly_to_string(big).find(huge.get_num().get_str()) != std::string::npos);
}

TEST_CASE("leading term and overflow guard") {
  CHECK(P("x1^2+x1*x2").leading_term().second == Rational(1));
  CHECK(P("3*a0*x1 - 5*x1^2").leading_term().second == Rational(3));
  CHECK_THROWS_AS(P("x1^200") * P("x1^200"), std::overflow_error);
}
