#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "binform/covariants.hpp"

using namespace binform;

namespace {
Poly P(const char* s) { return parse_poly(s); }
}

TEST_CASE("generic form") {
  Covariant f1 = generic_form(1);
  CHECK(f1.form.body == P("a0*x1+a1*x2"));
  CHECK(f1.weight == 0);

  Covariant f5 = generic_form(5);
  CHECK(f5.form.body.term_count() == 6);
  CHECK(f5.form.body == P("a0*x1^5+5*a1*x1^4*x2+10*a2*x1^3*x2^2+"
                          "10*a3*x1^2*x2^3+5*a4*x1*x2^4+a5*x2^5"));
  CHECK(f5.weight == 0);
  CHECK_THROWS_AS(generic_form(0), std::invalid_argument);
  CHECK_THROWS_AS(generic_form(9), std::invalid_argument);
}

TEST_CASE("bounded partition counts") {
  CHECK(partitions_bounded(0, 5, 18) == 1);
  CHECK(partitions_bounded(0, 0, 0) == 1);
  CHECK(partitions_bounded(-3, 5, 18) == 0);
  CHECK(partitions_bounded(6, 5, 4) == 8);
  CHECK(partitions_bounded(5, 5, 4) == 6);
  CHECK(partitions_bounded(45, 5, 18) == 967);
  CHECK(partitions_bounded(44, 5, 18) == 966);
  CHECK(partitions_bounded(20, 5, 9) == 98);
  CHECK(partitions_bounded(19, 5, 9) == 93);
}

TEST_CASE("cayley-sylvester dimensions") {
  CHECK(cayley_sylvester(5, 4, 8) == 2);
  CHECK(cayley_sylvester(5, 18, 0) == 1);
  CHECK(cayley_sylvester(5, 3, 1) == 0);
  CHECK(cayley_sylvester(4, 3, 6) == 1);
  CHECK(cayley_sylvester(5, 9, 5) == 5);
  CHECK(cayley_sylvester(5, 22, 0) == 1);
  CHECK(cayley_sylvester(5, 3, 3) == 1);
  CHECK(cayley_sylvester(5, 5, 5) == 2);
  CHECK(cayley_sylvester(5, 8, 2) == 1);
  CHECK(cayley_sylvester(5, 8, 0) == 2);
  CHECK(cayley_sylvester(5, 4, 4) == 2);
  CHECK(cayley_sylvester(5, 2, 3) == 0);  // dm - q odd
}

TEST_CASE("catalog degree-orders match their names") {
  for (int name : theta_names()) {
    Covariant t = theta(name);
    CHECK(t.degree == name / 10);
    CHECK(t.order == name % 10);
    CHECK(!t.form.is_zero());
    CHECK((t.d * t.degree - t.order) % 2 == 0);
    CHECK(t.weight >= 0);
  }
}

TEST_CASE("catalog specializations") {
  Form f1(P("x1^5+x2^5"), 5, 0);
  CHECK(covariant_at(theta(22), f1).body == P("2*x1*x2"));

  Form f2(P("x1^5+2*x2^5") + P("x1+x2").pow(5), 5, 0);
  CHECK(covariant_at(theta(33), f2).body == P("-12") * P("x1*x2") * P("x1+x2"));

  // theta33 of x1 * (generic quartic), restricted to x1 = 0
  Form xg(Poly::variable(Var::x1) * generic_form(4).form.body, 5, 1);
  Form t33 = covariant_at(theta(33), xg);
  Poly restricted = t33.body.substitute({{Var::x1, Poly::zero()}});
  CHECK(restricted ==
        frac(24, 125) * P("x2^3") * P("2*a3^3+a1*a4^2-3*a2*a3*a4"));

  CHECK(theta(51).degree == 5);
  CHECK(theta(51).order == 1);
}

TEST_CASE("canonical F_Q") {
  Form fq = canonical_FQ();
  CHECK(fq.body.substitute({{Var::q0, Poly::one()},
                            {Var::q1, Poly::zero()},
                            {Var::q2, Poly::zero()}}) == P("x1^5"));
  CHECK(pair_coefficient(fq.body, 3, 2) == P("2*q1"));
  CHECK(fq.body.substitute({{Var::x1, Poly::zero()}}) == Poly::zero());
}

TEST_CASE("quartic T covariant") {
  Form g = generic_form(4).form;
  Form t = quartic_T(g);
  CHECK(t.order == 6);
  CHECK(t.body.substitute({{Var::x1, Poly::zero()}}) ==
        -(P("x2^6") * P("2*a3^3+a1*a4^2-3*a2*a3*a4")));

  CHECK(quartic_T(Form(P("x1^2*x2^2"), 4, 0)).is_zero());
  CHECK_THROWS_AS(quartic_T(Form(P("x1^3"), 3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(theta(23), std::invalid_argument);

  // G = x1 (x1 + alpha x2)(x1 - beta x2)(x1 + beta x2), restricted to x1 = alpha x2
  Poly a = P("alpha"), b = P("beta");
  Poly gb = Poly::variable(Var::x1) * (P("x1") + a * P("x2")) *
            (P("x1") - b * P("x2")) * (P("x1") + b * P("x2"));
  Form gf(gb, 4, 0);
  Poly restricted =
      quartic_T(gf).body.substitute({{Var::x1, a * Poly::variable(Var::x2)}});
  Poly expected = frac(1, 32) * P("x2^6") * a.pow(3) *
                  (a * a + Rational(3) * b * b) *
                  (a * a + Rational(4) * a * b - b * b) *
                  (a * a - Rational(4) * a * b - b * b);
  CHECK(restricted == expected);
}

TEST_CASE("express in basis") {
  CovariantBasis b95 = basis_95();
  auto probes = default_probes(4);

  std::vector<Rational> first =
      express_in_basis(b95.entries[0], b95, probes);
  CHECK(first == std::vector<Rational>{1, 0, 0, 0, 0});

  Covariant lhs = covariant_transvectant(generic_form(5), theta(82), 1);
  std::vector<Rational> c = express_in_basis(lhs, b95, probes);
  CHECK(c == std::vector<Rational>{frac(-7, 10), frac(-1, 4), frac(5, 12),
                                   frac(-1, 20), frac(-1, 4)});

  // rank-deficient probe set fails cleanly
  CHECK_THROWS_AS(express_in_basis(lhs, b95, {}), std::runtime_error);

  // a target outside the span fails cleanly
  CovariantBasis small;
  small.add("theta51*theta22^2", b95.entries[0]);
  CHECK_THROWS_AS(express_in_basis(lhs, small, probes), std::runtime_error);
}

TEST_CASE("catalog spans match Cayley-Sylvester dimensions") {
  Covariant f = generic_form(5);
  auto probes = default_probes(6);
  auto rank_of = [&](const std::vector<Covariant>& fam) {
    std::vector<std::vector<Rational>> rows;
    const int q = fam[0].order;
    for (const Form& probe : probes) {
      for (int t = 0; t <= q; ++t) rows.emplace_back();
      for (const Covariant& e : fam) {
        Form spec = covariant_at(e, probe);
        for (int t = 0; t <= q; ++t) {
          Poly cj = pair_coefficient(spec.body, q - t, t);
          rows[rows.size() - q - 1 + t].push_back(
              cj.is_zero() ? Rational(0) : cj.leading_term().second);
        }
      }
    }
    // rows currently span probes x coefficients; transpose for column rank
    std::vector<std::vector<Rational>> cols(fam.size(),
                                            std::vector<Rational>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j) cols[j][i] = rows[i][j];
    return matrix_rank(cols);
  };

  CHECK(rank_of({theta(22)}) == cayley_sylvester(5, 2, 2));
  CHECK(rank_of({covariant_power(theta(22), 2), theta(44)}) ==
        cayley_sylvester(5, 4, 4));
  CHECK(rank_of({covariant_product(theta(26), theta(22)),
                 covariant_product(f, theta(33))}) ==
        cayley_sylvester(5, 4, 8));
  CHECK(rank_of({covariant_product(theta(33), theta(22)),
                 covariant_product(theta(40), f)}) ==
        cayley_sylvester(5, 5, 5));
  CHECK(rank_of(basis_95().entries) == cayley_sylvester(5, 9, 5));
}

TEST_CASE("compound transvectants realize every Cayley-Sylvester dimension, m <= 5") {
  // Compound transvectants (..((F,F)_{r1},F)_{r2}..) span A_{m,q}; the rank of
  // their specialization matrix must equal zeta_{m,q} for every cell,
  // including the empty cells where every compound vanishes identically.
  auto probes = default_probes(7);
  std::map<std::pair<int, int>, std::vector<Covariant>> families;
  std::function<void(const Covariant&)> grow = [&](const Covariant& cur) {
    families[{cur.degree, cur.order}].push_back(cur);  // cur is nonzero
    if (cur.degree == 5) return;
    const Covariant f = generic_form(5);
    for (int r = 0; r <= std::min(cur.order, 5); ++r) {
      Covariant next = covariant_transvectant(cur, f, r);
      if (!next.form.is_zero()) grow(next);
    }
  };
  grow(generic_form(5));

  auto rank_of = [&](const std::vector<Covariant>& fam, int q) {
    if (fam.empty()) return 0;
    std::vector<std::vector<Rational>> rows;
    for (const Covariant& e : fam) {
      std::vector<Rational> row;
      for (const Form& probe : probes) {
        Form spec = covariant_at(e, probe);
        for (int t = 0; t <= q; ++t) {
          Poly cj = pair_coefficient(spec.body, q - t, t);
          row.push_back(cj.is_zero() ? Rational(0) : cj.leading_term().second);
        }
      }
      rows.push_back(std::move(row));
    }
    return matrix_rank(rows);
  };

  for (int m = 1; m <= 5; ++m) {
    for (int q = (5 * m) % 2; q <= 5 * m; q += 2) {
      auto it = families.find({m, q});
      int rank = (it == families.end()) ? 0 : rank_of(it->second, q);
      CHECK_MESSAGE(rank == cayley_sylvester(5, m, q),
                    "cell (", m, ",", q, "): rank ", rank, " vs zeta ",
                    cayley_sylvester(5, m, q));
    }
  }
}

TEST_CASE("cache round trip, transparency, and corruption recovery") {
  namespace fs = std::filesystem;
  fs::path original = cache_dir();
  fs::path tmp = fs::temp_directory_path() / "binform-cache-test";
  fs::remove_all(tmp);
  set_cache_dir(tmp);

  int computed = 0;
  auto compute = [&] {
    ++computed;
    return theta(33).form.body;
  };
  Poly cold = cached_poly("test-poly", "t33", compute);
  Poly warm = cached_poly("test-poly", "t33", compute);
  CHECK(computed == 1);
  CHECK(cold == warm);
  CHECK(cold == theta(33).form.body);

  // corrupt the payload; the entry must be recomputed, not trusted
  for (const auto& entry : fs::directory_iterator(tmp)) {
    std::ofstream out(entry.path(), std::ios::trunc);
    out << "binform-cache 1\ntest-poly\nt33\ndeadbeef\nx1+1\n";
  }
  Poly healed = cached_poly("test-poly", "t33", compute);
  CHECK(computed == 2);
  CHECK(healed == cold);

  set_cache_dir(original);
  fs::remove_all(tmp);
}

TEST_CASE("hermite invariant") {
  const Covariant& h = hermite_invariant();
  CHECK(h.degree == 18);
  CHECK(h.order == 0);
  CHECK(h.weight == 45);
  CHECK(h.form.body.term_count() == 848);

  // vanishes identically on the canonical family F_Q
  CHECK(h.form.body.substitute(fq_bindings()) == Poly::zero());

  // nonzero off the hypersurface
  Form probe(P("x1^5+x2^5") + (P("x1") + Rational(2) * P("x2")).pow(5), 5, 0);
  CHECK(!covariant_at(h, probe).is_zero());
}
