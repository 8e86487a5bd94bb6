#pragma once

// Exact linear algebra over the polynomial ring and over the rationals:
// Wronskians of form families, matrices of covariant-induced maps,
// Sylvester resultants, and fraction-free solving of rational systems.
//
// Polynomial determinants are evaluated by minor expansion memoized over
// column subsets; no polynomial division is ever performed.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "binform/forms.hpp"

namespace binform {

// Sub-polynomial multiplying u1^e1 u2^e2 in the chosen variable pair.
inline Poly pair_coefficient(const Poly& p, int e1, int e2, Pair pair = Pair::x) {
  Var u1 = pair_first(pair), u2 = pair_second(pair);
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(u1) != e1 || m.exponent(u2) != e2) continue;
    Monomial rest = m;
    rest.set_exponent(u1, 0);
    rest.set_exponent(u2, 0);
    out += Poly::term(rest, c);
  }
  return out;
}

struct FormMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Poly> entries;  // row-major

  FormMatrix() = default;
  FormMatrix(int r, int c) : rows(r), cols(c), entries(r * c) {}

  Poly& at(int i, int j) { return entries[i * cols + j]; }
  const Poly& at(int i, int j) const { return entries[i * cols + j]; }
};

// Determinant by expansion along rows, memoized over column subsets.
inline Poly determinant(const FormMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
  const int n = m.rows;
  if (n == 0) return Poly::one();
  if (n > 31) throw std::invalid_argument("determinant: matrix too large");
  std::unordered_map<std::uint32_t, Poly> memo;
  std::function<Poly(std::uint32_t)> minor = [&](std::uint32_t mask) -> Poly {
    if (mask == 0) return Poly::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int k = __builtin_popcount(mask);
    const int row = n - k;
    Poly acc;
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!m.at(row, j).is_zero()) {
        Poly sub = minor(mask & ~(1u << j));
        if (!sub.is_zero()) {
          Poly contrib = m.at(row, j) * sub;
          if (pos % 2) acc -= contrib; else acc += contrib;
        }
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(static_cast<std::uint32_t>((1ull << n) - 1));
}

// Wronskian of m forms of common order n (m <= n + 1):
// det[(i,j) -> d^{m-1} A_i / dx1^{m-j} dx2^{j-1}], a form of order m(n-m+1).
inline Form wronskian(const std::vector<Form>& forms) {
  if (forms.empty()) throw std::invalid_argument("wronskian: empty family");
  const int m = static_cast<int>(forms.size());
  const int n = forms[0].order;
  int adeg = 0;
  for (const Form& f : forms) {
    if (f.order != n || f.pair != forms[0].pair)
      throw std::invalid_argument("wronskian: mixed orders");
    adeg += f.adeg;
  }
  if (m > n + 1) throw std::invalid_argument("wronskian: too many forms");
  Var u1 = pair_first(forms[0].pair), u2 = pair_second(forms[0].pair);
  FormMatrix w(m, m);
  for (int i = 0; i < m; ++i) {
    Poly d2 = forms[i].body;  // d^j / du2^j ladder
    for (int j = 0; j < m; ++j) {
      w.at(i, j) = d2.derivative(u1, m - 1 - j);
      if (j + 1 < m) d2 = d2.derivative(u2);
    }
  }
  return Form(determinant(w), m * (n - m + 1), adeg, forms[0].pair);
}

// Matrix of h: S_a -> S_b, G -> (phi, G)_r over the monomial bases
// x1^a, x1^{a-1} x2, ..., x2^a; r = (a + q - b)/2.
inline FormMatrix covariant_map_matrix(const Form& phi, int a, int b) {
  const int q = phi.order;
  if ((a + q - b) < 0 || (a + q - b) % 2 != 0)
    throw std::invalid_argument("covariant_map_matrix: a + q - b must be nonnegative and even");
  const int r = (a + q - b) / 2;
  if (r > std::min(a, q))
    throw std::invalid_argument("covariant_map_matrix: transvection index out of range");
  FormMatrix m(b + 1, a + 1);
  for (int j = 0; j <= a; ++j) {
    Form g(Poly::variable(Var::x1, a - j) * Poly::variable(Var::x2, j), a, 0,
           phi.pair);
    Form img = transvectant(phi, g, r);
    for (int i = 0; i <= b; ++i) m.at(i, j) = pair_coefficient(img.body, b - i, i);
  }
  return m;
}

// Images of the monomial basis of S_a under G -> (phi, G)_r, in basis order.
inline std::vector<Form> covariant_map_images(const Form& phi, int a, int b) {
  const int q = phi.order;
  const int r = (a + q - b) / 2;
  if ((a + q - b) < 0 || (a + q - b) % 2 != 0 || r > std::min(a, q))
    throw std::invalid_argument("covariant_map_images: invalid (a, b) for this order");
  std::vector<Form> images;
  for (int j = 0; j <= a; ++j) {
    Form g(Poly::variable(Var::x1, a - j) * Poly::variable(Var::x2, j), a, 0,
           phi.pair);
    images.push_back(transvectant(phi, g, r));
  }
  return images;
}

// Wronskian of the map S_a -> S_b induced by phi (a <= b).
inline Form map_wronskian(const Form& phi, int a, int b) {
  if (a > b) throw std::invalid_argument("map_wronskian: requires a <= b");
  return wronskian(covariant_map_images(phi, a, b));
}

// Resultant of two binary forms as the determinant of the (m+n) x (m+n)
// Sylvester matrix; rows of A-coefficients first (n of them), then B's.
inline Poly sylvester_resultant(const Form& a, const Form& b) {
  const int m = a.order, n = b.order;
  if (m < 1 || n < 1)
    throw std::invalid_argument("sylvester_resultant: orders must be positive");
  std::vector<Poly> ac(m + 1), bc(n + 1);
  for (int i = 0; i <= m; ++i) ac[i] = pair_coefficient(a.body, m - i, i, a.pair);
  for (int i = 0; i <= n; ++i) bc[i] = pair_coefficient(b.body, n - i, i, b.pair);
  FormMatrix s(m + n, m + n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i <= m; ++i) s.at(k, k + i) = ac[i];
  for (int k = 0; k < m; ++k)
    for (int i = 0; i <= n; ++i) s.at(n + k, k + i) = bc[i];
  return determinant(s);
}

// --- exact rational linear systems -------------------------------------------

struct LinearSystem {
  std::vector<std::vector<Rational>> matrix;  // m rows, n columns
  std::vector<Rational> rhs;                  // m entries
};

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveOutcome {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> solution;  // populated only for status == unique

  bool unique() const { return status == SolveStatus::unique; }
};

// Fraction-free (Bareiss) forward elimination; divisions are exact.
inline SolveOutcome exact_solve(const LinearSystem& sys) {
  const int rows = static_cast<int>(sys.matrix.size());
  const int cols = rows ? static_cast<int>(sys.matrix[0].size()) : 0;
  if (static_cast<int>(sys.rhs.size()) != rows)
    throw std::invalid_argument("exact_solve: shape mismatch");
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(sys.matrix[i].size()) != cols)
      throw std::invalid_argument("exact_solve: ragged matrix");
    for (int j = 0; j < cols; ++j) m[i][j] = sys.matrix[i][j];
    m[i][cols] = sys.rhs[i];
  }

  std::vector<int> pivot_col;
  Rational prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j <= cols; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivot_col.push_back(c);
    ++r;
  }

  for (int i = r; i < rows; ++i)
    if (m[i][cols] != 0) return {SolveStatus::inconsistent, {}};

  if (r < cols) return {SolveStatus::underdetermined, {}};

  SolveOutcome out;
  out.status = SolveStatus::unique;
  out.solution.assign(cols, Rational(0));
  for (int i = r - 1; i >= 0; --i) {
    int c = pivot_col[i];
    Rational acc = m[i][cols];
    for (int j = c + 1; j < cols; ++j) acc -= m[i][j] * out.solution[j];
    out.solution[c] = acc / m[i][c];
  }
  return out;
}

inline int matrix_rank(const std::vector<std::vector<Rational>>& a) {
  if (a.empty()) return 0;
  LinearSystem sys{a, std::vector<Rational>(a.size(), Rational(0))};
  std::vector<std::vector<Rational>> m = sys.matrix;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace binform
