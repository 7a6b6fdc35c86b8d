#pragma once

// Exact rational matrices: rank by fraction-free elimination, echelon span
// tracking with payloads (used for minimal polynomials and for solving a
// target matrix as a combination of span members), kernel bases.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphalg/quantum.hpp"
#include "graphalg/rational.hpp"

namespace graphalg {

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

  const Rational& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  Rational& at(int i, int j) { return a[size_t(i) * cols + j]; }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline Matrix identity_matrix(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

inline Matrix diagonal_matrix(const std::vector<Rational>& d) {
  Matrix m((int)d.size(), (int)d.size());
  for (size_t i = 0; i < d.size(); i++) m.at((int)i, (int)i) = d[i];
  return m;
}

inline Matrix mat_mul(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; i++)
    for (int k = 0; k < x.cols; k++) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; j++) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

inline Matrix mat_transpose(const Matrix& x) {
  Matrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; i++)
    for (int j = 0; j < x.cols; j++) r.at(j, i) = x.at(i, j);
  return r;
}

inline Matrix mat_schur(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("entrywise product: shape mismatch");
  Matrix r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); i++) r.a[i] = x.a[i] * y.a[i];
  return r;
}

// Rank by Gaussian elimination over the rationals, aborting a column early
// when no pivot remains. Rows are scaled to integers first so the elimination
// can use fraction-free updates.
inline int rank_exact(const Matrix& m0) {
  int rows = m0.rows, cols = m0.cols;
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (int i = 0; i < rows; i++) {
    Integer lcm = 1;
    for (int j = 0; j < cols; j++) {
      Integer den = m0.at(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (int j = 0; j < cols; j++) {
      Rational v = m0.at(i, j) * Rational(lcm);
      m[i][j] = v.get_num();
    }
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; col++) {
    int piv = -1;
    for (int i = rank; i < rows; i++)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = rank + 1; i < rows; i++) {
      if (m[i][col] == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), m[rank][col].get_mpz_t(), m[i][col].get_mpz_t());
      Integer fa = m[i][col] / g, fb = m[rank][col] / g;
      for (int j = col; j < cols; j++) m[i][j] = m[i][j] * fb - m[rank][j] * fa;
    }
    rank++;
  }
  return rank;
}

// Basis of the right kernel (vectors v with Mv = 0), by reduced row echelon
// form with free-variable back substitution.
inline std::vector<std::vector<Rational>> kernel_basis(const Matrix& m0) {
  int rows = m0.rows, cols = m0.cols;
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++) m[i][j] = m0.at(i, j);

  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; col++) {
    int piv = -1;
    for (int i = r; i < rows; i++)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational p = m[r][col];
    for (int j = col; j < cols; j++) m[r][j] /= p;
    for (int i = 0; i < rows; i++) {
      if (i == r || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j < cols; j++) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(col);
    r++;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int freec = 0; freec < cols; freec++) {
    if (is_pivot[freec]) continue;
    std::vector<Rational> v(cols, 0);
    v[freec] = 1;
    for (int i = 0; i < (int)pivot_col.size(); i++) v[pivot_col[i]] = -m[i][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Echelon span of rational vectors; each basis row carries a payload combined
// with the same row operations, so solving a vector in the span also yields
// the corresponding payload combination.
template <typename P>
struct SpanBuilder {
  struct Row {
    std::vector<Rational> v;  // leading entry normalized to 1
    int lead;
    P payload;
  };
  std::vector<Row> rows;

  int dimension() const { return (int)rows.size(); }

  // Reduce v (and payload) by the basis in place.
  void reduce(std::vector<Rational>& v, P& payload) const {
    for (const Row& r : rows) {
      const Rational& c = v[r.lead];
      if (c == 0) continue;
      Rational f = c;
      for (size_t j = r.lead; j < v.size(); j++) v[j] -= f * r.v[j];
      payload = payload_sub(payload, f, r.payload);
    }
  }

  // Returns true if the vector enlarged the span.
  bool add(std::vector<Rational> v, P payload) {
    reduce(v, payload);
    int lead = -1;
    for (size_t j = 0; j < v.size(); j++)
      if (v[j] != 0) {
        lead = (int)j;
        break;
      }
    if (lead < 0) return false;
    Rational p = v[lead];
    for (size_t j = lead; j < v.size(); j++) v[j] /= p;
    payload = payload_scale_inv(payload, p);
    rows.push_back({std::move(v), lead, std::move(payload)});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.lead < b.lead; });
    return true;
  }

  // If target is in the span, return the payload combination producing it.
  std::optional<P> solve(std::vector<Rational> target, P zero) const {
    P payload = zero;  // accumulates the negated combination
    reduce(target, payload);
    for (const auto& x : target)
      if (x != 0) return std::nullopt;
    return payload_negate(payload);
  }

  static P payload_sub(const P& a, const Rational& f, const P& b);
  static P payload_scale_inv(const P& a, const Rational& p);
  static P payload_negate(const P& a);
};

// payload = rational coefficient vector (polynomials, combination weights)
using CoefVec = std::vector<Rational>;

template <>
inline CoefVec SpanBuilder<CoefVec>::payload_sub(const CoefVec& a, const Rational& f,
                                                 const CoefVec& b) {
  CoefVec r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); i++) r[i] -= f * b[i];
  return r;
}
template <>
inline CoefVec SpanBuilder<CoefVec>::payload_scale_inv(const CoefVec& a, const Rational& p) {
  CoefVec r = a;
  for (auto& x : r) x /= p;
  return r;
}
template <>
inline CoefVec SpanBuilder<CoefVec>::payload_negate(const CoefVec& a) {
  CoefVec r = a;
  for (auto& x : r) x = -x;
  return r;
}

template <>
inline QuantumGraph SpanBuilder<QuantumGraph>::payload_sub(const QuantumGraph& a,
                                                           const Rational& f,
                                                           const QuantumGraph& b) {
  return q_add(a, q_scale(-f, b));
}
template <>
inline QuantumGraph SpanBuilder<QuantumGraph>::payload_scale_inv(const QuantumGraph& a,
                                                                 const Rational& p) {
  return q_scale(Rational(1) / p, a);
}
template <>
inline QuantumGraph SpanBuilder<QuantumGraph>::payload_negate(const QuantumGraph& a) {
  return q_scale(-1, a);
}

// Monic least-degree annihilating polynomial, as the first linear dependence
// among the flattened powers I, A, A^2, ...
inline CoefVec minimal_polynomial(const Matrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("minimal polynomial: square matrix required");
  int n = a.rows;
  SpanBuilder<CoefVec> span;
  Matrix power = identity_matrix(n);
  for (int deg = 0; deg <= n * n + 1; deg++) {
    std::vector<Rational> flat = power.a;
    auto combo = span.solve(flat, CoefVec(deg + 1, 0));
    if (combo) {
      CoefVec m = *combo;  // power = sum m_i A^i with i < deg
      m.resize(deg + 1, 0);
      for (auto& x : m) x = -x;
      m[deg] = 1;
      return m;
    }
    CoefVec tag(deg + 1, 0);
    tag[deg] = 1;
    span.add(flat, tag);
    power = mat_mul(power, a);
  }
  throw std::logic_error("minimal polynomial: no dependence found");
}

inline Rational poly_eval(const CoefVec& p, const Rational& x) {
  Rational v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

}  // namespace graphalg
