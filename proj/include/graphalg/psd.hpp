#pragma once

// Exact positive-semidefiniteness certificates for symmetric rational
// matrices, by diagonal-pivoted congruence elimination. A negative diagonal
// entry, or a zero diagonal against a nonzero off-diagonal entry, converts
// directly into a vector with negative quadratic form; otherwise the
// elimination completes a permuted unit-lower LDL^T factorization with
// nonnegative diagonal.

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "graphalg/linalg.hpp"
#include "graphalg/rational.hpp"

namespace graphalg {

struct PsdCertificate {
  bool psd = false;
  // when psd: P M P^T = L D L^T with P the pivot_order permutation
  std::vector<int> pivot_order;
  Matrix L;
  std::vector<Rational> diag;
  // when not psd: witness^T M witness = witness_value < 0 (original coordinates)
  std::vector<Rational> witness;
  Rational witness_value;
};

inline Rational quadratic_form(const Matrix& m, const std::vector<Rational>& w) {
  Rational total = 0;
  for (int i = 0; i < m.rows; i++) {
    if (w[i] == 0) continue;
    for (int j = 0; j < m.cols; j++) {
      if (w[j] == 0) continue;
      total += w[i] * m.at(i, j) * w[j];
    }
  }
  return total;
}

inline PsdCertificate psd_certify(const Matrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("psd check: matrix not square");
  int n = m.rows;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("psd check: matrix not symmetric");

  Matrix s = m;
  Matrix e = identity_matrix(n);  // row i of e expresses the current coordinate i
  std::vector<bool> active(n, true);
  PsdCertificate cert;
  std::vector<std::vector<Rational>> mult_cols;  // per pivot step, by original index

  auto witness_from_row = [&](int i) {
    cert.psd = false;
    cert.witness.assign(n, 0);
    for (int j = 0; j < n; j++) cert.witness[j] = e.at(i, j);
  };

  while (true) {
    int neg = -1, pos = -1;
    for (int i = 0; i < n; i++) {
      if (!active[i]) continue;
      if (s.at(i, i) < 0) {
        neg = i;
        break;
      }
      if (pos < 0 && s.at(i, i) > 0) pos = i;
    }
    if (neg >= 0) {
      witness_from_row(neg);
      cert.witness_value = s.at(neg, neg);
      return cert;
    }
    if (pos < 0) {
      // active diagonal is all zero; any off-diagonal entry refutes
      for (int r = 0; r < n; r++) {
        if (!active[r]) continue;
        for (int c = r + 1; c < n; c++) {
          if (!active[c] || s.at(r, c) == 0) continue;
          cert.psd = false;
          cert.witness.assign(n, 0);
          int sign = s.at(r, c) > 0 ? 1 : -1;
          for (int j = 0; j < n; j++) cert.witness[j] = e.at(r, j) - sign * e.at(c, j);
          cert.witness_value = -2 * (sign > 0 ? s.at(r, c) : -s.at(r, c));
          return cert;
        }
      }
      break;  // zero block: done, matrix is psd
    }

    int p = pos;
    cert.pivot_order.push_back(p);
    cert.diag.push_back(s.at(p, p));
    std::vector<Rational> col(n, 0);
    Rational d = s.at(p, p);
    for (int i = 0; i < n; i++)
      if (active[i] && i != p) col[i] = s.at(i, p) / d;
    mult_cols.push_back(col);
    for (int i = 0; i < n; i++) {
      if (!active[i] || i == p || col[i] == 0) continue;
      for (int j = 0; j < n; j++) {
        if (active[j] && j != p) s.at(i, j) -= col[i] * s.at(p, j);
        e.at(i, j) -= col[i] * e.at(p, j);
      }
    }
    // clear the pivot row/column view for clarity; entries are dead afterwards
    active[p] = false;
  }

  cert.psd = true;
  std::vector<int> rest;
  for (int i = 0; i < n; i++)
    if (active[i]) rest.push_back(i);
  for (int i : rest) {
    cert.pivot_order.push_back(i);
    cert.diag.push_back(0);
  }
  std::vector<int> pos_of(n, -1);
  for (int t = 0; t < n; t++) pos_of[cert.pivot_order[t]] = t;
  cert.L = identity_matrix(n);
  for (size_t step = 0; step < mult_cols.size(); step++)
    for (int i = 0; i < n; i++) {
      if (mult_cols[step][i] == 0) continue;
      cert.L.at(pos_of[i], (int)step) = mult_cols[step][i];
    }
  return cert;
}

// Exact reconstruction check: P M P^T == L D L^T.
inline bool psd_certificate_valid(const Matrix& m, const PsdCertificate& cert) {
  if (!cert.psd) {
    return cert.witness_value < 0 && quadratic_form(m, cert.witness) == cert.witness_value;
  }
  int n = m.rows;
  Matrix pm(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) pm.at(i, j) = m.at(cert.pivot_order[i], cert.pivot_order[j]);
  Matrix ld = cert.L;
  for (int j = 0; j < n; j++)
    for (int i = 0; i < n; i++) ld.at(i, j) *= cert.diag[j];
  Matrix rec = mat_mul(ld, mat_transpose(cert.L));
  for (const auto& d : cert.diag)
    if (d < 0) return false;
  return rec == pm;
}

}  // namespace graphalg
