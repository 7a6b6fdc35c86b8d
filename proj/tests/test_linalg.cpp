#include <catch2/catch_amalgamated.hpp>

#include "graphalg/linalg.hpp"
#include "graphalg/psd.hpp"

using namespace graphalg;

static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) m.at(i, j) = rows[i][j];
  return m;
}

TEST_CASE("rank of standard matrices") {
  REQUIRE(rank_exact(identity_matrix(3)) == 3);

  Matrix ones(4, 4);
  for (auto& x : ones.a) x = 1;
  REQUIRE(rank_exact(ones) == 1);

  // A^T A with A of rank 2
  Matrix a = from_rows({{1, 2, 3, 4}, {0, 1, Rational(1, 2), -1}});
  Matrix g = mat_mul(mat_transpose(a), a);
  REQUIRE(rank_exact(g) == 2);

  Matrix zero(3, 5);
  REQUIRE(rank_exact(zero) == 0);

  // fractional entries with awkward denominators
  Matrix f = from_rows({{Rational(1, 3), Rational(1, 6)}, {Rational(2, 3), Rational(1, 3)}});
  REQUIRE(rank_exact(f) == 1);
}

TEST_CASE("kernel vectors annihilate the matrix") {
  Matrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  auto kernel = kernel_basis(a);
  REQUIRE(kernel.size() == 1);
  for (const auto& v : kernel) {
    for (int i = 0; i < a.rows; i++) {
      Rational s = 0;
      for (int j = 0; j < a.cols; j++) s += a.at(i, j) * v[j];
      REQUIRE(s == 0);
    }
  }
  REQUIRE(kernel_basis(identity_matrix(4)).empty());
}

TEST_CASE("span builder solves exact combinations with payload bookkeeping") {
  SpanBuilder<CoefVec> span;
  REQUIRE(span.add({1, 0, 1}, {1}));
  REQUIRE(span.add({0, 1, 1}, {0, 1}));
  REQUIRE_FALSE(span.add({1, 1, 2}, {9, 9, 9}));  // dependent, rejected
  REQUIRE(span.dimension() == 2);

  auto combo = span.solve({2, 3, 5}, CoefVec{});
  REQUIRE(combo.has_value());
  CoefVec c = *combo;
  c.resize(2, 0);
  // reconstruct: c[0]*(1,0,1) + c[1]*(0,1,1) = (2,3,5)
  REQUIRE(c[0] * 1 + c[1] * 0 == 2);
  REQUIRE(c[0] * 0 + c[1] * 1 == 3);
  REQUIRE(c[0] * 1 + c[1] * 1 == 5);

  REQUIRE_FALSE(span.solve({1, 0, 0}, CoefVec{}).has_value());
}

TEST_CASE("minimal polynomials of simple matrices") {
  // zero matrix: z
  Matrix z(2, 2);
  CoefVec mz = minimal_polynomial(z);
  REQUIRE(mz == CoefVec{0, 1});

  // identity: z - 1
  CoefVec mi = minimal_polynomial(identity_matrix(3));
  REQUIRE(mi == CoefVec{-1, 1});

  // K_2 adjacency: z^2 - 1
  Matrix b = from_rows({{0, 1}, {1, 0}});
  REQUIRE(minimal_polynomial(b) == CoefVec{-1, 0, 1});

  // K_3 adjacency: z^2 - z - 2
  Matrix b3 = from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  REQUIRE(minimal_polynomial(b3) == CoefVec{-2, -1, 1});

  // projector diag(1,0): z^2 - z
  Matrix p = from_rows({{1, 0}, {0, 0}});
  REQUIRE(minimal_polynomial(p) == CoefVec{0, -1, 1});

  // evaluating the polynomial at the matrix gives zero
  CoefVec m = minimal_polynomial(b3);
  Matrix acc(3, 3), pw = identity_matrix(3);
  for (size_t i = 0; i < m.size(); i++) {
    for (int r = 0; r < 9; r++) acc.a[r] += m[i] * pw.a[r];
    pw = mat_mul(pw, b3);
  }
  for (const auto& x : acc.a) REQUIRE(x == 0);
}

TEST_CASE("psd certification of definite and semidefinite matrices") {
  Matrix id = identity_matrix(3);
  PsdCertificate c = psd_certify(id);
  REQUIRE(c.psd);
  REQUIRE(psd_certificate_valid(id, c));

  // rank-1 PSD
  Matrix ones(3, 3);
  for (auto& x : ones.a) x = 1;
  c = psd_certify(ones);
  REQUIRE(c.psd);
  REQUIRE(psd_certificate_valid(ones, c));

  // Gram of dependent vectors with fractions
  Matrix a = from_rows({{1, Rational(1, 2), 0}, {0, 1, 1}});
  Matrix g = mat_mul(mat_transpose(a), a);
  c = psd_certify(g);
  REQUIRE(c.psd);
  REQUIRE(psd_certificate_valid(g, c));

  Matrix zero(2, 2);
  c = psd_certify(zero);
  REQUIRE(c.psd);
  REQUIRE(psd_certificate_valid(zero, c));
}

TEST_CASE("psd refutations carry an exact negative witness") {
  // negative diagonal
  Matrix d = from_rows({{1, 0}, {0, -1}});
  PsdCertificate c = psd_certify(d);
  REQUIRE_FALSE(c.psd);
  REQUIRE(c.witness_value < 0);
  REQUIRE(quadratic_form(d, c.witness) == c.witness_value);
  REQUIRE(psd_certificate_valid(d, c));

  // zero diagonal, nonzero off-diagonal
  Matrix h = from_rows({{0, 1}, {1, 0}});
  c = psd_certify(h);
  REQUIRE_FALSE(c.psd);
  REQUIRE(psd_certificate_valid(h, c));

  // indefinite after one pivot
  Matrix m = from_rows({{2, 3, 0}, {3, 4, 1}, {0, 1, 5}});
  c = psd_certify(m);
  REQUIRE_FALSE(c.psd);
  REQUIRE(psd_certificate_valid(m, c));

  // PSD matrix with a zero row stays PSD
  Matrix s = from_rows({{0, 0}, {0, 3}});
  c = psd_certify(s);
  REQUIRE(c.psd);
  REQUIRE(psd_certificate_valid(s, c));
}

TEST_CASE("matrix helpers") {
  Matrix a = from_rows({{1, 2}, {3, 4}});
  Matrix b = from_rows({{0, 1}, {1, 0}});
  REQUIRE(mat_mul(a, b) == from_rows({{2, 1}, {4, 3}}));
  REQUIRE(mat_transpose(a) == from_rows({{1, 3}, {2, 4}}));
  REQUIRE(mat_schur(a, b) == from_rows({{0, 2}, {3, 0}}));
  REQUIRE(diagonal_matrix({Rational(1), Rational(2)}) == from_rows({{1, 0}, {0, 2}}));
}
