#pragma once

// Constructive synthesis of connectors and contractors for homomorphism
// parameters, plus the verifiers that arbitrate every candidate.
//
// The matrix map sends a 2-labeled quantum graph x to M(x), the matrix of
// hom_phi values over assignments of the two labels. It turns gluing into the
// entrywise product, concatenation into X diag(alpha) Y, and label swap into
// transposition; M(K_2) is the edge-weight matrix B, and paths satisfy
// M(P_s) = (B diag(alpha))^{s-2} B. All arithmetic stays rational by working
// with B diag(alpha) instead of the symmetrized variant with square-root
// weights; both have the same minimal polynomial.
//
// A connector y must satisfy M(y) = B with every term simple. A contractor z
// must make gluing z act like identifying the two labeled nodes, which at the
// matrix level pins M(z) to the diagonal of reciprocal node weights (the
// identity matrix whenever all node weights are 1).

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphalg/corpus.hpp"
#include "graphalg/hom.hpp"
#include "graphalg/linalg.hpp"
#include "graphalg/parameter.hpp"
#include "graphalg/quantum.hpp"
#include "graphalg/weighted_graph.hpp"

namespace graphalg {

inline Matrix matrix_of(const QuantumGraph& x, const WeightedGraph& h) {
  if (!x.terms.empty() && x.k != 2)
    throw std::invalid_argument("matrix map: requires arity 2");
  Matrix m(h.n, h.n);
  std::vector<int> phi(2);
  for (const auto& [form, c] : x.terms) {
    LabeledGraph g = decode(form);
    for (int i = 0; i < h.n; i++)
      for (int j = 0; j < h.n; j++) {
        phi[0] = i;
        phi[1] = j;
        m.at(i, j) += c * hom_phi(g, h, phi);
      }
  }
  return m;
}

inline Matrix beta_matrix(const WeightedGraph& h) {
  Matrix b(h.n, h.n);
  for (int i = 0; i < h.n; i++)
    for (int j = 0; j < h.n; j++) b.at(i, j) = h.b(i, j);
  return b;
}

inline Matrix alpha_diag(const WeightedGraph& h) { return diagonal_matrix(h.alpha); }

// diag(1/alpha): the matrix image a contractor must hit.
inline Matrix contractor_target(const WeightedGraph& h) {
  std::vector<Rational> inv(h.alpha.size());
  for (size_t i = 0; i < inv.size(); i++) inv[i] = Rational(1) / h.alpha[i];
  return diagonal_matrix(inv);
}

// M(P_s) by the path recurrence.
inline Matrix path_image(int s, const WeightedGraph& h) {
  if (s < 2) throw std::invalid_argument("path image: s >= 2");
  Matrix b = beta_matrix(h);
  Matrix a = mat_mul(b, alpha_diag(h));
  Matrix r = b;
  for (int i = 2; i < s; i++) r = mat_mul(a, r);
  return r;
}

inline QuantumGraph path_quantum(int s, const Rational& c = 1) {
  return q_single(path_graph(s), c);
}

// ---- connector synthesis ----------------------------------------------------

// Quantum path y with M(y) = B, built from the minimal polynomial of
// B diag(alpha). Zero edge-weight matrix yields the zero quantum graph.
inline QuantumGraph synth_connector(const WeightedGraph& h0) {
  WeightedGraph h = twin_reduce(h0);
  Matrix b = beta_matrix(h);
  bool zero = true;
  for (const auto& x : b.a)
    if (x != 0) zero = false;
  if (zero) return q_zero(2);

  Matrix a = mat_mul(b, alpha_diag(h));
  CoefVec m = minimal_polynomial(a);
  size_t e = (m[0] == 0) ? 1 : 0;
  if (e == 1 && m.size() >= 2 && m[1] == 0)
    throw std::logic_error("connector synthesis: repeated zero root; input weights inconsistent");
  CoefVec hpoly(m.begin() + e, m.end());
  const Rational h0c = hpoly[0];
  QuantumGraph y = q_zero(2);
  // 1 - h(z)/h(0) = sum_{s>=2} a_s z^{s-1}, a_s = -h_{s-1}/h(0); y = sum a_s P_{s+1}
  for (size_t j = 1; j < hpoly.size(); j++) {
    Rational a_s = -hpoly[j] / h0c;
    if (a_s != 0) y = q_add(y, path_quantum(int(j) + 2, a_s));
  }
  return y;
}

// ---- contractor synthesis ---------------------------------------------------

// Closure of {K_2} under gluing, concatenation, and label swap, tracked
// through the matrix map; the contractor is solved for as an exact
// combination. Every preimage is series-parallel by construction.
inline QuantumGraph synth_contractor(const WeightedGraph& h0) {
  WeightedGraph h = twin_reduce(h0);
  if (h.n == 0) throw std::invalid_argument("contractor synthesis: empty target");
  Matrix b = beta_matrix(h);
  for (int i = 0; i < h.n; i++) {
    bool all_zero = true;
    for (int j = 0; j < h.n; j++)
      if (b.at(i, j) != 0) all_zero = false;
    if (all_zero)
      throw std::invalid_argument("contractor synthesis: node " + std::to_string(i) +
                                  " has an all-zero edge-weight row, no contractor exists");
  }

  Matrix ad = alpha_diag(h);
  SpanBuilder<QuantumGraph> span;
  span.add(b.a, q_single(path_graph(2)));

  auto unflatten = [&](const std::vector<Rational>& v) {
    Matrix m(h.n, h.n);
    m.a = v;
    return m;
  };

  bool grew = true;
  while (grew) {
    grew = false;
    // snapshot: rows reallocate as the span grows
    std::vector<std::pair<Matrix, QuantumGraph>> basis;
    for (const auto& r : span.rows) basis.push_back({unflatten(r.v), r.payload});
    for (const auto& [mx, px] : basis) {
      if (span.add(mat_transpose(mx).a, q_star(px))) grew = true;
      for (const auto& [my, py] : basis) {
        if (span.add(mat_schur(mx, my).a, q_product(px, py))) grew = true;
        if (span.add(mat_mul(mat_mul(mx, ad), my).a, q_concat(px, py))) grew = true;
      }
    }
  }

  auto z = span.solve(contractor_target(h).a, q_zero(2));
  if (!z)
    throw std::logic_error(
        "contractor synthesis: target not reached by the series-parallel closure (span dimension " +
        std::to_string(span.dimension()) + ")");
  return *z;
}

// ---- verifiers --------------------------------------------------------------

struct PointwiseVerdict {
  bool matches = false;
  bool simple = false;  // every term: no parallel edges, no loops, labels nonadjacent
};

inline bool all_terms_simple(const QuantumGraph& x) {
  for (const auto& [form, c] : x.terms)
    if (!decode(form).simple()) return false;
  return true;
}

inline PointwiseVerdict verify_connector_pointwise(const QuantumGraph& y, const WeightedGraph& h) {
  return {matrix_of(y, h) == beta_matrix(h), all_terms_simple(y)};
}

inline bool verify_contractor_pointwise(const QuantumGraph& z, const WeightedGraph& h) {
  return matrix_of(z, h) == contractor_target(h);
}

struct ParamVerdict {
  bool pass = true;
  std::optional<CanonicalForm> counterexample;
  Rational lhs, rhs;
};

// f(x z) must equal f applied to x with its labeled nodes identified, for
// every corpus member x (all of which need nonadjacent labels).
inline ParamVerdict verify_contractor_param(const QuantumGraph& z, const GraphParameter& f,
                                            const Corpus& corpus) {
  for (const auto& form : corpus.members) {
    QuantumGraph x = q_single(decode(form));
    Rational lhs = evaluate(f, q_product(x, z));
    Rational rhs = evaluate(f, q_contract(x));
    if (lhs != rhs) return {false, form, lhs, rhs};
  }
  return {};
}

// f(y x) must equal f(K_2 x) for every corpus member x.
inline ParamVerdict verify_connector_param(const QuantumGraph& y, const GraphParameter& f,
                                           const Corpus& corpus) {
  QuantumGraph k2 = q_single(path_graph(2));
  for (const auto& form : corpus.members) {
    QuantumGraph x = q_single(decode(form));
    Rational lhs = evaluate(f, q_product(y, x));
    Rational rhs = evaluate(f, q_product(k2, x));
    if (lhs != rhs) return {false, form, lhs, rhs};
  }
  return {};
}

// ---- path relations ---------------------------------------------------------

struct PathRelation {
  int k = 0;                    // smallest k with M(P_k) in span{M(P_{k+1}),...}
  std::vector<Rational> coeffs; // M(P_k) = sum coeffs[i-1] M(P_{k+i}), minimal length
};

inline PathRelation find_path_relation(const WeightedGraph& h0, int k_cap = 16) {
  WeightedGraph h = twin_reduce(h0);
  int max_n = h.n * h.n + 2;
  for (int k = 2; k <= k_cap; k++) {
    std::vector<Rational> target = path_image(k, h).a;
    SpanBuilder<CoefVec> span;
    for (int i = 1; i <= max_n; i++) {
      CoefVec tag(i, 0);
      tag[i - 1] = 1;
      span.add(path_image(k + i, h).a, tag);
      auto combo = span.solve(target, CoefVec(i, 0));
      if (combo) {
        combo->resize(i, 0);
        return {k, *combo};
      }
    }
  }
  throw std::logic_error("path relation: none found within the degree cap");
}

}  // namespace graphalg
