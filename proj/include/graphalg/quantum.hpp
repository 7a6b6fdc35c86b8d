#pragma once

// Formal rational linear combinations of k-labeled graphs, with the algebra
// operations lifted termwise. Terms are keyed by canonical form so isomorphic
// graphs collapse into one coefficient; zero coefficients are never stored.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphalg/canonical.hpp"
#include "graphalg/labeled_graph.hpp"
#include "graphalg/rational.hpp"

namespace graphalg {

struct QuantumGraph {
  int k = 0;
  std::map<CanonicalForm, Rational> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(const CanonicalForm& f, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(f, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  void add_term(const Rational& c, const LabeledGraph& g) {
    if (g.k != k)
      throw std::invalid_argument("add_term: arity mismatch (" + std::to_string(g.k) + " vs " +
                                  std::to_string(k) + ")");
    add_term(canonical_form(g), c);
  }
};

inline QuantumGraph q_zero(int k) { return QuantumGraph{k, {}}; }

inline QuantumGraph q_single(const LabeledGraph& g, const Rational& c = 1) {
  QuantumGraph q{g.k, {}};
  q.add_term(canonical_form(g), c);
  return q;
}

inline void check_arity(const QuantumGraph& a, const QuantumGraph& b, const char* op) {
  // A zero quantum graph is arity-compatible with anything.
  if (!a.terms.empty() && !b.terms.empty() && a.k != b.k)
    throw std::invalid_argument(std::string(op) + ": arity mismatch (" +
                                std::to_string(a.k) + " vs " + std::to_string(b.k) + ")");
}

inline QuantumGraph q_add(const QuantumGraph& a, const QuantumGraph& b) {
  check_arity(a, b, "add");
  QuantumGraph out = a;
  if (out.terms.empty()) out.k = b.k;
  for (const auto& [f, c] : b.terms) out.add_term(f, c);
  return out;
}

inline QuantumGraph q_scale(const Rational& c, const QuantumGraph& a) {
  QuantumGraph out{a.k, {}};
  if (c == 0) return out;
  for (const auto& [f, coef] : a.terms) out.terms.emplace(f, c * coef);
  return out;
}

inline QuantumGraph q_sub(const QuantumGraph& a, const QuantumGraph& b) {
  return q_add(a, q_scale(-1, b));
}

// Bilinear lift of a graph-level operation.
template <typename Op>
inline QuantumGraph q_bilinear(const QuantumGraph& a, const QuantumGraph& b, int out_k, Op op) {
  QuantumGraph out{out_k, {}};
  for (const auto& [fa, ca] : a.terms)
    for (const auto& [fb, cb] : b.terms)
      out.add_term(canonical_form(op(decode(fa), decode(fb))), ca * cb);
  return out;
}

inline QuantumGraph q_product(const QuantumGraph& a, const QuantumGraph& b) {
  check_arity(a, b, "product");
  int k = a.terms.empty() ? b.k : a.k;
  return q_bilinear(a, b, k, [](const LabeledGraph& x, const LabeledGraph& y) {
    return glue_product(x, y);
  });
}

inline QuantumGraph q_concat(const QuantumGraph& a, const QuantumGraph& b) {
  for (const QuantumGraph* q : {&a, &b})
    if (!q->terms.empty() && q->k != 2)
      throw std::invalid_argument("concat: requires 2-labeled operands, got arity " +
                                  std::to_string(q->k));
  return q_bilinear(a, b, 2, [](const LabeledGraph& x, const LabeledGraph& y) {
    return concatenate(x, y);
  });
}

inline QuantumGraph q_star(const QuantumGraph& a) {
  if (!a.terms.empty() && a.k != 2)
    throw std::invalid_argument("star: requires 2-labeled operand");
  QuantumGraph out{a.k, {}};
  for (const auto& [f, c] : a.terms) out.add_term(canonical_form(star(decode(f))), c);
  return out;
}

// Merge the two labeled nodes of every term. Errors if any term has its
// labeled nodes adjacent, naming the offending term.
inline QuantumGraph q_contract(const QuantumGraph& a) {
  QuantumGraph out{a.terms.empty() ? 1 : 1, {}};
  for (const auto& [f, c] : a.terms) {
    LabeledGraph g = decode(f);
    if (g.k != 2)
      throw std::invalid_argument("contract: requires 2-labeled operand");
    if (!g.labels_nonadjacent())
      throw std::invalid_argument(
          "contract: labeled nodes adjacent in term\n" + format_graph_text(g));
    out.add_term(canonical_form(contract_labels(g)), c);
  }
  return out;
}

inline QuantumGraph q_strip_labels(const QuantumGraph& a) {
  QuantumGraph out{0, {}};
  for (const auto& [f, c] : a.terms)
    out.add_term(canonical_form(strip_labels(decode(f))), c);
  return out;
}

inline bool q_equal(const QuantumGraph& a, const QuantumGraph& b) {
  if (!a.terms.empty() && !b.terms.empty() && a.k != b.k) return false;
  return a.terms == b.terms;
}

}  // namespace graphalg
