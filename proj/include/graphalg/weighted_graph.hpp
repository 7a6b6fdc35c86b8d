#pragma once

// Weighted target graphs H: positive node weights alpha, symmetric rational
// edge weights beta (diagonal entries are loop weights).

#include <stdexcept>
#include <string>
#include <vector>

#include "graphalg/rational.hpp"

namespace graphalg {

struct WeightedGraph {
  int n = 0;
  std::vector<Rational> alpha;  // size n, all > 0
  std::vector<Rational> beta;   // n*n symmetric

  WeightedGraph() = default;
  explicit WeightedGraph(int n_) : n(n_), alpha(n_, 1), beta(size_t(n_) * n_, 0) {}

  const Rational& b(int i, int j) const { return beta[size_t(i) * n + j]; }
  Rational& b(int i, int j) { return beta[size_t(i) * n + j]; }

  void set_b(int i, int j, const Rational& v) {
    b(i, j) = v;
    b(j, i) = v;
  }

  Rational total_weight() const {
    Rational s = 0;
    for (const auto& a : alpha) s += a;
    return s;
  }

  bool unweighted() const {
    for (const auto& a : alpha)
      if (a != 1) return false;
    for (const auto& x : beta)
      if (x != 0 && x != 1) return false;
    return true;
  }

  void validate() const {
    if (n < 0 || alpha.size() != size_t(n) || beta.size() != size_t(n) * n)
      throw std::invalid_argument("weighted graph: inconsistent sizes");
    for (const auto& a : alpha)
      if (a <= 0) throw std::invalid_argument("weighted graph: node weights must be positive");
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++)
        if (b(i, j) != b(j, i))
          throw std::invalid_argument("weighted graph: edge weights not symmetric");
  }
};

// Unweighted complete graph on q nodes (proper q-colorings target).
inline WeightedGraph complete_target(int q) {
  WeightedGraph h(q);
  for (int i = 0; i < q; i++)
    for (int j = 0; j < q; j++)
      if (i != j) h.b(i, j) = 1;
  return h;
}

// Unweighted path on n nodes.
inline WeightedGraph path_target(int n) {
  WeightedGraph h(n);
  for (int i = 0; i + 1 < n; i++) h.set_b(i, i + 1, 1);
  return h;
}

inline bool rows_equal(const WeightedGraph& h, int i, int j) {
  for (int t = 0; t < h.n; t++)
    if (h.b(i, t) != h.b(j, t)) return false;
  return true;
}

inline bool is_twin_free(const WeightedGraph& h) {
  for (int i = 0; i < h.n; i++)
    for (int j = i + 1; j < h.n; j++)
      if (rows_equal(h, i, j)) return false;
  return true;
}

// Merge equal-row node pairs (summing their weights) until none remain.
// Merging never changes homomorphism counts into the graph.
inline WeightedGraph twin_reduce(const WeightedGraph& h0) {
  WeightedGraph h = h0;
  bool merged = true;
  while (merged) {
    merged = false;
    for (int i = 0; i < h.n && !merged; i++)
      for (int j = i + 1; j < h.n && !merged; j++) {
        if (!rows_equal(h, i, j)) continue;
        WeightedGraph g(h.n - 1);
        auto old_of = [&](int t) { return t < j ? t : t + 1; };
        for (int t = 0; t < g.n; t++) g.alpha[t] = h.alpha[old_of(t)];
        g.alpha[i] += h.alpha[j];
        for (int s = 0; s < g.n; s++)
          for (int t = 0; t < g.n; t++) g.b(s, t) = h.b(old_of(s), old_of(t));
        h = std::move(g);
        merged = true;
      }
  }
  return h;
}

}  // namespace graphalg
