#pragma once

// Piecewise-constant symmetric kernels on [0,1]^2 and their homomorphism
// densities, evaluated directly as iterated sums over part assignments.

#include <stdexcept>
#include <vector>

#include "graphalg/labeled_graph.hpp"
#include "graphalg/rational.hpp"
#include "graphalg/weighted_graph.hpp"

namespace graphalg {

struct StepFunction {
  std::vector<Rational> lengths;  // part lengths, positive, sum to 1
  std::vector<Rational> values;   // q*q symmetric, entries in [0,1]

  int parts() const { return (int)lengths.size(); }
  const Rational& v(int i, int j) const { return values[size_t(i) * lengths.size() + j]; }

  void validate() const {
    size_t q = lengths.size();
    if (values.size() != q * q) throw std::invalid_argument("step function: value grid size");
    Rational sum = 0;
    for (const auto& l : lengths) {
      if (l <= 0) throw std::invalid_argument("step function: part lengths must be positive");
      sum += l;
    }
    if (sum != 1) throw std::invalid_argument("step function: part lengths must sum to 1");
    for (size_t i = 0; i < q; i++)
      for (size_t j = 0; j < q; j++) {
        if (values[i * q + j] != values[j * q + i])
          throw std::invalid_argument("step function: values not symmetric");
        if (values[i * q + j] < 0 || values[i * q + j] > 1)
          throw std::invalid_argument("step function: values must lie in [0,1]");
      }
  }
};

inline WeightedGraph step_to_weighted(const StepFunction& w) {
  WeightedGraph h((int)w.lengths.size());
  h.alpha = w.lengths;
  h.beta = w.values;
  return h;
}

// Homomorphism density of F in the kernel: sum over all maps of V(F) into the
// parts of (product of part lengths) * (product of kernel values over edges,
// with multiplicity; loops read the diagonal). Written as a plain odometer,
// independent of the weighted-graph evaluator.
inline Rational t_step(const LabeledGraph& f0, const StepFunction& w) {
  LabeledGraph f = strip_labels(f0);
  int q = w.parts();
  if (q == 0) return f.n == 0 ? 1 : 0;
  std::vector<int> map(f.n, 0);
  Rational total = 0;
  while (true) {
    Rational term = 1;
    for (int u = 0; u < f.n && term != 0; u++) {
      term *= w.lengths[map[u]];
      for (uint32_t l = 0; l < f.loops(u); l++) term *= w.v(map[u], map[u]);
      for (int v = u + 1; v < f.n; v++)
        for (uint32_t c = 0; c < f.multiplicity(u, v); c++) term *= w.v(map[u], map[v]);
    }
    total += term;
    int i = 0;
    while (i < f.n && map[i] + 1 == q) map[i++] = 0;
    if (i == f.n) break;
    map[i]++;
  }
  return total;
}

}  // namespace graphalg
