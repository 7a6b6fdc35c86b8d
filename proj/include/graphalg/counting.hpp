#pragma once

// Exact counts: perfect matchings, eulerian orientations, and the
// edge-probability weight 2^-(number of distinct adjacent pairs).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <vector>

#include "graphalg/labeled_graph.hpp"
#include "graphalg/rational.hpp"

namespace graphalg {

// Perfect matchings; a parallel class of multiplicity m offers m choices,
// loops are unusable.
inline Integer perf_count(const LabeledGraph& g) {
  int n = g.n;
  if (n % 2) return 0;
  uint32_t full = n >= 32 ? 0xffffffffu : ((1u << n) - 1);
  std::function<Integer(uint32_t)> rec = [&](uint32_t covered) -> Integer {
    if (covered == full) return 1;
    int u = 0;
    while (covered & (1u << u)) u++;
    Integer sum = 0;
    for (int v = u + 1; v < n; v++) {
      if (covered & (1u << v)) continue;
      uint32_t m = g.multiplicity(u, v);
      if (!m) continue;
      sum += m * rec(covered | (1u << u) | (1u << v));
    }
    return sum;
  };
  return rec(0);
}

inline Rational perf(const LabeledGraph& g) { return Rational(perf_count(g)); }

// Eulerian orientations: in-degree equals out-degree everywhere. Zero when any
// degree is odd (loops add two). Branches over parallel classes, choosing how
// many copies point low-to-high; prunes when a node's remaining unoriented
// capacity cannot absorb its imbalance. A loop admits a single orientation.
inline Integer eul_count(const LabeledGraph& g) {
  int n = g.n;
  for (int u = 0; u < n; u++)
    if (g.degree(u) % 2) return 0;

  struct Pair {
    int u, v;
    uint32_t m;
  };
  std::vector<Pair> pairs;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (g.multiplicity(u, v)) pairs.push_back({u, v, g.multiplicity(u, v)});

  std::vector<long> rem(n, 0);  // unoriented incident multiplicity
  for (const auto& p : pairs) {
    rem[p.u] += p.m;
    rem[p.v] += p.m;
  }
  std::vector<long> imb(n, 0);  // out minus in so far

  // binomials up to the largest multiplicity
  uint32_t maxm = 0;
  for (const auto& p : pairs) maxm = std::max(maxm, p.m);
  std::vector<std::vector<Integer>> choose(maxm + 1);
  for (uint32_t t = 0; t <= maxm; t++) {
    choose[t].assign(t + 1, 1);
    for (uint32_t j = 1; j < t; j++) choose[t][j] = choose[t - 1][j - 1] + choose[t - 1][j];
  }

  std::function<Integer(size_t)> rec = [&](size_t idx) -> Integer {
    if (idx == pairs.size()) return 1;
    const auto& p = pairs[idx];
    rem[p.u] -= p.m;
    rem[p.v] -= p.m;
    Integer sum = 0;
    for (uint32_t j = 0; j <= p.m; j++) {
      // j copies oriented u->v
      long d = 2L * j - long(p.m);
      imb[p.u] += d;
      imb[p.v] -= d;
      if (std::abs(imb[p.u]) <= rem[p.u] && std::abs(imb[p.v]) <= rem[p.v])
        sum += choose[p.m][j] * rec(idx + 1);
      imb[p.u] -= d;
      imb[p.v] += d;
    }
    rem[p.u] += p.m;
    rem[p.v] += p.m;
    return sum;
  };
  return rec(0);
}

inline Rational eul(const LabeledGraph& g) { return Rational(eul_count(g)); }

// 2^-(number of unordered adjacent pairs, loops excluded): the probability
// that a uniform random graph on the same nodes contains the simple support.
inline Rational expt(const LabeledGraph& g) {
  int d = 0;
  for (int u = 0; u < g.n; u++)
    for (int v = u + 1; v < g.n; v++)
      if (g.multiplicity(u, v)) d++;
  return rational_pow(Rational(1, 2), d);
}

}  // namespace graphalg
