#pragma once

// Deterministic minimal encoding of a labeled multigraph. Labeled nodes are
// pinned (label i ends up at position i-1); unlabeled nodes are permuted to
// the lexicographically smallest adjacency encoding. Complete for
// label-respecting isomorphism: equal forms <=> isomorphic via a bijection
// fixing every label.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphalg/labeled_graph.hpp"

namespace graphalg {

struct CanonicalForm {
  // bytes = [k][n][upper triangle with diagonal, row-major]
  std::string bytes;

  bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
  bool operator!=(const CanonicalForm& o) const { return bytes != o.bytes; }
  bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }

  int arity() const { return (unsigned char)bytes[0]; }
  int node_count() const { return (unsigned char)bytes[1]; }
};

namespace detail {

inline void encode_arrangement(const LabeledGraph& g, const std::vector<int>& order,
                               std::string& out) {
  int n = g.n;
  out.resize(2 + (size_t)n * (n + 1) / 2);
  out[0] = (char)(unsigned char)g.k;
  out[1] = (char)(unsigned char)n;
  size_t pos = 2;
  for (int i = 0; i < n; i++) {
    const uint32_t* row = g.mult.data() + (size_t)order[i] * n;
    for (int j = i; j < n; j++) {
      uint32_t m = row[order[j]];
      if (m > 255) throw std::overflow_error("edge multiplicity exceeds encoding range");
      out[pos++] = (char)(unsigned char)m;
    }
  }
}

}  // namespace detail

inline CanonicalForm canonical_form(const LabeledGraph& g) {
  int n = g.n, k = g.k;
  if (n > 255 || k > 255) throw std::overflow_error("graph too large to encode");

  std::vector<int> base(n);
  std::vector<char> labeled(n, 0);
  for (int i = 0; i < k; i++) {
    base[i] = g.label_node[i];
    labeled[g.label_node[i]] = 1;
  }
  int m = n - k;  // unlabeled count
  {
    int next = k;
    for (int v = 0; v < n; v++)
      if (!labeled[v]) base[next++] = v;
  }
  if (m <= 1) {
    CanonicalForm f;
    detail::encode_arrangement(g, base, f.bytes);
    return f;
  }

  // Invariant of an unlabeled node: edges to each label in order, loop count,
  // total degree, sorted multiset of multiplicities to other unlabeled nodes.
  // Isomorphisms that fix labels preserve it, so nodes only ever trade places
  // within a class, and class order can be fixed by the invariant itself.
  std::vector<std::vector<uint32_t>> inv(n);
  for (int idx = k; idx < n; idx++) {
    int u = base[idx];
    std::vector<uint32_t>& iv = inv[u];
    iv.reserve(k + 2 + m - 1);
    for (int i = 0; i < k; i++) iv.push_back(g.multiplicity(u, g.label_node[i]));
    iv.push_back(g.loops(u));
    iv.push_back((uint32_t)g.degree(u));
    std::vector<uint32_t> rest;
    rest.reserve(m - 1);
    for (int jdx = k; jdx < n; jdx++) {
      int w = base[jdx];
      if (w != u) rest.push_back(g.multiplicity(u, w));
    }
    std::sort(rest.begin(), rest.end());
    iv.insert(iv.end(), rest.begin(), rest.end());
  }

  std::vector<int> unl(base.begin() + k, base.end());
  std::sort(unl.begin(), unl.end(), [&](int a, int b) {
    if (inv[a] != inv[b]) return inv[a] < inv[b];
    return a < b;
  });

  // Split into invariant classes; a class whose members look identical from
  // every other node (same rows outside, constant block inside) contributes
  // the same encoding under any internal order, so it is never permuted.
  struct Cls {
    int begin, end;  // indices into unl
    bool frozen;
  };
  std::vector<Cls> classes;
  long double perm_budget = 1;
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && inv[unl[j]] == inv[unl[i]]) j++;
    bool frozen = true;
    for (int a = i; a < j && frozen; a++)
      for (int b = a + 1; b < j && frozen; b++) {
        int u = unl[a], v = unl[b];
        if (g.loops(u) != g.loops(v)) frozen = false;
        for (int w = 0; w < g.n && frozen; w++) {
          if (w == u || w == v) continue;
          if (g.multiplicity(u, w) != g.multiplicity(v, w)) frozen = false;
        }
      }
    if (!frozen)
      for (int c = 2; c <= j - i; c++) perm_budget *= c;
    classes.push_back({i, j, frozen});
    i = j;
  }
  if (perm_budget > 2e6) throw std::runtime_error("canonical form: symmetry class too large");

  std::vector<int> order = base;
  auto fill_order = [&]() {
    for (int i = 0; i < m; i++) order[k + i] = unl[i];
  };
  fill_order();

  CanonicalForm best;
  detail::encode_arrangement(g, order, best.bytes);
  if (perm_budget > 1) {
    std::string cand;
    // Odometer over per-class permutations (frozen classes stay put).
    auto advance = [&]() -> bool {
      for (auto& c : classes) {
        if (c.frozen) continue;
        if (std::next_permutation(unl.begin() + c.begin, unl.begin() + c.end)) return true;
        // wrapped: fall through to bump the next class
      }
      return false;
    };
    while (advance()) {
      fill_order();
      detail::encode_arrangement(g, order, cand);
      if (cand < best.bytes) best.bytes = cand;
    }
  }
  return best;
}

inline LabeledGraph decode(const CanonicalForm& f) {
  if (f.bytes.size() < 2) throw std::invalid_argument("truncated canonical form");
  int k = (unsigned char)f.bytes[0];
  int n = (unsigned char)f.bytes[1];
  if (f.bytes.size() != 2 + (size_t)n * (n + 1) / 2)
    throw std::invalid_argument("canonical form length mismatch");
  LabeledGraph g(k, n);
  size_t pos = 2;
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) {
      uint32_t m = (unsigned char)f.bytes[pos++];
      if (m) g.add_edge(i, j, m);
    }
  return g;
}

inline CanonicalForm unlabeled_form(const LabeledGraph& g) {
  return canonical_form(strip_labels(g));
}

}  // namespace graphalg

template <>
struct std::hash<graphalg::CanonicalForm> {
  size_t operator()(const graphalg::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes);
  }
};
