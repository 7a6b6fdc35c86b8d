#pragma once

// Counting edge assignments from a subset S of a finite abelian group with
// conservation at every node. S must be closed under inversion, which makes
// the count orientation-independent; loops are unconstrained and contribute a
// factor |S| each.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphalg/labeled_graph.hpp"
#include "graphalg/rational.hpp"

namespace graphalg {

struct AbelianGroup {
  std::vector<int> mods;  // direct product of cyclic groups, each order >= 2

  long order() const {
    long p = 1;
    for (int m : mods) p *= m;
    return p;
  }
  std::vector<int> decode(long e) const {
    std::vector<int> t(mods.size());
    for (size_t i = mods.size(); i-- > 0;) {
      t[i] = int(e % mods[i]);
      e /= mods[i];
    }
    return t;
  }
  long encode(const std::vector<int>& t) const {
    long e = 0;
    for (size_t i = 0; i < mods.size(); i++) e = e * mods[i] + t[i];
    return e;
  }
  long add(long a, long b) const {
    auto ta = decode(a), tb = decode(b);
    for (size_t i = 0; i < mods.size(); i++) ta[i] = (ta[i] + tb[i]) % mods[i];
    return encode(ta);
  }
  long neg(long a) const {
    auto t = decode(a);
    for (size_t i = 0; i < mods.size(); i++) t[i] = (mods[i] - t[i]) % mods[i];
    return encode(t);
  }
  std::string name() const {
    std::string s;
    for (int m : mods) {
      if (!s.empty()) s += "x";
      s += "Z" + std::to_string(m);
    }
    return s.empty() ? "trivial" : s;
  }
};

// "Z2xZ3" (case-insensitive, spaces tolerated)
inline AbelianGroup parse_group(const std::string& spec) {
  AbelianGroup g;
  std::string s;
  for (char c : spec)
    if (!isspace((unsigned char)c)) s += c;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'Z' && s[i] != 'z')
      throw std::invalid_argument("group spec: expected Z<order> at '" + s.substr(i) + "'");
    i++;
    size_t j = i;
    while (j < s.size() && isdigit((unsigned char)s[j])) j++;
    if (j == i) throw std::invalid_argument("group spec: missing order after Z");
    int m = std::stoi(s.substr(i, j - i));
    if (m < 2) throw std::invalid_argument("group spec: cyclic order must be at least 2");
    g.mods.push_back(m);
    i = j;
    if (i < s.size()) {
      if (s[i] != 'x' && s[i] != 'X')
        throw std::invalid_argument("group spec: expected 'x' between factors");
      i++;
    }
  }
  if (g.mods.empty()) throw std::invalid_argument("group spec: empty");
  return g;
}

struct GroupSubset {
  std::vector<long> elems;  // sorted, distinct

  void validate(const AbelianGroup& g) const {
    std::set<long> s(elems.begin(), elems.end());
    if (s.size() != elems.size()) throw std::invalid_argument("subset: duplicate elements");
    for (long e : elems) {
      if (e < 0 || e >= g.order()) throw std::invalid_argument("subset: element out of range");
      if (!s.count(g.neg(e)))
        throw std::invalid_argument("subset: not closed under inversion (missing -" +
                                    std::to_string(e) + ")");
    }
  }
};

inline GroupSubset nonzero_subset(const AbelianGroup& g) {
  GroupSubset s;
  for (long e = 1; e < g.order(); e++) s.elems.push_back(e);
  return s;
}

namespace detail {

// Oriented non-loop edge copies in deterministic order; value t on (u,v)
// means t leaves u and enters v.
inline std::vector<std::pair<int, int>> flow_edges(const LabeledGraph& g,
                                                   const std::vector<bool>* flips) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; u++)
    for (int v = u + 1; v < g.n; v++)
      for (uint32_t c = 0; c < g.multiplicity(u, v); c++) edges.push_back({u, v});
  if (flips) {
    if (flips->size() != edges.size())
      throw std::invalid_argument("orientation vector size mismatch");
    for (size_t i = 0; i < edges.size(); i++)
      if ((*flips)[i]) std::swap(edges[i].first, edges[i].second);
  }
  return edges;
}

inline bool conserved(const AbelianGroup& grp, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<long>& vals, int n) {
  std::vector<long> acc(n, 0);
  for (size_t i = 0; i < edges.size(); i++) {
    acc[edges[i].first] = grp.add(acc[edges[i].first], vals[i]);
    acc[edges[i].second] = grp.add(acc[edges[i].second], grp.neg(vals[i]));
  }
  return std::all_of(acc.begin(), acc.end(), [](long a) { return a == 0; });
}

}  // namespace detail

// flips, when given, reverses the built-in low-to-high orientation of selected
// edge copies; the count must not depend on it.
inline Rational flo(const LabeledGraph& g0, const AbelianGroup& grp, const GroupSubset& sub,
                    const std::vector<bool>* flips = nullptr) {
  sub.validate(grp);
  LabeledGraph g = strip_labels(g0);
  long loop_total = 0;
  for (int u = 0; u < g.n; u++) loop_total += g.loops(u);

  auto edges = detail::flow_edges(g, flips);
  size_t m = edges.size();
  Integer loops_factor = 1;
  for (long i = 0; i < loop_total; i++) loops_factor *= (long)sub.elems.size();
  if (m == 0) return Rational(loops_factor);

  Integer count = 0;
  if (m <= 10) {
    // direct enumeration over S^m
    std::vector<size_t> pick(m, 0);
    std::vector<long> vals(m);
    while (true) {
      for (size_t i = 0; i < m; i++) vals[i] = sub.elems[pick[i]];
      if (detail::conserved(grp, edges, vals, g.n)) count += 1;
      size_t i = 0;
      while (i < m && pick[i] + 1 == sub.elems.size()) pick[i++] = 0;
      if (i == m) break;
      pick[i]++;
    }
    return Rational(count * loops_factor);
  }

  // Spanning forest: chord values range over S, tree values are forced by
  // conservation processed leaves-first.
  int n = g.n;
  std::vector<int> parent(n, -1), parent_edge(n, -1), bfs;
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> inc(n);  // incident edge indices
  for (size_t i = 0; i < m; i++) {
    inc[edges[i].first].push_back((int)i);
    inc[edges[i].second].push_back((int)i);
  }
  std::vector<bool> is_tree(m, false);
  for (int r = 0; r < n; r++) {
    if (seen[r]) continue;
    seen[r] = true;
    bfs.push_back(r);
    for (size_t qh = bfs.size() - 1; qh < bfs.size(); qh++) {
      int x = bfs[qh];
      for (int ei : inc[x]) {
        int y = edges[ei].first == x ? edges[ei].second : edges[ei].first;
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        parent_edge[y] = ei;
        is_tree[ei] = true;
        bfs.push_back(y);
      }
    }
  }
  std::vector<int> chords;
  for (size_t i = 0; i < m; i++)
    if (!is_tree[i]) chords.push_back((int)i);

  std::set<long> s_set(sub.elems.begin(), sub.elems.end());
  std::vector<size_t> pick(chords.size(), 0);
  std::vector<long> vals(m, 0);
  std::vector<long> acc(n);
  while (true) {
    for (size_t i = 0; i < chords.size(); i++) vals[chords[i]] = sub.elems[pick[i]];
    std::fill(acc.begin(), acc.end(), 0);
    for (int ci : chords) {
      acc[edges[ci].first] = grp.add(acc[edges[ci].first], vals[ci]);
      acc[edges[ci].second] = grp.add(acc[edges[ci].second], grp.neg(vals[ci]));
    }
    bool ok = true;
    for (size_t qh = bfs.size(); qh-- > 0;) {
      int x = bfs[qh];
      if (parent[x] < 0) {
        if (acc[x] != 0) ok = false;  // root imbalance: impossible (global zero sum)
        continue;
      }
      int ei = parent_edge[x];
      long val = edges[ei].first == x ? grp.neg(acc[x]) : acc[x];
      if (!s_set.count(val)) {
        ok = false;
        break;
      }
      vals[ei] = val;
      int y = parent[x];
      if (edges[ei].first == y)
        acc[y] = grp.add(acc[y], val);
      else
        acc[y] = grp.add(acc[y], grp.neg(val));
      acc[x] = 0;
    }
    if (ok) count += 1;
    size_t i = 0;
    while (i < chords.size() && pick[i] + 1 == sub.elems.size()) pick[i++] = 0;
    if (i == chords.size()) break;
    pick[i]++;
  }
  return Rational(count * loops_factor);
}

}  // namespace graphalg
