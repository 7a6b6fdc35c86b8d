#pragma once

// Exact weighted homomorphism counting. hom_phi sums over all extensions of a
// fixed assignment of the labeled nodes; unlabeled nodes contribute their
// image's node weight, every edge (with multiplicity, loops included)
// contributes an edge weight factor. Labeled nodes contribute no node weight.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "graphalg/canonical.hpp"
#include "graphalg/labeled_graph.hpp"
#include "graphalg/quantum.hpp"
#include "graphalg/rational.hpp"
#include "graphalg/weighted_graph.hpp"

namespace graphalg {

namespace detail {

inline Rational pow_mult(const Rational& b, uint32_t m) {
  Rational r = 1;
  for (uint32_t i = 0; i < m; i++) r *= b;
  return r;
}

// Unlabeled nodes ordered so each step sees as many already-placed neighbors
// as possible (zero edge weights then prune whole subtrees).
inline std::vector<int> placement_order(const LabeledGraph& f) {
  int n = f.n;
  std::vector<bool> placed(n, false);
  for (int i = 0; i < f.k; i++) placed[f.label_node[i]] = true;
  std::vector<int> order;
  std::vector<int> pending;
  for (int u = 0; u < n; u++)
    if (!placed[u]) pending.push_back(u);
  while (!pending.empty()) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int u : pending) {
      int links = 0;
      for (int w = 0; w < n; w++)
        if (placed[w] && f.multiplicity(u, w)) links++;
      int deg = f.degree(u);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = u;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed[best] = true;
    pending.erase(std::find(pending.begin(), pending.end(), best));
  }
  return order;
}

}  // namespace detail

inline Rational hom_phi(const LabeledGraph& f, const WeightedGraph& h,
                        const std::vector<int>& phi) {
  if ((int)phi.size() != f.k)
    throw std::invalid_argument("hom_phi: assignment size must equal label arity");
  for (int v : phi)
    if (v < 0 || v >= h.n) throw std::invalid_argument("hom_phi: assignment out of range");
  if (h.n == 0) return f.n == 0 ? 1 : 0;

  int n = f.n;
  std::vector<int> image(n, -1);
  for (int i = 0; i < f.k; i++) image[f.label_node[i]] = phi[i];

  // Factors fully determined by the fixed assignment: edges and loops among
  // labeled nodes.
  Rational base = 1;
  for (int i = 0; i < f.k; i++) {
    int u = f.label_node[i];
    base *= detail::pow_mult(h.b(image[u], image[u]), f.loops(u));
    for (int j = i + 1; j < f.k; j++) {
      int v = f.label_node[j];
      base *= detail::pow_mult(h.b(image[u], image[v]), f.multiplicity(u, v));
    }
  }
  if (base == 0) return 0;

  std::vector<int> order = detail::placement_order(f);
  // Per step: edges back to already-placed nodes, plus loop count.
  struct Step {
    int node;
    uint32_t loops;
    std::vector<std::pair<int, uint32_t>> back;  // (earlier node, multiplicity)
  };
  std::vector<Step> steps;
  {
    std::vector<bool> placed(n, false);
    for (int i = 0; i < f.k; i++) placed[f.label_node[i]] = true;
    for (int u : order) {
      Step s{u, f.loops(u), {}};
      for (int w = 0; w < n; w++)
        if (placed[w] && f.multiplicity(u, w)) s.back.push_back({w, f.multiplicity(u, w)});
      placed[u] = true;
      steps.push_back(std::move(s));
    }
  }

  Rational total = 0;
  std::function<void(size_t, const Rational&)> rec = [&](size_t d, const Rational& acc) {
    if (d == steps.size()) {
      total += acc;
      return;
    }
    const Step& s = steps[d];
    for (int hv = 0; hv < h.n; hv++) {
      Rational w = h.alpha[hv];
      if (s.loops) w *= detail::pow_mult(h.b(hv, hv), s.loops);
      if (w == 0) continue;
      bool dead = false;
      for (const auto& [prev, m] : s.back) {
        const Rational& bw = h.b(hv, image[prev]);
        if (bw == 0) {
          dead = true;
          break;
        }
        w *= detail::pow_mult(bw, m);
      }
      if (dead) continue;
      image[s.node] = hv;
      rec(d + 1, acc * w);
    }
    image[s.node] = -1;
  };
  rec(0, base);
  return total;
}

// All labels summed away: homomorphism count of the underlying graph.
inline Rational hom(const LabeledGraph& f, const WeightedGraph& h) {
  return hom_phi(strip_labels(f), h, {});
}

// Injective maps only.
inline Rational inj(const LabeledGraph& f0, const WeightedGraph& h) {
  LabeledGraph f = strip_labels(f0);
  if (f.n > h.n) return 0;
  if (h.n == 0) return f.n == 0 ? 1 : 0;
  std::vector<int> order = detail::placement_order(f);
  std::vector<int> image(f.n, -1);
  std::vector<bool> used(h.n, false);
  Rational total = 0;
  std::function<void(size_t, const Rational&)> rec = [&](size_t d, const Rational& acc) {
    if (d == order.size()) {
      total += acc;
      return;
    }
    int u = order[d];
    for (int hv = 0; hv < h.n; hv++) {
      if (used[hv]) continue;
      Rational w = h.alpha[hv];
      if (f.loops(u)) w *= detail::pow_mult(h.b(hv, hv), f.loops(u));
      if (w == 0) continue;
      bool dead = false;
      for (int prev = 0; prev < f.n; prev++) {
        uint32_t m = image[prev] >= 0 ? f.multiplicity(u, prev) : 0;
        if (!m) continue;
        const Rational& bw = h.b(hv, image[prev]);
        if (bw == 0) {
          dead = true;
          break;
        }
        w *= detail::pow_mult(bw, m);
      }
      if (dead) continue;
      image[u] = hv;
      used[hv] = true;
      rec(d + 1, acc * w);
      used[hv] = false;
      image[u] = -1;
    }
  };
  rec(0, 1);
  return total;
}

// Homomorphism density: hom normalized by (total node weight)^|V(F)|.
inline Rational t_density(const LabeledGraph& f, const WeightedGraph& h) {
  Rational tw = h.total_weight();
  if (tw == 0) throw std::invalid_argument("t: target has zero total weight");
  return hom(f, h) / rational_pow(tw, f.n);
}

// Injective density; only meaningful against an unweighted target at least as
// large as F.
inline Rational t0_density(const LabeledGraph& f, const WeightedGraph& h) {
  if (!h.unweighted()) throw std::invalid_argument("t0: target must be unweighted");
  if (h.n < f.n)
    throw std::invalid_argument("t0: target smaller than source (" + std::to_string(h.n) +
                                " < " + std::to_string(f.n) + ")");
  return inj(f, h) / falling_factorial(h.n, f.n);
}

// hom_phi over all assignments of the k labels, flattened row-major.
struct HomProfile {
  int k = 0;
  int hn = 0;
  std::vector<Rational> values;  // size hn^k

  bool operator==(const HomProfile& o) const {
    return k == o.k && hn == o.hn && values == o.values;
  }
};

inline HomProfile profile(const QuantumGraph& x, const WeightedGraph& h) {
  HomProfile p;
  p.k = x.k;
  p.hn = h.n;
  size_t total = 1;
  for (int i = 0; i < x.k; i++) total *= size_t(h.n);
  p.values.assign(total, 0);
  std::vector<int> phi(x.k, 0);
  for (const auto& [form, coef] : x.terms) {
    LabeledGraph g = decode(form);
    for (size_t idx = 0; idx < total; idx++) {
      size_t t = idx;
      for (int i = x.k - 1; i >= 0; i--) {
        phi[i] = int(t % h.n);
        t /= h.n;
      }
      p.values[idx] += coef * hom_phi(g, h, phi);
    }
  }
  return p;
}

// Orbit count of the weight-preserving node permutations acting on k-tuples.
inline long automorphism_orbit_count(const WeightedGraph& h, int k) {
  int n = h.n;
  std::vector<int> perm(n);
  for (int i = 0; i < n; i++) perm[i] = i;
  std::vector<std::vector<int>> autos;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; i++) {
      if (h.alpha[perm[i]] != h.alpha[i]) ok = false;
      for (int j = 0; j < n && ok; j++)
        if (h.b(perm[i], perm[j]) != h.b(i, j)) ok = false;
    }
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  size_t total = 1;
  for (int i = 0; i < k; i++) total *= size_t(n);
  std::vector<size_t> parent(total);
  for (size_t i = 0; i < total; i++) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<int> tup(k);
  for (size_t idx = 0; idx < total; idx++) {
    size_t t = idx;
    for (int i = k - 1; i >= 0; i--) {
      tup[i] = int(t % n);
      t /= n;
    }
    for (const auto& a : autos) {
      size_t jdx = 0;
      for (int i = 0; i < k; i++) jdx = jdx * n + size_t(a[tup[i]]);
      size_t ra = find(idx), rb = find(jdx);
      if (ra != rb) parent[ra] = rb;
    }
  }
  long orbits = 0;
  for (size_t i = 0; i < total; i++)
    if (find(i) == i) orbits++;
  return orbits;
}

}  // namespace graphalg
