#pragma once

// Whitney-rank polynomial sum_{A subseteq E} q^{c(A)} v^{|A|}, computed by
// deletion-contraction with isolated-node and loop extraction, memoized on
// unlabeled canonical forms. Chromatic values come from the (x, -1) slice.

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphalg/canonical.hpp"
#include "graphalg/labeled_graph.hpp"
#include "graphalg/rational.hpp"

namespace graphalg {

struct TuttePolynomial {
  // (component-count exponent, edge-count exponent) -> coefficient
  std::map<std::pair<int, int>, Integer> c;

  bool operator==(const TuttePolynomial& o) const { return c == o.c; }

  void add_term(int qe, int ve, const Integer& w) {
    if (w == 0) return;
    auto [it, fresh] = c.try_emplace({qe, ve}, w);
    if (!fresh) {
      it->second += w;
      if (it->second == 0) c.erase(it);
    }
  }

  TuttePolynomial& operator+=(const TuttePolynomial& o) {
    for (const auto& [e, w] : o.c) add_term(e.first, e.second, w);
    return *this;
  }

  // multiply by w * q^qe * v^ve
  TuttePolynomial shifted(int qe, int ve, const Integer& w = 1) const {
    TuttePolynomial r;
    if (w == 0) return r;
    for (const auto& [e, cw] : c) r.c.emplace(std::make_pair(e.first + qe, e.second + ve), cw * w);
    return r;
  }

  Rational evaluate(const Rational& q, const Rational& v) const {
    Rational total = 0;
    for (const auto& [e, w] : c)
      total += Rational(w) * rational_pow(q, e.first) * rational_pow(v, e.second);
    return total;
  }

  std::string to_string() const {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [e, w] : c) {
      if (!s.empty()) s += " + ";
      s += w.get_str();
      if (e.first) s += "*q^" + std::to_string(e.first);
      if (e.second) s += "*v^" + std::to_string(e.second);
    }
    return s;
  }
};

inline TuttePolynomial tutte_one() {
  TuttePolynomial p;
  p.add_term(0, 0, 1);
  return p;
}

// Shared across evaluations of one parameter instance; guarded for use from
// several threads.
struct TutteCache {
  std::unordered_map<std::string, TuttePolynomial> map;
  std::shared_mutex mx;

  bool get(const std::string& key, TuttePolynomial& out) {
    std::shared_lock lk(mx);
    auto it = map.find(key);
    if (it == map.end()) return false;
    out = it->second;
    return true;
  }
  void put(const std::string& key, const TuttePolynomial& p) {
    std::unique_lock lk(mx);
    map.emplace(key, p);
  }
};

namespace detail {

// g must be label-free. Removes isolated nodes and loops first, then splits on
// the lexicographically first remaining edge.
inline TuttePolynomial tutte_rec(const LabeledGraph& g, TutteCache* cache) {
  int iso = 0;
  long loop_total = 0;
  for (int u = 0; u < g.n; u++) {
    if (g.degree(u) == 0) iso++;
    loop_total += g.loops(u);
  }
  if (iso == g.n && loop_total == 0) return tutte_one().shifted(iso, 0);

  if (iso > 0 || loop_total > 0) {
    LabeledGraph h(0, 0);
    std::vector<int> keep;
    for (int u = 0; u < g.n; u++)
      if (g.degree(u) != 0) keep.push_back(u);
    h.n = (int)keep.size();
    h.mult.assign(size_t(h.n) * h.n, 0);
    for (int a = 0; a < h.n; a++)
      for (int b = a + 1; b < h.n; b++)
        if (uint32_t m = g.multiplicity(keep[a], keep[b])) h.add_edge(a, b, m);
    TuttePolynomial inner = tutte_rec(h, cache);
    // each loop contributes a factor (1 + v), each isolated node a factor q
    TuttePolynomial r = inner.shifted(iso, 0);
    for (long i = 0; i < loop_total; i++) {
      TuttePolynomial s = r;
      s += r.shifted(0, 1);
      r = std::move(s);
    }
    return r;
  }

  std::string key;
  if (cache) {
    key = canonical_form(g).bytes;
    TuttePolynomial hit;
    if (cache->get(key, hit)) return hit;
  }

  int eu = -1, ev = -1;
  for (int u = 0; u < g.n && eu < 0; u++)
    for (int v = u + 1; v < g.n; v++)
      if (g.multiplicity(u, v)) {
        eu = u;
        ev = v;
        break;
      }

  // delete one copy
  LabeledGraph del = g;
  del.mult[size_t(eu) * g.n + ev]--;
  del.mult[size_t(ev) * g.n + eu]--;

  // contract one copy: surviving parallel copies become loops
  LabeledGraph con(0, g.n - 1);
  auto idx = [&](int t) { return t < ev ? t : t - 1; };
  for (int u = 0; u < g.n; u++) {
    int uu = u == ev ? eu : u;
    if (uint32_t l = g.loops(u)) con.mult[size_t(idx(uu)) * con.n + idx(uu)] += l;
  }
  for (int u = 0; u < g.n; u++)
    for (int v = u + 1; v < g.n; v++) {
      uint32_t m = g.multiplicity(u, v);
      if (!m) continue;
      if (u == eu && v == ev) m--;
      if (!m) continue;
      int a = idx(u == ev ? eu : u), b = idx(v == ev ? eu : v);
      if (a == b)
        con.mult[size_t(a) * con.n + a] += m;
      else {
        con.mult[size_t(a) * con.n + b] += m;
        con.mult[size_t(b) * con.n + a] += m;
      }
    }

  TuttePolynomial r = tutte_rec(con, cache).shifted(0, 1);
  r += tutte_rec(del, cache);
  if (cache) cache->put(key, r);
  return r;
}

}  // namespace detail

inline TuttePolynomial tutte_poly(const LabeledGraph& g, TutteCache* cache = nullptr) {
  return detail::tutte_rec(strip_labels(g), cache);
}

inline Rational tut(const LabeledGraph& g, const Rational& q, const Rational& v,
                    TutteCache* cache = nullptr) {
  return tutte_poly(g, cache).evaluate(q, v);
}

inline Rational chr(const LabeledGraph& g, const Rational& x, TutteCache* cache = nullptr) {
  return tut(g, x, -1, cache);
}

}  // namespace graphalg
