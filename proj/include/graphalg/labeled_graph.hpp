#pragma once

// k-labeled multigraphs with loops. Labels 1..k each sit on a distinct node
// (the label map is total and injective); the edge multiset is a symmetric
// multiplicity matrix whose diagonal holds loop counts.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace graphalg {

struct LabeledGraph {
  int k = 0;
  int n = 0;
  std::vector<int> label_node;  // label i+1 lives on node label_node[i]
  std::vector<uint32_t> mult;   // n*n symmetric, mult[u*n+v]; diagonal = loops

  LabeledGraph() = default;
  LabeledGraph(int k_, int n_) : k(k_), n(n_), label_node(k_, -1), mult((size_t)n_ * n_, 0) {
    for (int i = 0; i < k_; i++) label_node[i] = i;
  }

  uint32_t multiplicity(int u, int v) const { return mult[(size_t)u * n + v]; }
  uint32_t loops(int u) const { return mult[(size_t)u * n + u]; }

  void add_edge(int u, int v, uint32_t m = 1) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
    mult[(size_t)u * n + v] += m;
    if (u != v) mult[(size_t)v * n + u] += m;
  }

  void set_label(int label, int node) {
    if (label < 1 || label > k) throw std::out_of_range("label out of range");
    if (node < 0 || node >= n) throw std::out_of_range("labeled node out of range");
    label_node[label - 1] = node;
  }

  long edge_count() const {  // with multiplicity; a loop counts once
    long e = 0;
    for (int u = 0; u < n; u++)
      for (int v = u; v < n; v++) e += multiplicity(u, v);
    return e;
  }

  long degree(int u) const {  // loops count twice
    long d = 0;
    for (int v = 0; v < n; v++) d += multiplicity(u, v);
    return d + loops(u);
  }

  bool is_labeled(int node) const {
    for (int ln : label_node)
      if (ln == node) return true;
    return false;
  }

  bool labels_nonadjacent() const {
    for (int a = 0; a < k; a++)
      for (int b = a + 1; b < k; b++)
        if (multiplicity(label_node[a], label_node[b]) > 0) return false;
    return true;
  }

  // No loops, no parallel edges, labeled nodes pairwise nonadjacent.
  bool simple() const {
    for (int u = 0; u < n; u++) {
      if (loops(u) > 0) return false;
      for (int v = u + 1; v < n; v++)
        if (multiplicity(u, v) > 1) return false;
    }
    return labels_nonadjacent();
  }

  void validate() const {
    if (k < 0 || n < 0 || (int)label_node.size() != k || mult.size() != (size_t)n * n)
      throw std::invalid_argument("malformed graph");
    std::vector<char> seen(n, 0);
    for (int i = 0; i < k; i++) {
      int v = label_node[i];
      if (v < 0 || v >= n) throw std::invalid_argument("label off the node set");
      if (seen[v]) throw std::invalid_argument("two labels on one node");
      seen[v] = 1;
    }
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (multiplicity(u, v) != multiplicity(v, u))
          throw std::invalid_argument("asymmetric multiplicity matrix");
  }

  bool operator==(const LabeledGraph& o) const {
    return k == o.k && n == o.n && label_node == o.label_node && mult == o.mult;
  }
};

// O_k: k labeled nodes, no edges.
inline LabeledGraph o_graph(int k) { return LabeledGraph(k, k); }

// K_k with every node labeled.
inline LabeledGraph fully_labeled_complete(int k) {
  LabeledGraph g(k, k);
  for (int u = 0; u < k; u++)
    for (int v = u + 1; v < k; v++) g.add_edge(u, v);
  return g;
}

// P_s: path on s >= 2 nodes, endpoints labeled 1 and 2.
inline LabeledGraph path_graph(int s) {
  if (s < 2) throw std::invalid_argument("path needs at least two nodes");
  LabeledGraph g(2, s);
  g.label_node = {0, s - 1};
  for (int i = 0; i + 1 < s; i++) g.add_edge(i, i + 1);
  return g;
}

// Disjoint union, then merge same-labeled nodes; multiplicities add. Merged
// pairs come from different operands, so gluing never creates a loop.
inline LabeledGraph glue_product(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.k != b.k) throw std::invalid_argument("gluing needs matching label arity");
  int k = a.k;
  int n = a.n + b.n - k;
  LabeledGraph r(k, n);
  r.label_node = a.label_node;
  // b-node -> r-node: labeled nodes land on a's labeled nodes, rest appended.
  std::vector<int> map_b(b.n, -1);
  for (int i = 0; i < k; i++) map_b[b.label_node[i]] = a.label_node[i];
  int next = a.n;
  for (int v = 0; v < b.n; v++)
    if (map_b[v] < 0) map_b[v] = next++;
  for (int u = 0; u < a.n; u++)
    for (int v = u; v < a.n; v++)
      if (a.multiplicity(u, v)) r.add_edge(u, v, a.multiplicity(u, v));
  for (int u = 0; u < b.n; u++)
    for (int v = u; v < b.n; v++)
      if (b.multiplicity(u, v)) r.add_edge(map_b[u], map_b[v], b.multiplicity(u, v));
  return r;
}

// x o y for 2-labeled graphs: merge x's label-2 node with y's label-1 node,
// unlabel it; result keeps x's label 1 and y's label 2. The two surviving
// labels come from different operands, so they are never adjacent.
inline LabeledGraph concatenate(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.k != 2 || b.k != 2) throw std::invalid_argument("concatenation needs 2-labeled operands");
  int n = a.n + b.n - 1;
  LabeledGraph r(2, n);
  int merged = a.label_node[1];
  std::vector<int> map_b(b.n, -1);
  map_b[b.label_node[0]] = merged;
  int next = a.n;
  for (int v = 0; v < b.n; v++)
    if (map_b[v] < 0) map_b[v] = next++;
  r.label_node = {a.label_node[0], map_b[b.label_node[1]]};
  for (int u = 0; u < a.n; u++)
    for (int v = u; v < a.n; v++)
      if (a.multiplicity(u, v)) r.add_edge(u, v, a.multiplicity(u, v));
  for (int u = 0; u < b.n; u++)
    for (int v = u; v < b.n; v++)
      if (b.multiplicity(u, v)) r.add_edge(map_b[u], map_b[v], b.multiplicity(u, v));
  return r;
}

// x*: swap labels 1 and 2.
inline LabeledGraph star(const LabeledGraph& a) {
  if (a.k != 2) throw std::invalid_argument("star needs a 2-labeled graph");
  LabeledGraph r = a;
  std::swap(r.label_node[0], r.label_node[1]);
  return r;
}

// Merge the two labeled nodes of a 2-labeled graph with nonadjacent labels;
// the merged node carries label 1.
inline LabeledGraph contract_labels(const LabeledGraph& a) {
  if (a.k != 2) throw std::invalid_argument("label contraction needs a 2-labeled graph");
  int u = a.label_node[0], v = a.label_node[1];
  if (a.multiplicity(u, v) > 0)
    throw std::invalid_argument("label contraction undefined: labeled nodes are adjacent");
  LabeledGraph r(1, a.n - 1);
  std::vector<int> map(a.n, -1);
  int next = 0;
  for (int w = 0; w < a.n; w++) {
    if (w == v) continue;
    map[w] = next++;
  }
  map[v] = map[u];
  r.label_node = {map[u]};
  for (int x = 0; x < a.n; x++)
    for (int y = x; y < a.n; y++)
      if (a.multiplicity(x, y)) r.add_edge(map[x], map[y], a.multiplicity(x, y));
  return r;
}

inline LabeledGraph strip_labels(const LabeledGraph& a) {
  LabeledGraph r = a;
  r.k = 0;
  r.label_node.clear();
  return r;
}

// ---- text format ----------------------------------------------------------
//
//   graph k=<k>
//   nodes <n>
//   label <i> <node>
//   edge <u> <v> [mult]
//
// Node ids are 0-based, labels 1-based. Blank lines and '#' comments are
// ignored; a new `graph` line starts the next block.

inline std::vector<LabeledGraph> parse_graph_text(const std::string& text) {
  std::vector<LabeledGraph> out;
  LabeledGraph cur;
  bool open = false;
  bool have_nodes = false;
  std::vector<std::tuple<int, int, uint32_t>> pending_edges;
  std::vector<std::pair<int, int>> pending_labels;

  auto flush = [&]() {
    if (!open) return;
    if (!have_nodes) throw std::invalid_argument("graph block missing 'nodes'");
    std::vector<char> used(cur.k, 0);
    for (auto [lab, node] : pending_labels) {
      if (lab < 1 || lab > cur.k) throw std::invalid_argument("label index out of range");
      if (used[lab - 1]) throw std::invalid_argument("duplicate label " + std::to_string(lab));
      used[lab - 1] = 1;
      cur.set_label(lab, node);
    }
    for (int i = 0; i < cur.k; i++)
      if (!used[i]) throw std::invalid_argument("label " + std::to_string(i + 1) + " missing");
    for (auto [u, v, m] : pending_edges) cur.add_edge(u, v, m);
    cur.validate();
    out.push_back(cur);
    open = false;
  };

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "graph") {
      flush();
      std::string kspec;
      if (!(ls >> kspec) || kspec.rfind("k=", 0) != 0)
        throw std::invalid_argument("graph line needs k=<arity>");
      int k = std::stoi(kspec.substr(2));
      if (k < 0) throw std::invalid_argument("negative label arity");
      cur = LabeledGraph();
      cur.k = k;
      cur.label_node.assign(k, -1);
      pending_edges.clear();
      pending_labels.clear();
      open = true;
      have_nodes = false;
    } else if (word == "nodes") {
      if (!open) throw std::invalid_argument("'nodes' outside a graph block");
      int n;
      if (!(ls >> n) || n < 0) throw std::invalid_argument("bad node count");
      cur.n = n;
      cur.mult.assign((size_t)n * n, 0);
      have_nodes = true;
    } else if (word == "label") {
      int lab, node;
      if (!open || !have_nodes || !(ls >> lab >> node))
        throw std::invalid_argument("bad label line");
      pending_labels.push_back({lab, node});
    } else if (word == "edge") {
      int u, v;
      long m = 1;
      if (!open || !have_nodes || !(ls >> u >> v)) throw std::invalid_argument("bad edge line");
      ls >> m;
      if (m < 1) throw std::invalid_argument("edge multiplicity must be positive");
      pending_edges.push_back({u, v, (uint32_t)m});
    } else {
      throw std::invalid_argument("unrecognized directive: '" + word + "'");
    }
  }
  flush();
  return out;
}

inline std::string format_graph_text(const LabeledGraph& g) {
  std::ostringstream os;
  os << "graph k=" << g.k << "\n";
  os << "nodes " << g.n << "\n";
  for (int i = 0; i < g.k; i++) os << "label " << (i + 1) << " " << g.label_node[i] << "\n";
  for (int u = 0; u < g.n; u++)
    for (int v = u; v < g.n; v++)
      if (g.multiplicity(u, v)) {
        os << "edge " << u << " " << v;
        if (g.multiplicity(u, v) != 1) os << " " << g.multiplicity(u, v);
        os << "\n";
      }
  return os.str();
}

}  // namespace graphalg
