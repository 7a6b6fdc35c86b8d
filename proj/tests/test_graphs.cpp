#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "graphalg/canonical.hpp"
#include "graphalg/corpus.hpp"
#include "graphalg/labeled_graph.hpp"
#include "oracles.hpp"

using namespace graphalg;

TEST_CASE("basic constructors and edge bookkeeping") {
  LabeledGraph g(2, 4);
  REQUIRE(g.k == 2);
  REQUIRE(g.n == 4);
  REQUIRE(g.label_node[0] == 0);
  REQUIRE(g.label_node[1] == 1);
  g.add_edge(0, 2);
  g.add_edge(2, 3, 2);
  g.add_edge(3, 3);  // loop
  REQUIRE(g.multiplicity(0, 2) == 1);
  REQUIRE(g.multiplicity(2, 0) == 1);
  REQUIRE(g.multiplicity(2, 3) == 2);
  REQUIRE(g.loops(3) == 1);
  REQUIRE(g.edge_count() == 4);
  REQUIRE(g.degree(2) == 3);
  REQUIRE(g.degree(3) == 4);  // loop counts twice
  REQUIRE_FALSE(g.simple());
  g.validate();
}

TEST_CASE("o_graph and path_graph shapes") {
  LabeledGraph o2 = o_graph(2);
  REQUIRE(o2.n == 2);
  REQUIRE(o2.edge_count() == 0);
  REQUIRE(o2.simple());

  LabeledGraph p2 = path_graph(2);
  REQUIRE(p2.n == 2);
  REQUIRE(p2.edge_count() == 1);
  REQUIRE(p2.multiplicity(0, 1) == 1);

  LabeledGraph p5 = path_graph(5);
  REQUIRE(p5.n == 5);
  REQUIRE(p5.edge_count() == 4);
  REQUIRE(p5.k == 2);
  // endpoints carry the labels and are nonadjacent
  REQUIRE(p5.labels_nonadjacent());
  REQUIRE(p5.degree(p5.label_node[0]) == 1);
  REQUIRE(p5.degree(p5.label_node[1]) == 1);

  REQUIRE_THROWS_AS(path_graph(1), std::invalid_argument);
}

TEST_CASE("gluing product merges labeled nodes and adds multiplicities") {
  LabeledGraph k2 = path_graph(2);
  LabeledGraph gg = glue_product(k2, k2);
  REQUIRE(gg.n == 2);
  REQUIRE(gg.multiplicity(gg.label_node[0], gg.label_node[1]) == 2);
  REQUIRE(gg.loops(0) == 0);
  REQUIRE(gg.loops(1) == 0);

  // gluing with O_2 is the identity
  LabeledGraph p4 = path_graph(4);
  REQUIRE(canonical_form(glue_product(p4, o_graph(2))) == canonical_form(p4));
  REQUIRE(canonical_form(glue_product(o_graph(2), p4)) == canonical_form(p4));

  // commutative up to isomorphism
  LabeledGraph p3 = path_graph(3);
  REQUIRE(canonical_form(glue_product(p3, p4)) == canonical_form(glue_product(p4, p3)));
}

TEST_CASE("concatenation merges inner endpoints and unlabels the joint") {
  LabeledGraph p2 = path_graph(2);
  LabeledGraph p3 = concatenate(p2, p2);
  REQUIRE(canonical_form(p3) == canonical_form(path_graph(3)));
  REQUIRE(canonical_form(concatenate(p3, p2)) == canonical_form(path_graph(4)));
  REQUIRE(canonical_form(concatenate(p2, p3)) == canonical_form(path_graph(4)));

  // associativity on a mixed example
  LabeledGraph a = path_graph(3), b = path_graph(2), c = path_graph(4);
  REQUIRE(canonical_form(concatenate(concatenate(a, b), c)) ==
          canonical_form(concatenate(a, concatenate(b, c))));
}

TEST_CASE("star swaps the two labels") {
  LabeledGraph g(2, 3);
  g.add_edge(0, 2);  // label 1 has a pendant, label 2 isolated
  LabeledGraph s = star(g);
  REQUIRE(s.degree(s.label_node[0]) == 0);
  REQUIRE(s.degree(s.label_node[1]) == 1);
  REQUIRE(canonical_form(star(s)) == canonical_form(g));

  // (x o y)* = y* o x*
  LabeledGraph x(2, 3), y(2, 2);
  x.add_edge(0, 2);
  x.add_edge(2, 1);
  y.add_edge(0, 1);
  REQUIRE(canonical_form(star(concatenate(x, y))) ==
          canonical_form(concatenate(star(y), star(x))));
}

TEST_CASE("contracting the two labels") {
  LabeledGraph o2 = o_graph(2);
  LabeledGraph c = contract_labels(o2);
  REQUIRE(c.k == 1);
  REQUIRE(c.n == 1);
  REQUIRE(c.edge_count() == 0);

  LabeledGraph p3 = path_graph(3);
  LabeledGraph cp3 = contract_labels(p3);  // doubled edge on 2 nodes
  REQUIRE(cp3.n == 2);
  REQUIRE(cp3.k == 1);
  REQUIRE(cp3.edge_count() == 2);
  REQUIRE(cp3.loops(0) == 0);
  REQUIRE(cp3.loops(1) == 0);

  LabeledGraph p4 = path_graph(4);
  REQUIRE(contract_labels(p4).edge_count() == 3);  // triangle

  REQUIRE_THROWS_AS(contract_labels(path_graph(2)), std::invalid_argument);
}

TEST_CASE("canonical form identifies relabeled copies and separates labels") {
  // same underlying path, unlabeled interior renumbered
  LabeledGraph a(2, 4);
  a.add_edge(0, 2);
  a.add_edge(2, 3);
  a.add_edge(3, 1);
  LabeledGraph b(2, 4);
  b.label_node = {0, 1};
  b.add_edge(0, 3);
  b.add_edge(3, 2);
  b.add_edge(2, 1);
  REQUIRE(canonical_form(a) == canonical_form(b));

  // swapping which endpoint holds label 1 must be distinguished when the
  // graph is asymmetric at the labels
  LabeledGraph c(2, 3);
  c.add_edge(0, 2);
  c.add_edge(0, 1);
  REQUIRE_FALSE(canonical_form(c) == canonical_form(star(c)));

  // round trip
  LabeledGraph back = decode(canonical_form(a));
  REQUIRE(canonical_form(back) == canonical_form(a));
  REQUIRE(oracle::isomorphic(back, a));
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 4;
  spec.max_multiplicity = 2;
  Corpus corpus = enumerate_corpus(spec);
  std::vector<LabeledGraph> gs;
  for (const auto& f : corpus.members) gs.push_back(decode(f));
  // pairwise non-isomorphic by the oracle
  for (size_t i = 0; i < gs.size(); i++)
    for (size_t j = i + 1; j < gs.size(); j++) REQUIRE_FALSE(oracle::isomorphic(gs[i], gs[j]));
}

TEST_CASE("tiny corpora match hand counts") {
  CorpusSpec spec;
  spec.k = 0;
  spec.max_nodes = 1;
  spec.max_multiplicity = 1;
  Corpus c = enumerate_corpus(spec);
  REQUIRE(c.members.size() == 2);  // empty graph and K_1

  // unlabeled simple graphs: 1 on 0 nodes, 1 on 1, 2 on 2, 4 on 3, 11 on 4
  spec.max_nodes = 4;
  spec.simple_only = true;
  REQUIRE(enumerate_corpus(spec).members.size() == 19);

  // 2-labeled, nonadjacent labels, <=3 nodes, simple: O_2 plus the four
  // graphs on one extra node (no edge, one pendant either side, both)
  CorpusSpec s2;
  s2.k = 2;
  s2.max_nodes = 3;
  s2.max_multiplicity = 1;
  s2.labels_independent = true;
  Corpus c2 = enumerate_corpus(s2);
  REQUIRE(c2.members.size() == 5);
}

TEST_CASE("corpus members cover every brute-enumerated isomorphism class") {
  // independent generation: all multiplicity assignments, dedup by oracle iso
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 3;
  spec.max_multiplicity = 2;
  Corpus corpus = enumerate_corpus(spec);

  std::vector<LabeledGraph> classes;
  for (int n = 2; n <= 3; n++) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++) pairs.push_back({u, v});
    std::vector<unsigned> assign(pairs.size(), 0);
    while (true) {
      LabeledGraph g(2, n);
      for (size_t i = 0; i < pairs.size(); i++)
        if (assign[i]) g.add_edge(pairs[i].first, pairs[i].second, assign[i]);
      bool seen = false;
      for (const auto& h : classes)
        if (oracle::isomorphic(g, h)) seen = true;
      if (!seen) classes.push_back(g);
      size_t t = 0;
      while (t < assign.size() && ++assign[t] == 3) assign[t++] = 0;
      if (t == assign.size()) break;
    }
  }
  REQUIRE(corpus.members.size() == classes.size());
  for (const auto& g : classes) {
    CanonicalForm f = canonical_form(g);
    REQUIRE(std::find(corpus.members.begin(), corpus.members.end(), f) != corpus.members.end());
  }
}

TEST_CASE("graph text round trip") {
  LabeledGraph g(2, 4);
  g.add_edge(0, 2, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 3);
  std::string text = format_graph_text(g);
  std::vector<LabeledGraph> parsed = parse_graph_text(text);
  REQUIRE(parsed.size() == 1);
  REQUIRE(parsed.at(0) == g);

  LabeledGraph c4 = parse_graph_text(
                        "graph k=0\n"
                        "nodes 4\n"
                        "edge 0 1\n"
                        "edge 1 2\n"
                        "edge 2 3\n"
                        "edge 3 0\n")
                        .at(0);
  REQUIRE(c4.n == 4);
  REQUIRE(c4.k == 0);
  REQUIRE(c4.edge_count() == 4);

  REQUIRE_THROWS(parse_graph_text("graph k=2\nnodes 1\n"));
  REQUIRE_THROWS(parse_graph_text("nodes 2\n"));
  REQUIRE_THROWS(parse_graph_text("graph k=0\nnodes 2\nedge 0 5\n"));
}
