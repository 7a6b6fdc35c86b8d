#include <catch2/catch_amalgamated.hpp>

#include "graphalg/corpus.hpp"
#include "graphalg/flow.hpp"
#include "graphalg/hom.hpp"
#include "graphalg/tutte.hpp"
#include "graphalg/weighted_graph.hpp"
#include "oracles.hpp"

using namespace graphalg;

static LabeledGraph cycle(int n) {
  LabeledGraph g(0, n);
  for (int i = 0; i < n; i++) g.add_edge(i, (i + 1) % n);
  return g;
}

TEST_CASE("tutte base cases") {
  LabeledGraph empty(0, 0);
  REQUIRE(tut(empty, 2, -1) == 1);

  LabeledGraph k1(0, 1);
  REQUIRE(tut(k1, Rational(7, 2), 5) == Rational(7, 2));  // q per isolated node

  LabeledGraph loop(0, 1);
  loop.add_edge(0, 0);
  REQUIRE(tut(loop, 3, 2) == 9);  // q(1+v)

  LabeledGraph e = strip_labels(path_graph(2));
  // q^2 + qv
  REQUIRE(tut(e, 3, -1) == 6);
  REQUIRE(tut(e, 2, 5) == 14);
}

TEST_CASE("tutte agrees with the subset expansion oracle") {
  CorpusSpec spec;
  spec.k = 0;
  spec.max_nodes = 4;
  spec.max_multiplicity = 2;
  TutteCache cache;
  for (const auto& f : enumerate_corpus(spec).members) {
    LabeledGraph g = decode(f);
    CAPTURE(format_graph_text(g));
    REQUIRE(tut(g, 2, -1, &cache) == oracle::tutte(g, 2, -1));
    REQUIRE(tut(g, 3, 2, &cache) == oracle::tutte(g, 3, 2));
    REQUIRE(tut(g, Rational(5, 2), Rational(-1, 3), &cache) ==
            oracle::tutte(g, Rational(5, 2), Rational(-1, 3)));
  }
}

TEST_CASE("tutte handles graphs with loops like the oracle") {
  LabeledGraph g = cycle(3);
  g.add_edge(0, 0);
  g.add_edge(2, 2);
  g.add_edge(1, 2, 2);
  REQUIRE(tut(g, 3, -1) == oracle::tutte(g, 3, -1));
  REQUIRE(tut(g, 2, 4) == oracle::tutte(g, 2, 4));
}

TEST_CASE("isolated nodes factor out") {
  LabeledGraph g = cycle(4);
  LabeledGraph gi(0, 5);
  for (int i = 0; i < 4; i++) gi.add_edge(i, (i + 1) % 4);
  REQUIRE(tut(gi, 3, 2) == 3 * tut(g, 3, 2));
}

TEST_CASE("chromatic evaluation equals proper colorings") {
  WeightedGraph k2 = complete_target(2), k3 = complete_target(3);
  CorpusSpec spec;
  spec.k = 0;
  spec.max_nodes = 4;
  spec.max_multiplicity = 2;
  TutteCache cache;
  for (const auto& f : enumerate_corpus(spec).members) {
    LabeledGraph g = decode(f);
    CAPTURE(format_graph_text(g));
    REQUIRE(chr(g, 2, &cache) == hom(g, k2));
    REQUIRE(chr(g, 3, &cache) == hom(g, k3));
  }
  // non-integer point, polynomial identity still exact
  REQUIRE(chr(cycle(4), Rational(1, 2)) ==
          oracle::tutte(cycle(4), Rational(1, 2), -1));
}

TEST_CASE("flow counts on cycles and small groups") {
  AbelianGroup z2 = parse_group("Z2"), z3 = parse_group("Z3");
  // every cycle: one nowhere-zero flow per nonzero group element
  REQUIRE(flo(cycle(3), z2, nonzero_subset(z2)) == 1);
  REQUIRE(flo(cycle(4), z2, nonzero_subset(z2)) == 1);
  REQUIRE(flo(cycle(3), z3, nonzero_subset(z3)) == 2);

  // trees have none, the empty graph has one
  REQUIRE(flo(strip_labels(path_graph(3)), z2, nonzero_subset(z2)) == 0);
  REQUIRE(flo(LabeledGraph(0, 2), z2, nonzero_subset(z2)) == 1);

  // loops multiply by |S|
  LabeledGraph cl = cycle(3);
  cl.add_edge(1, 1);
  REQUIRE(flo(cl, z3, nonzero_subset(z3)) == 4);
}

TEST_CASE("flow counts match the oracle and ignore edge orientation") {
  AbelianGroup z2 = parse_group("Z2"), z3 = parse_group("Z3"), z4 = parse_group("Z4");
  CorpusSpec spec;
  spec.k = 0;
  spec.max_nodes = 4;
  spec.max_multiplicity = 2;
  for (const auto& f : enumerate_corpus(spec).members) {
    LabeledGraph g = decode(f);
    if (g.edge_count() > 8) continue;
    CAPTURE(format_graph_text(g));
    for (const AbelianGroup* grp : {&z2, &z3, &z4}) {
      GroupSubset s = nonzero_subset(*grp);
      Rational direct = flo(g, *grp, s);
      REQUIRE(direct == oracle::flo(g, *grp, s));
      std::vector<bool> flips(g.edge_count(), true);
      REQUIRE(direct == flo(g, *grp, s, &flips));
    }
  }
}

TEST_CASE("flows for a proper subset of values") {
  AbelianGroup z4 = parse_group("Z4");
  GroupSubset odd;  // {1,3}: closed under negation
  odd.elems = {1, 3};
  odd.validate(z4);
  REQUIRE(flo(cycle(3), z4, odd) == oracle::flo(cycle(3), z4, odd));
  REQUIRE(flo(cycle(4), z4, odd) == oracle::flo(cycle(4), z4, odd));

  GroupSubset bad;
  bad.elems = {1};  // -1 = 3 missing
  REQUIRE_THROWS_AS(bad.validate(z4), std::invalid_argument);
}

TEST_CASE("the forest method agrees with full enumeration past the cutoff") {
  // 11 edge slots forces the spanning-forest path; compare against the oracle
  LabeledGraph g(0, 5);
  for (int i = 0; i < 5; i++) g.add_edge(i, (i + 1) % 5);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  REQUIRE(g.edge_count() == 11);
  AbelianGroup z3 = parse_group("Z3");
  REQUIRE(flo(g, z3, nonzero_subset(z3)) == oracle::flo(g, z3, nonzero_subset(z3)));
}

TEST_CASE("group parsing and arithmetic") {
  AbelianGroup g = parse_group("Z2xZ3");
  REQUIRE(g.order() == 6);
  REQUIRE(g.name() == "Z2xZ3");
  // element (1,2) + (1,1) = (0,0)
  long a = g.encode({1, 2}), b = g.encode({1, 1});
  REQUIRE(g.add(a, b) == 0);
  REQUIRE(g.neg(a) == g.encode({1, 1}));

  REQUIRE(parse_group("Z2 x Z2").order() == 4);
  REQUIRE_THROWS_AS(parse_group("Z1"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_group("K4"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_group(""), std::invalid_argument);
}
