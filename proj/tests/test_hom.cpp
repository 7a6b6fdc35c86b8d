#include <catch2/catch_amalgamated.hpp>

#include "graphalg/corpus.hpp"
#include "graphalg/hom.hpp"
#include "graphalg/labeled_graph.hpp"
#include "graphalg/stepfunc.hpp"
#include "graphalg/weighted_graph.hpp"
#include "oracles.hpp"

using namespace graphalg;

static WeightedGraph weighted_fixture() {
  WeightedGraph h(3);
  h.alpha = {Rational(1), Rational(1, 2), Rational(3)};
  h.set_b(0, 0, Rational(1, 2));
  h.set_b(0, 1, 1);
  h.set_b(0, 2, Rational(1, 3));
  h.set_b(1, 1, 0);
  h.set_b(1, 2, 2);
  h.set_b(2, 2, 1);
  h.validate();
  return h;
}

TEST_CASE("homomorphism counts on small unweighted targets") {
  WeightedGraph k2 = complete_target(2), k3 = complete_target(3);
  LabeledGraph edge = strip_labels(path_graph(2));
  LabeledGraph tri = strip_labels(contract_labels(path_graph(4)));

  REQUIRE(hom(edge, k2) == 2);
  REQUIRE(hom(edge, k3) == 6);
  REQUIRE(hom(tri, k3) == 6);  // proper 3-colorings of the triangle
  REQUIRE(hom(tri, k2) == 0);

  LabeledGraph empty(0, 0);
  REQUIRE(hom(empty, k3) == 1);
  LabeledGraph k1(0, 1);
  REQUIRE(hom(k1, k3) == 3);

  // loops force the diagonal, which K_q lacks
  LabeledGraph loop(0, 1);
  loop.add_edge(0, 0);
  REQUIRE(hom(loop, k3) == 0);
}

TEST_CASE("hom agrees with the exhaustive oracle on a corpus") {
  WeightedGraph h = weighted_fixture();
  CorpusSpec spec;
  spec.k = 0;
  spec.max_nodes = 4;
  spec.max_multiplicity = 2;
  for (const auto& f : enumerate_corpus(spec).members) {
    LabeledGraph g = decode(f);
    REQUIRE(hom(g, h) == oracle::hom(g, h));
  }
}

TEST_CASE("labeled nodes carry no node weight") {
  WeightedGraph h = weighted_fixture();
  // single labeled isolated node: the value is 1 whatever the image
  LabeledGraph o1 = o_graph(1);
  for (int i = 0; i < h.n; i++) REQUIRE(hom_phi(o1, h, {i}) == 1);

  // labeled edge: just the edge weight
  LabeledGraph e = path_graph(2);
  for (int i = 0; i < h.n; i++)
    for (int j = 0; j < h.n; j++) REQUIRE(hom_phi(e, h, {i, j}) == h.b(i, j));

  // pendant node hanging off label 1 picks up its alpha
  LabeledGraph pend(1, 2);
  pend.add_edge(0, 1);
  for (int i = 0; i < h.n; i++) {
    Rational expect = 0;
    for (int t = 0; t < h.n; t++) expect += h.alpha[t] * h.b(i, t);
    REQUIRE(hom_phi(pend, h, {i}) == expect);
  }
}

TEST_CASE("hom_phi matches the oracle on labeled graphs") {
  WeightedGraph h = weighted_fixture();
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 4;
  spec.max_multiplicity = 2;
  Corpus corpus = enumerate_corpus(spec);
  std::vector<int> phi(2);
  for (const auto& f : corpus.members) {
    LabeledGraph g = decode(f);
    for (phi[0] = 0; phi[0] < h.n; phi[0]++)
      for (phi[1] = 0; phi[1] < h.n; phi[1]++)
        REQUIRE(hom_phi(g, h, phi) == oracle::hom_phi(g, h, phi));
  }
}

TEST_CASE("densities and injective counts") {
  WeightedGraph k3 = complete_target(3);
  LabeledGraph edge = strip_labels(path_graph(2));
  REQUIRE(t_density(edge, k3) == Rational(2, 3));

  LabeledGraph empty(0, 0);
  REQUIRE(t_density(empty, k3) == 1);

  REQUIRE(inj(edge, k3) == 6);
  REQUIRE(t0_density(edge, k3) == 1);

  LabeledGraph tri = strip_labels(contract_labels(path_graph(4)));
  REQUIRE(inj(tri, k3) == 6);
  REQUIRE(t0_density(tri, k3) == 1);

  // too many nodes to inject
  LabeledGraph p5 = strip_labels(path_graph(5));
  REQUIRE_THROWS_AS(t0_density(p5, k3), std::invalid_argument);
}

TEST_CASE("profiles separate graphs that hom can distinguish") {
  WeightedGraph k3 = complete_target(3);
  HomProfile a = profile(q_single(path_graph(3)), k3);
  HomProfile b = profile(q_single(path_graph(2)), k3);
  REQUIRE(a.k == 2);
  REQUIRE(a.values.size() == 9);
  REQUIRE_FALSE(a == b);

  // P_3 image: number of common neighbours in K_3
  LabeledGraph p3 = path_graph(3);
  std::vector<int> phi = {0, 1};
  REQUIRE(hom_phi(p3, k3, phi) == 1);
  phi = {0, 0};
  REQUIRE(hom_phi(p3, k3, phi) == 2);
}

TEST_CASE("automorphism orbit counts match the Burnside oracle") {
  WeightedGraph k2 = complete_target(2), k3 = complete_target(3), p4 = path_target(4);
  struct Case {
    const WeightedGraph* h;
    int k;
    long expect;
  } cases[] = {
      {&k2, 1, 1}, {&k2, 2, 2}, {&k3, 1, 1}, {&k3, 2, 2}, {&p4, 1, 2}, {&p4, 2, 8}, {&k3, 3, 5},
  };
  for (const auto& c : cases) {
    REQUIRE(automorphism_orbit_count(*c.h, c.k) == c.expect);
    REQUIRE(oracle::orbit_count(*c.h, c.k) == c.expect);
  }

  // weights break symmetry
  WeightedGraph h = weighted_fixture();
  REQUIRE(automorphism_orbit_count(h, 1) == 3);
}

TEST_CASE("step function densities match densities of the weighted form") {
  StepFunction w;
  w.lengths = {Rational(1, 3), Rational(2, 3)};
  w.values = {Rational(1), Rational(1, 4), Rational(1, 4), Rational(1, 2)};
  w.validate();

  CorpusSpec spec;
  spec.k = 0;
  spec.max_nodes = 4;
  spec.max_multiplicity = 2;
  WeightedGraph h = step_to_weighted(w);
  for (const auto& f : enumerate_corpus(spec).members) {
    LabeledGraph g = decode(f);
    REQUIRE(t_step(g, w) == t_density(g, h));
  }

  // constant half kernel on the triangle
  StepFunction half;
  half.lengths = {1};
  half.values = {Rational(1, 2)};
  half.validate();
  LabeledGraph tri = strip_labels(contract_labels(path_graph(4)));
  REQUIRE(t_step(tri, half) == Rational(1, 8));

  LabeledGraph empty(0, 0);
  REQUIRE(t_step(empty, half) == 1);
}
