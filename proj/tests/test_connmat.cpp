#include <catch2/catch_amalgamated.hpp>

#include "graphalg/connmat.hpp"
#include "graphalg/corpus.hpp"
#include "graphalg/counting.hpp"
#include "graphalg/hom.hpp"
#include "graphalg/parameter.hpp"
#include "oracles.hpp"

using namespace graphalg;

static Corpus two_member_corpus() {
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 2;
  spec.max_multiplicity = 1;
  Corpus c = enumerate_corpus(spec);  // {O_2, K_2}
  REQUIRE(c.members.size() == 2);
  return c;
}

TEST_CASE("perf connection matrix on the two-graph corpus") {
  Corpus c = two_member_corpus();
  ConnectionMatrix m = connection_matrix(make_perf(), c);
  // order by encoding: O_2 first (fewer edges)
  LabeledGraph o2 = decode(c.members[0]), k2 = decode(c.members[1]);
  REQUIRE(o2.edge_count() == 0);
  REQUIRE(k2.edge_count() == 1);

  // entries pinned by the exhaustive matching oracle
  REQUIRE(m.entries.at(0, 0) == oracle::perf(glue_product(o2, o2)));
  REQUIRE(m.entries.at(0, 1) == oracle::perf(glue_product(o2, k2)));
  REQUIRE(m.entries.at(1, 1) == oracle::perf(glue_product(k2, k2)));
  REQUIRE(m.entries.at(0, 0) == 0);
  REQUIRE(m.entries.at(0, 1) == 1);  // gluing the edge onto O_2 gives K_2 itself
  REQUIRE(m.entries.at(1, 0) == 1);
  REQUIRE(m.entries.at(1, 1) == 2);  // doubled edge
}

TEST_CASE("trivial target gives the all-ones matrix") {
  WeightedGraph k1(1);  // one node with a weight-1 loop: every map is a hom
  k1.set_b(0, 0, 1);
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 3;
  spec.max_multiplicity = 2;
  Corpus c = enumerate_corpus(spec);
  ConnectionMatrix m = connection_matrix(make_hom(k1), c);
  for (const auto& x : m.entries.a) REQUIRE(x == 1);
  REQUIRE(rank_exact(m.entries) == 1);
}

TEST_CASE("expt connection entries") {
  Corpus c = two_member_corpus();
  ConnectionMatrix m = connection_matrix(make_expt(), c);
  REQUIRE(m.entries.at(1, 1) == Rational(1, 2));  // doubled edge, one adjacent pair
  REQUIRE(m.entries.at(0, 1) == Rational(1, 2));
  REQUIRE(m.entries.at(0, 0) == 1);
}

TEST_CASE("perf rank saturates at four") {
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 2;
  spec.max_multiplicity = 2;
  SaturationReport r = saturated_rank(make_perf(), spec, 5);
  REQUIRE(r.saturated);
  REQUIRE(r.rank == 4);
}

TEST_CASE("expt rank saturates at two") {
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 2;
  spec.max_multiplicity = 2;
  SaturationReport r = saturated_rank(make_expt(), spec, 5);
  REQUIRE(r.saturated);
  REQUIRE(r.rank == 2);
}

TEST_CASE("hom rank equals the orbit count for small targets") {
  WeightedGraph k2 = complete_target(2);
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 2;
  spec.max_multiplicity = 2;
  SaturationReport r = saturated_rank(make_hom(k2, "K2"), spec, 5);
  REQUIRE(r.saturated);
  REQUIRE(r.rank == automorphism_orbit_count(k2, 2));

  CorpusSpec s1 = spec;
  s1.k = 1;
  s1.max_nodes = 1;
  r = saturated_rank(make_hom(k2, "K2"), s1, 4);
  REQUIRE(r.saturated);
  REQUIRE(r.rank == 1);
}

TEST_CASE("congruence by profile is exact for hom parameters") {
  WeightedGraph k3 = complete_target(3);
  LabeledGraph a(2, 3);  // edge between the labels plus a pendant on label 1
  a.add_edge(0, 1);
  a.add_edge(0, 2);
  QuantumGraph qa = q_single(a);
  QuantumGraph qb = q_single(star(a));
  // a regular target cannot tell the pendant sides apart, an irregular one can
  REQUIRE(congruent_hom_exact(qa, qb, k3));
  REQUIRE_FALSE(congruent_hom_exact(qa, qb, path_target(3)));
  REQUIRE(congruent_hom_exact(qa, qa, path_target(3)));

  // K_2 and its double: 0/1 weights square to themselves, weight 2 does not
  LabeledGraph d(2, 2);
  d.add_edge(0, 1, 2);
  WeightedGraph wedge(2);
  wedge.set_b(0, 1, 2);
  REQUIRE(congruent_hom_exact(q_single(path_graph(2)), q_single(d), k3));
  REQUIRE_FALSE(congruent_hom_exact(q_single(path_graph(2)), q_single(d), wedge));
}

TEST_CASE("corpus congruence finds explicit refutations") {
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 4;
  spec.max_multiplicity = 2;
  Corpus c = enumerate_corpus(spec);

  // perf distinguishes K_2 from O_2 by gluing with K_2
  CongruenceVerdict v =
      congruent_corpus(q_single(path_graph(2)), q_single(o_graph(2)), make_perf(), c);
  REQUIRE(v.refuted);
  REQUIRE(v.difference != 0);

  // x is always congruent to itself
  v = congruent_corpus(q_single(path_graph(3)), q_single(path_graph(3)), make_perf(), c);
  REQUIRE_FALSE(v.refuted);
}

TEST_CASE("negative witness extraction from an indefinite section") {
  Corpus c = two_member_corpus();
  auto w = find_negative_witness(make_perf(), c);
  REQUIRE(w.has_value());
  Rational val = evaluate(make_perf(), q_product(*w, *w));
  REQUIRE(val < 0);
}

TEST_CASE("expt admits no contractor: kernel vectors contract inconsistently") {
  CorpusSpec s2;
  s2.k = 2;
  s2.max_nodes = 4;
  s2.max_multiplicity = 1;
  s2.labels_independent = true;
  Corpus corpus2 = enumerate_corpus(s2);
  CorpusSpec s1;
  s1.k = 1;
  s1.max_nodes = 4;
  s1.max_multiplicity = 1;
  Corpus corpus1 = enumerate_corpus(s1);

  ContractibilityVerdict v = contractible_on_corpus(make_expt(), corpus2, corpus1);
  REQUIRE(v.refuted);

  // by contrast, hom(., K_3) contracts consistently on the same corpora
  ContractibilityVerdict h = contractible_on_corpus(make_hom(complete_target(3), "K3"),
                                                    corpus2, corpus1);
  REQUIRE_FALSE(h.refuted);
}

TEST_CASE("the star and path pair behind the expt refutation") {
  LabeledGraph s4(2, 4);
  s4.add_edge(0, 2);
  s4.add_edge(1, 2);
  s4.add_edge(2, 3);
  LabeledGraph p4 = path_graph(4);
  QuantumGraph diff = q_sub(q_single(s4), q_single(p4));

  // congruent over every glue partner with <= 5 nodes
  CorpusSpec spec;
  spec.k = 2;
  spec.max_nodes = 5;
  spec.max_multiplicity = 2;
  Corpus c = enumerate_corpus(spec);
  GraphParameter expt_p = make_expt();
  for (const auto& f : c.members) {
    QuantumGraph z = q_single(decode(f));
    REQUIRE(evaluate(expt_p, q_product(diff, z)) == 0);
  }

  // yet the contractions differ
  REQUIRE(evaluate(expt_p, q_contract(q_single(s4))) == Rational(1, 4));
  REQUIRE(evaluate(expt_p, q_contract(q_single(p4))) == Rational(1, 8));
}
