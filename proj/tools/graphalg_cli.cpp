// graphalg: evaluate graph parameters, build connection matrices, synthesize
// and verify contractors/connectors, all in exact rational arithmetic.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "graphalg/graphalg.hpp"
#include "graphalg/acceptance.hpp"

using namespace graphalg;

namespace {

CorpusSpec corpus_from_flags(int k, int max_nodes, int max_mult, bool simple, bool independent) {
  CorpusSpec s;
  s.k = k;
  s.max_nodes = max_nodes;
  s.max_multiplicity = simple ? 1 : uint32_t(max_mult);
  s.simple_only = simple;
  s.labels_independent = independent;
  return s;
}

void print_synth_report(const QuantumGraph& q, const WeightedGraph& h, bool connector) {
  std::cout << quantum_to_json(q).dump(2) << "\n";
  std::cout << "terms: " << q.terms.size() << "\n";
  if (connector) {
    PointwiseVerdict v = verify_connector_pointwise(q, h);
    std::cout << "matrix image: " << (v.matches ? "matches the edge weights" : "MISMATCH")
              << "\n";
    std::cout << "all terms simple: " << (v.simple ? "yes" : "no") << "\n";
  } else {
    bool ok = verify_contractor_pointwise(q, h);
    std::cout << "matrix image: " << (ok ? "matches the weighted identity" : "MISMATCH") << "\n";
  }
  CorpusSpec s = corpus_from_flags(2, 4, 2, false, true);
  Corpus corpus = enumerate_corpus(s);
  GraphParameter f = make_hom(h, "target");
  ParamVerdict pv = connector ? verify_connector_param(q, f, corpus)
                              : verify_contractor_param(q, f, corpus);
  std::cout << "parameter check (2-labeled corpus, <=4 nodes, mult <=2): "
            << (pv.pass ? "pass" : "fail") << "\n";
  if (!pv.pass && pv.counterexample) {
    std::cout << "counterexample:\n" << format_graph_text(decode(*pv.counterexample));
    std::cout << "lhs: " << to_string(pv.lhs) << "\nrhs: " << to_string(pv.rhs) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for labeled graph algebras"};
  app.require_subcommand(1);

  // eval
  std::string eval_param, eval_graph, eval_quantum;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a parameter on a graph or quantum graph");
  eval_cmd->add_option("--param", eval_param, "parameter spec, e.g. perf, chr:3, hom:H.json")
      ->required();
  auto* go = eval_cmd->add_option("--graph", eval_graph, "graph text file");
  auto* qo = eval_cmd->add_option("--quantum", eval_quantum, "quantum graph JSON file");
  go->excludes(qo);

  // connmat
  std::string cm_param;
  int cm_k = 2, cm_nodes = 4, cm_mult = 2;
  bool cm_simple = false, cm_indep = false;
  auto* cm_cmd = app.add_subcommand("connmat", "connection matrix of a corpus section");
  cm_cmd->add_option("--param", cm_param)->required();
  cm_cmd->add_option("--k", cm_k, "number of labels")->required();
  cm_cmd->add_option("--max-nodes", cm_nodes)->required();
  cm_cmd->add_option("--max-mult", cm_mult, "edge multiplicity cap (default 2)");
  cm_cmd->add_flag("--simple", cm_simple, "simple graphs only");
  cm_cmd->add_flag("--independent", cm_indep, "labeled nodes pairwise nonadjacent");

  // synth
  std::string sy_kind, sy_target;
  auto* sy_cmd = app.add_subcommand("synth", "synthesize a connector or contractor");
  sy_cmd->add_option("kind", sy_kind)->required()->check(CLI::IsMember({"connector", "contractor"}));
  sy_cmd->add_option("--target", sy_target, "weighted target JSON")->required();

  // verify
  std::string vf_kind, vf_element, vf_param;
  int vf_k = 2, vf_nodes = 4, vf_mult = 2;
  bool vf_simple = false, vf_indep = false;
  auto* vf_cmd = app.add_subcommand("verify", "check a contractor/connector against a parameter");
  vf_cmd->add_option("--kind", vf_kind)->required()->check(CLI::IsMember({"connector", "contractor"}));
  vf_cmd->add_option("--element", vf_element, "quantum graph JSON")->required();
  vf_cmd->add_option("--param", vf_param)->required();
  vf_cmd->add_option("--k", vf_k, "corpus label count (default 2)");
  vf_cmd->add_option("--max-nodes", vf_nodes, "corpus node bound (default 4)");
  vf_cmd->add_option("--max-mult", vf_mult, "corpus multiplicity cap (default 2)");
  vf_cmd->add_flag("--simple", vf_simple);
  vf_cmd->add_flag("--independent", vf_indep);

  // relation
  std::string rel_target;
  auto* rel_cmd = app.add_subcommand("relation", "smallest path relation for a target");
  rel_cmd->add_option("--target", rel_target)->required();

  // orbits
  std::string orb_target;
  int orb_k = 1;
  auto* orb_cmd = app.add_subcommand("orbits", "count automorphism orbits of label tuples");
  orb_cmd->add_option("--target", orb_target)->required();
  orb_cmd->add_option("--k", orb_k, "tuple length")->required();

  // accept
  int ac_jobs = 1;
  auto* ac_cmd = app.add_subcommand("accept", "run the acceptance suite");
  ac_cmd->add_option("--jobs", ac_jobs, "worker threads (default 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) {
      GraphParameter f = parse_param_spec(eval_param);
      if (!eval_graph.empty()) {
        std::cout << to_string(f.eval(load_graph_file(eval_graph))) << "\n";
      } else if (!eval_quantum.empty()) {
        std::cout << to_string(evaluate(f, load_quantum_file(eval_quantum))) << "\n";
      } else {
        std::cerr << "error: eval needs --graph or --quantum\n";
        return 2;
      }
    } else if (cm_cmd->parsed()) {
      GraphParameter f = parse_param_spec(cm_param);
      Corpus corpus = enumerate_corpus(corpus_from_flags(cm_k, cm_nodes, cm_mult, cm_simple, cm_indep));
      ConnectionMatrix m = connection_matrix(f, corpus, 1);
      nlohmann::json j;
      j["k"] = cm_k;
      j["members"] = nlohmann::json::array();
      for (const auto& fm : corpus.members) j["members"].push_back(format_graph_text(decode(fm)));
      j["matrix"] = matrix_to_json(m.entries);
      j["rank"] = rank_exact(m.entries);
      std::cout << j.dump(2) << "\n";
    } else if (sy_cmd->parsed()) {
      WeightedGraph h = load_weighted_file(sy_target);
      WeightedGraph reduced = twin_reduce(h);
      if (reduced.n < h.n)
        std::cerr << "notice: twin reduction shrank the target from " << h.n << " to "
                  << reduced.n << " nodes\n";
      bool connector = sy_kind == "connector";
      QuantumGraph q = connector ? synth_connector(h) : synth_contractor(h);
      print_synth_report(q, h, connector);
    } else if (vf_cmd->parsed()) {
      QuantumGraph q = load_quantum_file(vf_element);
      GraphParameter f = parse_param_spec(vf_param);
      bool indep = vf_indep || vf_kind == "contractor";  // contraction needs nonadjacent labels
      Corpus corpus = enumerate_corpus(corpus_from_flags(vf_k, vf_nodes, vf_mult, vf_simple, indep));
      ParamVerdict v = vf_kind == "contractor" ? verify_contractor_param(q, f, corpus)
                                               : verify_connector_param(q, f, corpus);
      if (v.pass) {
        std::cout << "pass (" << corpus.members.size() << " graphs)\n";
      } else {
        std::cout << "fail\ncounterexample:\n";
        if (v.counterexample) std::cout << format_graph_text(decode(*v.counterexample));
        std::cout << "lhs: " << to_string(v.lhs) << "\nrhs: " << to_string(v.rhs) << "\n";
        return 1;
      }
    } else if (rel_cmd->parsed()) {
      WeightedGraph h = load_weighted_file(rel_target);
      WeightedGraph reduced = twin_reduce(h);
      if (reduced.n < h.n)
        std::cerr << "notice: twin reduction shrank the target from " << h.n << " to "
                  << reduced.n << " nodes\n";
      PathRelation r = find_path_relation(h);
      nlohmann::json j;
      j["k"] = r.k;
      j["coefficients"] = nlohmann::json::array();
      for (const auto& cf : r.coeffs) j["coefficients"].push_back(rational_to_json(cf));
      std::cout << j.dump(2) << "\n";
    } else if (orb_cmd->parsed()) {
      WeightedGraph h = load_weighted_file(orb_target);
      std::cout << automorphism_orbit_count(h, orb_k) << "\n";
    } else if (ac_cmd->parsed()) {
      bool ok = accept::run_acceptance(std::cout, ac_jobs);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
