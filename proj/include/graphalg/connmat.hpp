#pragma once

// Connection matrices f(F_i F_j) over a corpus, exact rank with a saturation
// loop over growing node bounds, congruence testing modulo a parameter
// (refutation-complete on the corpus; exact for homomorphism targets via
// profiles), and negative-witness extraction from failed psd certificates.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphalg/corpus.hpp"
#include "graphalg/hom.hpp"
#include "graphalg/linalg.hpp"
#include "graphalg/parallel.hpp"
#include "graphalg/parameter.hpp"
#include "graphalg/psd.hpp"
#include "graphalg/quantum.hpp"

namespace graphalg {

struct ConnectionMatrix {
  Corpus corpus;
  Matrix entries;
};

inline ConnectionMatrix connection_matrix(const GraphParameter& f, const Corpus& corpus,
                                          int jobs = 1) {
  size_t n = corpus.members.size();
  ConnectionMatrix cm{corpus, Matrix((int)n, (int)n)};
  std::vector<LabeledGraph> gs;
  gs.reserve(n);
  for (const auto& m : corpus.members) gs.push_back(decode(m));
  std::vector<std::pair<int, int>> cells;
  for (size_t i = 0; i < n; i++)
    for (size_t j = i; j < n; j++) cells.push_back({(int)i, (int)j});
  parallel_for(cells.size(), jobs, [&](size_t t) {
    auto [i, j] = cells[t];
    Rational v;
    try {
      v = f.eval(glue_product(gs[i], gs[j]));
    } catch (const std::exception& ex) {
      throw std::runtime_error("evaluation failed on glued pair (" + std::to_string(i) + "," +
                               std::to_string(j) + "): " + ex.what());
    }
    cm.entries.at(i, j) = v;
    cm.entries.at(j, i) = v;
  });
  return cm;
}

struct SaturationReport {
  int rank = 0;
  bool saturated = false;  // false: node cap hit before two equal consecutive ranks
  std::vector<std::pair<int, int>> trace;  // (max_nodes, rank)
};

inline SaturationReport saturated_rank(const GraphParameter& f, CorpusSpec spec, int node_cap,
                                       int jobs = 1) {
  SaturationReport rep;
  int prev = -1;
  for (int n = std::max(spec.k, spec.max_nodes); n <= node_cap; n++) {
    spec.max_nodes = n;
    ConnectionMatrix cm = connection_matrix(f, enumerate_corpus(spec), jobs);
    int r = rank_exact(cm.entries);
    rep.trace.push_back({n, r});
    rep.rank = r;
    if (r == prev) {
      rep.saturated = true;
      return rep;
    }
    prev = r;
  }
  rep.saturated = false;
  return rep;
}

struct CongruenceVerdict {
  bool refuted = false;
  std::optional<CanonicalForm> witness;  // corpus member z with f((x-y)z) != 0
  Rational difference;
};

// Checks f((x-y)z) = 0 for every corpus z. Refutation is conclusive;
// consistency is relative to the corpus.
inline CongruenceVerdict congruent_corpus(const QuantumGraph& x, const QuantumGraph& y,
                                          const GraphParameter& f, const Corpus& corpus) {
  check_arity(x, y, "congruence");
  QuantumGraph d = q_sub(x, y);
  for (const auto& form : corpus.members) {
    QuantumGraph z = q_single(decode(form));
    Rational v = evaluate(f, q_product(d, z));
    if (v != 0) return {true, form, v};
  }
  return {false, std::nullopt, 0};
}

// Exact congruence decision modulo hom(., H): classes are determined by the
// full assignment profile.
inline bool congruent_hom_exact(const QuantumGraph& x, const QuantumGraph& y,
                                const WeightedGraph& h) {
  check_arity(x, y, "congruence");
  int k = x.terms.empty() ? y.k : x.k;
  QuantumGraph xx = x, yy = y;
  xx.k = k;
  yy.k = k;
  return profile(xx, h) == profile(yy, h);
}

// Quantum-graph witness with f(w^2) < 0 extracted from a failed psd
// certificate on the corpus section, if any.
inline std::optional<QuantumGraph> find_negative_witness(const GraphParameter& f,
                                                         const Corpus& corpus, int jobs = 1) {
  ConnectionMatrix cm = connection_matrix(f, corpus, jobs);
  PsdCertificate cert = psd_certify(cm.entries);
  if (cert.psd) return std::nullopt;
  QuantumGraph w{corpus.spec.k, {}};
  for (size_t i = 0; i < corpus.members.size(); i++)
    w.add_term(corpus.members[i], cert.witness[i]);
  return w;
}

struct ContractibilityVerdict {
  bool refuted = false;
  QuantumGraph kernel_vector;     // x with f(xz) = 0 for all corpus z
  CanonicalForm against;          // 1-labeled y with f(x' y) != 0
  Rational value;
};

// Kernel vectors of the corpus Gram matrix are contracted and tested against
// 1-labeled graphs; a nonzero value refutes "x == 0 implies x' == 0" on the
// corpora. corpus2 members must have nonadjacent labeled nodes.
inline ContractibilityVerdict contractible_on_corpus(const GraphParameter& f,
                                                     const Corpus& corpus2, const Corpus& corpus1,
                                                     int jobs = 1) {
  if (corpus2.spec.k != 2 || corpus1.spec.k != 1)
    throw std::invalid_argument("contractibility: need a 2-labeled and a 1-labeled corpus");
  ConnectionMatrix cm = connection_matrix(f, corpus2, jobs);
  auto kernel = kernel_basis(cm.entries);
  for (const auto& vec : kernel) {
    QuantumGraph x{2, {}};
    for (size_t i = 0; i < corpus2.members.size(); i++) x.add_term(corpus2.members[i], vec[i]);
    QuantumGraph xc = q_contract(x);
    for (const auto& yform : corpus1.members) {
      Rational v = evaluate(f, q_product(xc, q_single(decode(yform))));
      if (v != 0) return {true, x, yform, v};
    }
  }
  return {false, q_zero(2), CanonicalForm{}, 0};
}

}  // namespace graphalg
