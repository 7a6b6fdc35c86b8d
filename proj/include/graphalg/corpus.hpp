#pragma once

// Finite corpora of k-labeled multigraphs up to label-respecting isomorphism,
// enumerated within node/multiplicity bounds. Corpora never contain loops;
// the graph type supports them elsewhere (contractions create them).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "graphalg/canonical.hpp"
#include "graphalg/labeled_graph.hpp"

namespace graphalg {

struct CorpusSpec {
  int k = 0;
  int max_nodes = 0;
  uint32_t max_multiplicity = 2;
  bool simple_only = false;         // multiplicity <= 1 and labels pairwise nonadjacent
  bool labels_independent = false;  // labels pairwise nonadjacent (multi-edges allowed)
  uint64_t enumeration_limit = 200000000;  // raw assignments before refusal

  std::string describe() const {
    std::string s = "k=" + std::to_string(k) + ", nodes<=" + std::to_string(max_nodes) +
                    ", mult<=" + std::to_string(simple_only ? 1u : max_multiplicity);
    if (simple_only) s += ", simple";
    else if (labels_independent) s += ", independent labels";
    return s;
  }
};

struct Corpus {
  CorpusSpec spec;
  std::vector<CanonicalForm> members;  // sorted by encoding

  size_t size() const { return members.size(); }
};

// Raw assignment count (before isomorphism dedup), saturating at cap.
inline uint64_t corpus_raw_count(const CorpusSpec& spec, uint64_t cap) {
  uint64_t total = 0;
  for (int n = spec.k; n <= spec.max_nodes; n++) {
    uint64_t prod = 1;
    for (int u = 0; u < n && prod <= cap; u++)
      for (int v = u + 1; v < n && prod <= cap; v++) {
        bool both_labeled = u < spec.k && v < spec.k;
        uint64_t choices;
        if (both_labeled && (spec.simple_only || spec.labels_independent))
          choices = 1;
        else
          choices = (spec.simple_only ? 1u : spec.max_multiplicity) + 1;
        prod *= choices;
      }
    total += prod;
    if (total > cap) return cap + 1;
  }
  return total;
}

inline Corpus enumerate_corpus(const CorpusSpec& spec) {
  if (spec.k < 0 || spec.max_nodes < spec.k)
    throw std::invalid_argument("corpus bounds must allow at least the all-labeled graph");
  uint64_t raw = corpus_raw_count(spec, spec.enumeration_limit);
  if (raw > spec.enumeration_limit)
    throw std::invalid_argument("corpus bounds too large: more than " +
                                std::to_string(spec.enumeration_limit) +
                                " raw assignments (" + spec.describe() + ")");

  Corpus corpus;
  corpus.spec = spec;
  std::unordered_set<std::string> seen;

  uint32_t cap = spec.simple_only ? std::min<uint32_t>(1, spec.max_multiplicity)
                                  : spec.max_multiplicity;
  for (int n = spec.k; n <= spec.max_nodes; n++) {
    // Pair slots with their per-slot cap; labels sit on nodes 0..k-1.
    std::vector<std::pair<int, int>> pairs;
    std::vector<uint32_t> slot_cap;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++) {
        bool both_labeled = u < spec.k && v < spec.k;
        uint32_t c = (both_labeled && (spec.simple_only || spec.labels_independent)) ? 0 : cap;
        if (c == 0) continue;
        pairs.push_back({u, v});
        slot_cap.push_back(c);
      }
    std::vector<uint32_t> assign(pairs.size(), 0);
    LabeledGraph g(spec.k, n);
    while (true) {
      std::fill(g.mult.begin(), g.mult.end(), 0);
      for (size_t i = 0; i < pairs.size(); i++)
        if (assign[i]) g.add_edge(pairs[i].first, pairs[i].second, assign[i]);
      CanonicalForm f = canonical_form(g);
      if (seen.insert(f.bytes).second) corpus.members.push_back(std::move(f));
      // mixed-radix increment
      size_t i = 0;
      while (i < assign.size() && assign[i] == slot_cap[i]) assign[i++] = 0;
      if (i == assign.size()) break;
      assign[i]++;
    }
  }
  std::sort(corpus.members.begin(), corpus.members.end());
  return corpus;
}

}  // namespace graphalg
