#pragma once

// Uniform face of all graph parameters: an isomorphism-invariant exact
// evaluator on graphs (labels ignored), linearly extended to quantum graphs.

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "graphalg/counting.hpp"
#include "graphalg/flow.hpp"
#include "graphalg/hom.hpp"
#include "graphalg/quantum.hpp"
#include "graphalg/stepfunc.hpp"
#include "graphalg/tutte.hpp"

namespace graphalg {

struct GraphParameter {
  std::string name;
  std::function<Rational(const LabeledGraph&)> eval;

  Rational operator()(const LabeledGraph& g) const { return eval(g); }
};

inline Rational evaluate(const GraphParameter& f, const QuantumGraph& x) {
  Rational total = 0;
  for (const auto& [form, c] : x.terms) total += c * f.eval(decode(form));
  return total;
}

inline GraphParameter make_perf() {
  return {"perf", [](const LabeledGraph& g) { return perf(g); }};
}

inline GraphParameter make_eul() {
  return {"eul", [](const LabeledGraph& g) { return eul(g); }};
}

inline GraphParameter make_expt() {
  return {"expt", [](const LabeledGraph& g) { return expt(g); }};
}

// tut and chr instances share one polynomial cache per instance; copies of the
// parameter share it too.
inline GraphParameter make_tut(const Rational& q, const Rational& v) {
  auto cache = std::make_shared<TutteCache>();
  return {"tut:" + to_string(q) + "," + to_string(v),
          [q, v, cache](const LabeledGraph& g) { return tut(g, q, v, cache.get()); }};
}

inline GraphParameter make_chr(const Rational& x) {
  auto cache = std::make_shared<TutteCache>();
  return {"chr:" + to_string(x),
          [x, cache](const LabeledGraph& g) { return chr(g, x, cache.get()); }};
}

inline GraphParameter make_flo(const AbelianGroup& grp, const GroupSubset& sub) {
  sub.validate(grp);
  return {"flo:" + grp.name(),
          [grp, sub](const LabeledGraph& g) { return flo(g, grp, sub); }};
}

inline GraphParameter make_hom(const WeightedGraph& h, const std::string& target_name = "H") {
  h.validate();
  return {"hom:" + target_name, [h](const LabeledGraph& g) { return hom(g, h); }};
}

}  // namespace graphalg
