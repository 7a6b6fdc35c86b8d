#pragma once

// JSON readers and writers for weighted targets, quantum graphs, step
// functions, and group subsets, plus the parameter-spec parser shared by the
// command line tools. Rationals travel as "p/q" strings; plain JSON integers
// are accepted on input.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphalg/flow.hpp"
#include "graphalg/linalg.hpp"
#include "graphalg/parameter.hpp"
#include "graphalg/quantum.hpp"
#include "graphalg/rational.hpp"
#include "graphalg/stepfunc.hpp"
#include "graphalg/weighted_graph.hpp"

namespace graphalg {

using json = nlohmann::json;

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline json rational_to_json(const Rational& r) { return to_string(r); }

// ---- weighted graphs --------------------------------------------------------

// {"alpha": [...], "beta": [[...]]}; alpha may be omitted for all-ones weights.
inline WeightedGraph weighted_from_json(const json& j) {
  if (!j.is_object() || !j.contains("beta"))
    throw std::invalid_argument("weighted graph: need an object with a \"beta\" matrix");
  const json& jb = j.at("beta");
  if (!jb.is_array()) throw std::invalid_argument("weighted graph: \"beta\" must be an array of rows");
  int n = int(jb.size());
  WeightedGraph h(n);
  for (int i = 0; i < n; i++) {
    const json& row = jb.at(i);
    if (!row.is_array() || int(row.size()) != n)
      throw std::invalid_argument("weighted graph: \"beta\" must be square");
    for (int k = 0; k < n; k++) h.b(i, k) = rational_from_json(row.at(k));
  }
  if (j.contains("alpha")) {
    const json& ja = j.at("alpha");
    if (!ja.is_array() || int(ja.size()) != n)
      throw std::invalid_argument("weighted graph: \"alpha\" length must match \"beta\"");
    for (int i = 0; i < n; i++) h.alpha[i] = rational_from_json(ja.at(i));
  }
  h.validate();
  return h;
}

inline json weighted_to_json(const WeightedGraph& h) {
  json ja = json::array(), jb = json::array();
  for (int i = 0; i < h.n; i++) {
    ja.push_back(rational_to_json(h.alpha[i]));
    json row = json::array();
    for (int k = 0; k < h.n; k++) row.push_back(rational_to_json(h.b(i, k)));
    jb.push_back(row);
  }
  return json{{"alpha", ja}, {"beta", jb}};
}

// ---- quantum graphs ---------------------------------------------------------

// {"k": int, "terms": [{"coef": "p/q", "graph": "<text block>"}]}
inline QuantumGraph quantum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("terms"))
    throw std::invalid_argument("quantum graph: need an object with \"k\" and \"terms\"");
  QuantumGraph q = q_zero(j.at("k").get<int>());
  for (const json& t : j.at("terms")) {
    Rational c = rational_from_json(t.at("coef"));
    std::vector<LabeledGraph> gs = parse_graph_text(t.at("graph").get<std::string>());
    if (gs.size() != 1) throw std::invalid_argument("quantum graph: each term holds one graph");
    const LabeledGraph& g = gs.front();
    if (g.k != q.k)
      throw std::invalid_argument("quantum graph: term arity " + std::to_string(g.k) +
                                  " does not match declared k=" + std::to_string(q.k));
    q.add_term(c, g);
  }
  return q;
}

inline json quantum_to_json(const QuantumGraph& q) {
  json terms = json::array();
  for (const auto& [form, c] : q.terms)
    terms.push_back(json{{"coef", rational_to_json(c)}, {"graph", format_graph_text(decode(form))}});
  return json{{"k", q.k}, {"terms", terms}};
}

// ---- step functions ---------------------------------------------------------

// {"lengths": [...], "values": [[...]]}
inline StepFunction step_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lengths") || !j.contains("values"))
    throw std::invalid_argument("step function: need \"lengths\" and \"values\"");
  StepFunction w;
  for (const json& x : j.at("lengths")) w.lengths.push_back(rational_from_json(x));
  size_t q = w.lengths.size();
  const json& jv = j.at("values");
  if (!jv.is_array() || jv.size() != q)
    throw std::invalid_argument("step function: \"values\" must have one row per part");
  for (const json& row : jv) {
    if (!row.is_array() || row.size() != q)
      throw std::invalid_argument("step function: \"values\" must be square");
    for (const json& x : row) w.values.push_back(rational_from_json(x));
  }
  w.validate();
  return w;
}

inline json step_to_json(const StepFunction& w) {
  json jl = json::array(), jv = json::array();
  for (const auto& x : w.lengths) jl.push_back(rational_to_json(x));
  size_t q = w.lengths.size();
  for (size_t i = 0; i < q; i++) {
    json r = json::array();
    for (size_t j2 = 0; j2 < q; j2++) r.push_back(rational_to_json(w.values[i * q + j2]));
    jv.push_back(r);
  }
  return json{{"lengths", jl}, {"values", jv}};
}

// ---- group subsets ----------------------------------------------------------

// A subset is a list of elements; each element is a list of coordinates, one
// per cyclic factor.
inline GroupSubset subset_from_json(const json& j, const AbelianGroup& grp) {
  if (!j.is_array()) throw std::invalid_argument("group subset: expected a list of elements");
  GroupSubset s;
  for (const json& el : j) {
    if (!el.is_array() || el.size() != grp.mods.size())
      throw std::invalid_argument("group subset: element arity must match the group");
    std::vector<int> coords;
    for (const json& c : el) coords.push_back(c.get<int>());
    s.elems.push_back(grp.encode(coords));
  }
  s.validate(grp);
  return s;
}

// ---- matrices ---------------------------------------------------------------

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; i++) {
    json row = json::array();
    for (int j = 0; j < m.cols; j++) row.push_back(rational_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// ---- file helpers -----------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline LabeledGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<LabeledGraph> gs;
  try {
    gs = parse_graph_text(ss.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  if (gs.size() != 1) throw std::runtime_error(path + ": expected exactly one graph block");
  return gs.front();
}

inline QuantumGraph load_quantum_file(const std::string& path) {
  return quantum_from_json(load_json_file(path));
}

inline WeightedGraph load_weighted_file(const std::string& path) {
  return weighted_from_json(load_json_file(path));
}

// ---- parameter specs --------------------------------------------------------

// perf | eul | expt | chr:<x> | tut:<q>,<v> | flo:<group>[:<subset.json>] | hom:<target.json>
inline GraphParameter parse_param_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = (colon == std::string::npos) ? "" : spec.substr(colon + 1);

  if (head == "perf") return make_perf();
  if (head == "eul") return make_eul();
  if (head == "expt") return make_expt();
  if (head == "chr") {
    if (rest.empty()) throw std::invalid_argument("chr needs an argument, e.g. chr:3");
    return make_chr(parse_rational(rest));
  }
  if (head == "tut") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("tut needs two arguments, e.g. tut:2,-1");
    return make_tut(parse_rational(rest.substr(0, comma)), parse_rational(rest.substr(comma + 1)));
  }
  if (head == "flo") {
    if (rest.empty()) throw std::invalid_argument("flo needs a group, e.g. flo:Z2 or flo:Z2xZ3");
    auto colon2 = rest.find(':');
    AbelianGroup grp = parse_group(rest.substr(0, colon2));
    if (colon2 == std::string::npos) return make_flo(grp, nonzero_subset(grp));
    return make_flo(grp, subset_from_json(load_json_file(rest.substr(colon2 + 1)), grp));
  }
  if (head == "hom") {
    if (rest.empty()) throw std::invalid_argument("hom needs a target file, e.g. hom:target.json");
    return make_hom(load_weighted_file(rest), rest);
  }
  throw std::invalid_argument("unknown parameter \"" + head +
                              "\"; expected perf, eul, expt, chr:<x>, tut:<q>,<v>, "
                              "flo:<group>[:<subset.json>], or hom:<target.json>");
}

}  // namespace graphalg
