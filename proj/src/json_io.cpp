#include "anosov/json_io.hpp"

#include "anosov/errors.hpp"

namespace anosov {

namespace {

Json ids(NodeSet s) {
  Json a = Json::array();
  for (int x : members(s)) a.push_back(x);
  return a;
}

Json cycles_json(const Permutation& p) {
  Json a = Json::array();
  for (const auto& c : p.cycles()) a.push_back(c);
  return a;
}

Permutation cycles_from_json(int degree, const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of cycles");
  std::vector<std::vector<int>> cycles;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& c = j[i];
    if (!c.is_array()) throw InputError(where + "[" + std::to_string(i) + "]: expected a cycle");
    std::vector<int> cyc;
    for (const auto& x : c) {
      if (!x.is_number_integer()) {
        throw InputError(where + "[" + std::to_string(i) + "]: component ids must be integers");
      }
      cyc.push_back(x.get<int>());
    }
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string half_string(long long twice) {
  return twice % 2 == 0 ? std::to_string(twice / 2) + "/1" : std::to_string(twice) + "/2";
}

Json margin_json(const SetMargin& m) {
  return Json{{"components", ids(m.set)},
              {"closure", ids(m.closure)},
              {"sum", m.sum_string()},
              {"margin", half_string(m.twice_margin)}};
}

Json poly_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return Json{{"vertices", g.names()}, {"edges", edges}};
}

Json quotient_to_json(const Graph& g, const QuotientGraph& q) {
  Json nodes = Json::array();
  for (int a = 0; a < q.size(); ++a) {
    Json vs = Json::array();
    for (int v : members(q.members[a])) vs.push_back(g.name(v));
    nodes.push_back({{"id", a}, {"vertices", vs}, {"weight", q.weight[a]}, {"loop", q.has_loop(a)}});
  }
  Json edges = Json::array();
  for (auto [a, b] : q.edges()) {
    if (a != b) edges.push_back({a, b});
  }
  return Json{{"nodes", nodes}, {"edges", edges}};
}

GaloisDatum datum_from_json(const QuotientGraph& q, const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("datum JSON must be an object");
  if (!j.contains("generators")) throw InputError("datum: field 'generators' missing");
  const auto& gens_json = j["generators"];
  if (!gens_json.is_array()) throw InputError("datum: 'generators' must be an array");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < gens_json.size(); ++i) {
    gens.push_back(cycles_from_json(q.size(), gens_json[i], "generators[" + std::to_string(i) + "]"));
  }
  Permutation tau = j.contains("tau") ? cycles_from_json(q.size(), j["tau"], "tau")
                                      : Permutation::identity(q.size());
  std::string label = j.value("label", std::string("custom"));
  for (const auto& s : gens) {
    if (!is_quotient_automorphism(q, s)) {
      throw InputError("datum generator " + s.to_string() + " is not a quotient automorphism");
    }
  }
  GaloisDatum d{PermGroup::generate(q.size(), std::move(gens)), tau, label};
  validate_datum(q, d);
  return d;
}

Json datum_to_json(const GaloisDatum& d) {
  Json gens = Json::array();
  for (const auto& s : d.group.generators()) gens.push_back(cycles_json(s));
  return Json{{"generators", gens},
              {"tau", cycles_json(d.tau)},
              {"label", d.label},
              {"order", d.group.order()},
              {"tau_order", d.tau.order()}};
}

Json verdict_to_json(const Verdict& v) {
  Json out{{"anosov", v.anosov}, {"c", v.c}, {"datum", v.datum}};
  out["witness"] = v.witness ? margin_json(*v.witness) : Json(nullptr);
  Json binding = Json::array();
  for (const auto& m : v.binding) binding.push_back(margin_json(m));
  out["binding"] = binding;
  return out;
}

std::string bracket_string(const Graph& g, const LyndonBasis& basis, int index) {
  const auto& e = basis.elements.at(index);
  if (e.left < 0) return g.name(e.word.front());
  return "[" + bracket_string(g, basis, e.left) + "," + bracket_string(g, basis, e.right) + "]";
}

Json basis_to_json(const Graph& g, const LyndonBasis& basis) {
  Json elements = Json::array();
  for (int k = 0; k < basis.size(); ++k) {
    const auto& e = basis.elements[k];
    Json word = Json::array();
    for (int x : e.word) word.push_back(g.name(x));
    Json weight = Json::object();
    for (int v = 0; v < g.size(); ++v) {
      if (e.weight[v] != 0) weight[g.name(v)] = e.weight[v];
    }
    elements.push_back(
        {{"index", k}, {"word", word}, {"weight", weight}, {"bracket", bracket_string(g, basis, k)}});
  }
  Json table = Json::array();
  for (const auto& [key, comb] : basis.table.entries) {
    if (key.first > key.second) continue;
    Json terms = Json::array();
    for (const auto& [k, a] : comb) terms.push_back({k, a});
    table.push_back({{"i", key.first}, {"j", key.second}, {"bracket", terms}});
  }
  return Json{{"c", basis.c}, {"dimension", basis.size()}, {"elements", elements}, {"table", table}};
}

Json weights_to_json(const Graph& g, const std::set<WeightVector>& weights) {
  Json out = Json::array();
  for (const auto& e : weights) {
    Json w = Json::object();
    for (int v = 0; v < g.size(); ++v) {
      if (e[v] != 0) w[g.name(v)] = e[v];
    }
    out.push_back(w);
  }
  return out;
}

Json witness_to_json(const Graph& g, const AnosovWitness& w) {
  const auto q = quotient_graph(g);
  Json units = Json::array();
  for (int j = 0; j < q.size(); ++j) {
    Json vs = Json::array();
    for (int v : members(q.members[j])) vs.push_back(g.name(v));
    units.push_back({{"component", j},
                     {"vertices", vs},
                     {"unit", w.units[j].label},
                     {"minimal_polynomial", poly_json(w.units[j].minimal_polynomial)},
                     {"exponent", w.exponents[j]},
                     {"vertex_polynomial", poly_json(w.vertex_polynomials[j])}});
  }
  Json matrix = Json::array();
  for (int r = 0; r < w.matrix.rows(); ++r) {
    Json row = Json::array();
    for (int col = 0; col < w.matrix.cols(); ++col) row.push_back(w.matrix(r, col).str());
    matrix.push_back(row);
  }
  Json blocks = Json::array();
  for (const auto& b : w.blocks) {
    blocks.push_back({{"content", b.content},
                      {"indices", b.indices},
                      {"char_poly", poly_json(b.char_poly)},
                      {"hyperbolic", b.proof.hyperbolic},
                      {"root_at_one", b.proof.root_at_one},
                      {"root_at_minus_one", b.proof.root_at_minus_one},
                      {"reciprocal_gcd", poly_json(b.proof.reciprocal_gcd)},
                      {"trace_polynomial", poly_json(b.proof.trace_polynomial)},
                      {"sturm_count", b.proof.sturm_count}});
  }
  return Json{{"c", w.c},
              {"dimension", w.basis.size()},
              {"units", units},
              {"exponents", w.exponents},
              {"candidates_tried", w.candidates_tried},
              {"matrix", matrix},
              {"char_poly", poly_json(w.char_poly)},
              {"blocks", blocks},
              {"proof", {{"automorphism", w.automorphism},
                         {"integer_like", w.integer_like},
                         {"hyperbolic", w.hyperbolic}}}};
}

}  // namespace anosov
