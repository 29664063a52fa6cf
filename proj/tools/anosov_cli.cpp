// Command-line front end: graph analysis, decisions, classification,
// witnesses and Lyndon bases.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "anosov/decider.hpp"
#include "anosov/errors.hpp"
#include "anosov/json_io.hpp"
#include "anosov/lyndon.hpp"
#include "anosov/quotient_aut.hpp"
#include "anosov/witness.hpp"

namespace {

using namespace anosov;

constexpr int kExitAnosov = 0;
constexpr int kExitError = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotAnosov = 3;
constexpr int kExitCap = 4;
constexpr int kExitUnsupported = 5;

struct RunConfig {
  std::string graph_path;
  int c = 2;
  std::string datum = "standard";
  std::string format = "json";
  bool cross_check = false;
  unsigned seed = 1;
  std::string caps;
};

struct Caps {
  GroupCaps group;
  LyndonCaps lyndon;
};

Caps parse_caps(const std::string& text) {
  Caps caps;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--caps entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("--caps entry '" + item + "' has a non-numeric value");
    }
    if (key == "group") {
      caps.group.max_group_order = value;
    } else if (key == "subgroups") {
      caps.group.max_subgroups = value;
    } else if (key == "basis") {
      caps.lyndon.max_basis = value;
    } else if (key == "class") {
      caps.lyndon.max_class = static_cast<int>(value);
    } else {
      throw InputError("unknown --caps key '" + key + "' (group, subgroups, basis, class)");
    }
  }
  return caps;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Graph load_graph(const RunConfig& cfg) { return parse_graph(read_text(cfg.graph_path)); }

std::vector<GaloisDatum> load_data(const RunConfig& cfg, const QuotientGraph& q, const Caps& caps) {
  if (cfg.datum == "standard") return {standard_datum(q)};
  if (cfg.datum == "all") return galois_data(q, caps.group);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(cfg.datum));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("datum file: malformed JSON: ") + e.what());
  }
  std::vector<GaloisDatum> out;
  if (doc.is_array()) {
    for (const auto& d : doc) out.push_back(datum_from_json(q, d));
  } else {
    out.push_back(datum_from_json(q, doc));
  }
  return out;
}

std::string names_of(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : members(s)) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

std::string node_list(NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (int x : members(s)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

void print_verdict_text(const Verdict& v) {
  std::cout << v.datum << "  c=" << v.c << "  " << (v.anosov ? "Anosov" : "not Anosov");
  if (v.witness) {
    std::cout << "  witness " << node_list(v.witness->set) << " closure " << node_list(v.witness->closure)
              << " sum " << v.witness->sum_string();
  } else if (!v.binding.empty()) {
    std::cout << "  binding";
    for (const auto& m : v.binding) std::cout << " " << node_list(m.set) << "=" << m.sum_string();
  } else {
    std::cout << "  no connected invariant set";
  }
  std::cout << "\n";
}

int cmd_analyze(const RunConfig& cfg, const Caps& caps) {
  const Graph g = load_graph(cfg);
  const auto q = quotient_graph(g);
  const auto aut = automorphisms(q, caps.group);
  std::vector<std::pair<int, std::size_t>> dims;
  for (int c = 2; c <= std::max(2, cfg.c); ++c) dims.emplace_back(c, dimension(g, c, caps.lyndon));

  if (cfg.format == "json") {
    Json dj = Json::array();
    for (auto [c, d] : dims) dj.push_back({{"c", c}, {"dimension", d}});
    Json out{{"graph", graph_to_json(g)},
             {"quotient", quotient_to_json(g, q)},
             {"automorphism_group_order", aut.order()},
             {"dimensions", dj}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "vertices (" << g.size() << "):";
  for (const auto& n : g.names()) std::cout << " " << n;
  std::cout << "\nedges (" << g.edge_count() << "):";
  for (auto [u, v] : g.edges()) std::cout << " " << g.name(u) << "--" << g.name(v);
  std::cout << "\ncoherent components:\n";
  for (int a = 0; a < q.size(); ++a) {
    std::cout << "  " << a << ": " << names_of(g, q.members[a]) << " weight " << q.weight[a]
              << (q.has_loop(a) ? " loop" : "") << "\n";
  }
  std::cout << "quotient edges:";
  for (auto [a, b] : q.edges()) {
    if (a != b) std::cout << " " << a << "-" << b;
  }
  std::cout << "\n|Aut| = " << aut.order() << "\n";
  for (auto [c, d] : dims) std::cout << "dim c=" << c << ": " << d << "\n";
  return 0;
}

int cmd_decide(const RunConfig& cfg, const Caps& caps) {
  const Graph g = load_graph(cfg);
  const auto q = quotient_graph(g);
  const auto data = load_data(cfg, q, caps);
  Json out = Json::array();
  bool all_anosov = true;
  for (const auto& d : data) {
    Verdict v = decide(g, cfg.c, d);
    if (cfg.cross_check) {
      Verdict o = oracle_decide(g, cfg.c, d);
      if (!(o == v)) {
        std::cerr << "error: cross-check mismatch for datum " << d.label << "\n";
        return kExitError;
      }
    }
    all_anosov = all_anosov && v.anosov;
    if (cfg.format == "json") {
      out.push_back(verdict_to_json(v));
    } else {
      print_verdict_text(v);
    }
  }
  if (cfg.format == "json") std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return all_anosov ? kExitAnosov : kExitNotAnosov;
}

int cmd_classify(const RunConfig& cfg, const Caps& caps) {
  const Graph g = load_graph(cfg);
  const auto cls = classify(g, cfg.c, caps.group);
  if (cfg.cross_check) {
    for (std::size_t i = 0; i < cls.data.size(); ++i) {
      if (!(oracle_decide(g, cfg.c, cls.data[i]) == cls.verdicts[i])) {
        std::cerr << "error: cross-check mismatch for datum " << cls.data[i].label << "\n";
        return kExitError;
      }
    }
  }
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (std::size_t i = 0; i < cls.data.size(); ++i) {
      rows.push_back({{"datum", datum_to_json(cls.data[i])}, {"verdict", verdict_to_json(cls.verdicts[i])}});
    }
    Json out{{"c", cls.c},
             {"forms", rows},
             {"no_anosov_forms", !cls.any_anosov()},
             {"standard_form_anosov", cls.standard_anosov()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "label\t|H|\tord(tau)\tverdict\tdetail\n";
    for (std::size_t i = 0; i < cls.data.size(); ++i) {
      const auto& d = cls.data[i];
      const auto& v = cls.verdicts[i];
      std::cout << d.label << "\t" << d.group.order() << "\t" << d.tau.order() << "\t"
                << (v.anosov ? "Anosov" : "not Anosov") << "\t";
      if (v.witness) {
        std::cout << "witness " << node_list(v.witness->set) << " sum " << v.witness->sum_string();
      } else if (!v.binding.empty()) {
        std::cout << "min sum " << v.binding.front().sum_string();
      } else {
        std::cout << "no connected invariant set";
      }
      std::cout << "\n";
    }
    std::cout << "no Anosov forms: " << (cls.any_anosov() ? "no" : "yes") << "\n";
    std::cout << "standard form Anosov: " << (cls.standard_anosov() ? "yes" : "no") << "\n";
  }
  return cls.any_anosov() ? kExitAnosov : kExitNotAnosov;
}

int cmd_witness(const RunConfig& cfg, const Caps&) {
  const Graph g = load_graph(cfg);
  const auto w = build_witness(g, cfg.c);
  if (cfg.format == "json") {
    std::cout << witness_to_json(g, w).dump(2) << "\n";
    return 0;
  }
  std::cout << "dimension " << w.basis.size() << ", exponents";
  for (int n : w.exponents) std::cout << " " << n;
  std::cout << "\n";
  for (std::size_t j = 0; j < w.units.size(); ++j) {
    std::cout << "component " << j << ": " << w.units[j].label << "  min poly "
              << w.units[j].minimal_polynomial.to_string() << "  vertex block poly "
              << w.vertex_polynomials[j].to_string() << "\n";
  }
  std::cout << "char poly: " << w.char_poly.to_string() << "\n";
  std::cout << "automorphism " << (w.automorphism ? "yes" : "no") << ", integer-like "
            << (w.integer_like ? "yes" : "no") << ", hyperbolic " << (w.hyperbolic ? "yes" : "no") << "\n";
  return 0;
}

int cmd_basis(const RunConfig& cfg, const Caps& caps) {
  const Graph g = load_graph(cfg);
  const auto basis = lyndon_basis(g, cfg.c, caps.lyndon);
  if (cfg.format == "json") {
    std::cout << basis_to_json(g, basis).dump(2) << "\n";
    return 0;
  }
  for (int k = 0; k < basis.size(); ++k) {
    std::cout << k << "\t" << bracket_string(g, basis, k) << "\n";
  }
  for (const auto& [key, comb] : basis.table.entries) {
    if (key.first > key.second) continue;
    std::cout << "[" << key.first << "," << key.second << "] =";
    for (const auto& [k, a] : comb) std::cout << " " << (a >= 0 ? "+" : "") << a << "*" << k;
    std::cout << "\n";
  }
  return 0;
}

int cmd_weights(const RunConfig& cfg, const Caps& caps) {
  const Graph g = load_graph(cfg);
  const auto closed = weight_set(g, cfg.c);
  const auto enumerated = diagonal_eigenvalue_exponents(g, cfg.c, caps.lyndon);
  if (cfg.format == "json") {
    Json out{{"c", cfg.c}, {"weights", weights_to_json(g, closed)}, {"matches_basis", closed == enumerated}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : closed) {
      bool first = true;
      for (int v = 0; v < g.size(); ++v) {
        if (e[v] == 0) continue;
        std::cout << (first ? "" : " + ") << e[v] << "*" << g.name(v);
        first = false;
      }
      std::cout << "\n";
    }
    std::cout << "matches basis weights: " << (closed == enumerated ? "yes" : "no") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anosov decisions for graph Lie algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  int analyze_c = 3;
  auto add_common = [&](CLI::App* sub, int& c_target, bool needs_c) {
    sub->add_option("--graph", cfg.graph_path, "graph file (JSON or terse), '-' for stdin")->required();
    auto* c_opt = sub->add_option("--c", c_target, "nilpotency class");
    if (needs_c) c_opt->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--caps", cfg.caps, "cap overrides, e.g. group=10080,subgroups=5000,basis=20000,class=8");
    sub->add_option("--seed", cfg.seed, "seed for randomized runs");
  };

  auto* analyze = app.add_subcommand("analyze", "components, quotient graph, automorphisms, dimensions");
  add_common(analyze, analyze_c, false);
  auto* decide_cmd = app.add_subcommand("decide", "decide one datum, a datum file, or all data");
  add_common(decide_cmd, cfg.c, true);
  decide_cmd->add_option("--datum", cfg.datum, "datum file, 'standard' or 'all'");
  decide_cmd->add_flag("--cross-check", cfg.cross_check, "compare with the subset oracle");
  auto* classify_cmd = app.add_subcommand("classify", "verdict for every datum class");
  add_common(classify_cmd, cfg.c, true);
  classify_cmd->add_flag("--cross-check", cfg.cross_check, "compare with the subset oracle");
  auto* witness = app.add_subcommand("witness", "explicit hyperbolic integer-like automorphism");
  add_common(witness, cfg.c, true);
  auto* basis = app.add_subcommand("basis", "Lyndon basis with structure constants");
  add_common(basis, cfg.c, true);
  auto* weights = app.add_subcommand("weights", "weight set of the Lyndon basis");
  add_common(weights, cfg.c, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    const Caps caps = parse_caps(cfg.caps);
    if (*analyze) {
      cfg.c = analyze_c;
      return cmd_analyze(cfg, caps);
    }
    if (*decide_cmd) return cmd_decide(cfg, caps);
    if (*classify_cmd) return cmd_classify(cfg, caps);
    if (*witness) return cmd_witness(cfg, caps);
    if (*basis) return cmd_basis(cfg, caps);
    if (*weights) return cmd_weights(cfg, caps);
  } catch (const NotAnosovError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotAnosov;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const UnsupportedDegree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
