#include "anosov/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "anosov/errors.hpp"

namespace anosov {

std::vector<int> members(std::uint64_t s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Graph::Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)), adj_(names_.size(), 0) {
  if (names_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw InputError("graph has " + std::to_string(names_.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty vertex name");
    if (!seen.insert(n).second) throw InputError("duplicate vertex '" + n + "'");
  }
  const int n = size();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop at vertex '" + names_[u] + "'");
    if (adjacent(u, v)) {
      throw InputError("duplicate edge '" + names_[u] + "' -- '" + names_[v] + "'");
    }
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

std::optional<int> Graph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int Graph::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v : members(adj_[u])) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += popcount(a);
  return twice / 2;
}

namespace {

std::string json_name(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(where + ": vertex name must be a string or integer");
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph JSON must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("field 'vertices' missing or not an array");
  }
  std::vector<std::string> names;
  std::set<std::string> seen;
  const auto& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string where = "vertices[" + std::to_string(i) + "]";
    auto n = json_name(vs[i], where);
    if (!seen.insert(n).second) throw InputError(where + ": duplicate vertex '" + n + "'");
    names.push_back(std::move(n));
  }
  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array()) throw InputError("field 'edges' is not an array");
    Graph probe(names, {});
    std::set<std::pair<int, int>> seen_edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
      std::string where = "edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) {
        throw InputError(where + ": malformed pair (expected [u, v])");
      }
      auto a = json_name(es[i][0], where);
      auto b = json_name(es[i][1], where);
      auto u = probe.find(a);
      auto v = probe.find(b);
      if (!u) throw InputError(where + ": unknown endpoint '" + a + "'");
      if (!v) throw InputError(where + ": unknown endpoint '" + b + "'");
      if (*u == *v) throw InputError(where + ": self-loop at '" + a + "'");
      auto key = std::minmax(*u, *v);
      if (!seen_edges.insert(key).second) {
        throw InputError(where + ": duplicate edge '" + a + "' -- '" + b + "'");
      }
      edges.emplace_back(*u, *v);
    }
  }
  return Graph(std::move(names), edges);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Graph parse_terse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen_edges;
  auto lookup = [&](const std::string& n) -> std::optional<int> {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) return std::nullopt;
    return static_cast<int>(it - names.begin());
  };
  auto intern = [&](const std::string& n) {
    if (auto i = lookup(n)) return *i;
    names.push_back(n);
    return static_cast<int>(names.size()) - 1;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (auto sep = line.find("--"); sep != std::string::npos) {
      std::string a = trim(line.substr(0, sep));
      std::string b = trim(line.substr(sep + 2));
      if (a.empty() || b.empty() || b.find("--") != std::string::npos ||
          a.find_first_of(" \t") != std::string::npos ||
          b.find_first_of(" \t") != std::string::npos) {
        throw InputError(where + ": malformed edge (expected 'u -- v')");
      }
      if (a == b) throw InputError(where + ": self-loop at '" + a + "'");
      int u = intern(a);
      int v = intern(b);
      if (!seen_edges.insert(std::minmax(u, v)).second) {
        throw InputError(where + ": duplicate edge '" + a + "' -- '" + b + "'");
      }
      edges.emplace_back(u, v);
      continue;
    }
    std::istringstream words(line);
    std::string kw, name, extra;
    words >> kw >> name;
    if (kw != "vertex" || name.empty() || (words >> extra)) {
      throw InputError(where + ": expected 'vertex <name>' or '<u> -- <v>'");
    }
    if (lookup(name)) throw InputError(where + ": duplicate vertex '" + name + "'");
    names.push_back(name);
  }
  if (names.empty()) throw InputError("graph description is empty");
  return Graph(std::move(names), edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("graph description is empty");
  if (text[first] == '{') return parse_json_graph(text);
  return parse_terse_graph(text);
}

Neighborhoods neighborhoods(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) throw InputError("unknown vertex index " + std::to_string(v));
  return {g.neighbors(v), g.neighbors(v) | bit(v)};
}

bool is_connected_vertexset(const Graph& g, VertexSet a) {
  if ((a & ~g.all()) != 0) throw InputError("vertex set contains unknown vertices");
  if (a == 0) return false;
  VertexSet reached = a & (~a + 1);
  VertexSet frontier = reached;
  while (frontier != 0) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.neighbors(v);
    next &= a & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == a;
}

CoherentPartition coherent_components(const Graph& g) {
  CoherentPartition p;
  p.index.assign(g.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    for (int c = 0; c < p.size(); ++c) {
      int rep = std::countr_zero(p.components[c]);
      VertexSet pair = bit(v) | bit(rep);
      if ((g.neighbors(v) & ~pair) == (g.neighbors(rep) & ~pair)) {
        p.components[c] |= bit(v);
        p.index[v] = c;
        break;
      }
    }
    if (p.index[v] < 0) {
      p.index[v] = p.size();
      p.components.push_back(bit(v));
    }
  }
  return p;
}

VertexSet QuotientGraph::vertices_of(NodeSet nodes) const {
  VertexSet out = 0;
  for (int n : anosov::members(nodes)) out |= members[n];
  return out;
}

std::vector<std::pair<int, int>> QuotientGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b : anosov::members(adjacency[a])) {
      if (a <= b) out.emplace_back(a, b);
    }
  }
  return out;
}

QuotientGraph quotient_graph(const Graph& g, const CoherentPartition& p) {
  if (!(p == coherent_components(g))) {
    throw InputError("partition is not the coherent partition of the graph");
  }
  QuotientGraph q;
  q.members = p.components;
  q.adjacency.assign(p.size(), 0);
  for (auto c : p.components) q.weight.push_back(popcount(c));
  for (auto [u, v] : g.edges()) {
    int a = p.index[u];
    int b = p.index[v];
    q.adjacency[a] |= bit(b);
    q.adjacency[b] |= bit(a);
  }
  return q;
}

bool is_connected_componentset(const Graph& g, const QuotientGraph& q, NodeSet b) {
  if ((b & ~q.all()) != 0) throw InputError("node set contains unknown node ids");
  return is_connected_vertexset(g, q.vertices_of(b));
}

Graph complement_graph(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.names(), edges);
}

}  // namespace anosov
