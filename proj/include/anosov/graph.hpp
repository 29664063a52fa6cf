#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anosov {

/// Vertex sets and node sets are 64-bit masks; graphs are capped at 64 vertices.
using VertexSet = std::uint64_t;
using NodeSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int i) { return VertexSet{1} << i; }
inline int popcount(std::uint64_t s) { return std::popcount(s); }
inline bool contains(std::uint64_t s, int i) { return (s >> i) & 1U; }
inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Indices of the set bits in increasing order.
std::vector<int> members(std::uint64_t s);

/// Finite simple undirected graph with named vertices.
///
/// Vertex indices follow declaration order, and that order is the total
/// order used by every word/trace computation downstream. Immutable after
/// construction.
class Graph {
 public:
  Graph() = default;

  /// Validates names (distinct, non-empty) and edges (no loops, no
  /// duplicates, endpoints in range). Throws InputError.
  Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> find(std::string_view name) const;
  /// Like find() but throws InputError for unknown names.
  int index_of(std::string_view name) const;

  bool adjacent(int u, int v) const { return contains(adj_.at(u), v); }
  VertexSet neighbors(int v) const { return adj_.at(v); }
  VertexSet all() const { return full_mask(size()); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
};

/// Parses either the JSON form {"vertices":[...],"edges":[[u,v],...]} or the
/// terse line form ("u -- v" edges, "vertex u" declarations, '#' comments).
Graph parse_graph(std::string_view text);

struct Neighborhoods {
  VertexSet open = 0;
  VertexSet closed = 0;
};

Neighborhoods neighborhoods(const Graph& g, int v);

/// Connectivity of the induced subgraph. The empty set is not connected.
bool is_connected_vertexset(const Graph& g, VertexSet a);

/// Partition of the vertices into coherent components: alpha ~ beta iff the
/// transposition (alpha beta) is a graph automorphism. Components are sorted
/// by their least vertex; ids are positions in that order.
struct CoherentPartition {
  std::vector<VertexSet> components;
  std::vector<int> index;  // vertex -> component id

  int size() const { return static_cast<int>(components.size()); }
  friend bool operator==(const CoherentPartition&, const CoherentPartition&) = default;
};

CoherentPartition coherent_components(const Graph& g);

/// Vertex-weighted quotient graph on coherent components. adjacency[i] has
/// bit i set iff node i carries a loop.
struct QuotientGraph {
  std::vector<VertexSet> members;  // node -> underlying vertices
  std::vector<int> weight;
  std::vector<NodeSet> adjacency;

  int size() const { return static_cast<int>(weight.size()); }
  bool has_loop(int node) const { return contains(adjacency[node], node); }
  bool has_edge(int a, int b) const { return contains(adjacency[a], b); }
  NodeSet all() const { return full_mask(size()); }
  /// Vertices underlying a node set.
  VertexSet vertices_of(NodeSet nodes) const;
  /// Edges {a, b} with a <= b; loops appear as {a, a}.
  std::vector<std::pair<int, int>> edges() const;
};

/// Throws InputError when p is not the coherent partition of g.
QuotientGraph quotient_graph(const Graph& g, const CoherentPartition& p);
inline QuotientGraph quotient_graph(const Graph& g) {
  return quotient_graph(g, coherent_components(g));
}

/// Connectivity of the union of the underlying vertices in g (not
/// connectivity inside the quotient graph).
bool is_connected_componentset(const Graph& g, const QuotientGraph& q, NodeSet b);

Graph complement_graph(const Graph& g);

}  // namespace anosov
