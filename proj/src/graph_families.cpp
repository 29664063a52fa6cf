#include "anosov/graph_families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "anosov/errors.hpp"

namespace anosov::families {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void require_positive(int n) {
  if (n < 0) throw PreconditionError("family size must be non-negative");
}

}  // namespace

Graph empty(int n) {
  require_positive(n);
  return Graph(numbered("v", n), {});
}

Graph complete(int n) {
  require_positive(n);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(numbered("v", n), e);
}

Graph path(int n) {
  require_positive(n);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(numbered("v", n), e);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(numbered("v", n), e);
}

Graph complete_bipartite(int n, int m) {
  require_positive(n);
  require_positive(m);
  auto names = numbered("a", n);
  auto bs = numbered("b", m);
  names.insert(names.end(), bs.begin(), bs.end());
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) e.emplace_back(u, n + v);
  return Graph(std::move(names), e);
}

Graph two_cliques(int n) {
  require_positive(n);
  auto names = numbered("a", n);
  auto bs = numbered("b", n);
  names.insert(names.end(), bs.begin(), bs.end());
  std::vector<std::pair<int, int>> e;
  for (int base : {0, n})
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.emplace_back(base + u, base + v);
  return Graph(std::move(names), e);
}

Graph disjoint_union(const Graph& left, const Graph& right) {
  std::vector<std::string> names;
  for (const auto& n : left.names()) names.push_back("L." + n);
  for (const auto& n : right.names()) names.push_back("R." + n);
  auto e = left.edges();
  for (auto [u, v] : right.edges()) e.emplace_back(u + left.size(), v + left.size());
  return Graph(std::move(names), e);
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

std::string rooted_code(const Adjacency& adj, int root, int parent) {
  std::vector<std::string> kids;
  for (int c : adj[root])
    if (c != parent) kids.push_back(rooted_code(adj, c, root));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// AHU code rooted at the center; the smaller code when the center is an edge.
std::string tree_code(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer) {
      for (int w : adj[leaf]) {
        if (--degree[w] == 1) next.push_back(w);
      }
      degree[leaf] = 0;
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    auto code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> nonisomorphic_trees(int n) {
  if (n < 1) throw PreconditionError("trees need at least one vertex");
  std::vector<Adjacency> current{Adjacency(1)};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Adjacency> next;
    for (const auto& t : current) {
      for (int v = 0; v < size - 1; ++v) {
        Adjacency grown = t;
        grown.emplace_back();
        grown[v].push_back(size - 1);
        grown[size - 1].push_back(v);
        if (seen.insert(tree_code(grown)).second) next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& t : current) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v : t[u])
        if (u < v) e.emplace_back(u, v);
    out.emplace_back(numbered("v", n), e);
  }
  return out;
}

}  // namespace anosov::families
