#pragma once

#include <vector>

#include "anosov/graph.hpp"

namespace anosov::families {

// Named families used by the examples, tests and the CLI. Vertex names are
// v1..vn unless noted.

Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
/// K_{n,m} with vertices a1..an, b1..bm, declared in that order.
Graph complete_bipartite(int n, int m);
/// Two disjoint copies of K_n: a1..an and b1..bn.
Graph two_cliques(int n);
/// Disjoint union; vertex names get an "L." / "R." prefix.
Graph disjoint_union(const Graph& left, const Graph& right);

/// All trees on n vertices up to isomorphism (n >= 1), each with vertices
/// v1..vn.
std::vector<Graph> nonisomorphic_trees(int n);

}  // namespace anosov::families
