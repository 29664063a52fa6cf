#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anosov/graph.hpp"
#include "anosov/quotient_aut.hpp"

namespace anosov {

/// z on each node, stored doubled: 2 means z = 1, 1 means z = 1/2.
std::vector<int> z_function_twice(const QuotientGraph& q, const GaloisDatum& d);

/// Non-empty node sets whose underlying vertices induce a connected
/// subgraph, ordered by (size, sorted member ids).
std::vector<NodeSet> connected_subsets(const Graph& g, const QuotientGraph& q,
                                       std::size_t max_sets = std::size_t{1} << 22);

/// Strict order used for every enumeration of node sets.
bool nodeset_less(NodeSet a, NodeSet b);

/// A set A, its closure A u tau(A), and the sums (doubled) over the closure.
struct SetMargin {
  NodeSet set = 0;
  NodeSet closure = 0;
  long long twice_sum = 0;     // 2 * sum of z * weight over the closure
  long long twice_margin = 0;  // twice_sum - 2c

  /// The sum as "p/q" in lowest terms.
  std::string sum_string() const;
  friend bool operator==(const SetMargin&, const SetMargin&) = default;
};

struct Verdict {
  bool anosov = false;
  int c = 0;
  std::string datum;
  std::optional<SetMargin> witness;  // present iff !anosov
  std::vector<SetMargin> binding;    // minimal-margin sets when anosov

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Decision rule over all data: every non-empty connected A with
/// A u tau(A) H-invariant must satisfy c < sum of z * weight over
/// A u tau(A). Throws InputError for c < 2.
Verdict decide(const Graph& g, int c, const GaloisDatum& d);

/// Closed form for the standard datum: every component has weight > 1 and
/// every quotient edge (a loop counts its node once) has weight sum > c.
Verdict decide_standard(const Graph& g, int c);

/// Real data (tau = id): every connected H-invariant A has weight sum > c.
/// Throws InputError if tau is not the identity.
Verdict decide_real(const Graph& g, int c, const GaloisDatum& d);

struct Classification {
  int c = 0;
  std::vector<GaloisDatum> data;
  std::vector<Verdict> verdicts;  // parallel to data

  bool any_anosov() const;
  bool standard_anosov() const { return !verdicts.empty() && verdicts.front().anosov; }
};

Classification classify(const Graph& g, int c, const GroupCaps& caps = {});

/// Subset-by-subset reference implementation of decide for at most 12
/// nodes. Throws CapExceeded beyond that.
Verdict oracle_decide(const Graph& g, int c, const GaloisDatum& d);

/// Image of a node set under a permutation.
NodeSet apply(const Permutation& p, NodeSet s);

}  // namespace anosov
