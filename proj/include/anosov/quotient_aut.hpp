#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "anosov/graph.hpp"
#include "anosov/permutation.hpp"

namespace anosov {

struct GroupCaps {
  std::size_t max_group_order = 10080;
  std::size_t max_subgroups = 5000;
};

/// Weight-, edge- and loop-preserving bijections of the quotient graph nodes.
PermGroup automorphisms(const QuotientGraph& q, const GroupCaps& caps = {});

/// True iff p preserves weights, edges and loops of q.
bool is_quotient_automorphism(const QuotientGraph& q, const Permutation& p);

/// One subgroup per conjugacy class of subgroups of g, ordered by
/// (order, sorted element list). The trivial group comes first.
std::vector<PermGroup> subgroup_classes(const PermGroup& g, const GroupCaps& caps = {});

/// Image of the Galois action on the quotient graph: a subgroup H of the
/// quotient automorphism group together with the image tau of complex
/// conjugation (tau in H, tau^2 = id; tau = id for real forms).
struct GaloisDatum {
  PermGroup group;
  Permutation tau;
  std::string label;

  bool is_standard() const { return group.order() == 1; }
  bool is_real() const { return tau.is_identity(); }
};

/// Throws InputError unless d is a valid datum for q.
void validate_datum(const QuotientGraph& q, const GaloisDatum& d);

/// The standard datum (trivial group, tau = id).
GaloisDatum standard_datum(const QuotientGraph& q);

/// Every (H, tau) up to simultaneous conjugation by the automorphism group;
/// the standard datum is first.
std::vector<GaloisDatum> galois_data(const QuotientGraph& q, const GroupCaps& caps = {});

/// True iff some automorphism phi of q maps H1 onto H2 and tau1 onto tau2 by
/// conjugation.
bool are_equivalent(const QuotientGraph& q, const GaloisDatum& a, const GaloisDatum& b,
                    const GroupCaps& caps = {});

}  // namespace anosov
