#pragma once

#include <string>

#include <json.hpp>

#include "anosov/decider.hpp"
#include "anosov/graph.hpp"
#include "anosov/lyndon.hpp"
#include "anosov/quotient_aut.hpp"
#include "anosov/witness.hpp"

namespace anosov {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Json quotient_to_json(const Graph& g, const QuotientGraph& q);

/// {"generators":[cycles...],"tau":cycles,"label":str}; cycles are lists of
/// component ids. Validates against q.
GaloisDatum datum_from_json(const QuotientGraph& q, const nlohmann::json& j);
Json datum_to_json(const GaloisDatum& d);

Json verdict_to_json(const Verdict& v);

/// Bracketing of a basis element over vertex names, e.g. "[a,[a,b]]".
std::string bracket_string(const Graph& g, const LyndonBasis& basis, int index);
Json basis_to_json(const Graph& g, const LyndonBasis& basis);

Json weights_to_json(const Graph& g, const std::set<WeightVector>& weights);

Json witness_to_json(const Graph& g, const AnosovWitness& w);

}  // namespace anosov
