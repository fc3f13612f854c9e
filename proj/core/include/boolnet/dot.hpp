#pragma once

#include <string>

#include "boolnet/dynamics.hpp"
#include "boolnet/interaction.hpp"

namespace boolnet {

/// Graphviz rendering of the interaction graph. Positive edges are solid and
/// labeled "+"; negative edges are dashed with a tee arrowhead and labeled
/// "-". Output is deterministic: nodes in index order, edges sorted.
std::string interaction_graph_dot(const InteractionGraph& g,
                                  const std::vector<std::string>& names);

/// Graphviz rendering of the asynchronous transition graph. States are
/// binary-string labels in node order; attractor states are drawn as boxes.
std::string transition_graph_dot(const BooleanNetwork& f,
                                 const AnalysisLimits& limits = {});

}  // namespace boolnet
