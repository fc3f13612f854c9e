#include "boolnet/dot.hpp"

#include <algorithm>
#include <sstream>

namespace boolnet {

std::string interaction_graph_dot(const InteractionGraph& g,
                                  const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "digraph interaction_graph {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (int v : g.vertices().indices())
    out << "  \"" << names[static_cast<std::size_t>(v)] << "\";\n";
  for (const SignedEdge& e : g.edges()) {
    out << "  \"" << names[static_cast<std::size_t>(e.source)] << "\" -> \""
        << names[static_cast<std::size_t>(e.target)] << "\"";
    if (e.sign == Sign::positive)
      out << " [label=\"+\"];\n";
    else
      out << " [label=\"-\", style=dashed, arrowhead=tee];\n";
  }
  out << "}\n";
  return out.str();
}

std::string transition_graph_dot(const BooleanNetwork& f,
                                 const AnalysisLimits& limits) {
  AttractorSet terminal = attractors(f, limits);
  StateSet boxed(f.dimension());
  for (const Attractor& a : terminal.items)
    for (const State& s : a.states) boxed.insert(s);

  std::vector<State> all;
  all.reserve(std::size_t{1} << f.dimension());
  for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << f.dimension()); ++raw)
    all.emplace_back(static_cast<std::uint32_t>(raw), f.dimension());
  std::sort(all.begin(), all.end());

  std::ostringstream out;
  out << "digraph transition_graph {\n";
  out << "  node [shape=ellipse];\n";
  for (const State& s : all) {
    out << "  \"" << s.to_string() << "\"";
    if (boxed.contains(s)) out << " [shape=box]";
    out << ";\n";
  }
  for (const auto& [from, to] : transition_edges(f, limits))
    out << "  \"" << from.to_string() << "\" -> \"" << to.to_string()
        << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace boolnet
