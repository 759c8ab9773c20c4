#pragma once

#include <string>

#include "gog/graph.hpp"

namespace gog {

// Deterministic canonical text: vertex declarations then edge declarations,
// ids in lexicographic order, one per line. parse(serialize(g)) == g and
// serialize(parse(t)) is byte-identical for canonical t.
std::string serializeCanonical(const GraphOfGroups& g);

// Graphviz DOT: one node per vertex annotated with its label, one edge per
// edge annotated with label and both injections. Quotient-labeled vertices
// render as boxed subgraph summaries.
std::string serializeDot(const GraphOfGroups& g);

}  // namespace gog
