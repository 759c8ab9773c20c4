#pragma once

#include <string>
#include <vector>

#include "gog/graph.hpp"

namespace gog {

struct ValidationReport {
    // edges whose label is outside the requested class
    std::vector<std::string> classViolations;
    // valence-1 vertices whose unique incident injection is onto the vertex label
    std::vector<std::string> nonMinimalVertices;

    bool pass() const { return classViolations.empty(); }
};

ValidationReport validate(const GraphOfGroups& g, ClassSpec spec);

}  // namespace gog
