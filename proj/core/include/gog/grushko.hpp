#pragma once

#include <map>
#include <string>
#include <vector>

#include "gog/graph.hpp"

namespace gog {

struct GrushkoFingerprint {
    std::map<std::string, int> atoms;  // multiset of atom names on non-trivial vertices
    int rank = 0;                      // first Betti number
    bool operator==(const GrushkoFingerprint&) const = default;
    std::string str() const;
};

// Requires every edge label Trivial (SemanticError otherwise).
GrushkoFingerprint grushkoFingerprint(const GraphOfGroups& g);

struct GrushkoVerdict {
    bool isGrushkoTree = false;
    std::vector<std::string> reasons;
};

// Grushko tree: trivial edge labels, every non-trivial vertex label an Atom
// flagged freely_indecomposable (Z counts as freely decomposable), and no
// collapsible valence-1 vertex.
GrushkoVerdict grushkoVerdict(const GraphOfGroups& g);

enum class SpaceComparison { SameSpace, DifferentSpace, Unknown };

// Same deformation space iff fingerprints agree; Unknown when either input
// fails the Grushko verdict. Atom identity is by name.
SpaceComparison grushkoCompare(const GraphOfGroups& a, const GraphOfGroups& b);

}  // namespace gog
