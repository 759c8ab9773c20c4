#pragma once

#include <map>
#include <string>
#include <vector>

#include "gog/graph.hpp"
#include "gog/orbifold.hpp"

namespace gog {

// Declared position of an incident (or relative) subgroup in the orbifold
// group of a QH vertex.
struct QhAssignment {
    enum class Kind { FiniteImage, InBoundary };
    Kind kind = Kind::FiniteImage;
    int component = -1;       // boundary component index
    bool finiteIndex = false; // infinite image in the boundary group
};

struct QhData {
    GroupLabel fiber;
    OrbifoldSig sig;
    std::map<std::string, QhAssignment> incident;  // incident edge id -> assignment
    std::map<std::string, QhAssignment> relative;  // declared relative subgroups
};

struct QhReport {
    bool isQh = false;
    std::vector<int> usedComponents;
    std::vector<int> unusedComponents;
    SccVerdict flexibility = SccVerdict::Unknown;
    std::vector<std::string> problems;
};

// Checks the declared extended-boundary data for vertex v: every incident
// edge assigned exactly once, components in range; a component is used iff
// some assignment lands in it with finite index. Flexibility combines the
// essential-curve test with the fiber's declared behavior.
QhReport validateQh(const GraphOfGroups& g, const std::string& v, const QhData& data);

struct CutSystem {
    std::vector<OrbifoldSig> pieces;
    struct Slot {
        int piece;
        int circle;  // index into the piece's circles; must be WholeBoundary
    };
    std::vector<std::pair<Slot, Slot>> curves;
};

struct DualTree {
    GraphOfGroups graph;                  // Atom vertex per piece, Z edge per curve
    std::vector<OrbifoldSig> pieceSigs;   // pieceSigs[i] belongs to atom "piece<i>"
};

// Graph of groups dual to a system of disjoint simple closed curves cutting
// sig into pieces. Verifies exact chi additivity and slot accounting.
DualTree dualTree(const OrbifoldSig& sig, const CutSystem& cut);

struct FillMark {
    GroupLabel subgroup;   // H_i
    std::string atomName;  // R_i, flagged property_fa
};

// Star with center Quotient(g) and one leaf H_i x Atom(R_i) per mark,
// amalgamated over H_i.
GraphOfGroups fill(const GraphOfGroups& g, const std::vector<FillMark>& marks);

}  // namespace gog
