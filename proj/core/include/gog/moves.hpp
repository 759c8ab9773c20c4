#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gog/graph.hpp"
#include "gog/word.hpp"

namespace gog {

struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Elementary deformation moves.

// Collapse a non-loop edge whose injection at fromSide is onto; the fromSide
// endpoint merges into the other endpoint.
struct DeformationCollapse {
    std::string edge;
    Side fromSide = Side::Origin;
    bool operator==(const DeformationCollapse&) const = default;
};

// Inverse of a collapse: a new vertex, a new edge newVertex -> atVertex with
// an onto injection on the newVertex side, and an explicit reattachment of
// some edge ends from atVertex to the new vertex.
struct Expansion {
    std::string atVertex;
    std::string newVertex;
    GroupLabel newVertexLabel;
    std::string newEdge;
    GroupLabel newEdgeLabel;
    Injection injNew;  // origin side (newVertex); must be onto newVertexLabel
    Injection injOld;  // terminus side (atVertex)
    std::map<std::pair<std::string, Side>, Injection> moved;  // end -> new injection
    bool operator==(const Expansion&) const = default;
};

// Move one end of `moving` across `across`, from their common endpoint to
// the far endpoint of `across`; requires the moving injection image to lie
// inside the across image at the common vertex.
struct Slide {
    std::string moving;
    Side movingEnd = Side::Origin;
    std::string across;
    Side acrossEnd = Side::Origin;
    bool operator==(const Slide&) const = default;
};

struct Subdivide {
    std::string edge;
    std::string newVertex;
    std::string newEdge1;  // origin half
    std::string newEdge2;  // terminus half
    bool operator==(const Subdivide&) const = default;
};

using Move = std::variant<DeformationCollapse, Expansion, Slide, Subdivide>;

std::string moveToText(const Move& m);
Move moveFromText(const std::string& line);

struct MoveResult {
    GraphOfGroups graph;
    // canonical word rewriting carrying ellipticity across the move
    LoopWord transport(const LoopWord& w) const;

    // captured data for transport
    Move applied;
    GraphOfGroups before;
};

MoveResult applyMove(const GraphOfGroups& g, const Move& m);

// Inverse move of m as applicable to applyMove(g, m).graph.
Move invertMove(const GraphOfGroups& before, const Move& m);

struct Certificate {
    std::vector<Move> script;
    GraphOfGroups source;
    GraphOfGroups target;

    // Replays the script on source; throws MoveError if a step fails.
    GraphOfGroups replay() const;
    std::string text() const;  // line-based move script
};

// Apply deformation collapses until none applies. Deterministic order:
// least (edge, side).
std::pair<GraphOfGroups, Certificate> reduceGraph(const GraphOfGroups& g);

// Collapse an arbitrary edge set: each connected component of the chosen
// subgraph becomes one vertex labeled Quotient(component verbatim), named by
// its least vertex id; surviving edge ends into a component become opaque
// embeddings tagged with the original endpoint.
GraphOfGroups collapseEdges(const GraphOfGroups& g, const std::set<std::string>& edges);
// selector form: all edges whose label is NOT in the class
GraphOfGroups collapseEdgesFailing(const GraphOfGroups& g, ClassSpec keep);

// Replace vertex v by `splitting` (vertex/edge ids prefixed "v_"); each
// incident end of v is reattached per `attachment`.
struct AttachPoint {
    std::string splittingVertex;
    Injection injection;
};
GraphOfGroups refineAtVertex(const GraphOfGroups& g, const std::string& v,
                             const GraphOfGroups& splitting,
                             const std::map<std::pair<std::string, Side>, AttachPoint>& attachment,
                             std::vector<std::string>* insertedEdges = nullptr);

struct RefinePlanEntry {
    GraphOfGroups splitting;
    std::map<std::pair<std::string, Side>, AttachPoint> attachment;
};

struct RefineReport {
    bool collapseBackOk = false;  // collapsing inserted edges recovers t1
    bool labelsOk = false;        // every new edge label is an old or plan edge label
    std::vector<std::string> sampleViolations;  // words violating the both-collapses clause
    std::vector<std::string> insertedEdges;
    bool ok() const { return collapseBackOk && labelsOk && sampleViolations.empty(); }
};

// Blow up each planned vertex into its splitting. Samples are words over
// the refined graph; the report checks that each is elliptic in the
// refinement iff it is elliptic in both the old-edge and new-edge collapses.
std::pair<GraphOfGroups, RefineReport> refineElliptic(
    const GraphOfGroups& t1, const std::map<std::string, RefinePlanEntry>& plan,
    const std::vector<LoopWord>& samples = {});

}  // namespace gog
