#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gog/label.hpp"

namespace gog {

enum class Side { Origin, Terminus };
inline Side otherSide(Side s) { return s == Side::Origin ? Side::Terminus : Side::Origin; }
std::string sideName(Side s);

struct EdgeData {
    std::string origin;
    std::string terminus;
    GroupLabel label;
    Injection injOrigin;
    Injection injTerminus;

    const std::string& endpoint(Side s) const { return s == Side::Origin ? origin : terminus; }
    const Injection& inj(Side s) const { return s == Side::Origin ? injOrigin : injTerminus; }
    Injection& inj(Side s) { return s == Side::Origin ? injOrigin : injTerminus; }
    bool isLoop() const { return origin == terminus; }

    bool operator==(const EdgeData& o) const {
        return origin == o.origin && terminus == o.terminus && label == o.label &&
               injOrigin == o.injOrigin && injTerminus == o.injTerminus;
    }
};

struct SemanticError : std::runtime_error {
    std::string where;  // vertex or edge id
    SemanticError(std::string where_, const std::string& msg)
        : std::runtime_error(where_.empty() ? msg : where_ + ": " + msg), where(std::move(where_)) {}
};

// Finite connected graph with group labels on vertices and edges and an
// injection of each edge label into both endpoint labels. Each edge is
// stored once with a canonical orientation; reversal is derived.
// Immutable by convention after construction.
struct GraphOfGroups {
    std::map<std::string, GroupLabel> vertices;
    std::map<std::string, EdgeData> edges;
    std::string base;  // defaults to the lexicographically least vertex id

    bool operator==(const GraphOfGroups& o) const {
        return vertices == o.vertices && edges == o.edges && base == o.base;
    }

    bool hasVertex(const std::string& id) const { return vertices.count(id) > 0; }
    bool hasEdge(const std::string& id) const { return edges.count(id) > 0; }
    const GroupLabel& vertexLabel(const std::string& id) const;
    const EdgeData& edge(const std::string& id) const;

    // (edge id, side of that edge attached to v); loops appear twice
    std::vector<std::pair<std::string, Side>> incidentEnds(const std::string& v) const;
    int valence(const std::string& v) const { return static_cast<int>(incidentEnds(v).size()); }

    bool isConnected() const;
    int bettiNumber() const;  // first Betti number of the underlying graph

    // Throws SemanticError on structural problems (dangling ids,
    // injection/label mismatch, disconnected graph, non-injective maps).
    void checkValid() const;

    // Sets base to the least vertex id if unset or dangling.
    void normalizeBase();
};

// Does this injection map the edge label onto the whole vertex label?
// Conservative: opaque embeddings are never certified onto.
bool injectionOnto(const Injection& inj, const GroupLabel& edgeLabel, const GroupLabel& vertexLabel);

// Label-preserving graph isomorphism (small graphs, backtracking).
bool isomorphic(const GraphOfGroups& a, const GraphOfGroups& b);

}  // namespace gog
