#include "gog/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace gog {

std::string sideName(Side s) { return s == Side::Origin ? "origin" : "terminus"; }

const GroupLabel& GraphOfGroups::vertexLabel(const std::string& id) const {
    auto it = vertices.find(id);
    if (it == vertices.end()) throw SemanticError(id, "no such vertex");
    return it->second;
}

const EdgeData& GraphOfGroups::edge(const std::string& id) const {
    auto it = edges.find(id);
    if (it == edges.end()) throw SemanticError(id, "no such edge");
    return it->second;
}

std::vector<std::pair<std::string, Side>> GraphOfGroups::incidentEnds(const std::string& v) const {
    std::vector<std::pair<std::string, Side>> ends;
    for (const auto& [id, e] : edges) {
        if (e.origin == v) ends.emplace_back(id, Side::Origin);
        if (e.terminus == v) ends.emplace_back(id, Side::Terminus);
    }
    return ends;
}

bool GraphOfGroups::isConnected() const {
    if (vertices.empty()) return false;
    std::set<std::string> seen;
    std::queue<std::string> q;
    q.push(vertices.begin()->first);
    seen.insert(vertices.begin()->first);
    while (!q.empty()) {
        std::string v = q.front();
        q.pop();
        for (const auto& [id, side] : incidentEnds(v)) {
            const std::string& w = edge(id).endpoint(otherSide(side));
            if (seen.insert(w).second) q.push(w);
        }
    }
    return seen.size() == vertices.size();
}

int GraphOfGroups::bettiNumber() const {
    // E - V + #components; connected graphs give E - V + 1
    std::map<std::string, std::string> parent;
    for (const auto& [v, _] : vertices) parent[v] = v;
    auto find = [&](std::string x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = static_cast<int>(vertices.size());
    for (const auto& [id, e] : edges) {
        std::string a = find(e.origin), b = find(e.terminus);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + components;
}

namespace {

// Is `inj` an injective homomorphism of edgeLabel into vertexLabel?
void checkInjectionFits(const std::string& where, const Injection& inj,
                        const GroupLabel& edgeLabel, const GroupLabel& vertexLabel) {
    using IK = Injection::Kind;
    using LK = GroupLabel::Kind;
    switch (inj.kind) {
        case IK::TrivialInto:
            if (!edgeLabel.isTrivial())
                throw SemanticError(where, "triv injection from a non-trivial edge label");
            return;
        case IK::CyclicMult:
            if (edgeLabel.kind != LK::InfCyclic)
                throw SemanticError(where, "*k injection needs an infinite cyclic edge label");
            if (vertexLabel.kind != LK::InfCyclic)
                throw SemanticError(where, "*k injection needs an infinite cyclic vertex label");
            if (inj.mult == 0) throw SemanticError(where, "zero multiplier is not injective");
            return;
        case IK::CyclicModMult: {
            if (vertexLabel.kind != LK::FiniteCyclic || vertexLabel.order != inj.mod)
                throw SemanticError(where, "*k%n injection needs vertex label Z/" +
                                               std::to_string(inj.mod));
            long long g = std::gcd(inj.mult, inj.mod);
            long long imageOrder = inj.mod / (g == 0 ? inj.mod : g);
            if (edgeLabel.isTrivial()) {
                if (imageOrder != 1) throw SemanticError(where, "non-trivial image of trivial group");
                return;
            }
            if (edgeLabel.kind != LK::FiniteCyclic)
                throw SemanticError(where, "*k%n injection needs a finite cyclic edge label");
            if (imageOrder != edgeLabel.order)
                throw SemanticError(where, "injection not injective: image order " +
                                               std::to_string(imageOrder) + " != " +
                                               std::to_string(edgeLabel.order));
            return;
        }
        case IK::NamedEmbedding:
            // opaque: trust the declaration, but an embedding into an
            // arithmetic label of a non-arithmetic group cannot exist
            if (vertexLabel.isArithmetic() && !edgeLabel.isArithmetic())
                throw SemanticError(where, "opaque embedding into an arithmetic label");
            if (vertexLabel.isTrivial() && !edgeLabel.isTrivial())
                throw SemanticError(where, "embedding of a non-trivial group into 1");
            return;
    }
}

}  // namespace

void GraphOfGroups::checkValid() const {
    if (vertices.empty()) throw SemanticError("", "graph has no vertices");
    for (const auto& [id, e] : edges) {
        if (!hasVertex(e.origin)) throw SemanticError(id, "dangling origin " + e.origin);
        if (!hasVertex(e.terminus)) throw SemanticError(id, "dangling terminus " + e.terminus);
        checkInjectionFits(id + "/origin", e.injOrigin, e.label, vertexLabel(e.origin));
        checkInjectionFits(id + "/terminus", e.injTerminus, e.label, vertexLabel(e.terminus));
    }
    if (!isConnected()) throw SemanticError("", "graph is not connected");
    if (!base.empty() && !hasVertex(base)) throw SemanticError(base, "base is not a vertex");
    for (const auto& [v, label] : vertices)
        if (label.kind == GroupLabel::Kind::Quotient) label.inner->checkValid();
}

void GraphOfGroups::normalizeBase() {
    if (base.empty() || !hasVertex(base)) base = vertices.empty() ? "" : vertices.begin()->first;
}

bool injectionOnto(const Injection& inj, const GroupLabel& edgeLabel,
                   const GroupLabel& vertexLabel) {
    using IK = Injection::Kind;
    switch (inj.kind) {
        case IK::TrivialInto:
            return vertexLabel.isTrivial();
        case IK::CyclicMult:
            return inj.mult == 1 || inj.mult == -1;
        case IK::CyclicModMult:
            return std::gcd(inj.mult, inj.mod) == 1 ||
                   (edgeLabel.isTrivial() && vertexLabel.isTrivial());
        case IK::NamedEmbedding:
            // onto only when labels coincide syntactically and are opaque of
            // the same shape; conservative otherwise
            return false;
    }
    return false;
}

namespace {

bool edgeMatches(const EdgeData& a, const EdgeData& b,
                 const std::map<std::string, std::string>& vmap, bool& flipped) {
    if (a.label != b.label) return false;
    const std::string& mo = vmap.at(a.origin);
    const std::string& mt = vmap.at(a.terminus);
    if (mo == b.origin && mt == b.terminus && a.injOrigin == b.injOrigin &&
        a.injTerminus == b.injTerminus) {
        flipped = false;
        return true;
    }
    if (mo == b.terminus && mt == b.origin && a.injOrigin == b.injTerminus &&
        a.injTerminus == b.injOrigin) {
        flipped = true;
        return true;
    }
    return false;
}

bool matchEdges(const GraphOfGroups& a, const GraphOfGroups& b,
                const std::map<std::string, std::string>& vmap,
                std::vector<std::string>& aEdges, size_t i, std::set<std::string>& used) {
    if (i == aEdges.size()) return true;
    const EdgeData& ea = a.edges.at(aEdges[i]);
    for (const auto& [idB, eb] : b.edges) {
        if (used.count(idB)) continue;
        bool flipped;
        if (!edgeMatches(ea, eb, vmap, flipped)) continue;
        used.insert(idB);
        if (matchEdges(a, b, vmap, aEdges, i + 1, used)) return true;
        used.erase(idB);
    }
    return false;
}

bool matchVertices(const GraphOfGroups& a, const GraphOfGroups& b,
                   std::vector<std::string>& aVerts, size_t i,
                   std::map<std::string, std::string>& vmap, std::set<std::string>& used) {
    if (i == aVerts.size()) {
        std::vector<std::string> aEdges;
        for (const auto& [id, _] : a.edges) aEdges.push_back(id);
        std::set<std::string> usedEdges;
        return matchEdges(a, b, vmap, aEdges, 0, usedEdges);
    }
    const std::string& va = aVerts[i];
    const GroupLabel& la = a.vertices.at(va);
    for (const auto& [vb, lb] : b.vertices) {
        if (used.count(vb) || la != lb) continue;
        if (a.valence(va) != b.valence(vb)) continue;
        vmap[va] = vb;
        used.insert(vb);
        if (matchVertices(a, b, aVerts, i + 1, vmap, used)) return true;
        vmap.erase(va);
        used.erase(vb);
    }
    return false;
}

}  // namespace

bool isomorphic(const GraphOfGroups& a, const GraphOfGroups& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    std::vector<std::string> aVerts;
    for (const auto& [v, _] : a.vertices) aVerts.push_back(v);
    std::map<std::string, std::string> vmap;
    std::set<std::string> used;
    return matchVertices(a, b, aVerts, 0, vmap, used);
}

}  // namespace gog
