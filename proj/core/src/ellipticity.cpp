#include "gog/ellipticity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace gog {

EllipticityVerdict isElliptic(const GraphOfGroups& g, const LoopWord& w,
                              const std::set<std::string>* collapsed) {
    EllipticityVerdict v;
    try {
        v.witness = reduceWord(g, w, /*cyclic=*/true);
    } catch (const OpaquePinch& e) {
        v.status = EllipticityVerdict::Status::Unknown;
        v.reason = e.what();
        return v;
    }
    int surviving = 0;
    for (const LoopWord::Step& s : v.witness.steps)
        if (!collapsed || collapsed->count(s.t.edge) == 0) ++surviving;
    if (surviving == 0) {
        v.status = EllipticityVerdict::Status::Elliptic;
    } else {
        v.status = EllipticityVerdict::Status::Hyperbolic;
        v.translationLength = surviving;
    }
    return v;
}

SubgroupVerdict subgroupElliptic(const GraphOfGroups& g, const std::vector<LoopWord>& generators,
                                 const std::set<std::string>* collapsed) {
    SubgroupVerdict v;
    auto check = [&](const LoopWord& w) -> bool {
        EllipticityVerdict e = isElliptic(g, w, collapsed);
        if (e.unknown()) {
            v.status = SubgroupVerdict::Status::Unknown;
            v.reason = e.reason;
            return false;
        }
        if (e.hyperbolic()) {
            v.status = SubgroupVerdict::Status::NotElliptic;
            v.witness = w;
            return false;
        }
        return true;
    };
    for (const LoopWord& w : generators)
        if (!check(w)) return v;
    // Serre: pairwise products of elliptic generators elliptic => the
    // generated subgroup fixes a point
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = i + 1; j < generators.size(); ++j)
            if (!check(generators[i].concat(g, generators[j]))) return v;
    v.status = SubgroupVerdict::Status::Elliptic;
    return v;
}

namespace {

// Traversal path from `from` to `to`; edge filter optional.
std::vector<Traversal> bfsPath(const GraphOfGroups& g, const std::string& from,
                               const std::string& to, const std::set<std::string>* allowed) {
    std::map<std::string, std::pair<std::string, Traversal>> pred;  // vertex -> (prev, step)
    std::queue<std::string> q;
    q.push(from);
    pred[from] = {from, {}};
    while (!q.empty() && !pred.count(to)) {
        std::string v = q.front();
        q.pop();
        for (const auto& [id, side] : g.incidentEnds(v)) {
            if (allowed && !allowed->count(id)) continue;
            const std::string& w = g.edge(id).endpoint(otherSide(side));
            if (pred.count(w)) continue;
            // departing from side `side`: reversed iff side is Terminus
            pred[w] = {v, Traversal{id, side == Side::Terminus}};
            q.push(w);
        }
    }
    if (!pred.count(to)) throw SemanticError(to, "no path from " + from + " to " + to);
    std::vector<Traversal> path;
    for (std::string v = to; v != from; v = pred[v].first) path.push_back(pred[v].second);
    std::reverse(path.begin(), path.end());
    return path;
}

// Loop word: along `out`, then elem (at the far end), then back.
LoopWord pathConjugate(const GraphOfGroups& g, const std::string& base,
                       const std::vector<Traversal>& out, const VertexElem& elem) {
    LoopWord w = LoopWord::identity(g, base);
    std::string at = base;
    for (const Traversal& t : out) {
        at = g.edge(t.edge).endpoint(t.arrivalSide());
        w.steps.push_back({t, VertexElem::identityFor(g.vertexLabel(at))});
    }
    if (w.steps.empty())
        w.head = w.head * elem;
    else
        w.steps.back().g = w.steps.back().g * elem;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
        Traversal back = it->inverse();
        at = g.edge(back.edge).endpoint(back.arrivalSide());
        w.steps.push_back({back, VertexElem::identityFor(g.vertexLabel(at))});
    }
    return w;
}

// Like pathConjugate but the middle is a closed loop at the far end.
LoopWord pathConjugateLoop(const GraphOfGroups& g, const std::string& base,
                           const std::vector<Traversal>& out,
                           const std::vector<Traversal>& loop) {
    LoopWord w = LoopWord::identity(g, base);
    auto push = [&](const Traversal& t) {
        const std::string& at = g.edge(t.edge).endpoint(t.arrivalSide());
        w.steps.push_back({t, VertexElem::identityFor(g.vertexLabel(at))});
    };
    for (const Traversal& t : out) push(t);
    for (const Traversal& t : loop) push(t);
    for (auto it = out.rbegin(); it != out.rend(); ++it) push(it->inverse());
    return w;
}

std::vector<VertexElem> labelGenerators(const GroupLabel& label) {
    switch (label.kind) {
        case GroupLabel::Kind::Trivial: return {};
        case GroupLabel::Kind::InfCyclic: return {VertexElem::arith(1, 0)};
        case GroupLabel::Kind::FiniteCyclic: return {VertexElem::arith(1, label.order)};
        default: return {VertexElem::symbol("g")};
    }
}

}  // namespace

std::vector<LoopWord> componentGenerators(const GraphOfGroups& g,
                                          const std::set<std::string>& subgraphEdges,
                                          const std::string& root) {
    GraphOfGroups gg = g;
    gg.normalizeBase();
    const std::string& base = gg.base;
    std::vector<Traversal> P = bfsPath(gg, base, root, nullptr);

    // component of root in the chosen subgraph, with a spanning tree
    std::map<std::string, std::vector<Traversal>> toVertex;  // root -> v inside subgraph
    std::set<std::string> treeEdges;
    std::queue<std::string> q;
    q.push(root);
    toVertex[root] = {};
    while (!q.empty()) {
        std::string v = q.front();
        q.pop();
        for (const auto& [id, side] : gg.incidentEnds(v)) {
            if (!subgraphEdges.count(id)) continue;
            const std::string& w = gg.edge(id).endpoint(otherSide(side));
            if (toVertex.count(w)) continue;
            treeEdges.insert(id);
            auto path = toVertex[v];
            path.push_back(Traversal{id, side == Side::Terminus});
            toVertex[w] = std::move(path);
            q.push(w);
        }
    }

    std::vector<LoopWord> gens;
    for (const auto& [v, Q] : toVertex) {
        for (const VertexElem& e : labelGenerators(gg.vertexLabel(v))) {
            std::vector<Traversal> full = P;
            full.insert(full.end(), Q.begin(), Q.end());
            gens.push_back(pathConjugate(gg, base, full, e));
        }
    }
    // stable letters of non-tree subgraph edges inside the component
    for (const std::string& id : subgraphEdges) {
        if (treeEdges.count(id)) continue;
        const EdgeData& e = gg.edge(id);
        if (!toVertex.count(e.origin)) continue;  // other component
        std::vector<Traversal> loop = toVertex[e.origin];
        loop.push_back(Traversal{id, false});
        const auto& back = toVertex[e.terminus];
        for (auto it = back.rbegin(); it != back.rend(); ++it) loop.push_back(it->inverse());
        gens.push_back(pathConjugateLoop(gg, base, P, loop));
    }
    return gens;
}

DominationVerdict dominates(const GraphOfGroups& g, const std::set<std::string>& e1,
                            const std::set<std::string>& e2,
                            const std::vector<LoopWord>& samples) {
    DominationVerdict v;
    for (const LoopWord& w : samples) {
        EllipticityVerdict in1 = isElliptic(g, w, &e1);
        EllipticityVerdict in2 = isElliptic(g, w, &e2);
        if (in1.unknown() || in2.unknown()) {
            v.status = DominationVerdict::Status::Inconclusive;
            v.reason = in1.unknown() ? in1.reason : in2.reason;
            return v;
        }
        if (in1.elliptic() && in2.hyperbolic()) {
            v.status = DominationVerdict::Status::RefutedBy;
            v.refutation = w;
            return v;
        }
    }

    // components of (V, e1): one vertex of T/e1 each; lexicographically
    // least member is the component root
    std::map<std::string, std::string> comp;
    for (const auto& [vid, _] : g.vertices) comp[vid] = vid;
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const std::string& id : e1) {
        const EdgeData& e = g.edge(id);
        std::string a = find(e.origin), b = find(e.terminus);
        if (a != b) comp[std::max(a, b)] = std::min(a, b);
    }
    std::set<std::string> roots;
    for (const auto& [vid, _] : g.vertices) roots.insert(find(vid));

    for (const std::string& root : roots) {
        std::vector<LoopWord> gens = componentGenerators(g, e1, root);
        SubgroupVerdict sv = subgroupElliptic(g, gens, &e2);
        if (sv.status == SubgroupVerdict::Status::Unknown) {
            v.status = DominationVerdict::Status::Inconclusive;
            v.reason = sv.reason;
            return v;
        }
        if (sv.status == SubgroupVerdict::Status::NotElliptic) {
            v.status = DominationVerdict::Status::RefutedBy;
            v.refutation = sv.witness;
            return v;
        }
    }
    v.status = DominationVerdict::Status::Dominates;
    return v;
}

}  // namespace gog
