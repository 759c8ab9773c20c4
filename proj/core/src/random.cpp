#include "gog/random.hpp"

#include <algorithm>
#include <queue>

namespace gog {

GbsGraph randomGbsGraph(std::mt19937_64& rng, int maxEdges, long long maxAbsLabel) {
    auto randInt = [&](long long lo, long long hi) {
        return static_cast<long long>(std::uniform_int_distribution<long long>(lo, hi)(rng));
    };
    auto randMult = [&]() {
        long long m = randInt(1, maxAbsLabel);
        return randInt(0, 1) ? m : -m;
    };
    int nEdges = static_cast<int>(randInt(1, maxEdges));
    int nVerts = static_cast<int>(randInt(1, nEdges));
    GraphOfGroups g;
    for (int i = 0; i < nVerts; ++i) g.vertices["v" + std::to_string(i)] = GroupLabel::infCyclic();
    int e = 0;
    // spanning tree first so the graph is connected
    for (int i = 1; i < nVerts; ++i, ++e) {
        EdgeData ed;
        ed.origin = "v" + std::to_string(randInt(0, i - 1));
        ed.terminus = "v" + std::to_string(i);
        ed.label = GroupLabel::infCyclic();
        ed.injOrigin = Injection::cyclicMult(randMult());
        ed.injTerminus = Injection::cyclicMult(randMult());
        g.edges["e" + std::to_string(e)] = ed;
    }
    for (; e < nEdges; ++e) {
        EdgeData ed;
        ed.origin = "v" + std::to_string(randInt(0, nVerts - 1));
        ed.terminus = "v" + std::to_string(randInt(0, nVerts - 1));
        ed.label = GroupLabel::infCyclic();
        ed.injOrigin = Injection::cyclicMult(randMult());
        ed.injTerminus = Injection::cyclicMult(randMult());
        g.edges["e" + std::to_string(e)] = ed;
    }
    g.normalizeBase();
    return GbsGraph::fromGraph(g);
}

namespace {

std::vector<Traversal> pathToBase(const GraphOfGroups& g, const std::string& from,
                                  const std::string& to) {
    std::map<std::string, std::pair<std::string, Traversal>> pred;
    std::queue<std::string> q;
    q.push(from);
    pred[from] = {from, {}};
    while (!q.empty() && !pred.count(to)) {
        std::string v = q.front();
        q.pop();
        for (const auto& [id, side] : g.incidentEnds(v)) {
            const std::string& w = g.edge(id).endpoint(otherSide(side));
            if (pred.count(w)) continue;
            pred[w] = {v, Traversal{id, side == Side::Terminus}};
            q.push(w);
        }
    }
    std::vector<Traversal> path;
    for (std::string v = to; v != from; v = pred[v].first) path.push_back(pred[v].second);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

LoopWord randomWord(const GraphOfGroups& g, std::mt19937_64& rng, int maxSteps,
                    long long maxAbsExp) {
    auto randInt = [&](long long lo, long long hi) {
        return static_cast<long long>(std::uniform_int_distribution<long long>(lo, hi)(rng));
    };
    auto randElem = [&](const std::string& v) {
        const GroupLabel& label = g.vertexLabel(v);
        VertexElem ident = VertexElem::identityFor(label);
        if (label.isArithmetic() && !label.isTrivial())
            return ident * VertexElem::arith(randInt(-maxAbsExp, maxAbsExp), ident.mod);
        return ident;
    };
    GraphOfGroups gg = g;
    gg.normalizeBase();
    LoopWord w = LoopWord::identity(gg, gg.base);
    w.head = randElem(gg.base);
    std::string at = gg.base;
    int walk = static_cast<int>(randInt(0, maxSteps));
    for (int i = 0; i < walk; ++i) {
        auto ends = gg.incidentEnds(at);
        if (ends.empty()) break;
        auto [id, side] = ends[static_cast<size_t>(randInt(0, static_cast<long long>(ends.size()) - 1))];
        Traversal t{id, side == Side::Terminus};
        at = gg.edge(id).endpoint(t.arrivalSide());
        w.steps.push_back({t, randElem(at)});
    }
    for (const Traversal& t : pathToBase(gg, at, gg.base)) {
        at = gg.edge(t.edge).endpoint(t.arrivalSide());
        w.steps.push_back({t, randElem(at)});
    }
    return w;
}

std::vector<Move> enumerateMoves(const GraphOfGroups& g, long long maxAbsLabel) {
    std::vector<Move> out;
    auto fresh = [&](const std::string& stem, int& counter, bool vertex) {
        for (;; ++counter) {
            std::string id = stem + std::to_string(counter);
            if (vertex ? !g.hasVertex(id) : !g.hasEdge(id)) return id;
        }
    };
    auto legal = [&](const Move& m) {
        try {
            GraphOfGroups next = applyMove(g, m).graph;
            for (const auto& [_, e] : next.edges)
                for (Side s : {Side::Origin, Side::Terminus})
                    if (e.inj(s).kind == Injection::Kind::CyclicMult &&
                        std::llabs(e.inj(s).mult) > maxAbsLabel)
                        return false;
            return true;
        } catch (const MoveError&) {
            return false;
        } catch (const SemanticError&) {
            return false;
        }
    };
    for (const auto& [id, e] : g.edges) {
        if (e.isLoop()) continue;
        for (Side s : {Side::Origin, Side::Terminus}) {
            DeformationCollapse m{id, s};
            if (injectionOnto(e.inj(s), e.label, g.vertexLabel(e.endpoint(s))) && legal(m))
                out.push_back(m);
        }
    }
    for (const auto& [mid, me] : g.edges)
        for (Side ms : {Side::Origin, Side::Terminus})
            for (const auto& [aid, ae] : g.edges) {
                if (mid == aid) continue;
                for (Side as : {Side::Origin, Side::Terminus}) {
                    if (me.endpoint(ms) != ae.endpoint(as)) continue;
                    Slide m{mid, ms, aid, as};
                    if (legal(m)) out.push_back(m);
                }
            }
    {
        int vc = 0, ec = 0;
        for (const auto& [id, _] : g.edges) {
            std::string nv = fresh("sv", vc, true);
            int ec2 = ec;
            std::string e1 = fresh("se", ec2, false);
            ++ec2;
            std::string e2 = fresh("se", ec2, false);
            Subdivide m{id, nv, e1, e2};
            if (legal(m)) out.push_back(m);
        }
    }
    // single-end expansions pulling a factor out of one GBS edge end
    for (const auto& [id, e] : g.edges) {
        for (Side s : {Side::Origin, Side::Terminus}) {
            if (e.inj(s).kind != Injection::Kind::CyclicMult) continue;
            long long gamma = e.inj(s).mult;
            const std::string& v = e.endpoint(s);
            if (g.vertexLabel(v).kind != GroupLabel::Kind::InfCyclic) continue;
            for (long long m = 2; m <= std::llabs(gamma); ++m) {
                if (gamma % m != 0) continue;
                int vc = 0, ec = 0;
                Expansion x;
                x.atVertex = v;
                x.newVertex = fresh("xv", vc, true);
                x.newVertexLabel = GroupLabel::infCyclic();
                x.newEdge = fresh("xe", ec, false);
                x.newEdgeLabel = GroupLabel::infCyclic();
                x.injNew = Injection::cyclicMult(1);
                x.injOld = Injection::cyclicMult(m);
                x.moved[{id, s}] = Injection::cyclicMult(gamma / m);
                if (legal(x)) out.push_back(x);
            }
        }
    }
    return out;
}

}  // namespace gog
