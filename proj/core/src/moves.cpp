#include "gog/moves.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "gog/ellipticity.hpp"
#include "gog/parse.hpp"
#include "gog/reduce.hpp"
#include "gog/serialize.hpp"

namespace gog {

namespace {

long long modInverse(long long a, long long n) {
    long long t = 0, newT = 1, r = n, newR = ((a % n) + n) % n;
    while (newR != 0) {
        long long q = r / newR;
        t -= q * newT;
        std::swap(t, newT);
        r -= q * newR;
        std::swap(r, newR);
    }
    if (t < 0) t += n;
    return t;
}

Side sideFromName(const std::string& s) {
    if (s == "origin") return Side::Origin;
    if (s == "terminus") return Side::Terminus;
    throw MoveError("bad side name '" + s + "'");
}

// j_other . j_from^-1 . j  -- push an injection into vertex w through the
// edge `via` whose end at w carries j_from and whose far end carries
// j_other. Requires image(j) inside image(j_from); throws MoveError when the
// inclusion fails or cannot be decided.
Injection composeThrough(const Injection& j, const GroupLabel& jEdgeLabel, const Injection& jFrom,
                         const GroupLabel& viaLabel, const Injection& jOther) {
    using IK = Injection::Kind;
    switch (j.kind) {
        case IK::TrivialInto:
            return Injection::trivialInto();
        case IK::CyclicMult: {
            if (jFrom.kind != IK::CyclicMult)
                throw MoveError("cannot decide image inclusion through " + jFrom.text());
            if (j.mult % jFrom.mult != 0)
                throw MoveError("image of " + j.text() + " not inside image of " + jFrom.text());
            long long c = j.mult / jFrom.mult;
            if (jOther.kind == IK::CyclicMult) return Injection::cyclicMult(c * jOther.mult);
            if (jOther.kind == IK::NamedEmbedding && c == 1) return jOther;
            throw MoveError("unsupported injection composite through " + jOther.text());
        }
        case IK::CyclicModMult: {
            if (jFrom.kind != IK::CyclicModMult || jFrom.mod != j.mod)
                throw MoveError("cannot decide image inclusion through " + jFrom.text());
            long long n = j.mod;
            long long g = std::gcd(jFrom.mult, n);
            if (g == 0) g = n;
            if (j.mult % g != 0)
                throw MoveError("image of " + j.text() + " not inside image of " + jFrom.text());
            long long d = n / g;
            long long c = d == 1 ? 0 : (j.mult / g) % d * modInverse(jFrom.mult / g, d) % d;
            if (jOther.kind == IK::CyclicModMult)
                return Injection::cyclicModMult(c * jOther.mult, jOther.mod);
            if (jOther.kind == IK::TrivialInto) {
                if (jEdgeLabel.isTrivial()) return Injection::trivialInto();
                throw MoveError("non-trivial label composed into a trivial image");
            }
            if (jOther.kind == IK::NamedEmbedding && c == 1) return jOther;
            throw MoveError("unsupported injection composite through " + jOther.text());
        }
        case IK::NamedEmbedding:
            if (jFrom.kind == IK::NamedEmbedding && jFrom.tag == j.tag && viaLabel == jEdgeLabel)
                return jOther;
            throw MoveError("cannot decide image inclusion of opaque embedding " + j.text());
    }
    throw MoveError("unreachable injection composite");
}

}  // namespace

std::string moveToText(const Move& m) {
    std::ostringstream os;
    if (const auto* c = std::get_if<DeformationCollapse>(&m)) {
        os << "collapse " << c->edge << " " << sideName(c->fromSide);
    } else if (const auto* x = std::get_if<Expansion>(&m)) {
        os << "expand " << x->atVertex << " " << x->newVertex << " " << x->newVertexLabel.text()
           << " " << x->newEdge << " " << x->newEdgeLabel.text() << " " << x->injNew.text() << " "
           << x->injOld.text();
        for (const auto& [end, inj] : x->moved)
            os << " " << end.first << ":" << sideName(end.second) << ":" << inj.text();
    } else if (const auto* s = std::get_if<Slide>(&m)) {
        os << "slide " << s->moving << " " << sideName(s->movingEnd) << " " << s->across << " "
           << sideName(s->acrossEnd);
    } else if (const auto* d = std::get_if<Subdivide>(&m)) {
        os << "subdivide " << d->edge << " " << d->newVertex << " " << d->newEdge1 << " "
           << d->newEdge2;
    }
    return os.str();
}

namespace {

// depth-aware whitespace split so labels stay single tokens
std::vector<std::string> moveTokens(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    int depth = 0;
    for (char c : line) {
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') --depth;
        if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

}  // namespace

Move moveFromText(const std::string& line) {
    std::vector<std::string> t = moveTokens(line);
    if (t.empty()) throw MoveError("empty move line");
    try {
        if (t[0] == "collapse" && t.size() == 3)
            return DeformationCollapse{t[1], sideFromName(t[2])};
        if (t[0] == "slide" && t.size() == 5)
            return Slide{t[1], sideFromName(t[2]), t[3], sideFromName(t[4])};
        if (t[0] == "subdivide" && t.size() == 5) return Subdivide{t[1], t[2], t[3], t[4]};
        if (t[0] == "expand" && t.size() >= 8) {
            Expansion x;
            x.atVertex = t[1];
            x.newVertex = t[2];
            x.newVertexLabel = parseLabel(t[3]);
            x.newEdge = t[4];
            x.newEdgeLabel = parseLabel(t[5]);
            x.injNew = parseInjection(t[6]);
            x.injOld = parseInjection(t[7]);
            for (size_t i = 8; i < t.size(); ++i) {
                auto c1 = t[i].find(':');
                auto c2 = t[i].find(':', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw MoveError("bad moved-end token '" + t[i] + "'");
                x.moved[{t[i].substr(0, c1), sideFromName(t[i].substr(c1 + 1, c2 - c1 - 1))}] =
                    parseInjection(t[i].substr(c2 + 1));
            }
            return x;
        }
    } catch (const ParseError& e) {
        throw MoveError(std::string("bad move line: ") + e.what());
    }
    throw MoveError("unrecognized move line '" + line + "'");
}

namespace {

GraphOfGroups applyCollapse(const GraphOfGroups& g, const DeformationCollapse& m) {
    const EdgeData& e = g.edge(m.edge);
    if (e.isLoop()) throw MoveError(m.edge + ": cannot collapse a loop");
    const std::string u = e.endpoint(m.fromSide);      // dies
    const std::string v = e.endpoint(otherSide(m.fromSide));  // survives
    const Injection jFrom = e.inj(m.fromSide);
    const Injection jOther = e.inj(otherSide(m.fromSide));
    if (!injectionOnto(jFrom, e.label, g.vertexLabel(u)))
        throw MoveError(m.edge + ": " + sideName(m.fromSide) + " injection is not onto " + u);
    GraphOfGroups out = g;
    out.edges.erase(m.edge);
    out.vertices.erase(u);
    for (auto& [id, ed] : out.edges) {
        for (Side s : {Side::Origin, Side::Terminus}) {
            if (ed.endpoint(s) != u) continue;
            ed.inj(s) = composeThrough(ed.inj(s), ed.label, jFrom, e.label, jOther);
            (s == Side::Origin ? ed.origin : ed.terminus) = v;
        }
    }
    if (out.base == u) out.base = v;
    out.checkValid();
    return out;
}

GraphOfGroups applyExpansion(const GraphOfGroups& g, const Expansion& m) {
    if (!g.hasVertex(m.atVertex)) throw MoveError(m.atVertex + ": no such vertex");
    if (g.hasVertex(m.newVertex)) throw MoveError(m.newVertex + ": vertex id already in use");
    if (g.hasEdge(m.newEdge)) throw MoveError(m.newEdge + ": edge id already in use");
    if (!injectionOnto(m.injNew, m.newEdgeLabel, m.newVertexLabel))
        throw MoveError(m.newEdge + ": injection on the new-vertex side must be onto");
    GraphOfGroups out = g;
    out.vertices[m.newVertex] = m.newVertexLabel;
    EdgeData ne;
    ne.origin = m.newVertex;
    ne.terminus = m.atVertex;
    ne.label = m.newEdgeLabel;
    ne.injOrigin = m.injNew;
    ne.injTerminus = m.injOld;
    out.edges[m.newEdge] = ne;
    for (const auto& [end, inj] : m.moved) {
        auto it = out.edges.find(end.first);
        if (it == out.edges.end()) throw MoveError(end.first + ": no such edge to move");
        EdgeData& ed = it->second;
        if (ed.endpoint(end.second) != m.atVertex)
            throw MoveError(end.first + ": end is not attached at " + m.atVertex);
        // collapsing the new edge back must restore the current injection
        Injection restored = composeThrough(inj, ed.label, m.injNew, m.newEdgeLabel, m.injOld);
        if (restored != ed.inj(end.second))
            throw MoveError(end.first + ": moved injection " + inj.text() +
                            " does not collapse back to " + ed.inj(end.second).text());
        (end.second == Side::Origin ? ed.origin : ed.terminus) = m.newVertex;
        ed.inj(end.second) = inj;
    }
    out.checkValid();
    return out;
}

GraphOfGroups applySlide(const GraphOfGroups& g, const Slide& m) {
    if (m.moving == m.across) throw MoveError(m.moving + ": cannot slide an edge across itself");
    const EdgeData& across = g.edge(m.across);
    EdgeData moving = g.edge(m.moving);
    const std::string w = across.endpoint(m.acrossEnd);
    if (moving.endpoint(m.movingEnd) != w)
        throw MoveError(m.moving + ": moving end is not at " + w);
    const std::string wFar = across.endpoint(otherSide(m.acrossEnd));
    Injection jNew = composeThrough(moving.inj(m.movingEnd), moving.label,
                                    across.inj(m.acrossEnd), across.label,
                                    across.inj(otherSide(m.acrossEnd)));
    GraphOfGroups out = g;
    EdgeData& ed = out.edges[m.moving];
    (m.movingEnd == Side::Origin ? ed.origin : ed.terminus) = wFar;
    ed.inj(m.movingEnd) = jNew;
    out.checkValid();
    return out;
}

Injection identityInjection(const GroupLabel& label, const std::string& tag) {
    switch (label.kind) {
        case GroupLabel::Kind::Trivial: return Injection::trivialInto();
        case GroupLabel::Kind::InfCyclic: return Injection::cyclicMult(1);
        case GroupLabel::Kind::FiniteCyclic: return Injection::cyclicModMult(1, label.order);
        default: return Injection::embedding(tag);
    }
}

GraphOfGroups applySubdivide(const GraphOfGroups& g, const Subdivide& m) {
    const EdgeData e = g.edge(m.edge);
    if (g.hasVertex(m.newVertex)) throw MoveError(m.newVertex + ": vertex id already in use");
    for (const std::string& id : {m.newEdge1, m.newEdge2})
        if (g.hasEdge(id) && id != m.edge) throw MoveError(id + ": edge id already in use");
    if (m.newEdge1 == m.newEdge2) throw MoveError("subdivision halves need distinct ids");
    GraphOfGroups out = g;
    out.edges.erase(m.edge);
    out.vertices[m.newVertex] = e.label;
    Injection idInj = identityInjection(e.label, m.edge);
    EdgeData h1;
    h1.origin = e.origin;
    h1.terminus = m.newVertex;
    h1.label = e.label;
    h1.injOrigin = e.injOrigin;
    h1.injTerminus = idInj;
    EdgeData h2;
    h2.origin = m.newVertex;
    h2.terminus = e.terminus;
    h2.label = e.label;
    h2.injOrigin = idInj;
    h2.injTerminus = e.injTerminus;
    out.edges[m.newEdge1] = h1;
    out.edges[m.newEdge2] = h2;
    out.checkValid();
    return out;
}

// ---- word transport ----

LoopWord transportCollapse(const GraphOfGroups& before, const GraphOfGroups& after,
                           const DeformationCollapse& m, const LoopWord& w) {
    const EdgeData& e = before.edge(m.edge);
    const std::string u = e.endpoint(m.fromSide);
    const std::string v = e.endpoint(otherSide(m.fromSide));
    const Injection jFrom = e.inj(m.fromSide);
    const Injection jOther = e.inj(otherSide(m.fromSide));
    auto rewrite = [&](const VertexElem& elem) {
        VertexElem out;
        if (!pinchTransfer(before, m.edge, m.fromSide, elem, out))
            throw MoveError(m.edge + ": element at " + u + " outside the onto image");
        return out;
    };
    LoopWord out;
    out.base = w.base == u ? v : w.base;
    out.head = w.base == u ? rewrite(w.head) : w.head;
    std::string at = w.base;
    for (const LoopWord::Step& s : w.steps) {
        const EdgeData& ed = before.edge(s.t.edge);
        at = ed.endpoint(s.t.arrivalSide());
        VertexElem elem = at == u ? rewrite(s.g) : s.g;
        if (s.t.edge == m.edge) {
            VertexElem& slot = out.steps.empty() ? out.head : out.steps.back().g;
            slot = slot * elem;
        } else {
            out.steps.push_back({s.t, elem});
        }
    }
    (void)after;
    return out;
}

LoopWord transportExpansion(const GraphOfGroups& before, const GraphOfGroups& after,
                            const Expansion& m, const LoopWord& w) {
    (void)before;
    (void)after;
    VertexElem newIdent = VertexElem::identityFor(m.newVertexLabel);
    LoopWord out;
    out.base = w.base;
    out.head = w.head;
    for (const LoopWord::Step& s : w.steps) {
        bool depMoved = m.moved.count({s.t.edge, s.t.departureSide()}) > 0;
        bool arrMoved = m.moved.count({s.t.edge, s.t.arrivalSide()}) > 0;
        if (depMoved) out.steps.push_back({{m.newEdge, true}, newIdent});
        out.steps.push_back({s.t, arrMoved ? newIdent : s.g});
        if (arrMoved) out.steps.push_back({{m.newEdge, false}, s.g});
    }
    return out;
}

LoopWord transportSlide(const GraphOfGroups& before, const GraphOfGroups& after, const Slide& m,
                        const LoopWord& w) {
    const EdgeData& across = before.edge(m.across);
    const std::string wFar = across.endpoint(otherSide(m.acrossEnd));
    VertexElem farIdent = VertexElem::identityFor(before.vertexLabel(wFar));
    LoopWord out;
    out.base = w.base;
    out.head = w.head;
    for (const LoopWord::Step& s : w.steps) {
        if (s.t.edge != m.moving) {
            out.steps.push_back(s);
            continue;
        }
        bool depMoved = s.t.departureSide() == m.movingEnd;
        bool arrMoved = s.t.arrivalSide() == m.movingEnd;
        // outbound across traversal: common vertex -> far endpoint
        if (depMoved)
            out.steps.push_back({{m.across, m.acrossEnd == Side::Terminus}, farIdent});
        out.steps.push_back({s.t, arrMoved ? farIdent : s.g});
        if (arrMoved)
            out.steps.push_back({{m.across, m.acrossEnd == Side::Origin}, s.g});
    }
    (void)after;
    return out;
}

LoopWord transportSubdivide(const GraphOfGroups& before, const GraphOfGroups& after,
                            const Subdivide& m, const LoopWord& w) {
    (void)before;
    VertexElem midIdent = VertexElem::identityFor(after.vertexLabel(m.newVertex));
    LoopWord out;
    out.base = w.base;
    out.head = w.head;
    for (const LoopWord::Step& s : w.steps) {
        if (s.t.edge != m.edge) {
            out.steps.push_back(s);
            continue;
        }
        if (!s.t.reversed) {
            out.steps.push_back({{m.newEdge1, false}, midIdent});
            out.steps.push_back({{m.newEdge2, false}, s.g});
        } else {
            out.steps.push_back({{m.newEdge2, true}, midIdent});
            out.steps.push_back({{m.newEdge1, true}, s.g});
        }
    }
    return out;
}

}  // namespace

LoopWord MoveResult::transport(const LoopWord& w) const {
    if (const auto* c = std::get_if<DeformationCollapse>(&applied))
        return transportCollapse(before, graph, *c, w);
    if (const auto* x = std::get_if<Expansion>(&applied))
        return transportExpansion(before, graph, *x, w);
    if (const auto* s = std::get_if<Slide>(&applied)) return transportSlide(before, graph, *s, w);
    return transportSubdivide(before, graph, *std::get_if<Subdivide>(&applied), w);
}

MoveResult applyMove(const GraphOfGroups& g, const Move& m) {
    MoveResult r;
    r.applied = m;
    r.before = g;
    if (const auto* c = std::get_if<DeformationCollapse>(&m)) {
        r.graph = applyCollapse(g, *c);
    } else if (const auto* x = std::get_if<Expansion>(&m)) {
        r.graph = applyExpansion(g, *x);
    } else if (const auto* s = std::get_if<Slide>(&m)) {
        r.graph = applySlide(g, *s);
    } else {
        r.graph = applySubdivide(g, *std::get_if<Subdivide>(&m));
    }
    // same convention as the parser: base is the least vertex id
    r.graph.base.clear();
    r.graph.normalizeBase();
    return r;
}

Move invertMove(const GraphOfGroups& before, const Move& m) {
    if (const auto* c = std::get_if<DeformationCollapse>(&m)) {
        const EdgeData& e = before.edge(c->edge);
        const std::string u = e.endpoint(c->fromSide);
        const std::string v = e.endpoint(otherSide(c->fromSide));
        Expansion x;
        x.atVertex = v;
        x.newVertex = u;
        x.newVertexLabel = before.vertexLabel(u);
        x.newEdge = c->edge;
        x.newEdgeLabel = e.label;
        x.injNew = e.inj(c->fromSide);
        x.injOld = e.inj(otherSide(c->fromSide));
        for (const auto& [id, side] : before.incidentEnds(u)) {
            if (id == c->edge) continue;
            x.moved[{id, side}] = before.edge(id).inj(side);
        }
        return x;
    }
    if (const auto* x = std::get_if<Expansion>(&m))
        return DeformationCollapse{x->newEdge, Side::Origin};
    if (const auto* s = std::get_if<Slide>(&m))
        return Slide{s->moving, s->movingEnd, s->across, otherSide(s->acrossEnd)};
    const auto* d = std::get_if<Subdivide>(&m);
    // collapsing the terminus half from the midpoint side undoes the split
    // when the identity injection is certified onto (arithmetic labels)
    const GroupLabel& label = before.edge(d->edge).label;
    if (!label.isArithmetic())
        throw MoveError(d->edge + ": subdivision of an opaque edge label has no certified inverse");
    return DeformationCollapse{d->newEdge1, Side::Terminus};
}

GraphOfGroups Certificate::replay() const {
    GraphOfGroups g = source;
    for (const Move& m : script) g = applyMove(g, m).graph;
    return g;
}

std::string Certificate::text() const {
    std::string out;
    for (const Move& m : script) out += moveToText(m) + "\n";
    return out;
}

std::pair<GraphOfGroups, Certificate> reduceGraph(const GraphOfGroups& g) {
    Certificate cert;
    cert.source = g;
    GraphOfGroups cur = g;
    for (;;) {
        bool moved = false;
        for (const auto& [id, e] : cur.edges) {
            if (e.isLoop()) continue;
            for (Side s : {Side::Origin, Side::Terminus}) {
                if (!injectionOnto(e.inj(s), e.label, cur.vertexLabel(e.endpoint(s)))) continue;
                DeformationCollapse m{id, s};
                try {
                    cur = applyCollapse(cur, m);
                } catch (const MoveError&) {
                    continue;  // composite injection not expressible
                }
                cert.script.push_back(m);
                moved = true;
                break;
            }
            if (moved) break;
        }
        if (!moved) break;
    }
    cert.target = cur;
    return {cur, cert};
}

GraphOfGroups collapseEdges(const GraphOfGroups& g, const std::set<std::string>& edges) {
    if (edges.empty()) return g;
    for (const std::string& id : edges) g.edge(id);

    // components of the chosen subgraph
    std::map<std::string, std::string> parent;
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const std::string& id : edges) {
        const EdgeData& e = g.edge(id);
        for (const std::string& v : {e.origin, e.terminus})
            if (!parent.count(v)) parent[v] = v;
        std::string a = find(e.origin), b = find(e.terminus);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::string, std::string> rep;  // vertex in a component -> component name
    for (const auto& [v, _] : parent) rep[v] = find(v);

    GraphOfGroups out;
    for (const auto& [v, label] : g.vertices)
        if (!rep.count(v)) out.vertices[v] = label;
    // one Quotient vertex per component, holding the component verbatim
    std::set<std::string> componentNames;
    for (const auto& [v, r] : rep) componentNames.insert(r);
    for (const std::string& name : componentNames) {
        auto inner = std::make_shared<GraphOfGroups>();
        for (const auto& [v, r] : rep)
            if (r == name) inner->vertices[v] = g.vertexLabel(v);
        for (const std::string& id : edges) {
            const EdgeData& e = g.edge(id);
            if (rep.at(e.origin) == name) inner->edges[id] = e;
        }
        inner->normalizeBase();
        out.vertices[name] = GroupLabel::quotient(inner);
    }
    for (const auto& [id, e] : g.edges) {
        if (edges.count(id)) continue;
        EdgeData ne = e;
        for (Side s : {Side::Origin, Side::Terminus}) {
            auto it = rep.find(ne.endpoint(s));
            if (it == rep.end()) continue;
            (s == Side::Origin ? ne.origin : ne.terminus) = it->second;
            ne.inj(s) = Injection::embedding(e.endpoint(s));
        }
        out.edges[id] = ne;
    }
    out.base.clear();
    out.normalizeBase();
    out.checkValid();
    return out;
}

GraphOfGroups collapseEdgesFailing(const GraphOfGroups& g, ClassSpec keep) {
    std::set<std::string> bad;
    for (const auto& [id, e] : g.edges)
        if (!labelInClass(e.label, keep)) bad.insert(id);
    return collapseEdges(g, bad);
}

GraphOfGroups refineAtVertex(const GraphOfGroups& g, const std::string& v,
                             const GraphOfGroups& splitting,
                             const std::map<std::pair<std::string, Side>, AttachPoint>& attachment,
                             std::vector<std::string>* insertedEdges) {
    g.vertexLabel(v);
    splitting.checkValid();
    std::string prefix = v + "_";
    GraphOfGroups out = g;
    out.vertices.erase(v);
    for (const auto& [sv, label] : splitting.vertices) {
        if (out.hasVertex(prefix + sv)) throw MoveError(prefix + sv + ": vertex id collision");
        out.vertices[prefix + sv] = label;
    }
    for (const auto& [se, e] : splitting.edges) {
        if (out.hasEdge(prefix + se)) throw MoveError(prefix + se + ": edge id collision");
        EdgeData ne = e;
        ne.origin = prefix + e.origin;
        ne.terminus = prefix + e.terminus;
        out.edges[prefix + se] = ne;
        if (insertedEdges) insertedEdges->push_back(prefix + se);
    }
    for (const auto& [id, side] : g.incidentEnds(v)) {
        auto it = attachment.find({id, side});
        if (it == attachment.end())
            throw MoveError(id + "/" + sideName(side) + ": no attachment for this end of " + v);
        if (!splitting.hasVertex(it->second.splittingVertex))
            throw MoveError(it->second.splittingVertex + ": not a splitting vertex");
        EdgeData& ed = out.edges[id];
        (side == Side::Origin ? ed.origin : ed.terminus) = prefix + it->second.splittingVertex;
        ed.inj(side) = it->second.injection;
    }
    if (out.base == v) {
        GraphOfGroups sp = splitting;
        sp.normalizeBase();
        out.base = prefix + sp.base;
    }
    out.checkValid();
    return out;
}

std::pair<GraphOfGroups, RefineReport> refineElliptic(
    const GraphOfGroups& t1, const std::map<std::string, RefinePlanEntry>& plan,
    const std::vector<LoopWord>& samples) {
    RefineReport report;
    GraphOfGroups t2 = t1;
    for (const auto& [v, entry] : plan)
        t2 = refineAtVertex(t2, v, entry.splitting, entry.attachment, &report.insertedEdges);

    std::set<std::string> inserted(report.insertedEdges.begin(), report.insertedEdges.end());
    std::set<std::string> oldEdges;
    for (const auto& [id, _] : t1.edges) oldEdges.insert(id);

    // every new edge label must already occur on an old edge or inside a plan
    report.labelsOk = true;
    for (const std::string& id : report.insertedEdges) {
        const GroupLabel& label = t2.edge(id).label;
        bool found = false;
        for (const auto& [_, e] : t1.edges)
            if (e.label == label) found = true;
        for (const auto& [_, entry] : plan)
            for (const auto& [__, e] : entry.splitting.edges)
                if (e.label == label) found = true;
        if (!found) report.labelsOk = false;
    }

    // collapsing the inserted edges must recover the shape of t1
    try {
        GraphOfGroups back = collapseEdges(t2, inserted);
        report.collapseBackOk = back.vertices.size() == t1.vertices.size() &&
                                back.edges.size() == t1.edges.size();
        if (report.collapseBackOk) {
            // unrefined vertices keep their labels; edge adjacency matches
            // after sending each refined vertex to its component name
            std::map<std::string, std::string> vmap;
            for (const auto& [v, label] : t1.vertices) {
                if (plan.count(v)) continue;
                if (!back.hasVertex(v) || back.vertexLabel(v) != label) {
                    report.collapseBackOk = false;
                    break;
                }
                vmap[v] = v;
            }
            if (report.collapseBackOk) {
                for (const auto& [v, entry] : plan) {
                    // the refined vertex became the unique Quotient vertex
                    // whose inner vertices all carry the prefix v + "_"; a
                    // degenerate one-point splitting inserts no edges, so the
                    // blown-up vertex survives unquotiented under its new name
                    bool degenerate = entry.splitting.edges.empty();
                    for (const auto& [bv, label] : back.vertices) {
                        if (bv.rfind(v + "_", 0) != 0) continue;
                        if (label.kind == GroupLabel::Kind::Quotient || degenerate) vmap[v] = bv;
                    }
                    if (!vmap.count(v)) report.collapseBackOk = false;
                }
            }
            if (report.collapseBackOk) {
                for (const auto& [id, e] : t1.edges) {
                    if (!back.hasEdge(id)) {
                        report.collapseBackOk = false;
                        break;
                    }
                    const EdgeData& be = back.edge(id);
                    if (be.origin != vmap.at(e.origin) || be.terminus != vmap.at(e.terminus) ||
                        be.label != e.label) {
                        report.collapseBackOk = false;
                        break;
                    }
                }
            }
        }
    } catch (const SemanticError&) {
        report.collapseBackOk = false;
    }

    for (const LoopWord& w : samples) {
        EllipticityVerdict full = isElliptic(t2, w);
        EllipticityVerdict inNew = isElliptic(t2, w, &inserted);
        EllipticityVerdict inOld = isElliptic(t2, w, &oldEdges);
        if (full.unknown() || inNew.unknown() || inOld.unknown()) continue;
        if (full.elliptic() != (inNew.elliptic() && inOld.elliptic()))
            report.sampleViolations.push_back(w.text());
    }
    return {t2, report};
}

}  // namespace gog
