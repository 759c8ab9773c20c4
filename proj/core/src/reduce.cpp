#include "gog/reduce.hpp"

#include <numeric>

namespace gog {

namespace {

long long modInverse(long long a, long long n) {
    // extended Euclid; gcd(a, n) must be 1
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

// Image of edge-generator^c through `inj` as an element of the vertex group
// labeled `vertexLabel`.
VertexElem pushThrough(const Injection& inj, long long c, const GroupLabel& vertexLabel) {
    using IK = Injection::Kind;
    switch (inj.kind) {
        case IK::TrivialInto:
            return VertexElem::identityFor(vertexLabel);
        case IK::CyclicMult:
            return VertexElem::arith(c * inj.mult, 0);
        case IK::CyclicModMult:
            return VertexElem::arith(c * inj.mult, inj.mod);
        case IK::NamedEmbedding:
            if (c == 0) return VertexElem::identityFor(vertexLabel);
            return VertexElem::symbol(inj.tag, c);
    }
    return VertexElem::identityFor(vertexLabel);
}

// Preimage exponent of `elem` under `inj`: elem = image(generator^c).
// Returns false when elem is provably outside the image.
bool preimageExponent(const std::string& edgeId, const Injection& inj, const VertexElem& elem,
                      long long& c) {
    using IK = Injection::Kind;
    switch (inj.kind) {
        case IK::TrivialInto:
            if (!elem.isIdentity()) return false;
            c = 0;
            return true;
        case IK::CyclicMult: {
            if (elem.kind != VertexElem::Kind::Arith)
                throw SemanticError(edgeId, "arithmetic injection met a formal element");
            if (elem.value % inj.mult != 0) return false;
            c = elem.value / inj.mult;
            return true;
        }
        case IK::CyclicModMult: {
            if (elem.kind != VertexElem::Kind::Arith)
                throw SemanticError(edgeId, "arithmetic injection met a formal element");
            long long k = elem.value;
            long long g = std::gcd(inj.mult, inj.mod);
            if (g == 0) g = inj.mod;
            if (k % g != 0) return false;
            long long n2 = inj.mod / g;
            if (n2 == 1) {
                c = 0;
                return true;
            }
            c = (k / g) % n2 * modInverse(inj.mult / g, n2) % n2;
            return true;
        }
        case IK::NamedEmbedding:
            if (elem.isIdentity()) {
                c = 0;
                return true;
            }
            if (elem.kind == VertexElem::Kind::Sym && elem.sym.size() == 1 &&
                elem.sym[0].first == inj.tag) {
                c = elem.sym[0].second;
                return true;
            }
            // any other element: membership in the opaque image is a guess
            // either way, so refuse to decide
            throw OpaquePinch(edgeId, "membership in opaque image of edge " + edgeId +
                                          " is undecidable for " + elem.text());
    }
    return false;
}

}  // namespace

bool pinchTransfer(const GraphOfGroups& g, const std::string& edge, Side arrival,
                   const VertexElem& elem, VertexElem& out) {
    const EdgeData& e = g.edge(edge);
    long long c = 0;
    if (!preimageExponent(edge, e.inj(arrival), elem, c)) return false;
    Side depart = otherSide(arrival);
    out = pushThrough(e.inj(depart), c, g.vertexLabel(e.endpoint(depart)));
    return true;
}

namespace {

// Leftmost-first linear pinch pass.
LoopWord linearReduce(const GraphOfGroups& g, const LoopWord& w) {
    LoopWord r;
    r.base = w.base;
    r.head = w.head;
    for (const LoopWord::Step& s : w.steps) {
        if (!r.steps.empty() && s.t == r.steps.back().t.inverse()) {
            VertexElem transferred;
            if (pinchTransfer(g, r.steps.back().t.edge, r.steps.back().t.arrivalSide(),
                              r.steps.back().g, transferred)) {
                r.steps.pop_back();
                VertexElem& slot = r.steps.empty() ? r.head : r.steps.back().g;
                slot = slot * transferred * s.g;
                continue;
            }
        }
        r.steps.push_back(s);
    }
    return r;
}

}  // namespace

LoopWord reduceWord(const GraphOfGroups& g, const LoopWord& w, bool cyclic) {
    w.checkWellFormed(g);
    LoopWord r = linearReduce(g, w);
    if (!cyclic) return r;
    while (r.steps.size() >= 2) {
        size_t n = r.steps.size();
        const Traversal& first = r.steps.front().t;
        const Traversal& last = r.steps.back().t;
        if (!(first == last.inverse())) break;
        VertexElem wrap = r.steps.back().g * r.head;  // lives at the base
        VertexElem transferred;
        if (!pinchTransfer(g, last.edge, last.arrivalSide(), wrap, transferred)) break;
        // conjugate by (head . first): new base is the arrival of the first
        // traversal, the wrap pinch merges into the new tail
        LoopWord next;
        const EdgeData& fe = g.edge(first.edge);
        next.base = fe.endpoint(first.arrivalSide());
        next.head = r.steps.front().g;
        for (size_t i = 1; i + 1 < n; ++i) next.steps.push_back(r.steps[i]);
        VertexElem& slot = next.steps.empty() ? next.head : next.steps.back().g;
        slot = slot * transferred;
        r = linearReduce(g, next);
    }
    return r;
}

}  // namespace gog
