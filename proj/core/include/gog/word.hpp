#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gog/graph.hpp"

namespace gog {

// Element of a vertex group. Arith covers Trivial (mod=1), InfCyclic (mod=0)
// and FiniteCyclic(n) (mod=n, value in [0,n)). Sym is a reduced formal word
// over named generators, used for Atom/Product/Quotient labels.
struct VertexElem {
    enum class Kind { Arith, Sym };
    Kind kind = Kind::Arith;
    long long value = 0;
    long long mod = 1;
    std::vector<std::pair<std::string, long long>> sym;  // freely reduced

    static VertexElem identityFor(const GroupLabel& label);
    static VertexElem arith(long long value, long long mod);
    static VertexElem symbol(const std::string& name, long long exp = 1);

    bool isIdentity() const;
    VertexElem inverse() const;
    // multiplication inside one vertex group; both operands must live there
    friend VertexElem operator*(const VertexElem& a, const VertexElem& b);
    bool operator==(const VertexElem& o) const;

    std::string text() const;  // "a^3", "1", "x*y^-1"
};

// Oriented edge traversal. reversed=false walks origin -> terminus.
struct Traversal {
    std::string edge;
    bool reversed = false;

    Traversal inverse() const { return {edge, !reversed}; }
    bool operator==(const Traversal& o) const { return edge == o.edge && reversed == o.reversed; }
    // side at which the traversal arrives
    Side arrivalSide() const { return reversed ? Side::Origin : Side::Terminus; }
    Side departureSide() const { return reversed ? Side::Terminus : Side::Origin; }
};

// Element of the fundamental group: g0 e1 g1 e2 ... en gn with the e_i an
// oriented closed edge path at `base` and each g_i in the vertex group at
// the corresponding path position.
struct LoopWord {
    struct Step {
        Traversal t;
        VertexElem g;
    };
    std::string base;
    VertexElem head;  // g0
    std::vector<Step> steps;

    int edgeCount() const { return static_cast<int>(steps.size()); }
    bool operator==(const LoopWord& o) const;

    static LoopWord identity(const GraphOfGroups& g, const std::string& base);
    static LoopWord vertexElement(const GraphOfGroups& g, const std::string& vertex, VertexElem e);

    // Throws SemanticError if the path is not closed at base or an element
    // does not fit its vertex label.
    void checkWellFormed(const GraphOfGroups& g) const;

    LoopWord inverse(const GraphOfGroups& g) const;
    // concatenation; both words must share the same base
    LoopWord concat(const GraphOfGroups& g, const LoopWord& other) const;
    LoopWord power(const GraphOfGroups& g, int n) const;

    std::string text() const;
};

// CLI word syntax: whitespace-separated tokens, `a^k` for the canonical
// generator at the current path vertex (`u.a^2` to pin the vertex, `u.x`
// for a formal atom generator), `e` for the stable letter of edge e and
// `e'` for its inverse.
LoopWord parseWord(const GraphOfGroups& g, const std::string& text,
                   const std::string& base = "");
std::string wordToText(const GraphOfGroups& g, const LoopWord& w);

}  // namespace gog
