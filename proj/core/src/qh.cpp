#include "gog/qh.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace gog {

QhReport validateQh(const GraphOfGroups& g, const std::string& v, const QhData& data) {
    QhReport report;
    g.vertexLabel(v);
    data.sig.checkValid();
    auto boundary = data.sig.boundaryComponents();
    int nComponents = static_cast<int>(boundary.size());

    std::set<std::string> incidentEdges;
    for (const auto& [id, side] : g.incidentEnds(v)) {
        (void)side;
        incidentEdges.insert(id);
    }
    for (const std::string& id : incidentEdges)
        if (!data.incident.count(id))
            report.problems.push_back(id + ": incident edge has no assignment");
    for (const auto& [id, a] : data.incident) {
        if (!incidentEdges.count(id))
            report.problems.push_back(id + ": assignment for a non-incident edge");
        if (a.kind == QhAssignment::Kind::InBoundary &&
            (a.component < 0 || a.component >= nComponents))
            report.problems.push_back(id + ": boundary component index out of range");
    }
    for (const auto& [name, a] : data.relative)
        if (a.kind == QhAssignment::Kind::InBoundary &&
            (a.component < 0 || a.component >= nComponents))
            report.problems.push_back(name + ": boundary component index out of range");

    report.isQh = report.problems.empty();

    std::set<int> used;
    auto collect = [&](const std::map<std::string, QhAssignment>& m) {
        for (const auto& [_, a] : m)
            if (a.kind == QhAssignment::Kind::InBoundary && a.finiteIndex && a.component >= 0 &&
                a.component < nComponents)
                used.insert(a.component);
    };
    collect(data.incident);
    collect(data.relative);
    for (int c = 0; c < nComponents; ++c)
        (used.count(c) ? report.usedComponents : report.unusedComponents).push_back(c);

    // a universally elliptic fiber cannot make the vertex flexible by itself;
    // flexibility comes from an essential curve in the orbifold
    try {
        report.flexibility = hasEssentialScc(data.sig);
    } catch (const OrbifoldError&) {
        report.flexibility = SccVerdict::No;
    }
    return report;
}

DualTree dualTree(const OrbifoldSig& sig, const CutSystem& cut) {
    sig.checkValid();
    Rational total(0);
    for (const OrbifoldSig& piece : cut.pieces) total = total + eulerCharacteristic(piece);
    Rational chi = eulerCharacteristic(sig);
    if (!(total == chi))
        throw OrbifoldError("chi mismatch: pieces sum to " + total.str() + ", expected " +
                            chi.str());

    // slot accounting: curve slots must be distinct WholeBoundary circles;
    // the leftover slots biject with sig's boundary components
    std::set<std::pair<int, int>> consumed;
    auto claim = [&](const CutSystem::Slot& s) {
        if (s.piece < 0 || s.piece >= static_cast<int>(cut.pieces.size()))
            throw OrbifoldError("cut slot names piece " + std::to_string(s.piece) +
                                " out of range");
        const auto& circles = cut.pieces[s.piece].circles;
        if (s.circle < 0 || s.circle >= static_cast<int>(circles.size()))
            throw OrbifoldError("cut slot circle index out of range");
        if (circles[s.circle].kind != OrbifoldSig::Circle::Kind::WholeBoundary)
            throw OrbifoldError("curves glue along whole boundary circles only");
        if (!consumed.insert({s.piece, s.circle}).second)
            throw OrbifoldError("boundary slot consumed twice");
    };
    for (const auto& [a, b] : cut.curves) {
        claim(a);
        claim(b);
    }
    long long freeSlots = 0;
    for (const OrbifoldSig& piece : cut.pieces)
        freeSlots += static_cast<long long>(piece.boundaryComponents().size());
    freeSlots -= 2 * static_cast<long long>(cut.curves.size());
    long long expected = static_cast<long long>(sig.boundaryComponents().size());
    if (freeSlots != expected)
        throw OrbifoldError("boundary slot mismatch: " + std::to_string(freeSlots) +
                            " free slots for " + std::to_string(expected) +
                            " boundary components");

    DualTree out;
    out.pieceSigs = cut.pieces;
    for (size_t i = 0; i < cut.pieces.size(); ++i)
        out.graph.vertices["piece" + std::to_string(i)] =
            GroupLabel::atom("piece" + std::to_string(i));
    for (size_t c = 0; c < cut.curves.size(); ++c) {
        EdgeData e;
        e.origin = "piece" + std::to_string(cut.curves[c].first.piece);
        e.terminus = "piece" + std::to_string(cut.curves[c].second.piece);
        e.label = GroupLabel::infCyclic();
        e.injOrigin = Injection::embedding("c" + std::to_string(c));
        e.injTerminus = Injection::embedding("c" + std::to_string(c));
        out.graph.edges["curve" + std::to_string(c)] = e;
    }
    out.graph.normalizeBase();
    out.graph.checkValid();
    return out;
}

GraphOfGroups fill(const GraphOfGroups& g, const std::vector<FillMark>& marks) {
    g.checkValid();
    GraphOfGroups out;
    out.vertices["center"] = GroupLabel::quotient(std::make_shared<GraphOfGroups>(g));
    for (size_t i = 0; i < marks.size(); ++i) {
        const FillMark& mark = marks[i];
        if (mark.atomName.empty()) throw SemanticError("", "fill mark needs an atom name");
        if (mark.subgroup.isTrivial())
            throw SemanticError(mark.atomName, "fill subgroup must be non-trivial");
        std::string leaf = "leaf" + std::to_string(i);
        out.vertices[leaf] = GroupLabel::product(
            {mark.subgroup, GroupLabel::atom(mark.atomName, {AtomFlag::PropertyFA})});
        EdgeData e;
        e.origin = "center";
        e.terminus = leaf;
        e.label = mark.subgroup;
        e.injOrigin = Injection::embedding("h" + std::to_string(i));
        e.injTerminus = Injection::embedding("h" + std::to_string(i));
        out.edges["fill" + std::to_string(i)] = e;
    }
    out.normalizeBase();
    out.checkValid();
    return out;
}

}  // namespace gog
