#include "gog/grushko.hpp"

#include <sstream>

namespace gog {

std::string GrushkoFingerprint::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [name, count] : atoms) {
        for (int i = 0; i < count; ++i) {
            if (!first) os << ",";
            os << name;
            first = false;
        }
    }
    os << "} rank " << rank;
    return os.str();
}

GrushkoFingerprint grushkoFingerprint(const GraphOfGroups& g) {
    g.checkValid();
    for (const auto& [id, e] : g.edges)
        if (!e.label.isTrivial())
            throw SemanticError(id, "Grushko fingerprint needs trivial edge labels");
    GrushkoFingerprint fp;
    fp.rank = g.bettiNumber();
    for (const auto& [v, label] : g.vertices) {
        if (label.isTrivial()) continue;
        if (label.kind == GroupLabel::Kind::InfCyclic) {
            // a Z vertex is a free factor: it contributes to the rank
            ++fp.rank;
            continue;
        }
        if (label.kind == GroupLabel::Kind::Atom) {
            ++fp.atoms[label.name];
            continue;
        }
        throw SemanticError(v, "fingerprint vertex labels must be trivial, Z or atoms");
    }
    return fp;
}

GrushkoVerdict grushkoVerdict(const GraphOfGroups& g) {
    GrushkoVerdict v;
    v.isGrushkoTree = true;
    auto flag = [&](const std::string& reason) {
        v.isGrushkoTree = false;
        v.reasons.push_back(reason);
    };
    try {
        g.checkValid();
    } catch (const SemanticError& e) {
        flag(e.what());
        return v;
    }
    for (const auto& [id, e] : g.edges)
        if (!e.label.isTrivial()) flag(id + ": edge label is not trivial");
    for (const auto& [vid, label] : g.vertices) {
        if (label.isTrivial()) continue;
        // Z is freely decomposable as a vertex group: it belongs in the rank
        if (label.kind != GroupLabel::Kind::Atom ||
            !label.hasFlag(AtomFlag::FreelyIndecomposable))
            flag(vid + ": non-trivial vertex label is not a freely indecomposable atom");
    }
    for (const auto& [vid, label] : g.vertices) {
        if (g.valence(vid) != 1) continue;
        auto ends = g.incidentEnds(vid);
        const EdgeData& e = g.edge(ends[0].first);
        if (injectionOnto(e.inj(ends[0].second), e.label, label))
            flag(vid + ": collapsible valence-1 vertex");
    }
    return v;
}

SpaceComparison grushkoCompare(const GraphOfGroups& a, const GraphOfGroups& b) {
    if (!grushkoVerdict(a).isGrushkoTree || !grushkoVerdict(b).isGrushkoTree)
        return SpaceComparison::Unknown;
    return grushkoFingerprint(a) == grushkoFingerprint(b) ? SpaceComparison::SameSpace
                                                          : SpaceComparison::DifferentSpace;
}

}  // namespace gog
