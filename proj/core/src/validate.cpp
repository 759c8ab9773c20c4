#include "gog/validate.hpp"

namespace gog {

ValidationReport validate(const GraphOfGroups& g, ClassSpec spec) {
    g.checkValid();
    ValidationReport report;
    for (const auto& [id, e] : g.edges)
        if (!labelInClass(e.label, spec)) report.classViolations.push_back(id);
    for (const auto& [v, label] : g.vertices) {
        auto ends = g.incidentEnds(v);
        if (ends.size() != 1) continue;
        const auto& [edgeId, side] = ends[0];
        const EdgeData& e = g.edge(edgeId);
        if (injectionOnto(e.inj(side), e.label, label)) report.nonMinimalVertices.push_back(v);
    }
    return report;
}

}  // namespace gog
