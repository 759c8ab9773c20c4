#include "gog/serialize.hpp"

#include <sstream>

namespace gog {

std::string serializeCanonical(const GraphOfGroups& g) {
    std::ostringstream os;
    for (const auto& [id, label] : g.vertices) os << "vertex " << id << " " << label.text() << "\n";
    for (const auto& [id, e] : g.edges)
        os << "edge " << id << " " << e.origin << " " << e.terminus << " " << e.label.text() << " "
           << e.injOrigin.text() << " " << e.injTerminus.text() << "\n";
    return os.str();
}

namespace {

std::string dotEscape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string serializeDot(const GraphOfGroups& g) {
    std::ostringstream os;
    os << "graph gog {\n";
    for (const auto& [id, label] : g.vertices) {
        if (label.kind == GroupLabel::Kind::Quotient) {
            std::ostringstream summary;
            summary << id << "\\n[" << label.inner->vertices.size() << "v,"
                    << label.inner->edges.size() << "e collapsed]";
            os << "  \"" << dotEscape(id) << "\" [shape=box, label=\"" << summary.str() << "\"];\n";
        } else {
            os << "  \"" << dotEscape(id) << "\" [label=\"" << dotEscape(id) << "\\n"
               << dotEscape(label.text()) << "\"];\n";
        }
    }
    for (const auto& [id, e] : g.edges) {
        os << "  \"" << dotEscape(e.origin) << "\" -- \"" << dotEscape(e.terminus)
           << "\" [label=\"" << dotEscape(id) << ": " << dotEscape(e.label.text()) << "\\n"
           << dotEscape(e.injOrigin.text()) << " | " << dotEscape(e.injTerminus.text())
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace gog
