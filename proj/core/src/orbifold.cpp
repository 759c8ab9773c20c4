#include "gog/orbifold.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gog {

namespace {

bool allMirror(const OrbifoldSig::Circle& c) {
    if (c.kind == OrbifoldSig::Circle::Kind::WholeMirror) return true;
    if (c.kind != OrbifoldSig::Circle::Kind::Mixed) return false;
    return std::all_of(c.segments.begin(), c.segments.end(),
                       [](OrbifoldSig::SegKind k) { return k == OrbifoldSig::SegKind::Mirror; });
}

bool circleHasMirror(const OrbifoldSig::Circle& c) {
    if (c.kind == OrbifoldSig::Circle::Kind::WholeMirror) return true;
    if (c.kind != OrbifoldSig::Circle::Kind::Mixed) return false;
    return std::any_of(c.segments.begin(), c.segments.end(),
                       [](OrbifoldSig::SegKind k) { return k == OrbifoldSig::SegKind::Mirror; });
}

}  // namespace

void OrbifoldSig::checkValid() const {
    if (genus < 0) throw OrbifoldError("negative genus");
    for (long long q : coneOrders)
        if (q < 2) throw OrbifoldError("cone order " + std::to_string(q) + " < 2");
    if (!std::is_sorted(coneOrders.begin(), coneOrders.end()))
        throw OrbifoldError("cone orders must be listed sorted");
    for (const Circle& c : circles) {
        if (c.kind != Circle::Kind::Mixed) {
            if (!c.segments.empty() || !c.corners.empty())
                throw OrbifoldError("whole circle with segment data");
            continue;
        }
        size_t n = c.segments.size();
        if (n == 0) throw OrbifoldError("mixed circle without segments");
        if (c.corners.size() != n)
            throw OrbifoldError("corner list length must match segment count");
        for (size_t i = 0; i < n; ++i) {
            SegKind cur = c.segments[i];
            SegKind next = c.segments[(i + 1) % n];
            bool mm = cur == SegKind::Mirror && next == SegKind::Mirror;
            if (n == 1 && cur == SegKind::Mirror) mm = c.corners[0] != 0;  // one-corner mirror disc
            if (cur == SegKind::Boundary && next == SegKind::Boundary && n > 1)
                throw OrbifoldError("adjacent boundary segments on one circle");
            if (mm) {
                if (c.corners[i] < 2)
                    throw OrbifoldError("mirror-mirror junction needs a corner order >= 2");
            } else if (c.corners[i] != 0) {
                throw OrbifoldError("corner order away from a mirror-mirror junction");
            }
        }
        if (n == 1 && c.segments[0] == SegKind::Boundary)
            throw OrbifoldError("single-segment boundary circle: use a whole boundary circle");
    }
}

bool OrbifoldSig::hasMirrors() const {
    return std::any_of(circles.begin(), circles.end(), circleHasMirror);
}

long long OrbifoldSig::cornerCount() const {
    return static_cast<long long>(allCorners().size());
}

std::vector<long long> OrbifoldSig::allCorners() const {
    std::vector<long long> out;
    for (const Circle& c : circles)
        for (long long r : c.corners)
            if (r != 0) out.push_back(r);
    return out;
}

std::vector<OrbifoldSig::BoundaryComponent> OrbifoldSig::boundaryComponents() const {
    std::vector<BoundaryComponent> out;
    for (size_t i = 0; i < circles.size(); ++i) {
        const Circle& c = circles[i];
        if (c.kind == Circle::Kind::WholeBoundary) {
            out.push_back({static_cast<int>(i), -1});
        } else if (c.kind == Circle::Kind::Mixed) {
            for (size_t s = 0; s < c.segments.size(); ++s)
                if (c.segments[s] == SegKind::Boundary)
                    out.push_back({static_cast<int>(i), static_cast<int>(s)});
        }
    }
    return out;
}

std::string OrbifoldSig::text() const {
    std::ostringstream os;
    os << "sig(g=" << genus << ",or=" << (orientable ? "true" : "false") << ",bd=[";
    for (size_t i = 0; i < circles.size(); ++i) {
        if (i) os << ",";
        const Circle& c = circles[i];
        if (c.kind == Circle::Kind::WholeBoundary) {
            os << "circle";
        } else if (c.kind == Circle::Kind::WholeMirror) {
            os << "mirror";
        } else {
            os << "mix(";
            for (size_t s = 0; s < c.segments.size(); ++s) {
                if (s) os << ",";
                os << (c.segments[s] == SegKind::Boundary ? "b" : "m");
                if (c.corners[s] != 0) os << "/" << c.corners[s];
            }
            os << ")";
        }
    }
    os << "],cones=[";
    for (size_t i = 0; i < coneOrders.size(); ++i) {
        if (i) os << ",";
        os << coneOrders[i];
    }
    os << "])";
    return os.str();
}

namespace {

std::vector<std::string> splitTopLevel(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

long long sigInt(const std::string& s) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw OrbifoldError("bad number '" + s + "' in signature");
    }
}

OrbifoldSig::Circle parseCircle(const std::string& tok) {
    using Circle = OrbifoldSig::Circle;
    Circle c;
    if (tok == "circle") {
        c.kind = Circle::Kind::WholeBoundary;
        return c;
    }
    if (tok == "mirror") {
        c.kind = Circle::Kind::WholeMirror;
        return c;
    }
    if (tok.rfind("mix(", 0) == 0 && tok.back() == ')') {
        c.kind = Circle::Kind::Mixed;
        for (const std::string& seg : splitTopLevel(tok.substr(4, tok.size() - 5), ',')) {
            std::string body = seg;
            long long corner = 0;
            auto slash = body.find('/');
            if (slash != std::string::npos) {
                corner = sigInt(body.substr(slash + 1));
                body = body.substr(0, slash);
            }
            if (body == "b")
                c.segments.push_back(OrbifoldSig::SegKind::Boundary);
            else if (body == "m")
                c.segments.push_back(OrbifoldSig::SegKind::Mirror);
            else
                throw OrbifoldError("bad segment '" + seg + "'");
            c.corners.push_back(corner);
        }
        return c;
    }
    throw OrbifoldError("bad boundary circle '" + tok + "'");
}

}  // namespace

OrbifoldSig parseSig(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("sig(", 0) != 0 || s.back() != ')')
        throw OrbifoldError("signature must look like sig(...)");
    OrbifoldSig sig;
    for (const std::string& part : splitTopLevel(s.substr(4, s.size() - 5), ',')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) throw OrbifoldError("expected key=value, got '" + part + "'");
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "g") {
            sig.genus = sigInt(val);
        } else if (key == "or") {
            if (val == "true" || val == "1") sig.orientable = true;
            else if (val == "false" || val == "0") sig.orientable = false;
            else throw OrbifoldError("bad orientability '" + val + "'");
        } else if (key == "bd" || key == "cones" || key == "mirrors") {
            if (val.size() < 2 || val.front() != '[' || val.back() != ']')
                throw OrbifoldError(key + " needs a [...] list");
            std::string body = val.substr(1, val.size() - 2);
            if (body.empty()) continue;
            for (const std::string& item : splitTopLevel(body, ',')) {
                if (key == "bd") sig.circles.push_back(parseCircle(item));
                else if (key == "cones") sig.coneOrders.push_back(sigInt(item));
                else sig.circles.push_back(parseCircle(item == "circle" ? item : "mirror"));
            }
        } else {
            throw OrbifoldError("unknown signature key '" + key + "'");
        }
    }
    std::sort(sig.coneOrders.begin(), sig.coneOrders.end());
    sig.checkValid();
    return sig;
}

Rational eulerCharacteristic(const OrbifoldSig& sig) {
    sig.checkValid();
    long long nCircles = static_cast<long long>(sig.circles.size());
    long long chiTop = (sig.orientable ? 2 - 2 * sig.genus : 2 - sig.genus) - nCircles;
    std::vector<long long> corners = sig.allCorners();

    // bad orbifolds: teardrop, spindle, and their mirrored halves
    if (sig.orientable && sig.genus == 0 && nCircles == 0) {
        if (sig.coneOrders.size() == 1) throw OrbifoldError("bad orbifold: teardrop");
        if (sig.coneOrders.size() == 2 && sig.coneOrders[0] != sig.coneOrders[1])
            throw OrbifoldError("bad orbifold: spindle");
    }
    if (sig.orientable && sig.genus == 0 && nCircles == 1 && allMirror(sig.circles[0]) &&
        sig.coneOrders.empty()) {
        if (corners.size() == 1) throw OrbifoldError("bad orbifold: mirrored teardrop");
        if (corners.size() == 2 && corners[0] != corners[1])
            throw OrbifoldError("bad orbifold: mirrored spindle");
    }

    Rational chi(chiTop);
    for (long long q : sig.coneOrders) chi = chi - (Rational(1) - Rational(1, q));
    for (long long r : corners) chi = chi - (Rational(1) - Rational(1, r)) * Rational(1, 2);
    return chi;
}

bool isHyperbolic(const OrbifoldSig& sig) { return eulerCharacteristic(sig) < Rational(0); }

SccVerdict hasEssentialScc(const OrbifoldSig& sig) {
    // Euclidean signatures (chi = 0, e.g. the four-times-punctured sphere
    // with order-2 cones) still carry essential curves; only spherical ones
    // are out of scope.
    if (Rational(0) < eulerCharacteristic(sig))
        throw OrbifoldError("essential-curve test needs chi <= 0");
    long long punctures =
        static_cast<long long>(sig.circles.size()) + static_cast<long long>(sig.coneOrders.size());
    if (!sig.hasMirrors() && sig.orientable)
        return 3 * sig.genus - 3 + punctures >= 1 ? SccVerdict::Yes : SccVerdict::No;
    // verified lookup for small mirror families
    if (sig.orientable && sig.genus == 0 && sig.circles.size() == 1 && sig.hasMirrors()) {
        // underlying disc: interior curves bound subdiscs, essential iff the
        // subdisc can hold >= 2 cone points
        return sig.coneOrders.size() >= 2 ? SccVerdict::Yes : SccVerdict::No;
    }
    if (sig.orientable && sig.genus == 0 && sig.circles.size() == 2 && sig.coneOrders.empty()) {
        bool whole = std::all_of(sig.circles.begin(), sig.circles.end(), [](const auto& c) {
            return c.kind != OrbifoldSig::Circle::Kind::Mixed;
        });
        bool mirror = std::any_of(sig.circles.begin(), sig.circles.end(), [](const auto& c) {
            return c.kind == OrbifoldSig::Circle::Kind::WholeMirror;
        });
        // underlying annulus with a mirror circle: the core curve is essential
        if (whole && mirror) return SccVerdict::Yes;
    }
    return SccVerdict::Unknown;
}

std::string splittingCaseName(BoundarySplittingCase c) {
    switch (c) {
        case BoundarySplittingCase::FreeArc: return "FreeArc";
        case BoundarySplittingCase::DiscMirrorZ2: return "DiscMirrorZ2";
        case BoundarySplittingCase::AnnulusArcFree: return "AnnulusArcFree";
        case BoundarySplittingCase::AnnulusMirrorZ2: return "AnnulusMirrorZ2";
    }
    return "?";
}

bool splittingCaseOverZ2(BoundarySplittingCase c) {
    return c == BoundarySplittingCase::DiscMirrorZ2 || c == BoundarySplittingCase::AnnulusMirrorZ2;
}

BoundarySplittingCase boundarySplittingCase(const OrbifoldSig& sig, int component) {
    // No curvature gate here: the disc/annulus exceptional cases naturally
    // arise as pieces whose own chi is >= 0.
    auto comps = sig.boundaryComponents();
    if (component < 0 || component >= static_cast<int>(comps.size()))
        throw OrbifoldError("boundary component index out of range");
    bool disc = sig.orientable && sig.genus == 0 && sig.circles.size() == 1;
    bool annulus = sig.orientable && sig.genus == 0 && sig.circles.size() == 2;
    if (disc && sig.coneOrders.empty()) return BoundarySplittingCase::DiscMirrorZ2;
    if (annulus && sig.coneOrders.empty())
        return comps[component].isArc() ? BoundarySplittingCase::AnnulusArcFree
                                        : BoundarySplittingCase::AnnulusMirrorZ2;
    return BoundarySplittingCase::FreeArc;
}

}  // namespace gog
