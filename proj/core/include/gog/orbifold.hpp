#pragma once

#include <string>
#include <vector>

#include "gog/rational.hpp"

namespace gog {

struct OrbifoldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Combinatorial signature of a compact 2-orbifold.
struct OrbifoldSig {
    enum class SegKind { Boundary, Mirror };

    struct Circle {
        enum class Kind { WholeBoundary, WholeMirror, Mixed };
        Kind kind = Kind::WholeBoundary;
        // Mixed only: cyclic segment sequence; corners[i] is the corner order
        // at the junction after segment i (>=2 between two mirrors, 0 else).
        std::vector<SegKind> segments;
        std::vector<long long> corners;
        bool operator==(const Circle&) const = default;
    };

    long long genus = 0;
    bool orientable = true;
    std::vector<long long> coneOrders;  // each >= 2; kept sorted
    std::vector<Circle> circles;

    bool operator==(const OrbifoldSig&) const = default;

    // Throws OrbifoldError on malformed data (corner between non-mirrors,
    // adjacent boundary segments, cone order < 2, ...).
    void checkValid() const;

    bool hasMirrors() const;
    long long cornerCount() const;
    std::vector<long long> allCorners() const;

    // Boundary components of the orbifold: whole-boundary circles and
    // boundary arcs of mixed circles, in declaration order.
    struct BoundaryComponent {
        int circle;
        int segment;       // -1 for a whole circle
        bool isArc() const { return segment >= 0; }
    };
    std::vector<BoundaryComponent> boundaryComponents() const;

    std::string text() const;  // sig(g=..,or=..,bd=[...],cones=[...])
};

OrbifoldSig parseSig(const std::string& text);

// Orbifold Euler characteristic: chi(Sigma_top) - sum(1-1/q) - 1/2 sum(1-1/r).
// Throws OrbifoldError on the bad-orbifold signatures (teardrop, spindle,
// and their mirrored halves).
Rational eulerCharacteristic(const OrbifoldSig& sig);
bool isHyperbolic(const OrbifoldSig& sig);  // chi < 0

enum class SccVerdict { Yes, No, Unknown };

// Does the orbifold contain an essential two-sided simple closed geodesic?
// Orientable mirror-free: pants-count 3g-3+(circles+cones) >= 1 with cones
// as punctures. A verified lookup covers disc- and annulus-with-mirror
// families; everything else is Unknown. Requires a hyperbolic signature.
SccVerdict hasEssentialScc(const OrbifoldSig& sig);

enum class BoundarySplittingCase { FreeArc, DiscMirrorZ2, AnnulusArcFree, AnnulusMirrorZ2 };

std::string splittingCaseName(BoundarySplittingCase c);
// Edge group of the case: Trivial for the arc cases, Z/2 for the mirror cases.
bool splittingCaseOverZ2(BoundarySplittingCase c);

// Which case of the boundary-arc splitting applies for the given boundary
// component: discs and annuli without cone points are the exceptional cases,
// everything else splits freely along a properly embedded arc.
BoundarySplittingCase boundarySplittingCase(const OrbifoldSig& sig, int component);

}  // namespace gog
