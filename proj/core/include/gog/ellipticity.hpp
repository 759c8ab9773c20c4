#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gog/reduce.hpp"
#include "gog/word.hpp"

namespace gog {

struct EllipticityVerdict {
    enum class Status { Elliptic, Hyperbolic, Unknown };
    Status status = Status::Elliptic;
    int translationLength = 0;  // positive iff Hyperbolic
    std::string reason;         // Unknown only
    LoopWord witness;           // the cyclically reduced word

    bool elliptic() const { return status == Status::Elliptic; }
    bool hyperbolic() const { return status == Status::Hyperbolic; }
    bool unknown() const { return status == Status::Unknown; }
};

// Elliptic iff the cyclic reduction has no edges. With `collapsed` set E1,
// decides ellipticity in the collapse T/E1: the axis projects to a point
// exactly when every witness edge is collapsed; translation length counts
// the surviving edges.
EllipticityVerdict isElliptic(const GraphOfGroups& g, const LoopWord& w,
                              const std::set<std::string>* collapsed = nullptr);

struct SubgroupVerdict {
    enum class Status { Elliptic, NotElliptic, Unknown };
    Status status = Status::Elliptic;
    std::optional<LoopWord> witness;  // hyperbolic witness for NotElliptic
    std::string reason;
};

// Serre's criterion: a finitely generated subgroup with every generator and
// every pairwise product elliptic fixes a point.
SubgroupVerdict subgroupElliptic(const GraphOfGroups& g,
                                 const std::vector<LoopWord>& generators,
                                 const std::set<std::string>* collapsed = nullptr);

struct DominationVerdict {
    enum class Status { Dominates, RefutedBy, Inconclusive };
    Status status = Status::Dominates;
    std::optional<LoopWord> refutation;  // elliptic in T1, hyperbolic in T2
    std::string reason;
};

// Does the collapse T1 = T/e1 dominate T2 = T/e2? Certified by running
// Serre's criterion on a structural generating set of every vertex group of
// T1 against collapsed = e2. Opaque labels contribute a single formal
// generator, so certificates over atoms are as strong as the declarations.
DominationVerdict dominates(const GraphOfGroups& g, const std::set<std::string>& e1,
                            const std::set<std::string>& e2,
                            const std::vector<LoopWord>& samples = {});

// Structural generating words for the vertex group of T/e1 given by the
// component of `subgraphEdges` containing `root` (used by dominates; exposed
// for tests).
std::vector<LoopWord> componentGenerators(const GraphOfGroups& g,
                                          const std::set<std::string>& subgraphEdges,
                                          const std::string& root);

}  // namespace gog
