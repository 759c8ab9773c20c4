#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gog/moves.hpp"
#include "gog/rational.hpp"
#include "gog/word.hpp"

namespace gog {

// Graph with every vertex and edge label infinite cyclic and CyclicMult
// injections (nonzero integer multipliers).
struct GbsGraph {
    GraphOfGroups graph;

    // Throws SemanticError unless g is a GBS graph.
    static GbsGraph fromGraph(const GraphOfGroups& g);
};

// Multiplicative homomorphism to the nonzero rationals: the product over
// traversed edges of (departure multiplier / arrival multiplier). Vertex
// elements map to 1.
Rational modular(const GbsGraph& g, const LoopWord& w);

// Subgroup of Q^* generated by finitely many nonzero rationals, compared
// exactly via prime exponent lattices plus the sign character.
class ModularImage {
  public:
    static ModularImage generatedBy(const std::vector<Rational>& gens);
    bool operator==(const ModularImage& o) const;
    bool operator!=(const ModularImage& o) const { return !(*this == o); }
    std::string str() const;

  private:
    std::vector<long long> primes_;               // support, sorted
    std::vector<std::vector<long long>> hnf_;     // row HNF basis of the exponent lattice
    bool containsMinusOne_ = false;
    std::vector<int> signOfBasis_;                // sign character on HNF basis rows
};

// Modular image of the whole group: generated by the modular values of a
// basis of loops (non-tree edges of a spanning tree).
ModularImage modularImageOf(const GbsGraph& g);

struct GbsClassification {
    enum class Group { Z, Z2, KleinHNN, KleinAmalgam, NonElementary };
    enum class Jsj { Trivial, NoNontrivialUniversallyElliptic, TwoSpacesNoJSJ, OwnSpaceIsJSJ };
    Group group = Group::NonElementary;
    Jsj jsj = Jsj::OwnSpaceIsJSJ;
    bool operator==(const GbsClassification&) const = default;
    std::string groupName() const;
    std::string jsjName() const;
};

// Elementary-case classification computed on the reduced graph; every
// non-elementary GBS graph's own deformation space is the JSJ space.
GbsClassification classifyGbs(const GbsGraph& g);

struct ConnectBounds {
    int maxGraphSize = 8;  // vertices + edges of intermediate graphs
    int maxDepth = 4;
};

struct ConnectResult {
    enum class Status { Equivalent, Distinct, Unknown };
    Status status = Status::Unknown;
    std::optional<Certificate> certificate;  // Equivalent
    std::string witness;                     // Distinct: the differing invariant
};

// Bounded breadth-first search over canonicalized graphs with moves
// {Slide, DeformationCollapse, Expansion}. Equivalent certificates replay to
// canonical equality; Distinct witnesses are invariant mismatches.
ConnectResult connectSearch(const GbsGraph& a, const GbsGraph& b, const ConnectBounds& bounds);

// Canonical key under vertex relabeling, edge reversal and generator sign
// flips; equal keys iff isomorphic as labeled graphs.
std::string gbsCanonicalKey(const GraphOfGroups& g);

}  // namespace gog
