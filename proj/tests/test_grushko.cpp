#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gog/grushko.hpp"
#include "gog/moves.hpp"
#include "gog/parse.hpp"

using namespace gog;

namespace {

GraphOfGroups fixture(const std::string& name) {
    std::ifstream in(std::filesystem::path(GOG_FIXTURE_DIR) / name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parseGog(ss.str());
}

}  // namespace

TEST_CASE("fingerprint of star and chain shapes") {
    GrushkoFingerprint star = grushkoFingerprint(fixture("grushko_star.gog"));
    CHECK(star.atoms == std::map<std::string, int>{{"G1", 1}, {"G2", 1}});
    CHECK(star.rank == 2);
    GrushkoFingerprint chain = grushkoFingerprint(fixture("grushko_chain.gog"));
    CHECK(star == chain);
}

TEST_CASE("fingerprint of a free group") {
    GraphOfGroups rose = parseGog("vertex v 1; edge e v v 1 triv triv; edge f v v 1 triv triv");
    GrushkoFingerprint fp = grushkoFingerprint(rose);
    CHECK(fp.atoms.empty());
    CHECK(fp.rank == 2);
}

TEST_CASE("fingerprint requires trivial edge labels") {
    GraphOfGroups g = parseGog("vertex u Z; vertex v Z; edge e u v Z *2 *2");
    CHECK_THROWS_AS(grushkoFingerprint(g), SemanticError);
}

TEST_CASE("verdict") {
    CHECK(grushkoVerdict(fixture("grushko_star.gog")).isGrushkoTree);
    CHECK(grushkoVerdict(fixture("grushko_chain.gog")).isGrushkoTree);

    // a Z vertex is freely decomposable
    GraphOfGroups z = parseGog("vertex u Z; vertex v atom:A[freely_indecomposable]; edge e u v 1 triv triv");
    GrushkoVerdict vz = grushkoVerdict(z);
    CHECK_FALSE(vz.isGrushkoTree);
    CHECK_FALSE(vz.reasons.empty());

    // atom without the freely_indecomposable flag fails
    GraphOfGroups unflagged = parseGog(
        "vertex u atom:A; vertex v atom:B[freely_indecomposable]; edge e u v 1 triv triv");
    CHECK_FALSE(grushkoVerdict(unflagged).isGrushkoTree);

    // non-trivial edge label fails
    GraphOfGroups badEdge = parseGog(
        "vertex u atom:A[freely_indecomposable]; vertex v atom:B[freely_indecomposable]\n"
        "edge e u v atom:K emb:x emb:y");
    CHECK_FALSE(grushkoVerdict(badEdge).isGrushkoTree);

    // collapsible valence-1 vertex (trivial leaf) fails minimality
    GraphOfGroups leaf = parseGog(
        "vertex c atom:A[freely_indecomposable]; vertex l 1; edge e c l 1 triv triv");
    CHECK_FALSE(grushkoVerdict(leaf).isGrushkoTree);
}

TEST_CASE("compare same space") {
    CHECK(grushkoCompare(fixture("grushko_star.gog"), fixture("grushko_chain.gog")) ==
          SpaceComparison::SameSpace);
}

TEST_CASE("compare perturbations differ") {
    CHECK(grushkoCompare(fixture("grushko_star.gog"), fixture("grushko_star_altatom.gog")) ==
          SpaceComparison::DifferentSpace);
    CHECK(grushkoCompare(fixture("grushko_star.gog"), fixture("grushko_star_rank1.gog")) ==
          SpaceComparison::DifferentSpace);
}

TEST_CASE("compare gated by the verdict") {
    GraphOfGroups notGrushko = parseGog("vertex v Z");
    CHECK(grushkoCompare(notGrushko, fixture("grushko_star.gog")) == SpaceComparison::Unknown);
}

TEST_CASE("fingerprint invariant under moves on trivial-edge graphs") {
    GraphOfGroups g = fixture("grushko_star.gog");
    GrushkoFingerprint fp = grushkoFingerprint(g);
    // collapse a trivial-vertex edge end: find a collapsible edge
    for (const auto& [id, e] : g.edges) {
        for (Side s : {Side::Origin, Side::Terminus}) {
            if (e.isLoop()) continue;
            try {
                MoveResult r = applyMove(g, DeformationCollapse{id, s});
                CHECK(grushkoFingerprint(r.graph) == fp);
            } catch (const MoveError&) {
            }
        }
    }
    // subdividing a trivial edge keeps the fingerprint
    MoveResult sub = applyMove(g, Subdivide{"e1", "m", "h1", "h2"});
    CHECK(grushkoFingerprint(sub.graph) == fp);
}
