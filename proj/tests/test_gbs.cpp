#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gog/ellipticity.hpp"
#include "gog/gbs.hpp"
#include "gog/parse.hpp"
#include "gog/random.hpp"

using namespace gog;

namespace {

GbsGraph gbs(const std::string& text) { return GbsGraph::fromGraph(parseGog(text)); }

GbsGraph loop(int m, int n) {
    return gbs("vertex v Z; edge e v v Z *" + std::to_string(m) + " *" + std::to_string(n));
}

GbsGraph seg(int m, int n) {
    return gbs("vertex u Z; vertex v Z; edge e u v Z *" + std::to_string(m) + " *" +
               std::to_string(n));
}

}  // namespace

TEST_CASE("fromGraph rejects non-GBS input") {
    CHECK_THROWS_AS(GbsGraph::fromGraph(parseGog("vertex v atom:K")), SemanticError);
    CHECK_THROWS_AS(
        GbsGraph::fromGraph(parseGog("vertex u Z/4; vertex v Z/8; edge e u v Z/4 *1%4 *2%8")),
        SemanticError);
}

TEST_CASE("modular homomorphism") {
    GbsGraph g = loop(2, 3);
    LoopWord t = parseWord(g.graph, "e");
    CHECK(modular(g, t) == Rational(3, 2));
    CHECK(modular(g, parseWord(g.graph, "a^7")) == Rational(1));
    // multiplicative on t^2 a^5
    LoopWord w = t.power(g.graph, 2).concat(g.graph, parseWord(g.graph, "a^5"));
    CHECK(modular(g, w) == Rational(9, 4));
    // inverse traversal inverts the ratio
    CHECK(modular(g, t.inverse(g.graph)) == Rational(2, 3));
}

TEST_CASE("modular image lattice equality") {
    using R = Rational;
    CHECK(ModularImage::generatedBy({R(2)}) == ModularImage::generatedBy({R(1, 2)}));
    CHECK(ModularImage::generatedBy({R(4), R(8)}) == ModularImage::generatedBy({R(4), R(2)}));
    CHECK(ModularImage::generatedBy({R(2)}) != ModularImage::generatedBy({R(3)}));
    CHECK(ModularImage::generatedBy({R(6)}) != ModularImage::generatedBy({R(2), R(3)}));
    CHECK(ModularImage::generatedBy({R(2), R(3)}) ==
          ModularImage::generatedBy({R(6), R(3)}));
    // sign character matters
    CHECK(ModularImage::generatedBy({R(-2)}) != ModularImage::generatedBy({R(2)}));
    CHECK(ModularImage::generatedBy({R(-1), R(2)}) == ModularImage::generatedBy({R(-2), R(-1)}));
    // (-2)^2 = 4: <-2> contains 4 but not 2
    CHECK(ModularImage::generatedBy({R(-2)}) != ModularImage::generatedBy({R(4)}));
    CHECK(ModularImage::generatedBy({R(1)}) == ModularImage::generatedBy({}));
}

TEST_CASE("modularImageOf basis loops") {
    CHECK(modularImageOf(loop(1, 2)) == ModularImage::generatedBy({Rational(2)}));
    CHECK(modularImageOf(loop(1, 3)) != ModularImage::generatedBy({Rational(2)}));
    CHECK(modularImageOf(seg(1, 3)) == ModularImage::generatedBy({}));
    GbsGraph theta = gbs("vertex u Z; vertex v Z; edge e u v Z *2 *3; edge f u v Z *5 *7");
    // loop f e' has value (5/7)*(3/2)
    CHECK(modularImageOf(theta) == ModularImage::generatedBy({Rational(15, 14)}));
}

TEST_CASE("classification table") {
    auto check = [](const GbsGraph& g, GbsClassification::Group grp, GbsClassification::Jsj jsj) {
        GbsClassification c = classifyGbs(g);
        CHECK(c.group == grp);
        CHECK(c.jsj == jsj);
    };
    check(loop(1, 1), GbsClassification::Group::Z2,
          GbsClassification::Jsj::NoNontrivialUniversallyElliptic);
    check(loop(1, -1), GbsClassification::Group::KleinHNN,
          GbsClassification::Jsj::TwoSpacesNoJSJ);
    check(seg(2, 2), GbsClassification::Group::KleinAmalgam,
          GbsClassification::Jsj::TwoSpacesNoJSJ);
    check(loop(1, 2), GbsClassification::Group::NonElementary,
          GbsClassification::Jsj::OwnSpaceIsJSJ);
    check(gbs("vertex v Z"), GbsClassification::Group::Z, GbsClassification::Jsj::Trivial);
    // classification is computed on the reduced graph
    check(seg(1, 3), GbsClassification::Group::Z, GbsClassification::Jsj::Trivial);
    check(gbs("vertex u Z; vertex v Z; edge e u v Z *1 *1; edge f u v Z *1 *1"),
          GbsClassification::Group::Z2,
          GbsClassification::Jsj::NoNontrivialUniversallyElliptic);
}

TEST_CASE("canonical key identifies isomorphic presentations") {
    GraphOfGroups a = parseGog("vertex u Z; vertex v Z; edge e u v Z *2 *3");
    GraphOfGroups b = parseGog("vertex x Z; vertex y Z; edge f y x Z *3 *2");
    CHECK(gbsCanonicalKey(a) == gbsCanonicalKey(b));
    GraphOfGroups c = parseGog("vertex u Z; vertex v Z; edge e u v Z *2 *5");
    CHECK(gbsCanonicalKey(a) != gbsCanonicalKey(c));
    // generator sign flip at a vertex negates both incident multipliers
    GraphOfGroups d = parseGog("vertex u Z; vertex v Z; edge e u v Z *-2 *3");
    GraphOfGroups d2 = parseGog("vertex u Z; vertex v Z; edge e u v Z *2 *-3");
    CHECK(gbsCanonicalKey(d) == gbsCanonicalKey(d2));
    // but loop(1,-1) is not loop(1,1): a flip negates both ends at once
    GraphOfGroups l1 = parseGog("vertex v Z; edge e v v Z *1 *1");
    GraphOfGroups lm = parseGog("vertex v Z; edge e v v Z *1 *-1");
    CHECK(gbsCanonicalKey(l1) != gbsCanonicalKey(lm));
}

TEST_CASE("connect seg(1,3) with point") {
    GbsGraph point = gbs("vertex p Z");
    ConnectBounds bounds;
    bounds.maxDepth = 1;
    ConnectResult r = connectSearch(seg(1, 3), point, bounds);
    REQUIRE(r.status == ConnectResult::Status::Equivalent);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->script.size() == 1);
    GraphOfGroups replayed = r.certificate->replay();
    CHECK(gbsCanonicalKey(replayed) == gbsCanonicalKey(point.graph));
}

TEST_CASE("connect distinct modular images") {
    ConnectBounds bounds;
    ConnectResult r = connectSearch(loop(1, 2), loop(1, 3), bounds);
    CHECK(r.status == ConnectResult::Status::Distinct);
    CHECK(r.witness.find("modular") != std::string::npos);
}

TEST_CASE("connect distinct classifications") {
    ConnectBounds bounds;
    ConnectResult r = connectSearch(loop(1, -1), seg(2, 2), bounds);
    CHECK(r.status == ConnectResult::Status::Distinct);
}

TEST_CASE("connect distinct betti numbers") {
    GbsGraph rose = gbs("vertex v Z; edge e v v Z *2 *3; edge f v v Z *5 *7");
    GbsGraph one = loop(2, 3);
    ConnectResult r = connectSearch(rose, one, ConnectBounds{});
    CHECK(r.status == ConnectResult::Status::Distinct);
}

TEST_CASE("connect self is equivalent with empty certificate") {
    ConnectResult r = connectSearch(loop(1, 2), loop(1, 2), ConnectBounds{});
    REQUIRE(r.status == ConnectResult::Status::Equivalent);
    CHECK(r.certificate->script.empty());
}

TEST_CASE("connect slide-related graphs") {
    // theta with a slidable end: sliding f across e changes labels but not
    // the deformation space
    GbsGraph a = gbs("vertex u Z; vertex v Z; edge e u v Z *2 *3; edge f u v Z *4 *5");
    GraphOfGroups bg = applyMove(a.graph, Slide{"f", Side::Origin, "e", Side::Origin}).graph;
    GbsGraph b = GbsGraph::fromGraph(bg);
    ConnectBounds bounds;
    bounds.maxDepth = 2;
    bounds.maxGraphSize = 8;
    ConnectResult r = connectSearch(a, b, bounds);
    REQUIRE(r.status == ConnectResult::Status::Equivalent);
    CHECK(gbsCanonicalKey(r.certificate->replay()) == gbsCanonicalKey(b.graph));
}

TEST_CASE("certificate invariants") {
    // whenever connect finds Equivalent, modular image and betti agree on
    // every prefix of the replay
    GbsGraph point = gbs("vertex p Z");
    ConnectResult r = connectSearch(seg(1, 3), point, ConnectBounds{});
    REQUIRE(r.status == ConnectResult::Status::Equivalent);
    GraphOfGroups cur = r.certificate->source;
    ModularImage img = modularImageOf(GbsGraph::fromGraph(cur));
    int betti = cur.bettiNumber();
    for (const Move& m : r.certificate->script) {
        cur = applyMove(cur, m).graph;
        CHECK(modularImageOf(GbsGraph::fromGraph(cur)) == img);
        CHECK(cur.bettiNumber() == betti);
    }
}

TEST_CASE("modular invariant under random moves") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        GbsGraph g = randomGbsGraph(rng, 3, 5);
        auto moves = enumerateMoves(g.graph);
        if (moves.empty()) continue;
        Move m = moves[rng() % moves.size()];
        MoveResult r = applyMove(g.graph, m);
        GbsGraph h = GbsGraph::fromGraph(r.graph);
        CHECK(modularImageOf(h) == modularImageOf(g));
        LoopWord w = randomWord(g.graph, rng, 5);
        CHECK(modular(h, r.transport(w)) == modular(g, w));
    }
}
