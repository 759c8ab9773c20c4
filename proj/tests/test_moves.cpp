#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gog/ellipticity.hpp"
#include "gog/moves.hpp"
#include "gog/parse.hpp"
#include "gog/random.hpp"
#include "gog/serialize.hpp"

using namespace gog;

TEST_CASE("collapse seg(1,3)") {
    GraphOfGroups g = parseGog("vertex u Z; vertex v Z; edge e u v Z *1 *3");
    MoveResult r = applyMove(g, DeformationCollapse{"e", Side::Origin});
    CHECK(r.graph.edges.empty());
    CHECK(r.graph.vertices.size() == 1);
    CHECK(r.graph.vertices.begin()->second == GroupLabel::infCyclic());
}

TEST_CASE("collapse side conditions") {
    GraphOfGroups loop = parseGog("vertex v Z; edge e v v Z *1 *2");
    CHECK_THROWS_AS(applyMove(loop, DeformationCollapse{"e", Side::Origin}), MoveError);
    GraphOfGroups seg = parseGog("vertex u Z; vertex v Z; edge e u v Z *2 *2");
    CHECK_THROWS_AS(applyMove(seg, DeformationCollapse{"e", Side::Origin}), MoveError);
}

TEST_CASE("slide arithmetic") {
    // e: seg(2,3) u->v, f: seg(4,5) u->w; slide f's u-end across e
    GraphOfGroups g = parseGog(
        "vertex u Z; vertex v Z; vertex w Z\n"
        "edge e u v Z *2 *3\n"
        "edge f u w Z *4 *5");
    MoveResult r = applyMove(g, Slide{"f", Side::Origin, "e", Side::Origin});
    const EdgeData& f = r.graph.edge("f");
    CHECK(f.origin == "v");
    CHECK(f.terminus == "w");
    CHECK(f.injOrigin == Injection::cyclicMult(6));  // 4*3/2
    CHECK(f.injTerminus == Injection::cyclicMult(5));
    CHECK(r.graph.vertices.size() == g.vertices.size());
    CHECK(r.graph.edges.size() == g.edges.size());
    CHECK(r.graph.bettiNumber() == g.bettiNumber());
}

TEST_CASE("slide divisibility required") {
    GraphOfGroups g = parseGog(
        "vertex u Z; vertex v Z; vertex w Z\n"
        "edge e u v Z *4 *3\n"
        "edge f u w Z *2 *5");
    // 4 does not divide 2
    CHECK_THROWS_AS(applyMove(g, Slide{"f", Side::Origin, "e", Side::Origin}), MoveError);
}

TEST_CASE("subdivide") {
    GraphOfGroups g = parseGog("vertex v Z; edge e v v Z *2 *3");
    MoveResult r = applyMove(g, Subdivide{"e", "m", "e1", "e2"});
    CHECK(r.graph.vertices.size() == 2);
    CHECK(r.graph.edges.size() == 2);
    CHECK(r.graph.vertexLabel("m") == GroupLabel::infCyclic());
    CHECK(r.graph.valence("m") == 2);
    // translation length scales: the stable letter now crosses both halves
    LoopWord t = parseWord(g, "e");
    LoopWord tt = r.transport(t);
    CHECK(isElliptic(r.graph, tt).translationLength == 2);
}

TEST_CASE("expansion inverts collapse") {
    GraphOfGroups g = parseGog("vertex u Z; vertex v Z; edge e u v Z *1 *3");
    Move collapse = DeformationCollapse{"e", Side::Origin};
    MoveResult down = applyMove(g, collapse);
    Move expand = invertMove(g, collapse);
    MoveResult up = applyMove(down.graph, expand);
    CHECK(up.graph == g);

    // and the other direction: expansion first, then its inverse collapse
    Move inverse = invertMove(down.graph, expand);
    MoveResult again = applyMove(up.graph, inverse);
    CHECK(again.graph == down.graph);
}

TEST_CASE("slide inverse") {
    GraphOfGroups g = parseGog(
        "vertex u Z; vertex v Z; vertex w Z\n"
        "edge e u v Z *2 *3\n"
        "edge f u w Z *4 *5");
    Move m = Slide{"f", Side::Origin, "e", Side::Origin};
    MoveResult r = applyMove(g, m);
    Move inv = invertMove(g, m);
    CHECK(applyMove(r.graph, inv).graph == g);
}

TEST_CASE("move text round-trip") {
    std::vector<Move> moves = {
        DeformationCollapse{"e", Side::Terminus},
        Slide{"f", Side::Origin, "e", Side::Terminus},
        Subdivide{"e", "m", "e1", "e2"},
    };
    for (const Move& m : moves) CHECK(moveFromText(moveToText(m)) == m);
}

TEST_CASE("reduce_graph") {
    GraphOfGroups seg = parseGog("vertex u Z; vertex v Z; edge e u v Z *1 *3");
    auto [r1, c1] = reduceGraph(seg);
    CHECK(r1.edges.empty());
    CHECK(c1.script.size() == 1);
    CHECK(c1.replay() == r1);

    GraphOfGroups loop = parseGog("vertex v Z; edge e v v Z *1 *2");
    auto [r2, c2] = reduceGraph(loop);
    CHECK(r2 == loop);
    CHECK(c2.script.empty());

    GraphOfGroups chain = parseGog(
        "vertex u Z; vertex v Z; vertex w Z\n"
        "edge e u v Z *1 *2\n"
        "edge f v w Z *1 *5");
    auto [r3, c3] = reduceGraph(chain);
    CHECK(r3.vertices.size() == 1);
    CHECK(r3.edges.empty());
    CHECK(c3.script.size() == 2);
    CHECK(c3.replay() == r3);
}

TEST_CASE("collapse_edges") {
    GraphOfGroups g = parseGog("vertex u Z; vertex v Z; edge e u v Z *2 *2");

    SUBCASE("empty set is identity") {
        CHECK(collapseEdges(g, {}) == g);
    }
    SUBCASE("total collapse gives one Quotient vertex") {
        GraphOfGroups c = collapseEdges(g, {"e"});
        CHECK(c.vertices.size() == 1);
        CHECK(c.edges.empty());
        const GroupLabel& l = c.vertices.begin()->second;
        REQUIRE(l.kind == GroupLabel::Kind::Quotient);
        CHECK(*l.inner == g);  // component kept verbatim
    }
    SUBCASE("partial collapse reattaches surviving edges") {
        GraphOfGroups h = parseGog(
            "vertex u Z; vertex v Z; vertex w Z\n"
            "edge e u v Z *2 *2\n"
            "edge f v w Z *3 *4");
        GraphOfGroups c = collapseEdges(h, {"e"});
        CHECK(c.vertices.size() == 2);  // {u,v} merged, w survives
        CHECK(c.edges.size() == 1);
        const EdgeData& f = c.edge("f");
        // surviving end into the component becomes an opaque embedding
        // tagged with the original endpoint
        Injection intoQuot = f.origin == "w" ? f.injTerminus : f.injOrigin;
        CHECK(intoQuot == Injection::embedding("v"));
    }
    SUBCASE("collapse then total collapse = total collapse, structurally") {
        GraphOfGroups h = parseGog(
            "vertex u Z; vertex v Z; vertex w Z\n"
            "edge e u v Z *2 *2\n"
            "edge f v w Z *3 *4");
        GraphOfGroups step = collapseEdges(h, {"e"});
        std::set<std::string> rest;
        for (const auto& [id, _] : step.edges) rest.insert(id);
        GraphOfGroups total1 = collapseEdges(step, rest);
        GraphOfGroups total2 = collapseEdges(h, {"e", "f"});
        CHECK(total1.vertices.size() == 1);
        CHECK(total2.vertices.size() == 1);
        CHECK(total1.edges.empty());
        CHECK(total2.edges.empty());
    }
}

TEST_CASE("collapseEdgesFailing") {
    GraphOfGroups g = parseGog(
        "vertex u Z; vertex v atom:A; vertex w atom:B\n"
        "edge e u v Z *2 emb:x\n"
        "edge f v w atom:K emb:y emb:z");
    GraphOfGroups c = collapseEdgesFailing(g, ClassSpec::Cyclic);
    // edge f has a non-cyclic label and is collapsed; e survives
    CHECK(c.edges.size() == 1);
    CHECK(c.edges.count("e") == 1);
    CHECK(c.vertices.size() == 2);
}

TEST_CASE("word transport along moves preserves ellipticity") {
    std::mt19937_64 rng(31337);
    int tried = 0;
    for (int trial = 0; trial < 120 && tried < 60; ++trial) {
        GbsGraph gb = randomGbsGraph(rng, 4, 7);
        const GraphOfGroups& g = gb.graph;
        std::vector<Move> moves = enumerateMoves(g);
        if (moves.empty()) continue;
        Move m = moves[rng() % moves.size()];
        MoveResult r = applyMove(g, m);
        ++tried;
        for (int i = 0; i < 10; ++i) {
            LoopWord w = randomWord(g, rng, 6);
            EllipticityVerdict before = isElliptic(g, w);
            LoopWord tw = r.transport(w);
            tw.checkWellFormed(r.graph);
            EllipticityVerdict after = isElliptic(r.graph, tw);
            INFO("move ", moveToText(m), " word ", w.text());
            CHECK(before.elliptic() == after.elliptic());
        }
    }
    CHECK(tried >= 50);
}

TEST_CASE("refineAtVertex point graph degenerates to the splitting") {
    GraphOfGroups point = parseGog("vertex p atom:G");
    GraphOfGroups split = parseGog(
        "vertex a atom:A[freely_indecomposable]; vertex b atom:B[freely_indecomposable]\n"
        "edge s a b 1 triv triv");
    auto refined = refineAtVertex(point, "p", split, {});
    CHECK(refined.vertices.size() == 2);
    CHECK(refined.edges.size() == 1);
}

TEST_CASE("refineElliptic grushko blow-up") {
    // star with one composite atom vertex; blow it up into its free splitting
    GraphOfGroups t1 = parseGog(
        "vertex c 1; vertex g atom:G\n"
        "edge e c g 1 triv triv");
    GraphOfGroups split = parseGog(
        "vertex a atom:A[freely_indecomposable]; vertex b atom:B[freely_indecomposable]\n"
        "edge s a b 1 triv triv");
    std::map<std::string, RefinePlanEntry> plan;
    RefinePlanEntry entry;
    entry.splitting = split;
    entry.attachment[{"e", Side::Terminus}] = AttachPoint{"a", Injection::trivialInto()};
    plan["g"] = entry;

    std::mt19937_64 rng(2024);
    std::vector<LoopWord> samples;
    auto [refined, report] = refineElliptic(t1, plan, samples);
    CHECK(report.collapseBackOk);
    CHECK(report.labelsOk);
    CHECK(report.sampleViolations.empty());
    CHECK(report.ok());
    CHECK(refined.vertices.size() == 3);
    CHECK(refined.edges.size() == 2);
    REQUIRE(report.insertedEdges.size() == 1);
    // collapsing the inserted edge really recovers a graph isomorphic to t1
    GraphOfGroups back = collapseEdges(refined, {report.insertedEdges.begin(),
                                                 report.insertedEdges.end()});
    CHECK(back.vertices.size() == t1.vertices.size());
    CHECK(back.edges.size() == t1.edges.size());
}

TEST_CASE("refineElliptic identity plan") {
    GraphOfGroups t1 = parseGog("vertex v Z; edge e v v Z *1 *2");
    // empty plan: nothing blown up, output = t1
    auto [refined, report] = refineElliptic(t1, {});
    CHECK(refined == t1);
    CHECK(report.ok());
}

TEST_CASE("certificate text round-trip via replay") {
    GraphOfGroups chain = parseGog(
        "vertex u Z; vertex v Z; vertex w Z\n"
        "edge e u v Z *1 *2\n"
        "edge f v w Z *1 *5");
    auto [reduced, cert] = reduceGraph(chain);
    std::string text = cert.text();
    // parse each line back and replay by hand
    GraphOfGroups cur = chain;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl - pos);
        pos = (nl == std::string::npos) ? text.size() : nl + 1;
        if (line.empty()) continue;
        cur = applyMove(cur, moveFromText(line)).graph;
    }
    CHECK(cur == reduced);
}
