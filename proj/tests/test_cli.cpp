#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gog/cli.hpp"

using gog::cli::run;

namespace {

std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(GOG_FIXTURE_DIR) / name;
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path tempFile(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p;
}

}  // namespace

TEST_CASE("gog parse round-trips a fixture") {
    RunResult r = cli({"gog", "parse", fixture("bs12.gog").string()});
    CHECK(r.code == 0);
    std::ifstream in(fixture("bs12.gog"), std::ios::binary);
    std::ostringstream want;
    want << in.rdbuf();
    CHECK(r.out == want.str());
}

TEST_CASE("gog validate exit codes") {
    CHECK(cli({"gog", "validate", fixture("bs12.gog").string(), "--class", "cyclic"}).code == 0);
    auto atomEdge = tempFile("validate_atom_edge.gog",
                             "vertex a atom:A\nvertex b atom:B\n"
                             "edge e a b atom:K emb:s emb:t\n");
    RunResult bad = cli({"gog", "validate", atomEdge.string(), "--class", "cyclic"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("e") != std::string::npos);
    CHECK(cli({"gog", "validate", atomEdge.string(), "--class", "any"}).code == 0);
}

TEST_CASE("gog dot") {
    RunResult r = cli({"gog", "dot", fixture("seg_2_2.gog").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("graph") != std::string::npos);
}

TEST_CASE("usage errors are exit 2") {
    CHECK(cli({"gog", "parse"}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"gog", "parse", "/nonexistent/file.gog"}).code == 2);
    CHECK(cli({"qh", "chi", "sig(g=oops)"}).code == 2);
}

TEST_CASE("help is exit 0") {
    RunResult r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gbs") != std::string::npos);
}

TEST_CASE("word reduce and elliptic") {
    RunResult red = cli({"word", "reduce", fixture("bs12.gog").string(), "e'", "a^2", "e"});
    CHECK(red.code == 0);
    CHECK(red.out == "a^1\n");

    RunResult hyp = cli({"word", "elliptic", fixture("bs12.gog").string(), "e"});
    CHECK(hyp.code == 1);
    CHECK(hyp.out.find("hyperbolic 1") != std::string::npos);

    RunResult ell = cli({"word", "elliptic", fixture("bs12.gog").string(), "a^3"});
    CHECK(ell.code == 0);
    CHECK(ell.out.find("elliptic") != std::string::npos);

    // opaque pinch is Unknown: exit 3
    RunResult unk = cli({"word", "elliptic", fixture("atom_amalgam.gog").string(), "e", "b.x",
                         "e'"});
    CHECK(unk.code == 3);
}

TEST_CASE("word subgroup") {
    RunResult ok = cli({"word", "subgroup", fixture("loop_2_3.gog").string(), "--gen", "a^1",
                        "--gen", "a^3"});
    CHECK(ok.code == 0);
    RunResult bad = cli({"word", "subgroup", fixture("loop_2_3.gog").string(), "--gen", "a^1",
                         "--gen", "e"});
    CHECK(bad.code == 1);
}

TEST_CASE("move apply and reduce") {
    RunResult r = cli({"move", "apply", fixture("seg_1_3.gog").string(), "collapse e origin"});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertex v Z") != std::string::npos);

    RunResult bad = cli({"move", "apply", fixture("seg_2_2.gog").string(), "collapse e origin"});
    CHECK(bad.code == 2);

    RunResult red = cli({"move", "reduce", fixture("seg_1_3.gog").string()});
    CHECK(red.code == 0);
    CHECK(red.out.find("collapse e origin") != std::string::npos);
}

TEST_CASE("move collapse") {
    RunResult r = cli({"move", "collapse", fixture("seg_2_2.gog").string(), "--edges", "e"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quot{") != std::string::npos);
}

TEST_CASE("gbs classify output") {
    RunResult r = cli({"gbs", "classify", fixture("loop_1_1.gog").string()});
    CHECK(r.code == 0);
    CHECK(r.out == "Z2 NoNontrivialUniversallyElliptic\n");
    CHECK(cli({"gbs", "classify", fixture("point_z.gog").string()}).out == "Z Trivial\n");
}

TEST_CASE("gbs modular") {
    RunResult r = cli({"gbs", "modular", fixture("loop_2_3.gog").string(), "e"});
    CHECK(r.code == 0);
    CHECK(r.out == "3/2\n");
    // no word: print the whole modular image
    RunResult img = cli({"gbs", "modular", fixture("bs12.gog").string()});
    CHECK(img.code == 0);
    CHECK(img.out == "<2>\n");
}

TEST_CASE("gbs connect") {
    RunResult eq = cli({"gbs", "connect", fixture("seg_1_3.gog").string(),
                        fixture("point_z.gog").string(), "--max-depth", "1"});
    CHECK(eq.code == 0);
    CHECK(eq.out.find("equivalent") != std::string::npos);

    RunResult dist = cli({"gbs", "connect", fixture("bs12.gog").string(),
                          fixture("loop_1_3.gog").string(), "--max-depth", "0"});
    CHECK(dist.code == 1);
    CHECK(dist.out.find("modular image") != std::string::npos);

    // identical invariants but bounded out: Unknown
    RunResult unk = cli({"gbs", "connect", fixture("loop_2_3.gog").string(),
                         fixture("theta_2357.gog").string(), "--max-depth", "0"});
    CHECK((unk.code == 3 || unk.code == 1));
}

TEST_CASE("grushko commands") {
    CHECK(cli({"grushko", "verdict", fixture("grushko_star.gog").string()}).code == 0);
    CHECK(cli({"grushko", "verdict", fixture("point_z.gog").string()}).code == 1);
    RunResult fp = cli({"grushko", "fingerprint", fixture("grushko_star.gog").string()});
    CHECK(fp.code == 0);
    CHECK(fp.out.find("rank 2") != std::string::npos);
    CHECK(cli({"grushko", "compare", fixture("grushko_star.gog").string(),
               fixture("grushko_chain.gog").string()})
              .code == 0);
    CHECK(cli({"grushko", "compare", fixture("grushko_star.gog").string(),
               fixture("grushko_star_altatom.gog").string()})
              .code == 1);
    CHECK(cli({"grushko", "compare", fixture("grushko_star.gog").string(),
               fixture("point_z.gog").string()})
              .code == 3);
}

TEST_CASE("qh chi / scc / arc-case") {
    RunResult chi = cli({"qh", "chi", "sig(g=0,or=true,bd=[circle,circle,circle],cones=[])"});
    CHECK(chi.code == 0);
    CHECK(chi.out == "-1 hyperbolic\n");
    CHECK(cli({"qh", "chi", "sig(g=0,or=true,bd=[],cones=[3])"}).code == 2);  // teardrop

    CHECK(cli({"qh", "scc", "sig(g=0,or=true,bd=[circle,circle,circle],cones=[])"}).code == 1);
    CHECK(cli({"qh", "scc", "sig(g=1,or=true,bd=[circle],cones=[])"}).code == 0);
    CHECK(cli({"qh", "scc", "sig(g=2,or=false,bd=[mirror],cones=[2])"}).code == 3);  // unknown

    RunResult arc =
        cli({"qh", "arc-case", "sig(g=0,or=true,bd=[circle,circle,circle],cones=[])", "0"});
    CHECK(arc.code == 0);
    CHECK(arc.out.find("FreeArc") != std::string::npos);
}

TEST_CASE("qh dual with a cut file") {
    auto cut = tempFile("cut_test.txt",
                        "piece sig(g=1,or=true,bd=[circle],cones=[])\n"
                        "piece sig(g=1,or=true,bd=[circle],cones=[])\n"
                        "curve 0 0 1 0\n");
    RunResult r = cli({"qh", "dual", "sig(g=2,or=true,bd=[],cones=[])", cut.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("piece0") != std::string::npos);
    CHECK(r.out.find("curve0") != std::string::npos);
}

TEST_CASE("qh fill with a marks file") {
    auto marks = tempFile("marks_test.txt", "mark Z R1\nmark atom:H2 R2\n");
    RunResult r = cli({"qh", "fill", fixture("grushko_star.gog").string(), marks.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("prod(") != std::string::npos);
    CHECK(r.out.find("property_fa") != std::string::npos);
}

TEST_CASE("qh validate with a qh file") {
    auto graph = tempFile("qh_graph.gog",
                          "vertex a atom:A\nvertex b atom:B\nvertex q atom:Q\n"
                          "edge e1 q a Z emb:x emb:y\nedge e2 q b Z emb:z emb:w\n");
    auto good = tempFile("qh_good.txt",
                         "fiber 1\n"
                         "sig sig(g=0,or=true,bd=[circle,circle],cones=[3,3])\n"
                         "incident e1 boundary 0 finite\n"
                         "incident e2 boundary 1 finite\n");
    RunResult r = cli({"qh", "validate", graph.string(), "q", good.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("qh") == 0);

    auto missing = tempFile("qh_missing.txt",
                            "fiber 1\n"
                            "sig sig(g=0,or=true,bd=[circle,circle],cones=[3,3])\n"
                            "incident e1 boundary 0 finite\n");
    CHECK(cli({"qh", "validate", graph.string(), "q", missing.string()}).code == 1);
}

TEST_CASE("move refine with a plan file") {
    auto split = tempFile("split_test.gog",
                          "vertex a atom:A[freely_indecomposable]\n"
                          "vertex b atom:B[freely_indecomposable]\n"
                          "edge s a b 1 triv triv\n");
    auto t1 = tempFile("refine_t1.gog",
                       "vertex c 1\nvertex g atom:G\nedge e c g 1 triv triv\n");
    auto plan = tempFile("plan_test.txt",
                         "refine g " + split.string() + "\n" +
                         "attach e terminus a triv\n");
    RunResult r = cli({"move", "refine", t1.string(), plan.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("collapse-back ok") != std::string::npos);
    CHECK(r.out.find("labels ok") != std::string::npos);
}

TEST_CASE("json mode emits valid documents") {
    RunResult r = cli({"--json", "gbs", "classify", fixture("loop_1_1.gog").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"group\"") != std::string::npos);
    RunResult p = cli({"--json", "gog", "parse", fixture("bs12.gog").string()});
    CHECK(p.out.find("\"canonical\"") != std::string::npos);
}

TEST_CASE("determinism: identical runs are byte-identical") {
    for (int i = 0; i < 2; ++i) {
        RunResult a = cli({"gbs", "connect", fixture("seg_1_3.gog").string(),
                           fixture("point_z.gog").string()});
        RunResult b = cli({"gbs", "connect", fixture("seg_1_3.gog").string(),
                           fixture("point_z.gog").string()});
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}
