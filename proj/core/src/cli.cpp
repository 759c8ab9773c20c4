#include "gog/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gog/ellipticity.hpp"
#include "gog/gbs.hpp"
#include "gog/grushko.hpp"
#include "gog/moves.hpp"
#include "gog/orbifold.hpp"
#include "gog/parse.hpp"
#include "gog/qh.hpp"
#include "gog/serialize.hpp"
#include "gog/validate.hpp"

namespace gog::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GraphOfGroups loadGraph(const std::string& path) { return parseGog(readFile(path)); }

Side sideFromText(const std::string& s) {
    if (s == "origin") return Side::Origin;
    if (s == "terminus") return Side::Terminus;
    throw std::runtime_error("bad side '" + s + "'");
}

std::set<std::string> splitIds(const std::string& csv) {
    std::set<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.insert(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.insert(cur);
    return out;
}

std::string joinWords(const std::vector<std::string>& toks) {
    std::string out;
    for (const auto& t : toks) {
        if (!out.empty()) out += " ";
        out += t;
    }
    return out;
}

void emit(std::ostream& out, bool asJson, const json& j, const std::string& plain) {
    if (asJson)
        out << j.dump(2) << "\n";
    else
        out << plain;
}

struct QhFileData {
    QhData data;
};

QhAssignment parseAssignment(const std::vector<std::string>& toks, size_t from) {
    QhAssignment a;
    if (from >= toks.size()) throw std::runtime_error("missing assignment kind");
    if (toks[from] == "finite") {
        a.kind = QhAssignment::Kind::FiniteImage;
        return a;
    }
    if (toks[from] == "boundary") {
        if (from + 2 >= toks.size())
            throw std::runtime_error("boundary assignment needs: boundary <idx> <finite|infinite>");
        a.kind = QhAssignment::Kind::InBoundary;
        a.component = std::stoi(toks[from + 1]);
        a.finiteIndex = toks[from + 2] == "finite";
        return a;
    }
    throw std::runtime_error("bad assignment kind '" + toks[from] + "'");
}

std::vector<std::string> lineTokens(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int runImpl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph-of-groups toolkit"};
    app.require_subcommand(1);
    bool asJson = false;
    app.add_flag("--json", asJson, "structured output");
    unsigned long long seed = 12345;
    app.add_option("--seed", seed, "seed for sampled checks");

    int exitCode = kOk;

    // ---- gog ----
    auto* gogCmd = app.add_subcommand("gog", "graph parsing and validation");
    gogCmd->require_subcommand(1);
    {
        auto* c = gogCmd->add_subcommand("parse", "parse and reprint canonically");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->callback([&, file]() {
            GraphOfGroups g = loadGraph(*file);
            std::string text = serializeCanonical(g);
            emit(out, asJson, json{{"canonical", text}}, text);
        });
    }
    {
        auto* c = gogCmd->add_subcommand("validate", "validate against an edge-group class");
        auto file = std::make_shared<std::string>();
        auto cls = std::make_shared<std::string>("any");
        c->add_option("file", *file)->required();
        c->add_option("--class", *cls, "edge-group class");
        c->callback([&, file, cls]() {
            ValidationReport r = validate(loadGraph(*file), classSpecFromName(*cls));
            json j{{"pass", r.pass()},
                   {"class_violations", r.classViolations},
                   {"non_minimal_vertices", r.nonMinimalVertices}};
            std::ostringstream os;
            os << (r.pass() ? "pass" : "fail") << "\n";
            for (const auto& e : r.classViolations) os << "class-violation " << e << "\n";
            for (const auto& v : r.nonMinimalVertices) os << "non-minimal " << v << "\n";
            emit(out, asJson, j, os.str());
            if (!r.pass()) exitCode = kNegative;
        });
    }
    {
        auto* c = gogCmd->add_subcommand("dot", "emit graphviz DOT");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->callback([&, file]() {
            std::string text = serializeDot(loadGraph(*file));
            emit(out, asJson, json{{"dot", text}}, text);
        });
    }

    // ---- word ----
    auto* wordCmd = app.add_subcommand("word", "loop-word calculus");
    wordCmd->require_subcommand(1);
    {
        auto* c = wordCmd->add_subcommand("reduce", "Britton-style reduction");
        auto file = std::make_shared<std::string>();
        auto toks = std::make_shared<std::vector<std::string>>();
        auto cyclic = std::make_shared<bool>(false);
        auto base = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("word", *toks)->required();
        c->add_flag("--cyclic", *cyclic, "reduce within the conjugacy class");
        c->add_option("--base", *base, "base vertex");
        c->callback([&, file, toks, cyclic, base]() {
            GraphOfGroups g = loadGraph(*file);
            LoopWord w = parseWord(g, joinWords(*toks), *base);
            LoopWord r = reduceWord(g, w, *cyclic);
            std::string text = wordToText(g, r);
            emit(out, asJson, json{{"reduced", text}, {"edges", r.edgeCount()}}, text + "\n");
        });
    }
    {
        auto* c = wordCmd->add_subcommand("elliptic", "ellipticity of one word");
        auto file = std::make_shared<std::string>();
        auto toks = std::make_shared<std::vector<std::string>>();
        auto collapsed = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("word", *toks)->required();
        c->add_option("--collapsed", *collapsed, "comma-separated collapsed edges");
        c->add_option("--base", *base, "base vertex");
        c->callback([&, file, toks, collapsed, base]() {
            GraphOfGroups g = loadGraph(*file);
            LoopWord w = parseWord(g, joinWords(*toks), *base);
            std::set<std::string> coll = splitIds(*collapsed);
            EllipticityVerdict v = isElliptic(g, w, coll.empty() ? nullptr : &coll);
            json j;
            std::ostringstream os;
            if (v.elliptic()) {
                j = {{"verdict", "elliptic"}};
                os << "elliptic\n";
            } else if (v.hyperbolic()) {
                j = {{"verdict", "hyperbolic"}, {"translation_length", v.translationLength}};
                os << "hyperbolic " << v.translationLength << "\n";
                exitCode = kNegative;
            } else {
                j = {{"verdict", "unknown"}, {"reason", v.reason}};
                os << "unknown: " << v.reason << "\n";
                exitCode = kUnknown;
            }
            j["witness"] = wordToText(g, v.witness);
            emit(out, asJson, j, os.str());
        });
    }
    {
        auto* c = wordCmd->add_subcommand("subgroup", "Serre criterion on generators");
        auto file = std::make_shared<std::string>();
        auto words = std::make_shared<std::vector<std::string>>();
        auto collapsed = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("--gen", *words, "generator word (repeatable)")->required();
        c->add_option("--collapsed", *collapsed, "comma-separated collapsed edges");
        c->callback([&, file, words, collapsed]() {
            GraphOfGroups g = loadGraph(*file);
            std::vector<LoopWord> gens;
            for (const std::string& s : *words) gens.push_back(parseWord(g, s));
            std::set<std::string> coll = splitIds(*collapsed);
            SubgroupVerdict v = subgroupElliptic(g, gens, coll.empty() ? nullptr : &coll);
            json j;
            std::ostringstream os;
            if (v.status == SubgroupVerdict::Status::Elliptic) {
                j = {{"verdict", "elliptic"}};
                os << "elliptic\n";
            } else if (v.status == SubgroupVerdict::Status::NotElliptic) {
                j = {{"verdict", "not-elliptic"}, {"witness", wordToText(g, *v.witness)}};
                os << "not-elliptic " << wordToText(g, *v.witness) << "\n";
                exitCode = kNegative;
            } else {
                j = {{"verdict", "unknown"}, {"reason", v.reason}};
                os << "unknown: " << v.reason << "\n";
                exitCode = kUnknown;
            }
            emit(out, asJson, j, os.str());
        });
    }

    // ---- move ----
    auto* moveCmd = app.add_subcommand("move", "deformation moves");
    moveCmd->require_subcommand(1);
    {
        auto* c = moveCmd->add_subcommand("apply", "apply one move line");
        auto file = std::make_shared<std::string>();
        auto moveLine = std::make_shared<std::string>();
        auto wordText = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("move", *moveLine, "move line, e.g. 'collapse e0 origin'")->required();
        c->add_option("--word", *wordText, "transport this word across the move");
        c->callback([&, file, moveLine, wordText]() {
            GraphOfGroups g = loadGraph(*file);
            MoveResult r = applyMove(g, moveFromText(*moveLine));
            json j{{"graph", serializeCanonical(r.graph)}};
            std::ostringstream os;
            os << serializeCanonical(r.graph);
            if (!wordText->empty()) {
                LoopWord w = parseWord(g, *wordText);
                LoopWord t = r.transport(w);
                j["word"] = wordToText(r.graph, t);
                os << "word " << wordToText(r.graph, t) << "\n";
            }
            emit(out, asJson, j, os.str());
        });
    }
    {
        auto* c = moveCmd->add_subcommand("reduce", "collapse until reduced");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->callback([&, file]() {
            auto [g, cert] = reduceGraph(loadGraph(*file));
            json j{{"graph", serializeCanonical(g)}, {"certificate", cert.text()}};
            emit(out, asJson, j, serializeCanonical(g) + cert.text());
        });
    }
    {
        auto* c = moveCmd->add_subcommand("collapse", "collapse an edge set to Quotient vertices");
        auto file = std::make_shared<std::string>();
        auto edges = std::make_shared<std::string>();
        auto keep = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("--edges", *edges, "comma-separated edge ids");
        c->add_option("--keep-class", *keep, "collapse all edges failing this class");
        c->callback([&, file, edges, keep]() {
            GraphOfGroups g = loadGraph(*file);
            GraphOfGroups r = keep->empty() ? collapseEdges(g, splitIds(*edges))
                                            : collapseEdgesFailing(g, classSpecFromName(*keep));
            emit(out, asJson, json{{"graph", serializeCanonical(r)}}, serializeCanonical(r));
        });
    }
    {
        auto* c = moveCmd->add_subcommand("refine", "blow up vertices per a plan file");
        auto file = std::make_shared<std::string>();
        auto planFile = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("plan", *planFile, "plan file: refine/attach lines")->required();
        c->callback([&, file, planFile]() {
            GraphOfGroups g = loadGraph(*file);
            std::map<std::string, RefinePlanEntry> plan;
            std::string currentVertex;
            std::istringstream is(readFile(*planFile));
            std::string line;
            while (std::getline(is, line)) {
                auto toks = lineTokens(line);
                if (toks.empty() || toks[0][0] == '#') continue;
                if (toks[0] == "refine" && toks.size() == 3) {
                    currentVertex = toks[1];
                    plan[currentVertex].splitting = loadGraph(toks[2]);
                } else if (toks[0] == "attach" && toks.size() == 5 && !currentVertex.empty()) {
                    plan[currentVertex].attachment[{toks[1], sideFromText(toks[2])}] = {
                        toks[3], parseInjection(toks[4])};
                } else {
                    throw std::runtime_error("bad plan line: " + line);
                }
            }
            auto [refined, report] = refineElliptic(g, plan);
            json j{{"graph", serializeCanonical(refined)},
                   {"collapse_back_ok", report.collapseBackOk},
                   {"labels_ok", report.labelsOk},
                   {"inserted_edges", report.insertedEdges}};
            std::ostringstream os;
            os << serializeCanonical(refined);
            os << "collapse-back " << (report.collapseBackOk ? "ok" : "fail") << "\n";
            os << "labels " << (report.labelsOk ? "ok" : "fail") << "\n";
            emit(out, asJson, j, os.str());
            if (!report.ok()) exitCode = kNegative;
        });
    }

    // ---- gbs ----
    auto* gbsCmd = app.add_subcommand("gbs", "generalized Baumslag-Solitar engine");
    gbsCmd->require_subcommand(1);
    {
        auto* c = gbsCmd->add_subcommand("classify", "elementary classification");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->callback([&, file]() {
            GbsClassification r = classifyGbs(GbsGraph::fromGraph(loadGraph(*file)));
            json j{{"group", r.groupName()}, {"jsj", r.jsjName()}};
            emit(out, asJson, j, r.groupName() + " " + r.jsjName() + "\n");
        });
    }
    {
        auto* c = gbsCmd->add_subcommand("modular", "modular homomorphism / image");
        auto file = std::make_shared<std::string>();
        auto toks = std::make_shared<std::vector<std::string>>();
        c->add_option("file", *file)->required();
        c->add_option("word", *toks, "optional word to evaluate");
        c->callback([&, file, toks]() {
            GbsGraph g = GbsGraph::fromGraph(loadGraph(*file));
            if (toks->empty()) {
                ModularImage img = modularImageOf(g);
                emit(out, asJson, json{{"image", img.str()}}, img.str() + "\n");
            } else {
                Rational q = modular(g, parseWord(g.graph, joinWords(*toks)));
                emit(out, asJson, json{{"value", q.str()}}, q.str() + "\n");
            }
        });
    }
    {
        auto* c = gbsCmd->add_subcommand("connect", "bounded deformation-space search");
        auto fileA = std::make_shared<std::string>();
        auto fileB = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(4);
        auto size = std::make_shared<int>(8);
        c->add_option("a", *fileA)->required();
        c->add_option("b", *fileB)->required();
        c->add_option("--max-depth", *depth, "search depth bound");
        c->add_option("--max-size", *size, "intermediate graph size bound");
        c->callback([&, fileA, fileB, depth, size]() {
            ConnectBounds bounds;
            bounds.maxDepth = *depth;
            bounds.maxGraphSize = *size;
            ConnectResult r = connectSearch(GbsGraph::fromGraph(loadGraph(*fileA)),
                                            GbsGraph::fromGraph(loadGraph(*fileB)), bounds);
            json j;
            std::ostringstream os;
            if (r.status == ConnectResult::Status::Equivalent) {
                j = {{"verdict", "equivalent"}, {"certificate", r.certificate->text()}};
                os << "equivalent\n" << r.certificate->text();
            } else if (r.status == ConnectResult::Status::Distinct) {
                j = {{"verdict", "distinct"}, {"witness", r.witness}};
                os << "distinct: " << r.witness << "\n";
                exitCode = kNegative;
            } else {
                j = {{"verdict", "unknown"}, {"witness", r.witness}};
                os << "unknown: " << r.witness << "\n";
                exitCode = kUnknown;
            }
            emit(out, asJson, j, os.str());
        });
    }

    // ---- grushko ----
    auto* gruCmd = app.add_subcommand("grushko", "Grushko deformation spaces");
    gruCmd->require_subcommand(1);
    {
        auto* c = gruCmd->add_subcommand("verdict", "is this a Grushko tree?");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->callback([&, file]() {
            GrushkoVerdict v = grushkoVerdict(loadGraph(*file));
            json j{{"is_grushko_tree", v.isGrushkoTree}, {"reasons", v.reasons}};
            std::ostringstream os;
            os << (v.isGrushkoTree ? "yes" : "no") << "\n";
            for (const auto& r : v.reasons) os << r << "\n";
            emit(out, asJson, j, os.str());
            if (!v.isGrushkoTree) exitCode = kNegative;
        });
    }
    {
        auto* c = gruCmd->add_subcommand("fingerprint", "atom multiset and rank");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->callback([&, file]() {
            GrushkoFingerprint fp = grushkoFingerprint(loadGraph(*file));
            json atoms = json::object();
            for (const auto& [name, count] : fp.atoms) atoms[name] = count;
            emit(out, asJson, json{{"atoms", atoms}, {"rank", fp.rank}}, fp.str() + "\n");
        });
    }
    {
        auto* c = gruCmd->add_subcommand("compare", "same deformation space?");
        auto fileA = std::make_shared<std::string>();
        auto fileB = std::make_shared<std::string>();
        c->add_option("a", *fileA)->required();
        c->add_option("b", *fileB)->required();
        c->callback([&, fileA, fileB]() {
            SpaceComparison r = grushkoCompare(loadGraph(*fileA), loadGraph(*fileB));
            std::string name = r == SpaceComparison::SameSpace      ? "same-space"
                               : r == SpaceComparison::DifferentSpace ? "different-space"
                                                                      : "unknown";
            emit(out, asJson, json{{"verdict", name}}, name + "\n");
            if (r == SpaceComparison::DifferentSpace) exitCode = kNegative;
            if (r == SpaceComparison::Unknown) exitCode = kUnknown;
        });
    }

    // ---- qh ----
    auto* qhCmd = app.add_subcommand("qh", "orbifold and QH calculus");
    qhCmd->require_subcommand(1);
    {
        auto* c = qhCmd->add_subcommand("chi", "orbifold Euler characteristic");
        auto sigText = std::make_shared<std::string>();
        c->add_option("sig", *sigText)->required();
        c->callback([&, sigText]() {
            OrbifoldSig sig = parseSig(*sigText);
            Rational chi = eulerCharacteristic(sig);
            bool hyp = chi < Rational(0);
            json j{{"chi", chi.str()}, {"hyperbolic", hyp}};
            emit(out, asJson, j,
                 chi.str() + (hyp ? " hyperbolic" : " not-hyperbolic") + "\n");
        });
    }
    {
        auto* c = qhCmd->add_subcommand("scc", "essential simple closed curve?");
        auto sigText = std::make_shared<std::string>();
        c->add_option("sig", *sigText)->required();
        c->callback([&, sigText]() {
            SccVerdict v = hasEssentialScc(parseSig(*sigText));
            std::string name = v == SccVerdict::Yes ? "yes" : v == SccVerdict::No ? "no" : "unknown";
            emit(out, asJson, json{{"verdict", name}}, name + "\n");
            if (v == SccVerdict::No) exitCode = kNegative;
            if (v == SccVerdict::Unknown) exitCode = kUnknown;
        });
    }
    {
        auto* c = qhCmd->add_subcommand("arc-case", "boundary splitting case");
        auto sigText = std::make_shared<std::string>();
        auto idx = std::make_shared<int>(0);
        c->add_option("sig", *sigText)->required();
        c->add_option("component", *idx)->required();
        c->callback([&, sigText, idx]() {
            BoundarySplittingCase bc = boundarySplittingCase(parseSig(*sigText), *idx);
            json j{{"case", splittingCaseName(bc)},
                   {"edge_group", splittingCaseOverZ2(bc) ? "Z/2" : "1"}};
            emit(out, asJson, j,
                 splittingCaseName(bc) + std::string(" edge-group ") +
                     (splittingCaseOverZ2(bc) ? "Z/2" : "1") + "\n");
        });
    }
    {
        auto* c = qhCmd->add_subcommand("dual", "dual tree of a cut system");
        auto sigText = std::make_shared<std::string>();
        auto cutFile = std::make_shared<std::string>();
        c->add_option("sig", *sigText)->required();
        c->add_option("cutfile", *cutFile)->required();
        c->callback([&, sigText, cutFile]() {
            CutSystem cut;
            std::istringstream is(readFile(*cutFile));
            std::string line;
            while (std::getline(is, line)) {
                auto toks = lineTokens(line);
                if (toks.empty() || toks[0][0] == '#') continue;
                if (toks[0] == "piece" && toks.size() >= 2) {
                    cut.pieces.push_back(parseSig(joinWords({toks.begin() + 1, toks.end()})));
                } else if (toks[0] == "curve" && toks.size() == 5) {
                    cut.curves.push_back({{std::stoi(toks[1]), std::stoi(toks[2])},
                                          {std::stoi(toks[3]), std::stoi(toks[4])}});
                } else {
                    throw std::runtime_error("bad cut line: " + line);
                }
            }
            DualTree t = dualTree(parseSig(*sigText), cut);
            emit(out, asJson, json{{"graph", serializeCanonical(t.graph)}},
                 serializeCanonical(t.graph));
        });
    }
    {
        auto* c = qhCmd->add_subcommand("fill", "star filling construction");
        auto file = std::make_shared<std::string>();
        auto marksFile = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("marks", *marksFile)->required();
        c->callback([&, file, marksFile]() {
            std::vector<FillMark> marks;
            std::istringstream is(readFile(*marksFile));
            std::string line;
            while (std::getline(is, line)) {
                auto toks = lineTokens(line);
                if (toks.empty() || toks[0][0] == '#') continue;
                if (toks[0] == "mark" && toks.size() == 3)
                    marks.push_back({parseLabel(toks[1]), toks[2]});
                else
                    throw std::runtime_error("bad mark line: " + line);
            }
            GraphOfGroups star = fill(loadGraph(*file), marks);
            emit(out, asJson, json{{"graph", serializeCanonical(star)}},
                 serializeCanonical(star));
        });
    }
    {
        auto* c = qhCmd->add_subcommand("validate", "QH vertex bookkeeping");
        auto file = std::make_shared<std::string>();
        auto vertex = std::make_shared<std::string>();
        auto qhFile = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("vertex", *vertex)->required();
        c->add_option("qhfile", *qhFile)->required();
        c->callback([&, file, vertex, qhFile]() {
            QhData data;
            std::istringstream is(readFile(*qhFile));
            std::string line;
            while (std::getline(is, line)) {
                auto toks = lineTokens(line);
                if (toks.empty() || toks[0][0] == '#') continue;
                if (toks[0] == "fiber" && toks.size() == 2) {
                    data.fiber = parseLabel(toks[1]);
                } else if (toks[0] == "sig" && toks.size() >= 2) {
                    data.sig = parseSig(joinWords({toks.begin() + 1, toks.end()}));
                } else if (toks[0] == "incident" && toks.size() >= 3) {
                    data.incident[toks[1]] = parseAssignment(toks, 2);
                } else if (toks[0] == "relative" && toks.size() >= 3) {
                    data.relative[toks[1]] = parseAssignment(toks, 2);
                } else {
                    throw std::runtime_error("bad qh line: " + line);
                }
            }
            QhReport r = validateQh(loadGraph(*file), *vertex, data);
            std::string flex = r.flexibility == SccVerdict::Yes  ? "yes"
                               : r.flexibility == SccVerdict::No ? "no"
                                                                 : "unknown";
            json j{{"is_qh", r.isQh},
                   {"used", r.usedComponents},
                   {"unused", r.unusedComponents},
                   {"flexible", flex},
                   {"problems", r.problems}};
            std::ostringstream os;
            os << (r.isQh ? "qh" : "not-qh") << " flexible=" << flex << "\n";
            os << "used";
            for (int u : r.usedComponents) os << " " << u;
            os << "\nunused";
            for (int u : r.unusedComponents) os << " " << u;
            os << "\n";
            for (const auto& p : r.problems) os << p << "\n";
            emit(out, asJson, j, os.str());
            if (!r.isQh) exitCode = kNegative;
        });
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    return exitCode;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return runImpl(args, out, err);
    } catch (const OpaquePinch& e) {
        err << "unknown: " << e.what() << "\n";
        return kUnknown;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const OrbifoldError& e) {
        err << "orbifold error: " << e.what() << "\n";
        return kUsage;
    } catch (const MoveError& e) {
        err << "move error: " << e.what() << "\n";
        return kUsage;
    } catch (const SemanticError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace gog::cli
