#include "gog/gbs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "gog/random.hpp"
#include "gog/serialize.hpp"

namespace gog {

GbsGraph GbsGraph::fromGraph(const GraphOfGroups& g) {
    g.checkValid();
    for (const auto& [v, label] : g.vertices)
        if (label.kind != GroupLabel::Kind::InfCyclic)
            throw SemanticError(v, "GBS graph needs infinite cyclic vertex labels");
    for (const auto& [id, e] : g.edges) {
        if (e.label.kind != GroupLabel::Kind::InfCyclic)
            throw SemanticError(id, "GBS graph needs infinite cyclic edge labels");
        if (e.injOrigin.kind != Injection::Kind::CyclicMult ||
            e.injTerminus.kind != Injection::Kind::CyclicMult)
            throw SemanticError(id, "GBS graph needs *k injections");
    }
    GbsGraph out;
    out.graph = g;
    out.graph.normalizeBase();
    return out;
}

Rational modular(const GbsGraph& g, const LoopWord& w) {
    w.checkWellFormed(g.graph);
    Rational q(1);
    for (const LoopWord::Step& s : w.steps) {
        const EdgeData& e = g.graph.edge(s.t.edge);
        q = q * Rational(e.inj(s.t.departureSide()).mult, e.inj(s.t.arrivalSide()).mult);
    }
    return q;
}

namespace {

void factorInto(long long n, std::map<long long, long long>& exps, long long sign) {
    if (n < 0) n = -n;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            exps[p] += sign;
            n /= p;
        }
    if (n > 1) exps[n] += sign;
}

}  // namespace

ModularImage ModularImage::generatedBy(const std::vector<Rational>& gens) {
    // exponent vector + sign parity per generator
    std::set<long long> primeSet;
    std::vector<std::map<long long, long long>> expMaps;
    std::vector<int> signs;
    for (const Rational& q : gens) {
        if (q.num == 0) throw SemanticError("", "modular image generator is zero");
        std::map<long long, long long> m;
        factorInto(q.num, m, 1);
        factorInto(q.den, m, -1);
        for (const auto& [p, e] : m)
            if (e != 0) primeSet.insert(p);
        expMaps.push_back(std::move(m));
        signs.push_back(q.num < 0 ? 1 : 0);
    }
    std::vector<long long> primes(primeSet.begin(), primeSet.end());
    size_t k = primes.size();
    std::vector<std::vector<long long>> rows;
    for (size_t i = 0; i < expMaps.size(); ++i) {
        std::vector<long long> row(k, 0);
        for (size_t j = 0; j < k; ++j) {
            auto it = expMaps[i].find(primes[j]);
            if (it != expMaps[i].end()) row[j] = it->second;
        }
        rows.push_back(std::move(row));
    }

    // integer row echelon (HNF) with sign parities carried along
    ModularImage img;
    bool minusOne = false;
    size_t pivotRow = 0;
    for (size_t col = 0; col < k && pivotRow < rows.size(); ++col) {
        // Euclid within the column
        for (;;) {
            size_t best = rows.size();
            for (size_t i = pivotRow; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    std::llabs(rows[i][col]) < std::llabs(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[pivotRow], rows[best]);
            std::swap(signs[pivotRow], signs[best]);
            bool done = true;
            for (size_t i = pivotRow + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                long long q = rows[i][col] / rows[pivotRow][col];
                for (size_t j = 0; j < k; ++j) rows[i][j] -= q * rows[pivotRow][j];
                signs[i] ^= static_cast<int>(q & 1) & signs[pivotRow];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[pivotRow].size() > col && rows[pivotRow][col] != 0) ++pivotRow;
    }
    // zero rows with odd sign witness -1 in the group
    for (size_t i = pivotRow; i < rows.size(); ++i)
        if (signs[i]) minusOne = true;
    rows.resize(pivotRow);
    signs.resize(pivotRow);
    // normalize: positive pivots, reduce above
    for (size_t i = 0; i < rows.size(); ++i) {
        size_t col = 0;
        while (col < k && rows[i][col] == 0) ++col;
        if (col == k) continue;
        if (rows[i][col] < 0) {
            for (size_t j = 0; j < k; ++j) rows[i][j] = -rows[i][j];
            // sign parity is preserved: inverse has the same sign parity
        }
        for (size_t r = 0; r < i; ++r) {
            if (rows[r][col] == 0) continue;
            long long q = rows[r][col] / rows[i][col];
            if (rows[r][col] % rows[i][col] < 0) --q;  // floor for canonical HNF
            if (q == 0) continue;
            for (size_t j = 0; j < k; ++j) rows[r][j] -= q * rows[i][j];
            signs[r] ^= static_cast<int>(q & 1) & signs[i];
        }
    }
    if (minusOne)
        for (auto& s : signs) s = 0;  // -1 absorbs all sign data
    // drop unused prime columns
    std::vector<size_t> keep;
    for (size_t j = 0; j < k; ++j) {
        bool used = false;
        for (const auto& row : rows)
            if (row[j] != 0) used = true;
        if (used) keep.push_back(j);
    }
    for (size_t j = 0; j < keep.size(); ++j) img.primes_.push_back(primes[keep[j]]);
    for (const auto& row : rows) {
        std::vector<long long> r;
        for (size_t j : keep) r.push_back(row[j]);
        img.hnf_.push_back(std::move(r));
    }
    img.containsMinusOne_ = minusOne;
    img.signOfBasis_.assign(signs.begin(), signs.end());
    return img;
}

bool ModularImage::operator==(const ModularImage& o) const {
    return primes_ == o.primes_ && hnf_ == o.hnf_ && containsMinusOne_ == o.containsMinusOne_ &&
           signOfBasis_ == o.signOfBasis_;
}

std::string ModularImage::str() const {
    std::ostringstream os;
    os << "<";
    bool first = true;
    if (containsMinusOne_) {
        os << "-1";
        first = false;
    }
    for (size_t i = 0; i < hnf_.size(); ++i) {
        long long num = 1, den = 1;
        for (size_t j = 0; j < primes_.size(); ++j) {
            long long e = hnf_[i][j];
            for (long long t = 0; t < std::llabs(e); ++t) (e > 0 ? num : den) *= primes_[j];
        }
        if (!first) os << ", ";
        first = false;
        if (i < signOfBasis_.size() && signOfBasis_[i]) os << "-";
        os << num;
        if (den != 1) os << "/" << den;
    }
    if (first) os << "1";
    os << ">";
    return os.str();
}

ModularImage modularImageOf(const GbsGraph& g) {
    // potential from a spanning tree, then one generator per extra edge
    std::map<std::string, Rational> phi;
    std::set<std::string> treeEdges;
    std::queue<std::string> q;
    const std::string root = g.graph.vertices.begin()->first;
    phi[root] = Rational(1);
    q.push(root);
    while (!q.empty()) {
        std::string v = q.front();
        q.pop();
        for (const auto& [id, side] : g.graph.incidentEnds(v)) {
            const EdgeData& e = g.graph.edge(id);
            const std::string& w = e.endpoint(otherSide(side));
            if (phi.count(w)) continue;
            treeEdges.insert(id);
            phi[w] = phi[v] * Rational(e.inj(side).mult, e.inj(otherSide(side)).mult);
            q.push(w);
        }
    }
    std::vector<Rational> gens;
    for (const auto& [id, e] : g.graph.edges) {
        if (treeEdges.count(id)) continue;
        gens.push_back(phi.at(e.origin) * Rational(e.injOrigin.mult, e.injTerminus.mult) /
                       phi.at(e.terminus));
    }
    return ModularImage::generatedBy(gens);
}

std::string GbsClassification::groupName() const {
    switch (group) {
        case Group::Z: return "Z";
        case Group::Z2: return "Z2";
        case Group::KleinHNN: return "KleinHNN";
        case Group::KleinAmalgam: return "KleinAmalgam";
        case Group::NonElementary: return "NonElementary";
    }
    return "?";
}

std::string GbsClassification::jsjName() const {
    switch (jsj) {
        case Jsj::Trivial: return "Trivial";
        case Jsj::NoNontrivialUniversallyElliptic: return "NoNontrivialUniversallyElliptic";
        case Jsj::TwoSpacesNoJSJ: return "TwoSpacesNoJSJ";
        case Jsj::OwnSpaceIsJSJ: return "OwnSpaceIsJSJ";
    }
    return "?";
}

GbsClassification classifyGbs(const GbsGraph& g) {
    GraphOfGroups r = reduceGraph(g.graph).first;
    GbsClassification c;
    if (r.edges.empty()) {
        c.group = GbsClassification::Group::Z;
        c.jsj = GbsClassification::Jsj::Trivial;
        return c;
    }
    if (r.edges.size() == 1 && r.vertices.size() == 1) {
        const EdgeData& e = r.edges.begin()->second;
        long long a = e.injOrigin.mult, b = e.injTerminus.mult;
        if (std::llabs(a) == 1 && std::llabs(b) == 1) {
            if (a * b > 0) {
                c.group = GbsClassification::Group::Z2;
                c.jsj = GbsClassification::Jsj::NoNontrivialUniversallyElliptic;
            } else {
                c.group = GbsClassification::Group::KleinHNN;
                c.jsj = GbsClassification::Jsj::TwoSpacesNoJSJ;
            }
            return c;
        }
    }
    if (r.edges.size() == 1 && r.vertices.size() == 2) {
        const EdgeData& e = r.edges.begin()->second;
        if (std::llabs(e.injOrigin.mult) == 2 && std::llabs(e.injTerminus.mult) == 2) {
            c.group = GbsClassification::Group::KleinAmalgam;
            c.jsj = GbsClassification::Jsj::TwoSpacesNoJSJ;
            return c;
        }
    }
    c.group = GbsClassification::Group::NonElementary;
    c.jsj = GbsClassification::Jsj::OwnSpaceIsJSJ;
    return c;
}

std::string gbsCanonicalKey(const GraphOfGroups& g) {
    size_t n = g.vertices.size();
    if (n > 8) throw SemanticError("", "canonical key limited to 8 vertices");
    std::vector<std::string> verts;
    for (const auto& [v, _] : g.vertices) verts.push_back(v);
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);

    std::string best;
    std::vector<int> order(n);
    do {
        // order[i]: canonical index of verts[i]
        for (size_t i = 0; i < n; ++i) order[perm[i]] = static_cast<int>(i);
        for (unsigned flips = 0; flips < (1u << n); ++flips) {
            std::vector<std::tuple<int, int, long long, long long>> descs;
            for (const auto& [id, e] : g.edges) {
                size_t oi = std::lower_bound(verts.begin(), verts.end(), e.origin) - verts.begin();
                size_t ti =
                    std::lower_bound(verts.begin(), verts.end(), e.terminus) - verts.begin();
                int co = order[oi], ct = order[ti];
                long long a = e.injOrigin.mult * ((flips >> oi) & 1 ? -1 : 1);
                long long b = e.injTerminus.mult * ((flips >> ti) & 1 ? -1 : 1);
                if (co > ct) {
                    std::swap(co, ct);
                    std::swap(a, b);
                }
                // edge-group sign flip: make the first multiplier positive
                if (a < 0 || (a == 0 && b < 0)) {
                    a = -a;
                    b = -b;
                }
                if (co == ct) {
                    // loop: also allow the orientation swap
                    long long a2 = b, b2 = a;
                    if (a2 < 0) {
                        a2 = -a2;
                        b2 = -b2;
                    }
                    if (std::tie(a2, b2) < std::tie(a, b)) {
                        a = a2;
                        b = b2;
                    }
                }
                descs.emplace_back(co, ct, a, b);
            }
            std::sort(descs.begin(), descs.end());
            std::ostringstream os;
            os << n << ";";
            for (const auto& [x, y, a, b] : descs)
                os << x << "-" << y << ":" << a << "," << b << ";";
            std::string key = os.str();
            if (best.empty() || key < best) best = key;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

ConnectResult connectSearch(const GbsGraph& a, const GbsGraph& b, const ConnectBounds& bounds) {
    ConnectResult res;
    GbsClassification ca = classifyGbs(a), cb = classifyGbs(b);
    if (!(ca == cb)) {
        res.status = ConnectResult::Status::Distinct;
        res.witness = "classification: " + ca.groupName() + "/" + ca.jsjName() + " vs " +
                      cb.groupName() + "/" + cb.jsjName();
        return res;
    }
    if (a.graph.bettiNumber() != b.graph.bettiNumber()) {
        res.status = ConnectResult::Status::Distinct;
        res.witness = "first Betti number: " + std::to_string(a.graph.bettiNumber()) + " vs " +
                      std::to_string(b.graph.bettiNumber());
        return res;
    }
    ModularImage ma = modularImageOf(a), mb = modularImageOf(b);
    if (ma != mb) {
        res.status = ConnectResult::Status::Distinct;
        res.witness = "modular image: " + ma.str() + " vs " + mb.str();
        return res;
    }

    // forward BFS from a towards the canonical key of b
    const std::string targetKey = gbsCanonicalKey(b.graph);
    struct Node {
        GraphOfGroups graph;
        std::vector<Move> script;
    };
    std::map<std::string, Node> seen;
    std::queue<std::string> frontier;
    std::string startKey = gbsCanonicalKey(a.graph);
    seen[startKey] = {a.graph, {}};
    frontier.push(startKey);
    auto finish = [&](const Node& node) {
        res.status = ConnectResult::Status::Equivalent;
        Certificate cert;
        cert.script = node.script;
        cert.source = a.graph;
        cert.target = node.graph;
        res.certificate = std::move(cert);
        return res;
    };
    if (startKey == targetKey) return finish(seen[startKey]);
    while (!frontier.empty()) {
        std::string key = frontier.front();
        frontier.pop();
        Node node = seen.at(key);
        if (static_cast<int>(node.script.size()) >= bounds.maxDepth) continue;
        for (const Move& m : enumerateMoves(node.graph)) {
            GraphOfGroups next;
            try {
                next = applyMove(node.graph, m).graph;
            } catch (const MoveError&) {
                continue;
            }
            if (static_cast<int>(next.vertices.size() + next.edges.size()) > bounds.maxGraphSize)
                continue;
            std::string nk;
            try {
                nk = gbsCanonicalKey(next);
            } catch (const SemanticError&) {
                continue;
            }
            if (seen.count(nk)) continue;
            Node nn{next, node.script};
            nn.script.push_back(m);
            if (nk == targetKey) return finish(nn);
            seen[nk] = nn;
            frontier.push(nk);
        }
    }
    res.status = ConnectResult::Status::Unknown;
    res.witness = "search bounds exhausted";
    return res;
}

}  // namespace gog
