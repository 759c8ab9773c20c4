#include "gog/word.hpp"

#include <cctype>
#include <sstream>

namespace gog {

namespace {

long long modNorm(long long v, long long mod) {
    if (mod <= 0) return v;  // mod 0 encodes Z
    v %= mod;
    if (v < 0) v += mod;
    return v;
}

long long labelMod(const GroupLabel& label) {
    switch (label.kind) {
        case GroupLabel::Kind::Trivial: return 1;
        case GroupLabel::Kind::InfCyclic: return 0;
        case GroupLabel::Kind::FiniteCyclic: return label.order;
        default: return -1;  // non-arithmetic
    }
}

}  // namespace

VertexElem VertexElem::identityFor(const GroupLabel& label) {
    long long m = labelMod(label);
    if (m >= 0) return arith(0, m);
    VertexElem e;
    e.kind = Kind::Sym;
    return e;
}

VertexElem VertexElem::arith(long long value, long long mod) {
    VertexElem e;
    e.kind = Kind::Arith;
    e.mod = mod;
    e.value = modNorm(value, mod);
    return e;
}

VertexElem VertexElem::symbol(const std::string& name, long long exp) {
    VertexElem e;
    e.kind = Kind::Sym;
    if (exp != 0) e.sym.emplace_back(name, exp);
    return e;
}

bool VertexElem::isIdentity() const {
    return kind == Kind::Arith ? value == 0 : sym.empty();
}

VertexElem VertexElem::inverse() const {
    if (kind == Kind::Arith) return arith(-value, mod);
    VertexElem e;
    e.kind = Kind::Sym;
    for (auto it = sym.rbegin(); it != sym.rend(); ++it) e.sym.emplace_back(it->first, -it->second);
    return e;
}

VertexElem operator*(const VertexElem& a, const VertexElem& b) {
    if (a.kind != b.kind)
        throw SemanticError("", "vertex element kinds differ in multiplication");
    if (a.kind == VertexElem::Kind::Arith) {
        if (a.mod != b.mod)
            throw SemanticError("", "vertex element moduli differ in multiplication");
        return VertexElem::arith(a.value + b.value, a.mod);
    }
    VertexElem r = a;
    for (const auto& [name, exp] : b.sym) {
        if (!r.sym.empty() && r.sym.back().first == name) {
            r.sym.back().second += exp;
            if (r.sym.back().second == 0) r.sym.pop_back();
        } else if (exp != 0) {
            r.sym.emplace_back(name, exp);
        }
    }
    return r;
}

bool VertexElem::operator==(const VertexElem& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Arith) return value == o.value && mod == o.mod;
    return sym == o.sym;
}

std::string VertexElem::text() const {
    if (isIdentity()) return "1";
    if (kind == Kind::Arith) return "a^" + std::to_string(value);
    std::string s;
    for (size_t i = 0; i < sym.size(); ++i) {
        if (i) s += "*";
        s += sym[i].first;
        if (sym[i].second != 1) s += "^" + std::to_string(sym[i].second);
    }
    return s;
}

bool LoopWord::operator==(const LoopWord& o) const {
    if (base != o.base || !(head == o.head) || steps.size() != o.steps.size()) return false;
    for (size_t i = 0; i < steps.size(); ++i)
        if (!(steps[i].t == o.steps[i].t) || !(steps[i].g == o.steps[i].g)) return false;
    return true;
}

LoopWord LoopWord::identity(const GraphOfGroups& g, const std::string& base) {
    LoopWord w;
    w.base = base;
    w.head = VertexElem::identityFor(g.vertexLabel(base));
    return w;
}

LoopWord LoopWord::vertexElement(const GraphOfGroups& g, const std::string& vertex, VertexElem e) {
    LoopWord w;
    w.base = vertex;
    g.vertexLabel(vertex);  // existence check
    w.head = std::move(e);
    return w;
}

namespace {

void checkElemFits(const GraphOfGroups& g, const std::string& vertex, const VertexElem& e) {
    long long m = labelMod(g.vertexLabel(vertex));
    if (m >= 0) {
        if (e.kind != VertexElem::Kind::Arith || e.mod != m)
            throw SemanticError(vertex, "element does not fit arithmetic vertex label");
    } else if (e.kind != VertexElem::Kind::Sym) {
        throw SemanticError(vertex, "arithmetic element at a non-arithmetic vertex");
    }
}

}  // namespace

void LoopWord::checkWellFormed(const GraphOfGroups& g) const {
    if (!g.hasVertex(base)) throw SemanticError(base, "word base is not a vertex");
    checkElemFits(g, base, head);
    std::string at = base;
    for (const Step& s : steps) {
        const EdgeData& e = g.edge(s.t.edge);
        if (e.endpoint(s.t.departureSide()) != at)
            throw SemanticError(s.t.edge, "traversal does not depart from " + at);
        at = e.endpoint(s.t.arrivalSide());
        checkElemFits(g, at, s.g);
    }
    if (at != base) throw SemanticError(base, "edge path does not close up at the base");
}

LoopWord LoopWord::inverse(const GraphOfGroups& g) const {
    LoopWord r;
    r.base = base;
    if (steps.empty()) {
        r.head = head.inverse();
        return r;
    }
    r.head = steps.back().g.inverse();
    for (size_t i = steps.size(); i-- > 0;) {
        const VertexElem& prev = i == 0 ? head : steps[i - 1].g;
        r.steps.push_back({steps[i].t.inverse(), prev.inverse()});
    }
    (void)g;
    return r;
}

LoopWord LoopWord::concat(const GraphOfGroups& g, const LoopWord& other) const {
    if (base != other.base) throw SemanticError(base, "concat of words at different bases");
    LoopWord r = *this;
    if (r.steps.empty()) {
        r.head = r.head * other.head;
    } else {
        r.steps.back().g = r.steps.back().g * other.head;
    }
    for (const Step& s : other.steps) r.steps.push_back(s);
    (void)g;
    return r;
}

LoopWord LoopWord::power(const GraphOfGroups& g, int n) const {
    LoopWord base_ = n < 0 ? inverse(g) : *this;
    int k = n < 0 ? -n : n;
    LoopWord r = LoopWord::identity(g, base);
    r.head = VertexElem::identityFor(g.vertexLabel(base));
    for (int i = 0; i < k; ++i) r = r.concat(g, base_);
    return r;
}

std::string LoopWord::text() const {
    std::ostringstream os;
    os << head.text();
    for (const Step& s : steps) {
        os << " " << (s.t.reversed ? "~" : "") << s.t.edge << " " << s.g.text();
    }
    return os.str();
}

namespace {

// Letter convention: for a loop edge the plain letter is the stable letter
// t with t a^lambda t^-1 = a^mu, i.e. the reversed traversal; for a non-loop
// edge the plain letter is the origin -> terminus traversal.
Traversal letterToTraversal(const GraphOfGroups& g, const std::string& edge, bool primed) {
    bool loop = g.edge(edge).isLoop();
    bool reversed = loop ? !primed : primed;
    return Traversal{edge, reversed};
}

std::string traversalToLetter(const GraphOfGroups& g, const Traversal& t) {
    bool loop = g.edge(t.edge).isLoop();
    bool primed = loop ? !t.reversed : t.reversed;
    return primed ? t.edge + "'" : t.edge;
}

}  // namespace

LoopWord parseWord(const GraphOfGroups& g, const std::string& text, const std::string& base) {
    std::string b = base.empty() ? g.base : base;
    if (b.empty()) throw SemanticError("", "no base vertex for word");
    LoopWord w = LoopWord::identity(g, b);
    std::string at = b;

    auto currentSlot = [&]() -> VertexElem& { return w.steps.empty() ? w.head : w.steps.back().g; };

    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        bool primed = false;
        std::string stem = tok;
        if (!stem.empty() && stem.back() == '\'') {
            primed = true;
            stem.pop_back();
        }
        if (g.hasEdge(stem)) {
            Traversal t = letterToTraversal(g, stem, primed);
            const EdgeData& e = g.edge(stem);
            if (e.endpoint(t.departureSide()) != at)
                throw SemanticError(stem, "letter '" + tok + "' does not depart from " + at);
            at = e.endpoint(t.arrivalSide());
            w.steps.push_back({t, VertexElem::identityFor(g.vertexLabel(at))});
            continue;
        }
        if (primed) throw SemanticError(b, "unknown edge '" + stem + "'");
        // element token: [vertex.]name[^exp]
        std::string body = tok;
        auto dot = body.find('.');
        if (dot != std::string::npos) {
            std::string pin = body.substr(0, dot);
            if (pin != at)
                throw SemanticError(pin, "element pinned to " + pin + " but path is at " + at);
            body = body.substr(dot + 1);
        }
        long long exp = 1;
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            try {
                exp = std::stoll(body.substr(caret + 1));
            } catch (const std::exception&) {
                throw SemanticError(at, "bad exponent in '" + tok + "'");
            }
            body = body.substr(0, caret);
        }
        if (body.empty()) throw SemanticError(at, "bad element token '" + tok + "'");
        const GroupLabel& label = g.vertexLabel(at);
        long long m = labelMod(label);
        if (body == "a") {
            if (m < 0)
                throw SemanticError(at, "canonical generator 'a' at non-arithmetic vertex " + at);
            if (m == 1)
                throw SemanticError(at, "non-trivial element at trivial vertex " + at);
            currentSlot() = currentSlot() * VertexElem::arith(exp, m);
        } else {
            if (m >= 0)
                throw SemanticError(at, "formal generator '" + body + "' at arithmetic vertex " + at);
            currentSlot() = currentSlot() * VertexElem::symbol(body, exp);
        }
    }
    if (at != b) throw SemanticError(b, "word path does not close up at " + b);
    return w;
}

std::string wordToText(const GraphOfGroups& g, const LoopWord& w) {
    std::vector<std::string> toks;
    std::string at = w.base;
    auto emitElem = [&](const VertexElem& e) {
        if (e.isIdentity()) return;
        if (e.kind == VertexElem::Kind::Arith) {
            toks.push_back("a^" + std::to_string(e.value));
        } else {
            for (const auto& [name, exp] : e.sym) {
                if (exp == 1) toks.push_back(name);
                else toks.push_back(name + "^" + std::to_string(exp));
            }
        }
    };
    emitElem(w.head);
    for (const LoopWord::Step& s : w.steps) {
        toks.push_back(traversalToLetter(g, s.t));
        emitElem(s.g);
    }
    if (toks.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < toks.size(); ++i) {
        if (i) out += " ";
        out += toks[i];
    }
    return out;
}

}  // namespace gog
