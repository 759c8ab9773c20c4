#include "gog/parse.hpp"

#include <cctype>
#include <memory>

namespace gog {

namespace {

// Split on whitespace at brace/paren/bracket depth 0, so labels like
// quot{vertex a Z; ...} stay one token.
std::vector<std::string> tokenize(const std::string& line, int lineNo) {
    std::vector<std::string> toks;
    std::string cur;
    int depth = 0;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') {
            --depth;
            if (depth < 0)
                throw ParseError(lineNo, static_cast<int>(i) + 1, "unbalanced bracket");
        }
        if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
            if (!cur.empty()) toks.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw ParseError(lineNo, static_cast<int>(line.size()), "unbalanced bracket");
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

// Split on `sep` at depth 0.
std::vector<std::string> splitTop(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

long long parseInt(const std::string& s, int lineNo, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineNo, 1, "bad " + what + ": '" + s + "'");
    }
}

bool validId(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

GroupLabel parseLabelAt(const std::string& text, int lineNo);

GraphOfGroups parseGogAt(const std::string& text, int startLine);

GroupLabel parseLabelAt(const std::string& text, int lineNo) {
    if (text == "1") return GroupLabel::trivial();
    if (text == "Z") return GroupLabel::infCyclic();
    if (text.rfind("Z/", 0) == 0) {
        long long n = parseInt(text.substr(2), lineNo, "finite cyclic order");
        if (n < 1) throw ParseError(lineNo, 1, "finite cyclic order must be >= 1");
        return GroupLabel::finiteCyclic(n);
    }
    if (text.rfind("atom:", 0) == 0) {
        std::string rest = text.substr(5);
        std::set<AtomFlag> flags;
        auto lb = rest.find('[');
        if (lb != std::string::npos) {
            if (rest.back() != ']') throw ParseError(lineNo, 1, "bad atom flags in '" + text + "'");
            std::string flagStr = rest.substr(lb + 1, rest.size() - lb - 2);
            rest = rest.substr(0, lb);
            if (!flagStr.empty())
                for (const std::string& f : splitTop(flagStr, ',')) {
                    try {
                        flags.insert(atomFlagFromName(f));
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(lineNo, 1, e.what());
                    }
                }
        }
        if (!validId(rest)) throw ParseError(lineNo, 1, "bad atom name '" + rest + "'");
        return GroupLabel::atom(rest, flags);
    }
    if (text.rfind("prod(", 0) == 0 && text.back() == ')') {
        std::string body = text.substr(5, text.size() - 6);
        std::vector<GroupLabel> factors;
        for (const std::string& p : splitTop(body, ','))
            factors.push_back(parseLabelAt(p, lineNo));
        if (factors.size() < 2) throw ParseError(lineNo, 1, "prod needs >= 2 factors");
        return GroupLabel::product(std::move(factors));
    }
    if (text.rfind("quot{", 0) == 0 && text.back() == '}') {
        std::string body = text.substr(5, text.size() - 6);
        GraphOfGroups inner = parseGogAt(body, lineNo);
        return GroupLabel::quotient(std::make_shared<GraphOfGroups>(std::move(inner)));
    }
    throw ParseError(lineNo, 1, "unrecognized label '" + text + "'");
}

Injection parseInjectionAt(const std::string& text, int lineNo) {
    if (text == "triv") return Injection::trivialInto();
    if (text.rfind("emb:", 0) == 0) {
        std::string tag = text.substr(4);
        if (tag.empty()) throw ParseError(lineNo, 1, "empty embedding tag");
        return Injection::embedding(tag);
    }
    if (!text.empty() && text[0] == '*') {
        auto pct = text.find('%');
        if (pct == std::string::npos) {
            long long m = parseInt(text.substr(1), lineNo, "multiplier");
            if (m == 0) throw ParseError(lineNo, 1, "zero multiplier");
            return Injection::cyclicMult(m);
        }
        long long m = parseInt(text.substr(1, pct - 1), lineNo, "multiplier");
        long long n = parseInt(text.substr(pct + 1), lineNo, "modulus");
        if (n < 1) throw ParseError(lineNo, 1, "modulus must be positive");
        return Injection::cyclicModMult(m, n);
    }
    throw ParseError(lineNo, 1, "unrecognized injection '" + text + "'");
}

GraphOfGroups parseGogAt(const std::string& text, int startLine) {
    GraphOfGroups g;
    int lineNo = startLine;
    for (const std::string& rawLine : splitTop(text, '\n')) {
        for (std::string decl : splitTop(rawLine, ';')) {
            auto hash = decl.find('#');
            // '#' inside an embedding tag (emb:t#2) is not a comment; only
            // treat it as one when preceded by start-of-decl or whitespace
            while (hash != std::string::npos && hash > 0 &&
                   !std::isspace(static_cast<unsigned char>(decl[hash - 1])))
                hash = decl.find('#', hash + 1);
            if (hash != std::string::npos) decl = decl.substr(0, hash);
            std::vector<std::string> toks = tokenize(decl, lineNo);
            if (toks.empty()) continue;
            if (toks[0] == "vertex") {
                if (toks.size() != 3)
                    throw ParseError(lineNo, 1, "vertex declaration needs: vertex <id> <label>");
                if (!validId(toks[1])) throw ParseError(lineNo, 1, "bad vertex id '" + toks[1] + "'");
                if (g.hasVertex(toks[1]))
                    throw ParseError(lineNo, 1, "duplicate vertex '" + toks[1] + "'");
                g.vertices[toks[1]] = parseLabelAt(toks[2], lineNo);
            } else if (toks[0] == "edge") {
                if (toks.size() != 7)
                    throw ParseError(lineNo, 1,
                                     "edge declaration needs: edge <id> <origin> <terminus> "
                                     "<label> <inj> <inj>");
                if (!validId(toks[1])) throw ParseError(lineNo, 1, "bad edge id '" + toks[1] + "'");
                if (g.hasEdge(toks[1]))
                    throw ParseError(lineNo, 1, "duplicate edge '" + toks[1] + "'");
                EdgeData e;
                e.origin = toks[2];
                e.terminus = toks[3];
                e.label = parseLabelAt(toks[4], lineNo);
                e.injOrigin = parseInjectionAt(toks[5], lineNo);
                e.injTerminus = parseInjectionAt(toks[6], lineNo);
                g.edges[toks[1]] = std::move(e);
            } else {
                throw ParseError(lineNo, 1, "expected 'vertex' or 'edge', got '" + toks[0] + "'");
            }
        }
        ++lineNo;
    }
    if (g.vertices.empty()) throw ParseError(lineNo, 1, "no vertices declared");
    g.normalizeBase();
    g.checkValid();  // semantic errors propagate with the offending id
    return g;
}

}  // namespace

GraphOfGroups parseGog(const std::string& text) { return parseGogAt(text, 1); }

GroupLabel parseLabel(const std::string& text) { return parseLabelAt(text, 1); }

Injection parseInjection(const std::string& text) { return parseInjectionAt(text, 1); }

}  // namespace gog
