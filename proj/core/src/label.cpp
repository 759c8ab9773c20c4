#include "gog/label.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gog/graph.hpp"
#include "gog/serialize.hpp"

namespace gog {

std::string atomFlagName(AtomFlag f) {
    switch (f) {
        case AtomFlag::FreelyIndecomposable: return "freely_indecomposable";
        case AtomFlag::PropertyFA: return "property_fa";
        case AtomFlag::Slender: return "slender";
        case AtomFlag::Small: return "small";
        case AtomFlag::UniversallyElliptic: return "universally_elliptic";
    }
    return "?";
}

AtomFlag atomFlagFromName(const std::string& s) {
    if (s == "freely_indecomposable") return AtomFlag::FreelyIndecomposable;
    if (s == "property_fa") return AtomFlag::PropertyFA;
    if (s == "slender") return AtomFlag::Slender;
    if (s == "small") return AtomFlag::Small;
    if (s == "universally_elliptic") return AtomFlag::UniversallyElliptic;
    throw std::invalid_argument("unknown atom flag: " + s);
}

GroupLabel GroupLabel::trivial() { return GroupLabel{}; }

GroupLabel GroupLabel::finiteCyclic(long long order) {
    if (order < 1) throw std::invalid_argument("finite cyclic order must be >= 1");
    if (order == 1) return trivial();
    GroupLabel l;
    l.kind = Kind::FiniteCyclic;
    l.order = order;
    return l;
}

GroupLabel GroupLabel::infCyclic() {
    GroupLabel l;
    l.kind = Kind::InfCyclic;
    return l;
}

GroupLabel GroupLabel::atom(std::string name, std::set<AtomFlag> flags) {
    if (name.empty()) throw std::invalid_argument("atom name must be non-empty");
    GroupLabel l;
    l.kind = Kind::Atom;
    l.name = std::move(name);
    l.flags = std::move(flags);
    return l;
}

GroupLabel GroupLabel::product(std::vector<GroupLabel> factors) {
    if (factors.size() < 2) throw std::invalid_argument("product needs >= 2 factors");
    for (const auto& f : factors)
        if (f.isTrivial()) throw std::invalid_argument("product factor must be non-trivial");
    GroupLabel l;
    l.kind = Kind::Product;
    l.factors = std::move(factors);
    return l;
}

GroupLabel GroupLabel::quotient(std::shared_ptr<const GraphOfGroups> inner) {
    if (!inner || inner->vertices.empty())
        throw std::invalid_argument("quotient inner graph must be non-empty");
    if (!inner->isConnected())
        throw std::invalid_argument("quotient inner graph must be connected");
    GroupLabel l;
    l.kind = Kind::Quotient;
    l.inner = std::move(inner);
    return l;
}

bool GroupLabel::operator==(const GroupLabel& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Trivial:
        case Kind::InfCyclic: return true;
        case Kind::FiniteCyclic: return order == other.order;
        case Kind::Atom: return name == other.name && flags == other.flags;
        case Kind::Product: return factors == other.factors;
        case Kind::Quotient:
            return inner == other.inner || *inner == *other.inner;
    }
    return false;
}

bool GroupLabel::operator<(const GroupLabel& other) const {
    return text() < other.text();
}

std::string GroupLabel::text() const {
    switch (kind) {
        case Kind::Trivial: return "1";
        case Kind::InfCyclic: return "Z";
        case Kind::FiniteCyclic: return "Z/" + std::to_string(order);
        case Kind::Atom: {
            std::string s = "atom:" + name;
            if (!flags.empty()) {
                s += "[";
                bool first = true;
                for (AtomFlag f : flags) {
                    if (!first) s += ",";
                    s += atomFlagName(f);
                    first = false;
                }
                s += "]";
            }
            return s;
        }
        case Kind::Product: {
            std::string s = "prod(";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) s += ",";
                s += factors[i].text();
            }
            return s + ")";
        }
        case Kind::Quotient: {
            // inline declarations, semicolon-separated
            std::string body = serializeCanonical(*inner);
            std::string s = "quot{";
            bool first = true;
            std::istringstream is(body);
            std::string line;
            while (std::getline(is, line)) {
                if (line.empty()) continue;
                if (!first) s += "; ";
                s += line;
                first = false;
            }
            return s + "}";
        }
    }
    return "?";
}

Injection Injection::cyclicMult(long long m) {
    if (m == 0) throw std::invalid_argument("cyclic multiplier must be nonzero");
    Injection j;
    j.kind = Kind::CyclicMult;
    j.mult = m;
    return j;
}

Injection Injection::cyclicModMult(long long m, long long n) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    Injection j;
    j.kind = Kind::CyclicModMult;
    j.mult = ((m % n) + n) % n;
    j.mod = n;
    return j;
}

Injection Injection::embedding(std::string tag) {
    Injection j;
    j.kind = Kind::NamedEmbedding;
    j.tag = std::move(tag);
    return j;
}

bool Injection::operator==(const Injection& other) const {
    return kind == other.kind && mult == other.mult && mod == other.mod && tag == other.tag;
}

std::string Injection::text() const {
    switch (kind) {
        case Kind::TrivialInto: return "triv";
        case Kind::CyclicMult: return "*" + std::to_string(mult);
        case Kind::CyclicModMult:
            return "*" + std::to_string(mult) + "%" + std::to_string(mod);
        case Kind::NamedEmbedding: return "emb:" + tag;
    }
    return "?";
}

std::string classSpecName(ClassSpec c) {
    switch (c) {
        case ClassSpec::TrivialOnly: return "trivial";
        case ClassSpec::Finite: return "finite";
        case ClassSpec::FiniteCyclicOnly: return "finite-cyclic";
        case ClassSpec::Cyclic: return "cyclic";
        case ClassSpec::SlenderFlagged: return "slender";
        case ClassSpec::AnyDeclared: return "any";
    }
    return "?";
}

ClassSpec classSpecFromName(const std::string& s) {
    if (s == "trivial") return ClassSpec::TrivialOnly;
    if (s == "finite") return ClassSpec::Finite;
    if (s == "finite-cyclic") return ClassSpec::FiniteCyclicOnly;
    if (s == "cyclic") return ClassSpec::Cyclic;
    if (s == "slender") return ClassSpec::SlenderFlagged;
    if (s == "any") return ClassSpec::AnyDeclared;
    throw std::invalid_argument("unknown class spec: " + s);
}

bool labelInClass(const GroupLabel& label, ClassSpec spec) {
    using K = GroupLabel::Kind;
    switch (spec) {
        case ClassSpec::TrivialOnly:
            return label.isTrivial();
        case ClassSpec::FiniteCyclicOnly:
            return label.kind == K::Trivial || label.kind == K::FiniteCyclic;
        case ClassSpec::Finite:
            if (label.kind == K::Trivial || label.kind == K::FiniteCyclic) return true;
            if (label.kind == K::Product)
                return std::all_of(label.factors.begin(), label.factors.end(),
                                   [](const GroupLabel& f) { return labelInClass(f, ClassSpec::Finite); });
            return false;
        case ClassSpec::Cyclic:
            return label.isArithmetic();
        case ClassSpec::SlenderFlagged:
            if (label.isArithmetic()) return true;
            if (label.kind == K::Atom) return label.flags.count(AtomFlag::Slender) > 0;
            if (label.kind == K::Product)
                return std::all_of(label.factors.begin(), label.factors.end(), [](const GroupLabel& f) {
                    return labelInClass(f, ClassSpec::SlenderFlagged);
                });
            return false;
        case ClassSpec::AnyDeclared:
            return true;
    }
    return false;
}

}  // namespace gog
