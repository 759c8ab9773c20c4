#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gog {

struct GraphOfGroups;

// Declared properties of an opaque group atom. These are oracles, not
// computed facts: validators trust them.
enum class AtomFlag {
    FreelyIndecomposable,
    PropertyFA,
    Slender,
    Small,
    UniversallyElliptic,
};

std::string atomFlagName(AtomFlag f);
AtomFlag atomFlagFromName(const std::string& s);

// Group descriptor attached to a vertex or edge. FiniteCyclic(1) is
// normalized to Trivial so label equality is syntactic.
class GroupLabel {
  public:
    enum class Kind { Trivial, FiniteCyclic, InfCyclic, Atom, Product, Quotient };

    Kind kind = Kind::Trivial;
    long long order = 0;                           // FiniteCyclic
    std::string name;                              // Atom
    std::set<AtomFlag> flags;                      // Atom
    std::vector<GroupLabel> factors;               // Product
    std::shared_ptr<const GraphOfGroups> inner;    // Quotient

    static GroupLabel trivial();
    static GroupLabel finiteCyclic(long long order);
    static GroupLabel infCyclic();
    static GroupLabel atom(std::string name, std::set<AtomFlag> flags = {});
    static GroupLabel product(std::vector<GroupLabel> factors);
    static GroupLabel quotient(std::shared_ptr<const GraphOfGroups> inner);

    bool isTrivial() const { return kind == Kind::Trivial; }
    bool isArithmetic() const {
        return kind == Kind::Trivial || kind == Kind::FiniteCyclic || kind == Kind::InfCyclic;
    }
    bool hasFlag(AtomFlag f) const { return kind == Kind::Atom && flags.count(f) > 0; }

    bool operator==(const GroupLabel& other) const;
    bool operator!=(const GroupLabel& other) const { return !(*this == other); }
    // total order used for canonical serialization
    bool operator<(const GroupLabel& other) const;

    std::string text() const;  // canonical grammar form, e.g. "Z/4", "atom:K[slender]"
};

// Edge-group-to-vertex-group injection.
struct Injection {
    enum class Kind { TrivialInto, CyclicMult, CyclicModMult, NamedEmbedding };

    Kind kind = Kind::TrivialInto;
    long long mult = 0;  // CyclicMult, CyclicModMult
    long long mod = 0;   // CyclicModMult
    std::string tag;     // NamedEmbedding

    static Injection trivialInto() { return {}; }
    static Injection cyclicMult(long long m);
    static Injection cyclicModMult(long long m, long long n);
    static Injection embedding(std::string tag);

    bool operator==(const Injection& other) const;
    bool operator!=(const Injection& other) const { return !(*this == other); }

    std::string text() const;  // "*2", "*3%8", "emb:t", "triv"
};

// Admissible edge-group families.
enum class ClassSpec { TrivialOnly, Finite, FiniteCyclicOnly, Cyclic, SlenderFlagged, AnyDeclared };

std::string classSpecName(ClassSpec c);
ClassSpec classSpecFromName(const std::string& s);
bool labelInClass(const GroupLabel& label, ClassSpec spec);

}  // namespace gog
