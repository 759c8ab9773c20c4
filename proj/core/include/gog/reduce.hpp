#pragma once

#include <stdexcept>

#include "gog/word.hpp"

namespace gog {

// Raised when a pinch test reaches an opaque NamedEmbedding with a
// non-identity element: membership cannot be decided.
struct OpaquePinch : std::runtime_error {
    std::string edge;
    OpaquePinch(std::string edge_, const std::string& msg)
        : std::runtime_error(msg), edge(std::move(edge_)) {}
};

// Britton-style normal form. Removes every pinch e g e^-1 where g lies in
// the image of the injection at the arrival side of e; with cyclic=true
// also reduces across the wrap point, minimizing edge count within the
// conjugacy class. Leftmost pinch first (confluent).
LoopWord reduceWord(const GraphOfGroups& g, const LoopWord& w, bool cyclic);

// Can `elem` be pinched through edge `e` entering at `arrival`? On success
// returns the transferred element at the opposite endpoint.
bool pinchTransfer(const GraphOfGroups& g, const std::string& edge, Side arrival,
                   const VertexElem& elem, VertexElem& out);

}  // namespace gog
