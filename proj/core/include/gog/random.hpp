#pragma once

#include <cstdint>
#include <random>

#include "gog/gbs.hpp"
#include "gog/moves.hpp"
#include "gog/word.hpp"

namespace gog {

// Deterministic generators for sampled property checks. All draws come from
// the supplied engine so fixed seeds reproduce runs exactly.

GbsGraph randomGbsGraph(std::mt19937_64& rng, int maxEdges, long long maxAbsLabel);

// Random closed loop word at the graph base with small exponents.
LoopWord randomWord(const GraphOfGroups& g, std::mt19937_64& rng, int maxSteps,
                    long long maxAbsExp = 4);

// All legal elementary moves on g (collapses, slides, subdivisions and
// single-end expansions), in a deterministic order.
std::vector<Move> enumerateMoves(const GraphOfGroups& g, long long maxAbsLabel = 64);

}  // namespace gog
