#pragma once

// Exact k-colouring of a small conflict graph by DSATUR-ordered backtracking.

#include <cstdint>
#include <vector>

namespace spiralcolor::detail {

struct SearchResult {
    bool found = false;
    bool exhausted = false; ///< node limit hit before the search space was closed
    std::vector<int> colors;
    std::int64_t nodes = 0;
};

/// Colours 1..k. `allowed[v]` (optional) is a bitmask of permitted colours,
/// bit c for colour c. Colour symmetry is broken (a new colour is only opened
/// in increasing order) when no vertex carries a restriction.
SearchResult exact_k_coloring(const std::vector<std::vector<int>>& adj, int k, std::int64_t node_limit,
                              const std::vector<std::uint64_t>& allowed = {});

/// Bounded local repair for a partial colouring `col` (0 = uncoloured): the
/// coloured vertices within distance r of `center` (r = 1..max_radius) plus
/// the centre are recoloured exactly while every coloured vertex outside the
/// ball keeps its colour. On success `col` is updated (centre included).
/// `nodes` accumulates the search effort.
bool local_recolor(const std::vector<std::vector<int>>& adj, std::vector<int>& col, int center, int k,
                   int max_radius, std::int64_t node_limit, std::int64_t& nodes);

} // namespace spiralcolor::detail
