#pragma once

// Spiral-chain edge colouring.

#include "spiralcolor/coloring.hpp"

#include <utility>

namespace spiralcolor {

/// Vertices are visited in colouring order; at each vertex its uncoloured
/// edges are coloured anticlockwise starting from the spiral edge to the chain
/// predecessor, each with the lowest colour <= Δ free at both ends. Impasses go
/// through resolve_impasse; Δ+1 is used only when that fails and is counted as
/// overflow (a final pass tries to remove every Δ+1 edge again).
/// Throws BudgetExhausted if even Δ+1 (or `budget.palette_cap`) cannot be met.
ColoringResult spiral_edge_color(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                                 const RepairBudget& budget = {});

/// Edges in the order the spiral colourings visit them: vertices in colouring
/// order, each vertex's edges anticlockwise from the spiral edge to its
/// construction predecessor; every edge listed once.
std::vector<EdgeId> spiral_edge_order(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition);

enum class ImpasseMechanism { None, CyclicShift, KempeSwitch, VizingFan, Unresolved };

struct ImpasseResolution {
    EdgeColoring coloring;
    ImpasseMechanism mechanism = ImpasseMechanism::None;
    int switches = 0;
};

/// Colours every uncoloured edge at v within `cap` colours, trying in order:
/// (a) a cyclic shift of the colours on v's coloured fan, (b) a two-colour edge
/// Kempe switch, (c) a Vizing fan recolouring (which may use colour cap+1 only
/// if `allow_extra`). Returns the input unchanged when v has no uncoloured edge.
ImpasseResolution resolve_impasse(const EdgeColoring& coloring, const PlanarEmbedding& embedding,
                                  const SpiralDecomposition& decomposition, VertexId v, int cap,
                                  bool allow_extra = false);

struct EdgeKempePath {
    std::vector<EdgeId> edges;
    std::pair<Color, Color> colors;
    bool cycle = false;
};

/// Maximal {ci,cj}-alternating path or cycle through e. Throws ColorNotInPair.
EdgeKempePath edge_kempe_path(const EdgeColoring& coloring, const PlanarEmbedding& embedding, EdgeId e,
                              std::pair<Color, Color> pair);

/// Swaps ci and cj along edge_kempe_path(e). Throws ColorNotInPair.
EdgeColoring kempe_switch_edge(const EdgeColoring& coloring, const PlanarEmbedding& embedding, EdgeId e,
                               std::pair<Color, Color> pair);

} // namespace spiralcolor
