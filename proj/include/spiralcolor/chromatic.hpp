#pragma once

// Vertex colourings driven by a spiral decomposition.

#include "spiralcolor/coloring.hpp"

#include <utility>

namespace spiralcolor {

/// Four-colouring in colouring order (innermost vertex first). Segments of
/// odd index draw from CC1 = {G,R,Y}, even ones from CC2 = {B,R,Y}; non-safe
/// colours (R,Y) are preferred, the core is 3-coloured with G,R,Y. Impasses are
/// resolved by a single Kempe switch ({safe, non-safe} pairs first); anything
/// beyond that is counted as a fallback (multi-component switches, local exact
/// recolouring, smallest-last Kempe recolouring, exact backtracking).
/// Throws BudgetExhausted when no 4-colouring is found within the budget.
ColoringResult four_color(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                          const RepairBudget& budget = {});

/// Exchanges ci and cj on the {ci,cj}-component of v. Throws ColorNotInPair
/// unless v is coloured ci or cj.
VertexColoring kempe_switch_vertex(const VertexColoring& coloring, const PlanarEmbedding& embedding, VertexId v,
                                   std::pair<Color, Color> pair);

/// Three-colouring of a triangle-free plane graph: degree <= 2 vertices are
/// peeled first, the rest is coloured in spiral order with G > Y > R, and R is
/// avoided by (G,Y), (G,R) and (Y,R) Kempe switches where possible.
/// Throws PreconditionViolated on triangles, BudgetExhausted on failure.
ColoringResult three_color_triangle_free(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                                         const RepairBudget& budget = {});

/// Tree pathway: 2-colour every non-spiral tree with {G,Y}, then repair each
/// monochromatic spiral edge by recolouring its later endpoint R (the earlier
/// one when the later cannot take R). Throws StructureMismatch when the
/// non-spiral subgraph has a cycle, BudgetExhausted when conflicts remain.
ColoringResult three_color_forest(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition);

/// Graphs without 4- and 5-cycles; same engine as three_color_triangle_free.
/// Throws PreconditionViolated when a 4- or 5-cycle exists.
ColoringResult three_color_steinberg(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                                     const RepairBudget& budget = {});

struct CycleProbe {
    enum class Meet { SameVertex, AdjacentPair };
    Meet meets_at = Meet::SameVertex;
    bool conflict = false;
    std::pair<Color, Color> meeting_colors{0, 0}; ///< both equal for SameVertex
};

/// Two walks from v0 (coloured 1) around an L-cycle, clockwise 1,3,1,3,...
/// and counterclockwise 1,2,1,2,..., until they meet. Throws InvalidArgument
/// for L < 3.
CycleProbe cycle_bicolor_probe(int cycle_length);

} // namespace spiralcolor
