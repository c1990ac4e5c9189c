#pragma once

// Total (V+E) and entire (V+E+F) colourings.

#include "spiralcolor/coloring.hpp"

#include <optional>

namespace spiralcolor {

/// Mixed chain for total colourings: a path p0..u whose edges alternate
/// ci/cj, whose last edge (at u) is ci, with c(u) = cj and no neighbour of u
/// coloured ci. Switching exchanges ci and cj on every path edge and on u.
struct MKempeChain {
    std::vector<VertexId> vertices; ///< p0, ..., u
    std::vector<EdgeId> edges;      ///< vertices.size() - 1 edges
    Color ci = 0;
    Color cj = 0;
};

/// Throws NotAnMChain unless `chain` is a valid mixed chain for `total`
/// (including properness at p0 after the switch).
void validate_m_kempe_chain(const TotalColoring& total, const PlanarEmbedding& embedding, const MKempeChain& chain);

/// Maximal alternating walk from p0 along `first`, using the colour of
/// `first` and `other`; returns it when it ends as a valid mixed chain.
std::optional<MKempeChain> find_m_kempe_chain(const TotalColoring& total, const PlanarEmbedding& embedding,
                                              VertexId p0, EdgeId first, Color other);

/// Applies the switch. Throws NotAnMChain. The chain with ci and cj exchanged
/// is valid afterwards and undoes the switch.
TotalColoring m_kempe_switch(const TotalColoring& total, const PlanarEmbedding& embedding, const MKempeChain& chain);

/// Vertices get the four-colouring (colours 1..4); edges are taken in spiral
/// order and get the lowest colour proper against incident edges and both
/// endpoints. Blocked edges are repaired by vertex recolouring, m-Kempe and
/// edge Kempe switches; colour Δ+3 is used only as counted overflow.
/// Requires Δ >= 2 (PreconditionViolated). Throws BudgetExhausted past Δ+3.
ColoringResult total_color(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                           const RepairBudget& budget = {});

/// Total colouring plus faces coloured with Δ+1..Δ+4 via a four-colouring of
/// the dual (outer face included). Face/element clashes are reconciled by
/// permuting the four face colours, then recolouring single faces, edges or
/// vertices within Δ+4; Δ+5 is counted overflow. Requires Δ >= 3.
ColoringResult entire_color(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                            const RepairBudget& budget = {});

} // namespace spiralcolor
