#pragma once

// Barycentric straight-line drawing and SVG output.

#include "spiralcolor/coloring.hpp"

#include <string>

namespace spiralcolor {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct LayoutResult {
    std::vector<Point> position;  ///< per vertex, outer polygon on the unit circle
    std::vector<VertexId> outer;  ///< outer face walk used for the polygon
    bool three_connected = false; ///< false raises NotThreeConnectedWarning
    std::vector<std::string> warnings;
    int iterations = 0;
    double residual = 0.0;
};

bool is_three_connected(const PlanarEmbedding& embedding);

/// Outer face vertices on a regular polygon (first walk vertex at the top,
/// then clockwise), every other vertex at the mean of its neighbours, solved
/// by Gauss-Seidel until the largest residual is below `tolerance`.
LayoutResult tutte_layout(const PlanarEmbedding& embedding, double tolerance = 1e-9);

/// True when two edges without a common end cross (or touch) in the drawing.
bool has_crossings(const PlanarEmbedding& embedding, const LayoutResult& layout);

/// SVG 1.1 document. Spiral edges are bold, non-spiral edges dashed; vertex,
/// edge and inner face colours come from `coloring` when its parts are set.
std::string render_svg(const PlanarEmbedding& embedding, const LayoutResult& layout,
                       const ElementColoring* coloring = nullptr,
                       const SpiralDecomposition* decomposition = nullptr);

} // namespace spiralcolor
