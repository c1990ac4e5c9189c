#pragma once

// Colour assignments and run statistics shared by every colouring algorithm.
// Colours are small positive integers; 0 means "not coloured".

#include "spiralcolor/spiral.hpp"

#include <cstdint>
#include <vector>

namespace spiralcolor {

using Color = int;

/// Mnemonic palette for the vertex four-colouring.
namespace four {
inline constexpr Color G = 1;
inline constexpr Color R = 2;
inline constexpr Color Y = 3;
inline constexpr Color B = 4;
} // namespace four

/// Mnemonic palette for the triangle-free three-colouring (priority G > Y > R).
namespace three {
inline constexpr Color G = 1;
inline constexpr Color Y = 2;
inline constexpr Color R = 3;
} // namespace three

/// Colours on any subset of V, E and F. Unused parts stay empty.
struct ElementColoring {
    std::vector<Color> vertex;
    std::vector<Color> edge;
    std::vector<Color> face;
    int palette = 0; ///< declared cap; every colour must lie in 1..palette

    /// Largest colour present.
    int colors_used() const;
    int distinct_colors() const;

    bool operator==(const ElementColoring&) const = default;
};

using VertexColoring = ElementColoring;
using EdgeColoring = ElementColoring;
using TotalColoring = ElementColoring;
using EntireColoring = ElementColoring;

struct RepairBudget {
    std::int64_t max_kempe_switches = 100000;
    std::int64_t max_backtrack_nodes = 5000000;
    int palette_cap = 0; ///< 0 selects the algorithm's own hard cap
};

struct RunStats {
    int palette_used = 0;
    int distinct_colors = 0;
    int target_palette = 0;
    int hard_cap = 0;
    std::int64_t kempe_switches = 0;    ///< scheduled two-colour switches
    std::int64_t fallback_switches = 0; ///< switches or searches outside the schedule
    std::int64_t m_kempe_switches = 0;
    std::int64_t backtrack_nodes = 0;
    std::int64_t shift_resolutions = 0;
    std::int64_t overflow_elements = 0; ///< elements coloured above the target palette
    std::int64_t reconciliation_activations = 0;
    std::int64_t fourth_color_uses = 0;
    std::int64_t red_count = 0;
    TriangleCensus census;
    int chains = 0;
    std::vector<int> segments_per_chain;
    int sailing_boats = 0;
    double wall_ms = 0.0;
};

struct ColoringResult {
    ElementColoring coloring;
    RunStats stats;
};

} // namespace spiralcolor
