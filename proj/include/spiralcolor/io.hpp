#pragma once

// JSON views of decompositions, colourings, statistics and violations.
// Objects serialise with sorted keys; wall time appears only when requested,
// so equal inputs give byte-identical documents.

#include "spiralcolor/coloring.hpp"
#include "spiralcolor/verify.hpp"

#include "json.hpp"

namespace spiralcolor {

using Json = nlohmann::json;

Json decomposition_to_json(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition);
Json coloring_to_json(const ElementColoring& coloring);
Json stats_to_json(const RunStats& stats, bool with_timing = false);
Json result_to_json(const ColoringResult& result, bool with_timing = false);
Json violations_to_json(const std::vector<Violation>& violations);

/// Accepts either a bare colouring object or a document with a "coloring"
/// member. Throws ParseError on malformed input.
ElementColoring coloring_from_json(const Json& json);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& json);

} // namespace spiralcolor
