#pragma once

// Validity checkers and exact oracles. All of them work on one conflict graph
// over the coloured elements: vertices first, then edges, then faces.

#include "spiralcolor/coloring.hpp"

#include <string>

namespace spiralcolor {

enum class ElementKind { Vertex, Edge, Face };
enum class ElementSet { Vertices, Edges, Total, Entire };

struct Element {
    ElementKind kind;
    int id;

    bool operator==(const Element&) const = default;
};

/// Adjacent vertices, edges sharing an end, a vertex and its incident edges,
/// faces sharing an edge, and a face with each of its boundary vertices and
/// edges are in conflict. Every conflicting pair appears once.
struct ConflictGraph {
    std::vector<Element> elements;
    std::vector<std::vector<int>> adj;
    int vertex_offset = -1; ///< -1 when the set excludes the kind
    int edge_offset = -1;
    int face_offset = -1;

    int index(Element e) const;
};

ConflictGraph conflict_graph(const PlanarEmbedding& embedding, ElementSet set);

enum class ViolationKind { VertexVertex, EdgeEdge, VertexEdge, FaceFace, FaceVertex, FaceEdge };
std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    Element first;
    Element second;
};

/// Complete list of same-coloured conflicting pairs. Throws IncompleteColoring
/// when a required part has the wrong size or an element has colour <= 0.
std::vector<Violation> verify_vertex(const PlanarEmbedding& embedding, const ElementColoring& coloring);
std::vector<Violation> verify_edge(const PlanarEmbedding& embedding, const ElementColoring& coloring);
std::vector<Violation> verify_total(const PlanarEmbedding& embedding, const ElementColoring& coloring);
std::vector<Violation> verify_entire(const PlanarEmbedding& embedding, const ElementColoring& coloring);
std::vector<Violation> verify(const PlanarEmbedding& embedding, const ElementColoring& coloring, ElementSet set);

struct OracleLimits {
    int max_vertices = 14; ///< for the vertex oracle
    int max_edges = 24;    ///< for the edge, total and entire oracles
    std::int64_t node_limit = 200000000;
};

/// Exact minimum number of colours via backtracking (first element fixed to
/// colour 1). Throws TooLarge beyond the limits, CapExceeded when more than
/// `cap` colours are needed or the node limit stops the search.
int chromatic_number_exact(const PlanarEmbedding& embedding, int cap = 4, const OracleLimits& limits = {});
int chromatic_index_exact(const PlanarEmbedding& embedding, int cap = 32, const OracleLimits& limits = {});
int total_chromatic_exact(const PlanarEmbedding& embedding, int cap = 32, const OracleLimits& limits = {});
int entire_chromatic_exact(const PlanarEmbedding& embedding, int cap = 32, const OracleLimits& limits = {});
int exact_colors(const PlanarEmbedding& embedding, ElementSet set, int cap, const OracleLimits& limits = {});

} // namespace spiralcolor
