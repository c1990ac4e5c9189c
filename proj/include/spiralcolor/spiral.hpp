#pragma once

// Spiral chain decomposition of plane graphs.
//
// Chains are built from the outside in: walk the current outer boundary
// clockwise from a start vertex (the closing edge is omitted), delete the
// walked vertices, follow a link edge from the last walked vertex onto the new
// boundary and keep going. When the last vertex has no surviving neighbour a
// new chain starts at the nearest surviving vertex. Colouring algorithms visit
// the chains in the opposite order, innermost vertex first.

#include "spiralcolor/planar.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace spiralcolor {

enum class Direction { Clockwise, Counterclockwise };

enum class TriangleClass { Alpha, Beta, Gamma };
enum class Side { Lower, Upper };

struct TriangleType {
    TriangleClass cls;
    Side side;

    bool operator==(const TriangleType&) const = default;
};

std::string to_string(TriangleClass cls);
std::string to_string(const TriangleType& t);
std::string to_string(const std::vector<TriangleType>& seq);

struct SpiralChain {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> link_edges;
};

struct SpiralDecomposition {
    std::vector<SpiralChain> chains;
    std::vector<char> spiral_edge;      ///< per EdgeId
    std::vector<int> chain_of;          ///< per VertexId
    std::vector<int> position;          ///< index inside its chain
    std::vector<int> rank;              ///< construction rank, 0 = first vertex visited
    std::vector<VertexId> sequence;     ///< vertices in construction order
    VertexId start = 0;
    Direction direction = Direction::Clockwise;
    std::vector<std::string> anomalies; ///< deviations from the textbook walk (truncated walks, new chains)

    int num_chains() const { return static_cast<int>(chains.size()); }
    int num_spiral_edges() const;
    /// Chain neighbours of v (-1 when v is a chain end).
    VertexId predecessor(VertexId v) const;
    VertexId successor(VertexId v) const;
    /// Vertices in colouring order: chains S_p..S_1, each read from its inner end.
    std::vector<VertexId> coloring_order() const;

    /// Wraps explicitly supplied chains (validated: partition of V, consecutive
    /// chain vertices adjacent). Used for hand-built configurations.
    static SpiralDecomposition from_chains(const PlanarEmbedding& embedding,
                                           const std::vector<std::vector<VertexId>>& chains);
};

/// `start` defaults to the smallest vertex on the outer face and must lie on it.
SpiralDecomposition decompose(const PlanarEmbedding& embedding, std::optional<VertexId> start = std::nullopt,
                              Direction direction = Direction::Clockwise);

struct TriangleCensus {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;

    int total() const { return alpha + beta + gamma; }
};

/// Class of every internal triangular face (outer face and non-triangles are
/// nullopt). Throws NotMaximal unless the embedding is maximal planar.
std::vector<std::optional<TriangleClass>> classify_triangles(const PlanarEmbedding& embedding,
                                                             const SpiralDecomposition& decomposition);
TriangleCensus triangle_census(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition);

/// Census of a maximal outerplanar graph against its Hamiltonian outer cycle:
/// internal faces with 0/1/2 cycle edges count as alpha/beta/gamma.
TriangleCensus outerplanar_cycle_census(const PlanarEmbedding& embedding);

struct SpiralSegment {
    int index = 1; ///< 1 is the core
    std::vector<VertexId> vertices;
};

/// Greedy maximal prefixes of `chain` whose induced sub-embedding keeps every
/// vertex on one face.
std::vector<SpiralSegment> segment(const std::vector<VertexId>& chain, const PlanarEmbedding& embedding);
/// True when some face of the sub-embedding induced by `vertices` contains all of them.
bool induced_outerplanar(const PlanarEmbedding& embedding, const std::vector<VertexId>& vertices);

struct SailingBoat {
    std::array<VertexId, 3> lower; ///< v_{i-1}, v_i, v_{i+1}
    std::array<VertexId, 2> upper; ///< v_r, v_{r+1}
    FaceId gamma_face = -1;
    std::array<FaceId, 3> beta_faces{};
};

std::vector<SailingBoat> find_sailing_boats(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition);

struct ConfigSequence {
    VertexId vertex = -1;
    std::vector<TriangleType> sequence; ///< anticlockwise, from the first lower triangle
    bool boundary = false;              ///< vertex lies on the outer face (outer face skipped, all lower)
};

ConfigSequence config_sequence(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition, VertexId v);

/// The twelve degree-6 configurations, in catalogue order (entry k at index k-1).
const std::vector<std::vector<TriangleType>>& configuration_catalogue();
/// Terminal-vertex families: Case 1..4 at index 0..3.
const std::vector<std::vector<TriangleType>>& terminal_case_catalogue();
/// 1-based catalogue entry equal to `seq` up to cyclic rotation.
std::optional<int> match_catalogue(const std::vector<TriangleType>& seq,
                                   const std::vector<std::vector<TriangleType>>& catalogue);

struct CaseCensus {
    std::array<int, 12> entries{};    ///< counts per catalogue entry
    int degree6_vertices = 0;
    std::vector<VertexId> uncatalogued; ///< degree-6 vertices matching no entry
    std::array<int, 4> terminal_cases{}; ///< Case 1..4 hits at the terminal vertex
    std::optional<int> terminal_case;
};

CaseCensus config_case_table(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition);

struct CycleComponent {
    std::vector<VertexId> vertices;
    int cycle_length = 0;
};

struct NonSpiralStructure {
    std::vector<std::vector<VertexId>> trees;    ///< components with >= 1 edge and no cycle
    std::vector<CycleComponent> cycles;          ///< components with exactly one cycle
    std::vector<std::vector<VertexId>> complex;  ///< components with two or more independent cycles
    std::vector<VertexId> isolated;              ///< vertices without non-spiral edges
    int odd_cycles = 0;  ///< odd fundamental cycles over all components (BFS trees from the smallest vertex)
    int even_cycles = 0;
};

NonSpiralStructure nonspiral_structure(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition);

} // namespace spiralcolor
