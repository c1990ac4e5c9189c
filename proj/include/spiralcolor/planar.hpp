#pragma once

// Combinatorial embeddings of simple connected plane graphs.
//
// An embedding is given by a rotation system: for every vertex the cyclic,
// clockwise order of its neighbours. Faces are traced with the usual next-dart
// rule (arrive at v from u, leave towards the neighbour that follows u in v's
// clockwise rotation). With that rule every face is walked with the face on
// its left, so bounded faces come out counterclockwise and the outer face
// comes out as the clockwise boundary walk of the drawing.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spiralcolor {

using VertexId = int;
using EdgeId = int;
using FaceId = int;
using DartId = int;

struct RotationSystem {
    std::vector<std::vector<VertexId>> neighbors;

    bool operator==(const RotationSystem&) const = default;
};

struct Face {
    std::vector<VertexId> vertices; ///< tail of each dart, in walk order
    std::vector<DartId> darts;

    int length() const { return static_cast<int>(darts.size()); }
};

/// Immutable plane graph. Edge ids are assigned in lexicographic order of
/// (min endpoint, max endpoint). Edge e owns darts 2e (low -> high) and
/// 2e+1 (high -> low).
class PlanarEmbedding {
public:
    PlanarEmbedding() = default;

    /// Validates the rotation and traces faces. Throws Error with kind
    /// NonSimple, Disconnected or NotPlanarEmbedding.
    static PlanarEmbedding build(RotationSystem rotation, std::optional<FaceId> outer = std::nullopt);

    /// Builds the rotation from a consistent list of face walks (each dart used
    /// exactly once, faces on the left). Used by the instance generators.
    static PlanarEmbedding from_faces(int n, const std::vector<std::vector<VertexId>>& faces,
                                      std::optional<FaceId> outer = std::nullopt);

    int num_vertices() const { return static_cast<int>(rotation_.neighbors.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    const RotationSystem& rotation() const { return rotation_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return rotation_.neighbors[v]; }
    /// Edge ids aligned with neighbors(v).
    const std::vector<EdgeId>& incident_edges(VertexId v) const { return incident_[v]; }
    int degree(VertexId v) const { return static_cast<int>(rotation_.neighbors[v].size()); }
    int max_degree() const;

    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    /// -1 when u and v are not adjacent.
    EdgeId edge_id(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return edge_id(u, v) >= 0; }
    VertexId other_end(EdgeId e, VertexId v) const
    {
        return edges_[e].first == v ? edges_[e].second : edges_[e].first;
    }

    static EdgeId dart_edge(DartId d) { return d / 2; }
    VertexId dart_tail(DartId d) const { return d % 2 == 0 ? edges_[d / 2].first : edges_[d / 2].second; }
    VertexId dart_head(DartId d) const { return d % 2 == 0 ? edges_[d / 2].second : edges_[d / 2].first; }
    DartId dart(VertexId from, VertexId to) const;
    /// Next dart of the face walk after `d`.
    DartId next_dart(DartId d) const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId f) const { return faces_[f]; }
    FaceId face_of_dart(DartId d) const { return dart_face_[d]; }
    /// Faces on the two sides of an edge (equal for a bridge).
    std::pair<FaceId, FaceId> edge_faces(EdgeId e) const { return {dart_face_[2 * e], dart_face_[2 * e + 1]}; }

    FaceId outer_face() const { return outer_; }
    bool outer_explicit() const { return outer_explicit_; }
    /// Same rotation, different outer face.
    PlanarEmbedding with_outer(FaceId outer) const;
    /// Reversed rotations (mirror image). Faces are re-traced.
    PlanarEmbedding mirrored() const;

    /// Index of the triangle face with exactly these corners, or -1.
    FaceId triangle_face(VertexId a, VertexId b, VertexId c) const;

private:
    RotationSystem rotation_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<int> dart_head_pos_; // index of a dart's tail in its head's rotation
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::unordered_map<std::uint64_t, EdgeId> edge_index_;
    std::vector<Face> faces_;
    std::vector<FaceId> dart_face_;
    std::unordered_map<std::uint64_t, FaceId> triangle_index_;
    FaceId outer_ = 0;
    bool outer_explicit_ = false;
};

/// Default outer-face rule: longest face; ties go to the face whose sorted
/// vertex list is lexicographically smallest (so the smallest contained vertex
/// id decides first), then to the lower face index.
FaceId default_outer_face(const std::vector<Face>& faces);

struct DualEdge {
    FaceId a;
    FaceId b;
    EdgeId primal;
};

/// One vertex per face, one edge per primal edge. Parallel edges and loops
/// (from bridges) are kept.
struct DualGraph {
    int num_vertices = 0;
    std::vector<DualEdge> edges;
    std::vector<std::vector<int>> incidence; ///< dual edge indices per dual vertex
};

DualGraph dual(const PlanarEmbedding& embedding);

/// Plane embedding of the dual: vertex f lists its neighbouring faces in the
/// cyclic order of the boundary walk of f. Parallel edges and loops are
/// dropped, which keeps a valid simple plane embedding of the same map.
PlanarEmbedding simple_dual_embedding(const PlanarEmbedding& embedding);

/// Faces of the dual map as walks over FaceIds, one per primal vertex; parallel
/// edges retained. Suitable for from_faces when the primal has minimum
/// degree >= 3 and the dual is simple.
std::vector<std::vector<FaceId>> dual_face_walks(const PlanarEmbedding& embedding);

bool is_maximal_planar(const PlanarEmbedding& embedding);
bool is_triangle_free(const PlanarEmbedding& embedding);
int max_degree(const PlanarEmbedding& embedding);
/// Exact detection of simple cycles whose length is in `lengths`; lengths > 6
/// are rejected with InvalidArgument.
bool has_cycles_of_length(const PlanarEmbedding& embedding, const std::set<int>& lengths);
bool is_connected(const RotationSystem& rotation);

/// `.rot` text format.
///   line 1: n
///   then n lines "v: u1 u2 ... uk" (clockwise neighbours)
///   optional final line "outer: f"
std::string to_rot(const PlanarEmbedding& embedding);
PlanarEmbedding parse_rot(const std::string& text);
PlanarEmbedding read_rot_file(const std::string& path);

/// DIMACS `.col` style edge list (1-based), for interoperability only.
std::string to_dimacs(const PlanarEmbedding& embedding, const std::string& comment = {});

} // namespace spiralcolor
