#pragma once

#include "spiralcolor/planar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spiralcolor {

enum class GenKind { Maximal, TriangleFree, Named };

struct GenSpec {
    GenKind kind = GenKind::Maximal;
    int n = 12;
    std::uint64_t seed = 1;
    int flips = -1; ///< random edge flips after stacking; -1 selects 2n
    std::string name; ///< for GenKind::Named
};

/// Stacked triangulation grown from a triangle (each new vertex goes into a
/// uniformly chosen face and is joined to its three corners), followed by
/// random flips that keep the graph simple and every degree >= 3.
PlanarEmbedding gen_maximal_planar(const GenSpec& spec);

/// Random quadrangulation (hence bipartite and triangle-free). Grows from the
/// cube by replacing a uniformly chosen quadrilateral face with a nested
/// quadrilateral (four new degree-3 vertices); the n mod 4 leftover vertices
/// are inserted as degree-2 diagonals of random faces. n < 8 starts from C4.
PlanarEmbedding gen_triangle_free(const GenSpec& spec);

/// k4, c5, cube, octahedron, icosahedron, dodecahedron, plus the small helper
/// instances k3, c7, bowtie, star3, w4.
PlanarEmbedding named_instance(const std::string& name);
std::vector<std::string> named_instances();

/// Maximal outerplanar graph on n >= 3 vertices: a random triangulation of the
/// n-gon 0..n-1. The polygon boundary is the outer face.
PlanarEmbedding gen_maximal_outerplanar(int n, std::uint64_t seed);

PlanarEmbedding generate(const GenSpec& spec);

} // namespace spiralcolor
