#include "spiralcolor/generate.hpp"
#include "spiralcolor/error.hpp"
#include "spiralcolor/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace spiralcolor {

namespace {

using Faces = std::vector<std::vector<VertexId>>;

std::uint64_t dart_key(VertexId u, VertexId v)
{
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

/// Face list with dart ownership, for local surgery during generation.
class FaceComplex {
public:
    FaceComplex(int n, Faces faces) : n_(n), faces_(std::move(faces))
    {
        for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
            claim(f);
    }

    int num_faces() const { return static_cast<int>(faces_.size()); }
    int num_vertices() const { return n_; }
    const std::vector<VertexId>& face(int f) const { return faces_[f]; }
    int add_vertex() { return n_++; }

    /// Replaces face f by the given faces (first replacement reuses slot f).
    void replace(int f, const Faces& parts)
    {
        release(f);
        faces_[f] = parts.front();
        claim(f);
        for (std::size_t i = 1; i < parts.size(); ++i) {
            faces_.push_back(parts[i]);
            claim(static_cast<int>(faces_.size()) - 1);
        }
    }

    int owner(VertexId u, VertexId v) const
    {
        auto it = owner_.find(dart_key(u, v));
        return it == owner_.end() ? -1 : it->second;
    }
    bool adjacent(VertexId u, VertexId v) const { return owner(u, v) >= 0; }
    int degree(VertexId v) const
    {
        int d = 0;
        auto it = owner_.lower_bound(dart_key(v, 0));
        for (; it != owner_.end() && (it->first >> 32) == static_cast<std::uint64_t>(v); ++it)
            ++d;
        return d;
    }

    /// Flips the edge carrying dart u->v inside two triangles. Returns false
    /// when the flip would break simplicity or drop a degree below 4 -> 3.
    bool flip(VertexId u, VertexId v)
    {
        const int f1 = owner(u, v);
        const int f2 = owner(v, u);
        if (f1 < 0 || f2 < 0 || f1 == f2 || faces_[f1].size() != 3 || faces_[f2].size() != 3)
            return false;
        const VertexId x = third(faces_[f1], u, v);
        const VertexId y = third(faces_[f2], v, u);
        if (x == y || adjacent(x, y) || degree(u) <= 3 || degree(v) <= 3)
            return false;
        release(f1);
        release(f2);
        faces_[f1] = {v, x, y};
        faces_[f2] = {x, u, y};
        claim(f1);
        claim(f2);
        return true;
    }

    PlanarEmbedding embed() const { return PlanarEmbedding::from_faces(n_, faces_); }

private:
    static VertexId third(const std::vector<VertexId>& tri, VertexId a, VertexId b)
    {
        for (VertexId w : tri)
            if (w != a && w != b)
                return w;
        return -1;
    }

    void claim(int f)
    {
        const auto& w = faces_[f];
        for (std::size_t i = 0; i < w.size(); ++i)
            owner_[dart_key(w[i], w[(i + 1) % w.size()])] = f;
    }
    void release(int f)
    {
        const auto& w = faces_[f];
        for (std::size_t i = 0; i < w.size(); ++i)
            owner_.erase(dart_key(w[i], w[(i + 1) % w.size()]));
    }

    int n_;
    Faces faces_;
    std::map<std::uint64_t, int> owner_;
};

struct Vec3 {
    double x, y, z;
};

/// Triangular faces of a convex polyhedron whose edges are the vertex pairs at
/// distance `edge_len`; oriented counterclockwise when seen from outside.
Faces convex_triangles(const std::vector<Vec3>& pts, double edge_len)
{
    const int n = static_cast<int>(pts.size());
    auto dist = [&](int a, int b) {
        return std::sqrt((pts[a].x - pts[b].x) * (pts[a].x - pts[b].x) + (pts[a].y - pts[b].y) * (pts[a].y - pts[b].y) +
                         (pts[a].z - pts[b].z) * (pts[a].z - pts[b].z));
    };
    auto adj = [&](int a, int b) { return std::abs(dist(a, b) - edge_len) < 1e-6; };
    Faces faces;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (!adj(a, b) || !adj(b, c) || !adj(a, c))
                    continue;
                const Vec3 u{pts[b].x - pts[a].x, pts[b].y - pts[a].y, pts[b].z - pts[a].z};
                const Vec3 v{pts[c].x - pts[a].x, pts[c].y - pts[a].y, pts[c].z - pts[a].z};
                const Vec3 nrm{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
                const double dot = nrm.x * (pts[a].x + pts[b].x + pts[c].x) + nrm.y * (pts[a].y + pts[b].y + pts[c].y) +
                                   nrm.z * (pts[a].z + pts[b].z + pts[c].z);
                if (dot > 0)
                    faces.push_back({a, b, c});
                else
                    faces.push_back({a, c, b});
            }
    return faces;
}

PlanarEmbedding tetrahedron()
{
    return PlanarEmbedding::from_faces(4, convex_triangles({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
                                                           std::sqrt(8.0)));
}

PlanarEmbedding octahedron()
{
    return PlanarEmbedding::from_faces(
        6, convex_triangles({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}, std::sqrt(2.0)));
}

PlanarEmbedding icosahedron()
{
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> pts;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            pts.push_back({0, s1, s2 * phi});
            pts.push_back({s1, s2 * phi, 0});
            pts.push_back({s2 * phi, 0, s1});
        }
    return PlanarEmbedding::from_faces(12, convex_triangles(pts, 2.0));
}

PlanarEmbedding dual_of(const PlanarEmbedding& primal)
{
    return PlanarEmbedding::from_faces(primal.num_faces(), dual_face_walks(primal));
}

PlanarEmbedding cycle(int n)
{
    std::vector<VertexId> fwd(n);
    for (int i = 0; i < n; ++i)
        fwd[i] = i;
    std::vector<VertexId> bwd(fwd.rbegin(), fwd.rend());
    return PlanarEmbedding::from_faces(n, {fwd, bwd});
}

} // namespace

PlanarEmbedding gen_maximal_planar(const GenSpec& spec)
{
    if (spec.n < 3)
        throw Error(ErrorKind::InvalidArgument, "maximal planar instances need n >= 3");
    SplitMix64 rng(spec.seed);
    FaceComplex fc(3, {{0, 1, 2}, {0, 2, 1}});
    for (int k = 3; k < spec.n; ++k) {
        const int f = static_cast<int>(rng.below(fc.num_faces()));
        const auto tri = fc.face(f);
        const VertexId x = fc.add_vertex();
        fc.replace(f, {{tri[0], tri[1], x}, {tri[1], tri[2], x}, {tri[2], tri[0], x}});
    }
    const int flips = spec.flips < 0 ? 2 * spec.n : spec.flips;
    int done = 0;
    for (int attempt = 0; done < flips && attempt < 10 * flips + 10; ++attempt) {
        const int f = static_cast<int>(rng.below(fc.num_faces()));
        const int side = static_cast<int>(rng.below(3));
        const auto& tri = fc.face(f);
        if (fc.flip(tri[side], tri[(side + 1) % 3]))
            ++done;
    }
    return fc.embed();
}

PlanarEmbedding gen_triangle_free(const GenSpec& spec)
{
    if (spec.n < 4)
        throw Error(ErrorKind::InvalidArgument, "triangle-free instances need n >= 4");
    SplitMix64 rng(spec.seed);
    std::optional<FaceComplex> fc;
    int extra = 0;
    if (spec.n < 8) {
        fc.emplace(4, Faces{{0, 1, 2, 3}, {3, 2, 1, 0}});
        extra = spec.n - 4;
    } else {
        const PlanarEmbedding cube = dual_of(octahedron());
        Faces faces;
        for (const auto& face : cube.faces())
            faces.push_back(face.vertices);
        fc.emplace(8, std::move(faces));
        const int nests = (spec.n - 8) / 4;
        extra = (spec.n - 8) % 4;
        for (int k = 0; k < nests; ++k) {
            const int f = static_cast<int>(rng.below(fc->num_faces()));
            const auto q = fc->face(f);
            const VertexId x = fc->add_vertex(), y = fc->add_vertex(), z = fc->add_vertex(), w = fc->add_vertex();
            fc->replace(f, {{x, y, z, w}, {q[0], q[1], y, x}, {q[1], q[2], z, y}, {q[2], q[3], w, z}, {q[3], q[0], x, w}});
        }
    }
    for (int k = 0; k < extra; ++k) {
        const int f = static_cast<int>(rng.below(fc->num_faces()));
        const int shift = static_cast<int>(rng.below(2));
        const auto q = fc->face(f);
        const VertexId a = q[shift], b = q[shift + 1], c = q[shift + 2], d = q[(shift + 3) % 4];
        const VertexId x = fc->add_vertex();
        fc->replace(f, {{a, b, c, x}, {c, d, a, x}});
    }
    return fc->embed();
}

PlanarEmbedding gen_maximal_outerplanar(int n, std::uint64_t seed)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "maximal outerplanar instances need n >= 3");
    SplitMix64 rng(seed);
    std::vector<VertexId> poly(n);
    for (int i = 0; i < n; ++i)
        poly[i] = i;
    Faces done;
    std::vector<std::vector<VertexId>> open{poly};
    while (!open.empty()) {
        auto p = std::move(open.back());
        open.pop_back();
        const int k = static_cast<int>(p.size());
        if (k == 3) {
            done.push_back(std::move(p));
            continue;
        }
        // random chord (i, j) with 2 <= j - i <= k - 2
        int i = 0, j = 0;
        do {
            i = static_cast<int>(rng.below(k));
            j = static_cast<int>(rng.below(k));
            if (i > j)
                std::swap(i, j);
        } while (j - i < 2 || j - i > k - 2);
        std::vector<VertexId> a(p.begin() + i, p.begin() + j + 1);
        std::vector<VertexId> b(p.begin() + j, p.end());
        b.insert(b.end(), p.begin(), p.begin() + i + 1);
        open.push_back(std::move(a));
        open.push_back(std::move(b));
    }
    done.push_back(std::vector<VertexId>(poly.rbegin(), poly.rend()));
    PlanarEmbedding emb = PlanarEmbedding::from_faces(n, done);
    return emb.with_outer(emb.face_of_dart(emb.dart(1, 0)));
}

std::vector<std::string> named_instances()
{
    return {"k4", "c5", "cube", "octahedron", "icosahedron", "dodecahedron", "k3", "c7", "bowtie", "star3", "w4"};
}

PlanarEmbedding named_instance(const std::string& name)
{
    if (name == "k4")
        return tetrahedron();
    if (name == "c5")
        return cycle(5);
    if (name == "c7")
        return cycle(7);
    if (name == "k3")
        return cycle(3);
    if (name == "octahedron")
        return octahedron();
    if (name == "cube")
        return dual_of(octahedron());
    if (name == "icosahedron")
        return icosahedron();
    if (name == "dodecahedron")
        return dual_of(icosahedron());
    if (name == "bowtie")
        return PlanarEmbedding::build(RotationSystem{{{1, 2, 3, 4}, {0, 2}, {0, 1}, {0, 4}, {0, 3}}});
    if (name == "star3")
        return PlanarEmbedding::build(RotationSystem{{{1, 2, 3}, {0}, {0}, {0}}});
    if (name == "w4")
        return PlanarEmbedding::from_faces(5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {4, 3, 2, 1}});
    throw Error(ErrorKind::UnknownName, "no named instance '" + name + "'");
}

PlanarEmbedding generate(const GenSpec& spec)
{
    switch (spec.kind) {
    case GenKind::Maximal: return gen_maximal_planar(spec);
    case GenKind::TriangleFree: return gen_triangle_free(spec);
    case GenKind::Named: return named_instance(spec.name);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown generator kind");
}

} // namespace spiralcolor
