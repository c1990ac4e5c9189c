#include "spiralcolor/verify.hpp"
#include "spiralcolor/error.hpp"

#include "exact.hpp"

#include <algorithm>

namespace spiralcolor {

int ConflictGraph::index(Element e) const
{
    switch (e.kind) {
    case ElementKind::Vertex: return vertex_offset < 0 ? -1 : vertex_offset + e.id;
    case ElementKind::Edge: return edge_offset < 0 ? -1 : edge_offset + e.id;
    case ElementKind::Face: return face_offset < 0 ? -1 : face_offset + e.id;
    }
    return -1;
}

ConflictGraph conflict_graph(const PlanarEmbedding& emb, ElementSet set)
{
    const bool with_v = set != ElementSet::Edges;
    const bool with_e = set != ElementSet::Vertices;
    const bool with_f = set == ElementSet::Entire;
    ConflictGraph g;
    auto add_kind = [&](bool on, ElementKind kind, int count, int& offset) {
        if (!on)
            return;
        offset = static_cast<int>(g.elements.size());
        for (int i = 0; i < count; ++i)
            g.elements.push_back({kind, i});
    };
    add_kind(with_v, ElementKind::Vertex, emb.num_vertices(), g.vertex_offset);
    add_kind(with_e, ElementKind::Edge, emb.num_edges(), g.edge_offset);
    add_kind(with_f, ElementKind::Face, emb.num_faces(), g.face_offset);
    g.adj.assign(g.elements.size(), {});
    auto link = [&](int a, int b) {
        if (a == b)
            return;
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    };
    if (with_v)
        for (auto [u, v] : emb.edges())
            link(g.vertex_offset + u, g.vertex_offset + v);
    if (with_e)
        for (VertexId v = 0; v < emb.num_vertices(); ++v) {
            const auto& inc = emb.incident_edges(v);
            for (std::size_t i = 0; i < inc.size(); ++i) {
                for (std::size_t j = i + 1; j < inc.size(); ++j)
                    link(g.edge_offset + inc[i], g.edge_offset + inc[j]);
                if (with_v)
                    link(g.vertex_offset + v, g.edge_offset + inc[i]);
            }
        }
    if (with_f)
        for (FaceId f = 0; f < emb.num_faces(); ++f) {
            for (DartId d : emb.face(f).darts) {
                const EdgeId e = PlanarEmbedding::dart_edge(d);
                link(g.face_offset + f, g.edge_offset + e);
                link(g.face_offset + f, g.vertex_offset + emb.dart_tail(d));
                const FaceId h = emb.face_of_dart(d ^ 1);
                if (h != f)
                    link(g.face_offset + f, g.face_offset + h);
            }
        }
    for (auto& l : g.adj) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return g;
}

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::VertexVertex: return "vertex-vertex";
    case ViolationKind::EdgeEdge: return "edge-edge";
    case ViolationKind::VertexEdge: return "vertex-edge";
    case ViolationKind::FaceFace: return "face-face";
    case ViolationKind::FaceVertex: return "face-vertex";
    case ViolationKind::FaceEdge: return "face-edge";
    }
    return "?";
}

namespace {

ViolationKind kind_of(ElementKind a, ElementKind b)
{
    if (a > b)
        std::swap(a, b);
    if (a == ElementKind::Vertex)
        return b == ElementKind::Vertex ? ViolationKind::VertexVertex
               : b == ElementKind::Edge ? ViolationKind::VertexEdge
                                        : ViolationKind::FaceVertex;
    if (a == ElementKind::Edge)
        return b == ElementKind::Edge ? ViolationKind::EdgeEdge : ViolationKind::FaceEdge;
    return ViolationKind::FaceFace;
}

std::vector<Color> flatten(const PlanarEmbedding& emb, const ElementColoring& c, const ConflictGraph& g)
{
    std::vector<Color> out(g.elements.size(), 0);
    auto take = [&](int offset, const std::vector<Color>& part, int count, const char* what) {
        if (offset < 0)
            return;
        if (static_cast<int>(part.size()) != count)
            throw Error(ErrorKind::IncompleteColoring, std::string(what) + " colouring has the wrong size");
        for (int i = 0; i < count; ++i) {
            if (part[i] <= 0)
                throw Error(ErrorKind::IncompleteColoring,
                            std::string(what) + " " + std::to_string(i) + " is not coloured");
            out[offset + i] = part[i];
        }
    };
    take(g.vertex_offset, c.vertex, emb.num_vertices(), "vertex");
    take(g.edge_offset, c.edge, emb.num_edges(), "edge");
    take(g.face_offset, c.face, emb.num_faces(), "face");
    return out;
}

} // namespace

std::vector<Violation> verify(const PlanarEmbedding& emb, const ElementColoring& coloring, ElementSet set)
{
    const auto g = conflict_graph(emb, set);
    const auto col = flatten(emb, coloring, g);
    std::vector<Violation> out;
    for (int a = 0; a < static_cast<int>(g.adj.size()); ++a)
        for (int b : g.adj[a])
            if (a < b && col[a] == col[b]) {
                Element x = g.elements[a], y = g.elements[b];
                if (x.kind > y.kind)
                    std::swap(x, y);
                out.push_back({kind_of(x.kind, y.kind), x, y});
            }
    return out;
}

std::vector<Violation> verify_vertex(const PlanarEmbedding& e, const ElementColoring& c)
{
    return verify(e, c, ElementSet::Vertices);
}

std::vector<Violation> verify_edge(const PlanarEmbedding& e, const ElementColoring& c)
{
    return verify(e, c, ElementSet::Edges);
}

std::vector<Violation> verify_total(const PlanarEmbedding& e, const ElementColoring& c)
{
    return verify(e, c, ElementSet::Total);
}

std::vector<Violation> verify_entire(const PlanarEmbedding& e, const ElementColoring& c)
{
    return verify(e, c, ElementSet::Entire);
}

int exact_colors(const PlanarEmbedding& emb, ElementSet set, int cap, const OracleLimits& limits)
{
    if (set == ElementSet::Vertices && emb.num_vertices() > limits.max_vertices)
        throw Error(ErrorKind::TooLarge, "vertex oracle limited to " + std::to_string(limits.max_vertices) + " vertices");
    if (set != ElementSet::Vertices && emb.num_edges() > limits.max_edges)
        throw Error(ErrorKind::TooLarge, "oracle limited to " + std::to_string(limits.max_edges) + " edges");
    const auto g = conflict_graph(emb, set);
    if (g.elements.empty())
        return 0;
    int lower = 1;
    for (const auto& l : g.adj)
        lower = std::max(lower, l.empty() ? 1 : 2);
    // a vertex with its incident edges (or edges at one vertex) is a clique
    if (set == ElementSet::Edges)
        lower = std::max(lower, emb.max_degree());
    if (set == ElementSet::Total || set == ElementSet::Entire)
        lower = std::max(lower, emb.max_degree() + 1);
    for (int k = lower; k <= cap; ++k) {
        auto r = detail::exact_k_coloring(g.adj, k, limits.node_limit);
        if (r.found)
            return k;
        if (r.exhausted)
            throw Error(ErrorKind::CapExceeded, "oracle node limit reached at k=" + std::to_string(k));
    }
    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " colours needed");
}

int chromatic_number_exact(const PlanarEmbedding& e, int cap, const OracleLimits& l)
{
    return exact_colors(e, ElementSet::Vertices, cap, l);
}

int chromatic_index_exact(const PlanarEmbedding& e, int cap, const OracleLimits& l)
{
    return exact_colors(e, ElementSet::Edges, cap, l);
}

int total_chromatic_exact(const PlanarEmbedding& e, int cap, const OracleLimits& l)
{
    return exact_colors(e, ElementSet::Total, cap, l);
}

int entire_chromatic_exact(const PlanarEmbedding& e, int cap, const OracleLimits& l)
{
    return exact_colors(e, ElementSet::Entire, cap, l);
}

} // namespace spiralcolor
