#include "spiralcolor/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace spiralcolor {

namespace {

// Articulation points of G - removed (Tarjan, iterative).
bool has_cut_vertex(const PlanarEmbedding& emb, VertexId removed)
{
    const int n = emb.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0, roots = 0;
    VertexId root = removed == 0 ? 1 : 0;
    struct Frame {
        VertexId v, parent;
        std::size_t i;
    };
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
        auto& f = stack.back();
        const auto& nb = emb.neighbors(f.v);
        if (f.i < nb.size()) {
            VertexId w = nb[f.i++];
            if (w == removed || w == f.parent)
                continue;
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                stack.push_back({w, f.v, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
            continue;
        }
        Frame done = f;
        stack.pop_back();
        if (stack.empty())
            break;
        auto& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (p.v == root)
            ++roots;
        else if (low[done.v] >= disc[p.v])
            return true;
    }
    if (roots > 1)
        return true;
    for (VertexId v = 0; v < n; ++v)
        if (v != removed && disc[v] < 0)
            return true;
    return false;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

const char* palette_color(Color c)
{
    static const char* colors[] = {"#2ca02c", "#d62728", "#f2c500", "#1f77b4", "#9467bd", "#8c564b",
                                   "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#ff7f0e", "#393b79"};
    if (c <= 0)
        return "#ffffff";
    return colors[(c - 1) % 12];
}

} // namespace

bool is_three_connected(const PlanarEmbedding& emb)
{
    const int n = emb.num_vertices();
    if (n < 4)
        return false;
    for (VertexId v = 0; v < n; ++v)
        if (has_cut_vertex(emb, v))
            return false;
    return true;
}

LayoutResult tutte_layout(const PlanarEmbedding& emb, double tolerance)
{
    const int n = emb.num_vertices();
    LayoutResult r;
    r.position.assign(n, {});
    if (n == 0)
        return r;
    r.outer = emb.face(emb.outer_face()).vertices;
    // a repeated vertex on the outer walk keeps its first polygon corner
    std::vector<char> fixed(n, 0);
    std::vector<VertexId> corners;
    for (VertexId v : r.outer)
        if (!fixed[v]) {
            fixed[v] = 1;
            corners.push_back(v);
        }
    const int k = static_cast<int>(corners.size());
    for (int i = 0; i < k; ++i) {
        const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * i / k;
        r.position[corners[i]] = {std::cos(a), std::sin(a)};
    }
    r.three_connected = is_three_connected(emb);
    if (!r.three_connected)
        r.warnings.push_back("NotThreeConnectedWarning: drawing may not be planar");
    const int max_iter = 1000000;
    for (r.iterations = 0; r.iterations < max_iter; ++r.iterations) {
        double change = 0.0;
        for (VertexId v = 0; v < n; ++v) {
            if (fixed[v] || emb.degree(v) == 0)
                continue;
            Point s;
            for (VertexId w : emb.neighbors(v)) {
                s.x += r.position[w].x;
                s.y += r.position[w].y;
            }
            s.x /= emb.degree(v);
            s.y /= emb.degree(v);
            change = std::max(change, std::hypot(s.x - r.position[v].x, s.y - r.position[v].y));
            r.position[v] = s;
        }
        if (change < tolerance)
            break;
    }
    r.residual = 0.0;
    for (VertexId v = 0; v < n; ++v) {
        if (fixed[v] || emb.degree(v) == 0)
            continue;
        Point s;
        for (VertexId w : emb.neighbors(v)) {
            s.x += r.position[w].x;
            s.y += r.position[w].y;
        }
        r.residual = std::max(r.residual, std::hypot(s.x / emb.degree(v) - r.position[v].x,
                                                     s.y / emb.degree(v) - r.position[v].y));
    }
    return r;
}

bool has_crossings(const PlanarEmbedding& emb, const LayoutResult& layout)
{
    auto orient = [](Point a, Point b, Point c) {
        const double d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        return std::abs(d) < 1e-12 ? 0 : (d > 0 ? 1 : -1);
    };
    auto on_segment = [](Point a, Point b, Point p) {
        return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
               std::min(a.y, b.y) - 1e-12 <= p.y && p.y <= std::max(a.y, b.y) + 1e-12;
    };
    const auto& edges = emb.edges();
    const auto& pos = layout.position;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                continue;
            const int o1 = orient(pos[a], pos[b], pos[c]), o2 = orient(pos[a], pos[b], pos[d]);
            const int o3 = orient(pos[c], pos[d], pos[a]), o4 = orient(pos[c], pos[d], pos[b]);
            if (o1 * o2 < 0 && o3 * o4 < 0)
                return true;
            if ((o1 == 0 && on_segment(pos[a], pos[b], pos[c])) || (o2 == 0 && on_segment(pos[a], pos[b], pos[d])) ||
                (o3 == 0 && on_segment(pos[c], pos[d], pos[a])) || (o4 == 0 && on_segment(pos[c], pos[d], pos[b])))
                return true;
        }
    return false;
}

std::string render_svg(const PlanarEmbedding& emb, const LayoutResult& layout, const ElementColoring* coloring,
                       const SpiralDecomposition* dec)
{
    const double size = 600, margin = 40, scale = (size - 2 * margin) / 2;
    auto sx = [&](double x) { return fmt(size / 2 + scale * x); };
    auto sy = [&](double y) { return fmt(size / 2 - scale * y); };
    const bool color_v = coloring && coloring->vertex.size() == static_cast<std::size_t>(emb.num_vertices());
    const bool color_e = coloring && coloring->edge.size() == static_cast<std::size_t>(emb.num_edges());
    const bool color_f = coloring && coloring->face.size() == static_cast<std::size_t>(emb.num_faces());
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    out += "<g id=\"faces\">\n";
    if (color_f)
        for (FaceId f = 0; f < emb.num_faces(); ++f) {
            if (f == emb.outer_face())
                continue;
            out += "<polygon id=\"f" + std::to_string(f) + "\" points=\"";
            bool first = true;
            for (VertexId v : emb.face(f).vertices) {
                out += (first ? "" : " ") + sx(layout.position[v].x) + "," + sy(layout.position[v].y);
                first = false;
            }
            out += "\" fill=\"" + std::string(palette_color(coloring->face[f])) + "\" fill-opacity=\"0.35\" "
                   "stroke=\"none\"><title>face " + std::to_string(f) + " colour " +
                   std::to_string(coloring->face[f]) + "</title></polygon>\n";
        }
    out += "</g>\n<g id=\"edges\">\n";
    for (EdgeId e = 0; e < emb.num_edges(); ++e) {
        auto [u, v] = emb.edge(e);
        const bool spiral = dec && dec->spiral_edge[e];
        out += "<line id=\"e" + std::to_string(e) + "\" x1=\"" + sx(layout.position[u].x) + "\" y1=\"" +
               sy(layout.position[u].y) + "\" x2=\"" + sx(layout.position[v].x) + "\" y2=\"" +
               sy(layout.position[v].y) + "\" stroke=\"" + (color_e ? palette_color(coloring->edge[e]) : "#000000") +
               "\"";
        if (dec)
            out += spiral ? " stroke-width=\"4\"" : " stroke-width=\"1.5\" stroke-dasharray=\"6,4\"";
        else
            out += " stroke-width=\"2\"";
        out += "/>\n";
    }
    out += "</g>\n<g id=\"vertices\">\n";
    for (VertexId v = 0; v < emb.num_vertices(); ++v) {
        out += "<circle id=\"v" + std::to_string(v) + "\" cx=\"" + sx(layout.position[v].x) + "\" cy=\"" +
               sy(layout.position[v].y) + "\" r=\"9\" fill=\"" +
               (color_v ? palette_color(coloring->vertex[v]) : "#ffffff") + "\" stroke=\"#000000\"/>\n";
        out += "<text x=\"" + sx(layout.position[v].x) + "\" y=\"" + fmt(size / 2 - scale * layout.position[v].y + 4) +
               "\" font-size=\"10\" text-anchor=\"middle\">" + std::to_string(v) + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace spiralcolor
