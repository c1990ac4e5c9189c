#include "spiralcolor/chromatic.hpp"
#include "spiralcolor/error.hpp"

#include "exact.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <set>

namespace spiralcolor {

int ElementColoring::colors_used() const
{
    int top = 0;
    for (const auto* part : {&vertex, &edge, &face})
        for (Color c : *part)
            top = std::max(top, c);
    return top;
}

int ElementColoring::distinct_colors() const
{
    std::set<Color> s;
    for (const auto* part : {&vertex, &edge, &face})
        for (Color c : *part)
            if (c > 0)
                s.insert(c);
    return static_cast<int>(s.size());
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kLocalRadius = 3;
constexpr std::int64_t kLocalNodes = 20000;

double elapsed_ms(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// {a,b}-component of s among coloured vertices.
std::vector<VertexId> component(const PlanarEmbedding& emb, const std::vector<Color>& col, VertexId s, Color a,
                                Color b, std::vector<int>& mark, int stamp)
{
    std::vector<VertexId> out{s};
    mark[s] = stamp;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (VertexId u : emb.neighbors(out[i]))
            if (mark[u] != stamp && (col[u] == a || col[u] == b)) {
                mark[u] = stamp;
                out.push_back(u);
            }
    return out;
}

/// Tries to make colour `a` free at uncoloured v by switching {a,b}-components
/// that hold a-neighbours and no b-neighbour. Returns the number of components
/// switched, or -1 if impossible or more than `max_components` are needed.
int free_color(const PlanarEmbedding& emb, std::vector<Color>& col, VertexId v, Color a, Color b,
               int max_components)
{
    std::vector<int> mark(emb.num_vertices(), 0);
    std::vector<std::vector<VertexId>> comps;
    int stamp = 0;
    for (VertexId w : emb.neighbors(v)) {
        if (col[w] != a || mark[w])
            continue;
        auto comp = component(emb, col, w, a, b, mark, ++stamp);
        for (VertexId x : comp)
            mark[x] = 1;
        for (VertexId x : comp)
            if (col[x] == b && emb.adjacent(x, v))
                return -1;
        comps.push_back(std::move(comp));
        if (static_cast<int>(comps.size()) > max_components)
            return -1;
    }
    if (comps.empty())
        return 0;
    for (const auto& comp : comps)
        for (VertexId x : comp)
            col[x] = col[x] == a ? b : a;
    return static_cast<int>(comps.size());
}

bool color_free(const PlanarEmbedding& emb, const std::vector<Color>& col, VertexId v, Color c)
{
    for (VertexId u : emb.neighbors(v))
        if (col[u] == c)
            return false;
    return true;
}

std::vector<std::vector<int>> adjacency(const PlanarEmbedding& emb)
{
    std::vector<std::vector<int>> adj(emb.num_vertices());
    for (VertexId v = 0; v < emb.num_vertices(); ++v)
        adj[v] = emb.neighbors(v);
    return adj;
}

void fill_decomposition_stats(const PlanarEmbedding& emb, const SpiralDecomposition& dec, RunStats& stats)
{
    stats.chains = dec.num_chains();
    if (is_maximal_planar(emb)) {
        stats.census = triangle_census(emb, dec);
        stats.sailing_boats = static_cast<int>(find_sailing_boats(emb, dec).size());
    }
}

/// Fallback colouring from scratch in smallest-last order, where each vertex
/// meets at most five coloured neighbours on a planar graph. Every Kempe
/// switch made here counts as a fallback switch.
bool kempe_recolor(const PlanarEmbedding& emb, const std::vector<std::vector<int>>& adj, std::vector<Color>& col,
                   int k, RunStats& st)
{
    const int n = emb.num_vertices();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (VertexId v = 0; v < n; ++v)
        deg[v] = emb.degree(v);
    std::vector<VertexId> order;
    for (int step = 0; step < n; ++step) {
        VertexId best = -1;
        for (VertexId v = 0; v < n; ++v)
            if (!gone[v] && (best < 0 || deg[v] < deg[best]))
                best = v;
        gone[best] = 1;
        order.push_back(best);
        for (VertexId u : emb.neighbors(best))
            --deg[u];
    }
    std::fill(col.begin(), col.end(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId v = *it;
        Color pick = 0;
        for (Color c = 1; c <= k && !pick; ++c)
            if (color_free(emb, col, v, c))
                pick = c;
        for (Color a = 1; a <= k && !pick; ++a)
            for (Color b = 1; b <= k && !pick; ++b) {
                if (a == b)
                    continue;
                std::vector<Color> trial = col;
                const int sw = free_color(emb, trial, v, a, b, n);
                if (sw > 0) {
                    col = std::move(trial);
                    pick = a;
                    st.fallback_switches += sw;
                }
            }
        if (!pick) {
            if (!detail::local_recolor(adj, col, v, k, kLocalRadius, kLocalNodes, st.backtrack_nodes))
                return false;
            continue;
        }
        col[v] = pick;
    }
    return true;
}

void check_budget(const RunStats& stats, const RepairBudget& budget)
{
    if (stats.kempe_switches + stats.fallback_switches > budget.max_kempe_switches)
        throw Error(ErrorKind::BudgetExhausted, "Kempe switch budget exhausted");
}

} // namespace

ColoringResult four_color(const PlanarEmbedding& emb, const SpiralDecomposition& dec, const RepairBudget& budget)
{
    using namespace four;
    const auto t0 = Clock::now();
    const int n = emb.num_vertices();
    const int cap = budget.palette_cap > 0 ? std::min(budget.palette_cap, 4) : 4;
    ColoringResult res;
    RunStats& st = res.stats;
    st.target_palette = 4;
    st.hard_cap = cap;
    fill_decomposition_stats(emb, dec, st);

    // segment index of every vertex; chains are read from their inner end
    std::vector<VertexId> order;
    std::vector<int> seg(n, 1);
    std::vector<char> core(n, 0);
    for (int c = dec.num_chains() - 1; c >= 0; --c) {
        std::vector<VertexId> rev(dec.chains[c].vertices.rbegin(), dec.chains[c].vertices.rend());
        const auto segs = segment(rev, emb);
        st.segments_per_chain.insert(st.segments_per_chain.begin(), static_cast<int>(segs.size()));
        for (const auto& s : segs)
            for (VertexId v : s.vertices) {
                seg[v] = s.index;
                core[v] = c == dec.num_chains() - 1 && s.index == 1;
            }
        order.insert(order.end(), rev.begin(), rev.end());
    }

    const auto adj = adjacency(emb);
    std::vector<Color> col(n, 0);
    bool stuck = false;

    // the core is outerplanar: 3-colour it outright, then relabel colours by
    // first appearance so the opening triangle reads G,R,Y
    {
        std::vector<VertexId> members;
        std::vector<int> local(n, -1);
        for (VertexId v : order)
            if (core[v]) {
                local[v] = static_cast<int>(members.size());
                members.push_back(v);
            }
        std::vector<std::vector<int>> sub(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (VertexId u : emb.neighbors(members[i]))
                if (local[u] >= 0)
                    sub[i].push_back(local[u]);
        auto sr = detail::exact_k_coloring(sub, std::min(3, cap), budget.max_backtrack_nodes);
        st.backtrack_nodes += sr.nodes;
        if (sr.found) {
            const Color palette[] = {G, R, Y};
            std::vector<Color> relabel(4, 0);
            int next = 0;
            for (std::size_t i = 0; i < members.size(); ++i) {
                Color& r = relabel[sr.colors[i]];
                if (!r)
                    r = palette[next++];
                col[members[i]] = r;
            }
        }
    }

    for (VertexId v : order) {
        if (col[v])
            continue;
        std::vector<Color> prefs;
        if (core[v])
            prefs = {G, R, Y, B};
        else if (seg[v] % 2 == 1)
            prefs = {R, Y, G, B};
        else
            prefs = {R, Y, B, G};
        Color pick = 0;
        for (Color c : prefs)
            if (c <= cap && color_free(emb, col, v, c)) {
                pick = c;
                break;
            }
        if (!pick) {
            // scheduled repair: one component switch, {safe, non-safe} pairs first
            static const std::pair<Color, Color> scheduled[] = {{G, R}, {G, Y}, {B, R}, {B, Y}, {G, B}, {R, Y}};
            for (auto [x, y] : scheduled) {
                for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
                    if (a > cap || b > cap)
                        continue;
                    std::vector<Color> trial = col;
                    if (free_color(emb, trial, v, a, b, 1) == 1) {
                        col = std::move(trial);
                        pick = a;
                        ++st.kempe_switches;
                        break;
                    }
                }
                if (pick)
                    break;
            }
        }
        if (!pick) {
            for (Color a = 1; a <= cap && !pick; ++a)
                for (Color b = 1; b <= cap && !pick; ++b) {
                    if (a == b)
                        continue;
                    std::vector<Color> trial = col;
                    const int k = free_color(emb, trial, v, a, b, n);
                    if (k > 0) {
                        col = std::move(trial);
                        pick = a;
                        st.fallback_switches += k;
                    }
                }
        }
        check_budget(st, budget);
        if (!pick) {
            ++st.fallback_switches;
            if (detail::local_recolor(adj, col, v, cap, 2, kLocalNodes, st.backtrack_nodes))
                continue;
            stuck = true;
            break;
        }
        col[v] = pick;
    }

    if (stuck && kempe_recolor(emb, adj, col, cap, st))
        stuck = false;
    if (stuck) {
        auto sr = detail::exact_k_coloring(adj, cap, budget.max_backtrack_nodes);
        st.backtrack_nodes += sr.nodes;
        if (!sr.found)
            throw Error(ErrorKind::BudgetExhausted, "no " + std::to_string(cap) + "-colouring found within budget");
        col = std::move(sr.colors);
    }

    res.coloring.vertex = std::move(col);
    res.coloring.palette = cap;
    st.palette_used = res.coloring.colors_used();
    st.distinct_colors = res.coloring.distinct_colors();
    st.fourth_color_uses = std::count(res.coloring.vertex.begin(), res.coloring.vertex.end(), B);
    st.wall_ms = elapsed_ms(t0);
    return res;
}

VertexColoring kempe_switch_vertex(const VertexColoring& coloring, const PlanarEmbedding& embedding, VertexId v,
                                   std::pair<Color, Color> pair)
{
    const auto [a, b] = pair;
    if (v < 0 || v >= static_cast<int>(coloring.vertex.size()))
        throw Error(ErrorKind::InvalidArgument, "vertex out of range");
    if (coloring.vertex[v] != a && coloring.vertex[v] != b)
        throw Error(ErrorKind::ColorNotInPair, "vertex " + std::to_string(v) + " is not coloured from the pair");
    VertexColoring out = coloring;
    std::vector<int> mark(embedding.num_vertices(), 0);
    for (VertexId x : component(embedding, coloring.vertex, v, a, b, mark, 1))
        out.vertex[x] = coloring.vertex[x] == a ? b : a;
    return out;
}

namespace {

/// Shared three-colour engine. Degree <= 2 vertices are peeled repeatedly and
/// re-inserted last; everything else follows the spiral colouring order.
ColoringResult three_color_engine(const PlanarEmbedding& emb, const SpiralDecomposition& dec,
                                  const RepairBudget& budget)
{
    using namespace three;
    const auto t0 = Clock::now();
    const int n = emb.num_vertices();
    ColoringResult res;
    RunStats& st = res.stats;
    st.target_palette = 3;
    st.hard_cap = 3;
    st.chains = dec.num_chains();

    std::vector<int> deg(n);
    std::vector<char> peeled(n, 0);
    std::vector<VertexId> stack;
    std::queue<VertexId> q;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = emb.degree(v);
        if (deg[v] <= 2) {
            peeled[v] = 1;
            q.push(v);
        }
    }
    while (!q.empty()) {
        const VertexId v = q.front();
        q.pop();
        stack.push_back(v);
        for (VertexId u : emb.neighbors(v))
            if (!peeled[u] && --deg[u] <= 2) {
                peeled[u] = 1;
                q.push(u);
            }
    }
    std::vector<VertexId> order;
    for (VertexId v : dec.coloring_order())
        if (!peeled[v])
            order.push_back(v);
    order.insert(order.end(), stack.rbegin(), stack.rend());

    const auto adj = adjacency(emb);
    std::vector<Color> col(n, 0);
    bool stuck = false;
    for (VertexId v : order) {
        Color pick = 0;
        for (Color c : {G, Y})
            if (color_free(emb, col, v, c)) {
                pick = c;
                break;
            }
        // avoid R: (G,Y), then (G,R) / (Y,R) switches
        static const std::pair<Color, Color> repairs[] = {{G, Y}, {Y, G}, {G, R}, {Y, R}};
        for (auto [a, b] : repairs) {
            if (pick)
                break;
            std::vector<Color> trial = col;
            const int k = free_color(emb, trial, v, a, b, n);
            if (k > 0) {
                col = std::move(trial);
                pick = a;
                st.kempe_switches += k;
            }
        }
        if (!pick && color_free(emb, col, v, R))
            pick = R;
        for (auto [a, b] : {std::pair{R, G}, std::pair{R, Y}}) {
            if (pick)
                break;
            std::vector<Color> trial = col;
            const int k = free_color(emb, trial, v, a, b, n);
            if (k > 0) {
                col = std::move(trial);
                pick = a;
                st.fallback_switches += k;
            }
        }
        check_budget(st, budget);
        if (!pick) {
            ++st.fallback_switches;
            if (detail::local_recolor(adj, col, v, 3, 2, kLocalNodes, st.backtrack_nodes))
                continue;
            stuck = true;
            break;
        }
        col[v] = pick;
    }
    if (stuck && kempe_recolor(emb, adj, col, 3, st))
        stuck = false;
    if (stuck) {
        auto sr = detail::exact_k_coloring(adj, 3, budget.max_backtrack_nodes);
        st.backtrack_nodes += sr.nodes;
        if (!sr.found)
            throw Error(ErrorKind::BudgetExhausted, "no 3-colouring found within budget");
        col = std::move(sr.colors);
    }
    res.coloring.vertex = std::move(col);
    res.coloring.palette = 3;
    st.palette_used = res.coloring.colors_used();
    st.distinct_colors = res.coloring.distinct_colors();
    st.red_count = std::count(res.coloring.vertex.begin(), res.coloring.vertex.end(), R);
    st.wall_ms = elapsed_ms(t0);
    return res;
}

} // namespace

ColoringResult three_color_triangle_free(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                                         const RepairBudget& budget)
{
    if (!is_triangle_free(embedding))
        throw Error(ErrorKind::PreconditionViolated, "graph contains a triangle");
    return three_color_engine(embedding, decomposition, budget);
}

ColoringResult three_color_steinberg(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                                     const RepairBudget& budget)
{
    if (has_cycles_of_length(embedding, {4, 5}))
        throw Error(ErrorKind::PreconditionViolated, "graph contains a 4- or 5-cycle");
    return three_color_engine(embedding, decomposition, budget);
}

ColoringResult three_color_forest(const PlanarEmbedding& emb, const SpiralDecomposition& dec)
{
    using namespace three;
    const auto t0 = Clock::now();
    const int n = emb.num_vertices();
    const auto structure = nonspiral_structure(emb, dec);
    if (!structure.cycles.empty() || !structure.complex.empty())
        throw Error(ErrorKind::StructureMismatch, "non-spiral edges contain a cycle");

    ColoringResult res;
    RunStats& st = res.stats;
    st.target_palette = 3;
    st.hard_cap = 3;
    st.chains = dec.num_chains();

    std::vector<Color> col(n, 0);
    for (VertexId s = 0; s < n; ++s) {
        if (col[s])
            continue;
        col[s] = G;
        std::vector<VertexId> todo{s};
        for (std::size_t i = 0; i < todo.size(); ++i) {
            const VertexId v = todo[i];
            for (std::size_t k = 0; k < emb.neighbors(v).size(); ++k) {
                const VertexId u = emb.neighbors(v)[k];
                if (dec.spiral_edge[emb.incident_edges(v)[k]] || col[u])
                    continue;
                col[u] = col[v] == G ? Y : G;
                todo.push_back(u);
            }
        }
    }

    std::vector<EdgeId> spiral;
    for (EdgeId e = 0; e < emb.num_edges(); ++e)
        if (dec.spiral_edge[e])
            spiral.push_back(e);
    auto later = [&](EdgeId e) {
        auto [u, v] = emb.edge(e);
        return std::max(dec.rank[u], dec.rank[v]);
    };
    std::stable_sort(spiral.begin(), spiral.end(), [&](EdgeId a, EdgeId b) { return later(a) < later(b); });
    for (EdgeId e : spiral) {
        auto [u, v] = emb.edge(e);
        if (col[u] != col[v])
            continue;
        if (dec.rank[u] > dec.rank[v])
            std::swap(u, v);
        // v is the later endpoint
        if (color_free(emb, col, v, R))
            col[v] = R;
        else if (color_free(emb, col, u, R))
            col[u] = R;
        ++st.kempe_switches;
    }
    for (EdgeId e = 0; e < emb.num_edges(); ++e) {
        auto [u, v] = emb.edge(e);
        if (col[u] == col[v])
            throw Error(ErrorKind::BudgetExhausted, "tree pathway left a monochromatic spiral edge");
    }
    res.coloring.vertex = std::move(col);
    res.coloring.palette = 3;
    st.palette_used = res.coloring.colors_used();
    st.distinct_colors = res.coloring.distinct_colors();
    st.red_count = std::count(res.coloring.vertex.begin(), res.coloring.vertex.end(), R);
    st.wall_ms = elapsed_ms(t0);
    return res;
}

CycleProbe cycle_bicolor_probe(int L)
{
    if (L < 3)
        throw Error(ErrorKind::InvalidArgument, "cycle length must be at least 3");
    // step t colours v_t clockwise and v_{L-t} counterclockwise
    std::vector<Color> c(L, 0);
    c[0] = 1;
    CycleProbe out;
    for (int t = 1;; ++t) {
        if (2 * t == L) {
            Color m = 1;
            while (m == c[t - 1] || m == c[t + 1])
                ++m;
            out.meets_at = CycleProbe::Meet::SameVertex;
            out.meeting_colors = {m, m};
            out.conflict = m > 3;
            return out;
        }
        c[t] = t % 2 ? 3 : 1;
        c[L - t] = t % 2 ? 2 : 1;
        if (L - t == t + 1) {
            out.meets_at = CycleProbe::Meet::AdjacentPair;
            out.meeting_colors = {c[t], c[t + 1]};
            out.conflict = c[t] == c[t + 1];
            return out;
        }
    }
}

} // namespace spiralcolor
