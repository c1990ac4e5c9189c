#include "spiralcolor/composite.hpp"
#include "spiralcolor/chromatic.hpp"
#include "spiralcolor/edge.hpp"
#include "spiralcolor/error.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>

namespace spiralcolor {

namespace {

using Clock = std::chrono::steady_clock;

/// Incidence checks shared by the total and entire colourings. Faces are
/// ignored when `fc` is empty. Colour 0 never clashes.
struct Elements {
    const PlanarEmbedding& emb;
    std::vector<Color>& vc;
    std::vector<Color>& ec;
    std::vector<Color>& fc;
    std::vector<std::vector<FaceId>> face_adj;
    std::vector<std::vector<FaceId>> vertex_faces;

    Elements(const PlanarEmbedding& e, std::vector<Color>& v, std::vector<Color>& ed, std::vector<Color>& f)
        : emb(e), vc(v), ec(ed), fc(f)
    {
        if (fc.empty())
            return;
        face_adj.resize(emb.num_faces());
        vertex_faces.resize(emb.num_vertices());
        for (EdgeId x = 0; x < emb.num_edges(); ++x) {
            auto [a, b] = emb.edge_faces(x);
            if (a != b) {
                face_adj[a].push_back(b);
                face_adj[b].push_back(a);
            }
        }
        for (auto& l : face_adj) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
        for (FaceId f = 0; f < emb.num_faces(); ++f)
            for (VertexId v : emb.face(f).vertices)
                vertex_faces[v].push_back(f);
        for (auto& l : vertex_faces) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }

    bool faces() const { return !fc.empty(); }

    bool vertex_ok(VertexId v, Color c) const
    {
        if (c == 0)
            return true;
        for (std::size_t k = 0; k < emb.neighbors(v).size(); ++k)
            if (vc[emb.neighbors(v)[k]] == c || ec[emb.incident_edges(v)[k]] == c)
                return false;
        if (faces())
            for (FaceId f : vertex_faces[v])
                if (fc[f] == c)
                    return false;
        return true;
    }

    bool edge_ok(EdgeId e, Color c) const
    {
        if (c == 0)
            return true;
        auto [x, y] = emb.edge(e);
        if (vc[x] == c || vc[y] == c)
            return false;
        for (VertexId w : {x, y})
            for (EdgeId f : emb.incident_edges(w))
                if (f != e && ec[f] == c)
                    return false;
        if (faces()) {
            auto [a, b] = emb.edge_faces(e);
            if (fc[a] == c || fc[b] == c)
                return false;
        }
        return true;
    }

    bool face_ok(FaceId f, Color c) const
    {
        if (c == 0)
            return true;
        for (FaceId g : face_adj[f])
            if (fc[g] == c)
                return false;
        for (VertexId v : emb.face(f).vertices)
            if (vc[v] == c)
                return false;
        for (DartId d : emb.face(f).darts)
            if (ec[PlanarEmbedding::dart_edge(d)] == c)
                return false;
        return true;
    }

    /// Every coloured element agrees with every coloured neighbour.
    bool proper() const
    {
        for (VertexId v = 0; v < emb.num_vertices(); ++v)
            if (!vertex_ok_self(v))
                return false;
        for (EdgeId e = 0; e < emb.num_edges(); ++e)
            if (!edge_ok_self(e))
                return false;
        return true;
    }

    bool vertex_ok_self(VertexId v) const
    {
        const Color c = vc[v];
        vc[v] = 0;
        const bool ok = vertex_ok(v, c);
        vc[v] = c;
        return ok;
    }

    bool edge_ok_self(EdgeId e) const
    {
        const Color c = ec[e];
        ec[e] = 0;
        const bool ok = edge_ok(e, c);
        ec[e] = c;
        return ok;
    }

    Color lowest_edge(EdgeId e, int cap) const
    {
        for (Color c = 1; c <= cap; ++c)
            if (edge_ok(e, c))
                return c;
        return 0;
    }
};

/// Walks p0 -> first -> ... alternating the colour of `first` with `other`.
/// Sets `closed` when the walk returns to an edge already used.
void alternating_walk(const PlanarEmbedding& emb, const std::vector<Color>& ec, VertexId p0, EdgeId first,
                      Color other, std::vector<VertexId>& verts, std::vector<EdgeId>& edges, bool& closed)
{
    const Color ci = ec[first];
    verts = {p0};
    edges.clear();
    closed = false;
    std::vector<char> used(emb.num_edges(), 0);
    EdgeId cur = first;
    VertexId at = p0;
    while (true) {
        used[cur] = 1;
        edges.push_back(cur);
        at = emb.other_end(cur, at);
        verts.push_back(at);
        const Color want = ec[cur] == ci ? other : ci;
        EdgeId nxt = -1;
        for (EdgeId f : emb.incident_edges(at))
            if (f != cur && ec[f] == want) {
                nxt = f;
                break;
            }
        if (nxt < 0)
            return;
        if (used[nxt]) {
            closed = true;
            return;
        }
        cur = nxt;
    }
}

} // namespace

void validate_m_kempe_chain(const TotalColoring& total, const PlanarEmbedding& emb, const MKempeChain& ch)
{
    auto fail = [](const std::string& why) { throw Error(ErrorKind::NotAnMChain, why); };
    if (ch.edges.empty() || ch.vertices.size() != ch.edges.size() + 1)
        fail("chain needs at least one edge and one more vertex than edges");
    if (ch.ci == ch.cj || ch.ci <= 0 || ch.cj <= 0)
        fail("chain colours must be two distinct colours");
    const auto& vc = total.vertex;
    const auto& ec = total.edge;
    for (std::size_t i = 0; i < ch.edges.size(); ++i) {
        const EdgeId e = ch.edges[i];
        if (e < 0 || e >= emb.num_edges() || emb.edge_id(ch.vertices[i], ch.vertices[i + 1]) != e)
            fail("chain edges do not follow the vertex sequence");
        // counted from u backwards: last edge ci, then cj, ci, ...
        const std::size_t from_end = ch.edges.size() - 1 - i;
        if (ec[e] != (from_end % 2 == 0 ? ch.ci : ch.cj))
            fail("chain edges do not alternate ending in ci");
    }
    const VertexId u = ch.vertices.back();
    if (vc[u] != ch.cj)
        fail("terminal vertex is not coloured cj");
    for (VertexId w : emb.neighbors(u))
        if (vc[w] == ch.ci)
            fail("terminal vertex has a neighbour coloured ci");
    for (EdgeId f : emb.incident_edges(u))
        if (f != ch.edges.back() && ec[f] == ch.ci)
            fail("terminal vertex has a second ci edge");
    // p0: the first edge flips to the other colour, which must be free there
    const VertexId p0 = ch.vertices.front();
    const Color now = ec[ch.edges.front()];
    const Color after = now == ch.ci ? ch.cj : ch.ci;
    if (vc[p0] == after)
        fail("start vertex carries the colour the first edge would take");
    for (EdgeId f : emb.incident_edges(p0))
        if (f != ch.edges.front() && ec[f] == after)
            fail("start vertex already has an edge of the new colour");
    std::vector<VertexId> sorted = ch.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("chain is not a simple path");
}

std::optional<MKempeChain> find_m_kempe_chain(const TotalColoring& total, const PlanarEmbedding& emb, VertexId p0,
                                              EdgeId first, Color other)
{
    const Color c0 = total.edge[first];
    if (c0 <= 0 || other <= 0 || other == c0)
        return std::nullopt;
    MKempeChain ch;
    bool closed = false;
    alternating_walk(emb, total.edge, p0, first, other, ch.vertices, ch.edges, closed);
    if (closed)
        return std::nullopt;
    const Color last = total.edge[ch.edges.back()];
    ch.ci = last;
    ch.cj = last == c0 ? other : c0;
    try {
        validate_m_kempe_chain(total, emb, ch);
    } catch (const Error&) {
        return std::nullopt;
    }
    return ch;
}

TotalColoring m_kempe_switch(const TotalColoring& total, const PlanarEmbedding& emb, const MKempeChain& chain)
{
    validate_m_kempe_chain(total, emb, chain);
    TotalColoring out = total;
    for (EdgeId e : chain.edges)
        out.edge[e] = total.edge[e] == chain.ci ? chain.cj : chain.ci;
    out.vertex[chain.vertices.back()] = chain.ci;
    return out;
}

namespace {

/// Tries to make some colour <= cap available for the uncoloured edge e.
/// Moves: recolour an endpoint, an m-Kempe switch or a plain alternating-path
/// switch starting at an endpoint. Each candidate is applied to a copy and
/// kept only if the whole colouring stays proper.
bool repair_edge(const PlanarEmbedding& emb, TotalColoring& tc, EdgeId e, int cap, RunStats& st)
{
    std::vector<Color> nofaces;
    auto colorable = [&](TotalColoring& t) {
        Elements el(emb, t.vertex, t.edge, nofaces);
        if (!el.proper())
            return false;
        if (Color c = el.lowest_edge(e, cap)) {
            t.edge[e] = c;
            return true;
        }
        return false;
    };
    auto [x, y] = emb.edge(e);
    for (VertexId w : {x, y}) {
        Elements el(emb, tc.vertex, tc.edge, nofaces);
        for (Color c = 1; c <= cap; ++c) {
            if (c == tc.vertex[w] || !el.vertex_ok(w, c))
                continue;
            TotalColoring t = tc;
            t.vertex[w] = c;
            if (colorable(t)) {
                tc = std::move(t);
                ++st.kempe_switches;
                return true;
            }
        }
    }
    for (VertexId w : {x, y})
        for (EdgeId f : emb.incident_edges(w)) {
            if (f == e || tc.edge[f] == 0)
                continue;
            for (Color other = 1; other <= cap; ++other) {
                if (other == tc.edge[f])
                    continue;
                if (auto ch = find_m_kempe_chain(tc, emb, w, f, other)) {
                    TotalColoring t = m_kempe_switch(tc, emb, *ch);
                    if (colorable(t)) {
                        tc = std::move(t);
                        ++st.m_kempe_switches;
                        return true;
                    }
                }
                std::vector<VertexId> verts;
                std::vector<EdgeId> edges;
                bool closed = false;
                alternating_walk(emb, tc.edge, w, f, other, verts, edges, closed);
                TotalColoring t = tc;
                const Color a = tc.edge[f];
                for (EdgeId g : edges)
                    t.edge[g] = tc.edge[g] == a ? other : a;
                if (colorable(t)) {
                    tc = std::move(t);
                    ++st.kempe_switches;
                    return true;
                }
            }
        }
    return false;
}

void check_delta(const PlanarEmbedding& emb, int min_delta)
{
    if (emb.max_degree() < min_delta)
        throw Error(ErrorKind::PreconditionViolated,
                    "maximum degree " + std::to_string(emb.max_degree()) + " is below " + std::to_string(min_delta));
}

} // namespace

ColoringResult total_color(const PlanarEmbedding& emb, const SpiralDecomposition& dec, const RepairBudget& budget)
{
    const auto t0 = Clock::now();
    check_delta(emb, 2);
    const int delta = emb.max_degree();
    const int target = delta + 2;
    const int cap = budget.palette_cap > 0 ? budget.palette_cap : delta + 3;

    ColoringResult res;
    RunStats& st = res.stats;
    auto vertex = four_color(emb, dec, budget);
    st = vertex.stats;
    st.target_palette = target;
    st.hard_cap = cap;

    TotalColoring& tc = res.coloring;
    tc.vertex = vertex.coloring.vertex;
    tc.edge.assign(emb.num_edges(), 0);
    std::vector<Color> nofaces;
    for (EdgeId e : spiral_edge_order(emb, dec)) {
        Elements el(emb, tc.vertex, tc.edge, nofaces);
        if (Color c = el.lowest_edge(e, target)) {
            tc.edge[e] = c;
            continue;
        }
        if (repair_edge(emb, tc, e, target, st))
            continue;
        Elements el2(emb, tc.vertex, tc.edge, nofaces);
        if (Color c = el2.lowest_edge(e, cap)) {
            tc.edge[e] = c;
            continue;
        }
        throw Error(ErrorKind::BudgetExhausted, "total colouring needs more than " + std::to_string(cap) + " colours");
    }
    if (st.kempe_switches + st.m_kempe_switches > budget.max_kempe_switches)
        throw Error(ErrorKind::BudgetExhausted, "Kempe switch budget exhausted");

    // push overflow edges back under the target
    for (EdgeId e = 0; e < emb.num_edges(); ++e) {
        if (tc.edge[e] <= target)
            continue;
        const Color old = tc.edge[e];
        tc.edge[e] = 0;
        Elements el(emb, tc.vertex, tc.edge, nofaces);
        if (Color c = el.lowest_edge(e, target))
            tc.edge[e] = c;
        else if (!repair_edge(emb, tc, e, target, st))
            tc.edge[e] = old;
    }

    tc.palette = cap;
    st.overflow_elements = 0;
    for (Color c : tc.edge)
        st.overflow_elements += c > target;
    for (Color c : tc.vertex)
        st.overflow_elements += c > target;
    st.palette_used = tc.colors_used();
    st.distinct_colors = tc.distinct_colors();
    st.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

ColoringResult entire_color(const PlanarEmbedding& emb, const SpiralDecomposition& dec, const RepairBudget& budget)
{
    const auto t0 = Clock::now();
    check_delta(emb, 3);
    const int delta = emb.max_degree();
    const int target = delta + 4;
    const int cap = budget.palette_cap > 0 ? budget.palette_cap : delta + 5;

    RepairBudget inner = budget;
    inner.palette_cap = 0;
    ColoringResult res = total_color(emb, dec, inner);
    RunStats& st = res.stats;
    st.target_palette = target;
    st.hard_cap = cap;
    EntireColoring& ec = res.coloring;

    // four-colour the faces through the dual
    const PlanarEmbedding dual = simple_dual_embedding(emb);
    const auto dual_dec = decompose(dual);
    const auto faces = four_color(dual, dual_dec, budget);
    st.kempe_switches += faces.stats.kempe_switches;
    st.fallback_switches += faces.stats.fallback_switches;
    st.backtrack_nodes += faces.stats.backtrack_nodes;

    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> best_perm = perm;
    long best = -1;
    std::vector<Color> fc(emb.num_faces());
    do {
        for (FaceId f = 0; f < emb.num_faces(); ++f)
            fc[f] = delta + 1 + perm[faces.coloring.vertex[f] - 1];
        Elements el(emb, ec.vertex, ec.edge, fc);
        long clashes = 0;
        for (FaceId f = 0; f < emb.num_faces(); ++f) {
            const Color c = fc[f];
            fc[f] = 0;
            clashes += !el.face_ok(f, c);
            fc[f] = c;
        }
        if (best < 0 || clashes < best) {
            best = clashes;
            best_perm = perm;
        }
    } while (best != 0 && std::next_permutation(perm.begin(), perm.end()));
    for (FaceId f = 0; f < emb.num_faces(); ++f)
        fc[f] = delta + 1 + best_perm[faces.coloring.vertex[f] - 1];
    ec.face = fc;

    if (best > 0) {
        ++st.reconciliation_activations;
        Elements el(emb, ec.vertex, ec.edge, ec.face);
        auto clash_at = [&](FaceId f) {
            const Color c = ec.face[f];
            ec.face[f] = 0;
            const bool ok = el.face_ok(f, c);
            ec.face[f] = c;
            return !ok;
        };
        // recolour edges first (they have the widest palette), then vertices,
        // then the face itself within the four face colours, then overflow
        for (FaceId f = 0; f < emb.num_faces(); ++f) {
            if (!clash_at(f))
                continue;
            const Color c = ec.face[f];
            for (DartId d : emb.face(f).darts) {
                const EdgeId e = PlanarEmbedding::dart_edge(d);
                if (ec.edge[e] != c)
                    continue;
                ec.edge[e] = 0;
                Color pick = 0;
                for (Color x = 1; x <= target && !pick; ++x)
                    if (el.edge_ok(e, x))
                        pick = x;
                ec.edge[e] = pick ? pick : c;
            }
            for (VertexId v : emb.face(f).vertices) {
                if (ec.vertex[v] != c)
                    continue;
                ec.vertex[v] = 0;
                Color pick = 0;
                for (Color x = 1; x <= target && !pick; ++x)
                    if (el.vertex_ok(v, x))
                        pick = x;
                ec.vertex[v] = pick ? pick : c;
            }
            if (!clash_at(f))
                continue;
            ec.face[f] = 0;
            Color pick = 0;
            for (Color x = delta + 1; x <= delta + 4 && !pick; ++x)
                if (x != c && el.face_ok(f, x))
                    pick = x;
            ec.face[f] = pick ? pick : c;
            if (!clash_at(f))
                continue;
            // overflow: the clashing edges and vertices move to a colour above the target
            for (DartId d : emb.face(f).darts) {
                const EdgeId e = PlanarEmbedding::dart_edge(d);
                if (ec.edge[e] != c)
                    continue;
                ec.edge[e] = 0;
                Color x = target + 1;
                while (x <= cap && !el.edge_ok(e, x))
                    ++x;
                if (x > cap)
                    throw Error(ErrorKind::BudgetExhausted, "entire colouring needs more than cap colours");
                ec.edge[e] = x;
            }
            for (VertexId v : emb.face(f).vertices) {
                if (ec.vertex[v] != c)
                    continue;
                ec.vertex[v] = 0;
                Color x = target + 1;
                while (x <= cap && !el.vertex_ok(v, x))
                    ++x;
                if (x > cap)
                    throw Error(ErrorKind::BudgetExhausted, "entire colouring needs more than cap colours");
                ec.vertex[v] = x;
            }
        }
    }

    ec.palette = cap;
    st.overflow_elements = 0;
    for (const auto* part : {&ec.vertex, &ec.edge, &ec.face})
        for (Color c : *part)
            st.overflow_elements += c > target;
    st.palette_used = ec.colors_used();
    st.distinct_colors = ec.distinct_colors();
    st.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

} // namespace spiralcolor
