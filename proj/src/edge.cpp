#include "spiralcolor/edge.hpp"
#include "spiralcolor/error.hpp"

#include <algorithm>
#include <chrono>

namespace spiralcolor {

namespace {

/// Edge colours plus an index of which edge holds colour c at vertex v.
class EdgeState {
public:
    EdgeState(const PlanarEmbedding& emb, std::vector<Color> col, int width)
        : emb_(emb), col_(std::move(col)), width_(width),
          at_(emb.num_vertices(), std::vector<EdgeId>(width + 1, -1))
    {
        for (EdgeId e = 0; e < emb.num_edges(); ++e)
            if (col_[e] > 0) {
                if (col_[e] > width_)
                    throw Error(ErrorKind::InvalidArgument, "edge colour above the palette");
                auto [u, v] = emb.edge(e);
                at_[u][col_[e]] = e;
                at_[v][col_[e]] = e;
            }
    }

    const std::vector<Color>& colors() const { return col_; }
    Color color(EdgeId e) const { return col_[e]; }
    int width() const { return width_; }
    bool free(VertexId v, Color c) const { return c < 1 || c > width_ || at_[v][c] < 0; }
    EdgeId at(VertexId v, Color c) const { return c >= 1 && c <= width_ ? at_[v][c] : -1; }

    void set(EdgeId e, Color c)
    {
        auto [u, v] = emb_.edge(e);
        if (col_[e] > 0) {
            at_[u][col_[e]] = -1;
            at_[v][col_[e]] = -1;
        }
        col_[e] = c;
        if (c > 0) {
            at_[u][c] = e;
            at_[v][c] = e;
        }
    }

    /// Lowest colour <= cap free at both ends of e.
    Color lowest_common(EdgeId e, int cap) const
    {
        auto [u, v] = emb_.edge(e);
        for (Color c = 1; c <= std::min(cap, width_); ++c)
            if (at_[u][c] < 0 && at_[v][c] < 0)
                return c;
        return 0;
    }

    Color lowest_free(VertexId v, int cap) const
    {
        for (Color c = 1; c <= std::min(cap, width_); ++c)
            if (at_[v][c] < 0)
                return c;
        return 0;
    }

    /// Alternating {a,b} path (or cycle) through e, in walk order.
    EdgeKempePath path(EdgeId e, Color a, Color b) const
    {
        EdgeKempePath p;
        p.colors = {a, b};
        std::vector<EdgeId> sides[2];
        for (int side = 0; side < 2; ++side) {
            VertexId x = side == 0 ? emb_.edge(e).first : emb_.edge(e).second;
            EdgeId cur = e;
            while (true) {
                const Color want = col_[cur] == a ? b : a;
                const EdgeId nxt = at(x, want);
                if (nxt < 0)
                    break;
                if (nxt == e) {
                    p.cycle = true;
                    break;
                }
                sides[side].push_back(nxt);
                x = emb_.other_end(nxt, x);
                cur = nxt;
            }
            if (p.cycle)
                break;
        }
        p.edges.assign(sides[0].rbegin(), sides[0].rend());
        p.edges.push_back(e);
        p.edges.insert(p.edges.end(), sides[1].begin(), sides[1].end());
        return p;
    }

    void swap_path(const EdgeKempePath& p)
    {
        const auto [a, b] = p.colors;
        std::vector<Color> next;
        for (EdgeId f : p.edges)
            next.push_back(col_[f] == a ? b : a);
        for (EdgeId f : p.edges)
            set(f, 0);
        for (std::size_t i = 0; i < p.edges.size(); ++i)
            set(p.edges[i], next[i]);
    }

    bool path_touches(const EdgeKempePath& p, VertexId v) const
    {
        for (EdgeId f : p.edges) {
            auto [x, y] = emb_.edge(f);
            if (x == v || y == v)
                return true;
        }
        return false;
    }

private:
    const PlanarEmbedding& emb_;
    std::vector<Color> col_;
    int width_;
    std::vector<std::vector<EdgeId>> at_;
};

/// Incident edges of v, anticlockwise, starting at the spiral edge to the
/// construction predecessor (successor, then rotation start as fallbacks).
std::vector<EdgeId> fan_order(const PlanarEmbedding& emb, const SpiralDecomposition& dec, VertexId v)
{
    const auto& nb = emb.neighbors(v);
    const int d = static_cast<int>(nb.size());
    if (d == 0)
        return {};
    VertexId anchor = dec.predecessor(v);
    if (anchor < 0)
        anchor = dec.successor(v);
    int j = 0;
    if (anchor >= 0)
        j = static_cast<int>(std::find(nb.begin(), nb.end(), anchor) - nb.begin());
    std::vector<EdgeId> out;
    for (int s = 0; s < d; ++s)
        out.push_back(emb.incident_edges(v)[((j - s) % d + d) % d]);
    return out;
}

/// Cyclic shift of the colours on v's coloured edges plus e, using a colour
/// free at v for the slot of e.
bool cyclic_shift(EdgeState& s, const PlanarEmbedding& emb, const std::vector<EdgeId>& fan, VertexId v, EdgeId e,
                  int cap)
{
    std::vector<EdgeId> seq;
    for (EdgeId f : fan)
        if (f != e && s.color(f) > 0)
            seq.push_back(f);
    seq.push_back(e);
    const int k = static_cast<int>(seq.size());
    if (k < 2)
        return false;
    for (Color x = 1; x <= cap; ++x) {
        if (!s.free(v, x))
            continue;
        std::vector<Color> base;
        for (int i = 0; i + 1 < k; ++i)
            base.push_back(s.color(seq[i]));
        base.push_back(x);
        for (int shift = 1; shift < k; ++shift) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                const Color c = base[(i + shift) % k];
                const VertexId w = emb.other_end(seq[i], v);
                const EdgeId holder = s.at(w, c);
                ok = holder < 0 || holder == seq[i];
            }
            if (!ok)
                continue;
            for (EdgeId f : seq)
                s.set(f, 0);
            for (int i = 0; i < k; ++i)
                s.set(seq[i], base[(i + shift) % k]);
            return true;
        }
    }
    return false;
}

/// Frees a common colour other than avoid for e = (v,u) with one
/// alternating-path switch.
bool kempe_free(EdgeState& s, const PlanarEmbedding& emb, EdgeId e, int cap, Color avoid = 0)
{
    auto [x, y] = emb.edge(e);
    for (int side = 0; side < 2; ++side) {
        const VertexId v = side == 0 ? x : y;
        const VertexId u = side == 0 ? y : x;
        for (Color a = 1; a <= cap; ++a) {
            if (a == avoid || !s.free(v, a) || s.free(u, a))
                continue;
            for (Color b = 1; b <= cap; ++b) {
                if (b == a || !s.free(u, b))
                    continue;
                const auto p = s.path(s.at(u, a), a, b);
                if (s.path_touches(p, v))
                    continue;
                s.swap_path(p);
                s.set(e, a);
                return true;
            }
        }
    }
    return false;
}

/// Recolours one edge adjacent to e with another colour, then colours e
/// directly or with one switch. State is unchanged on failure.
bool two_step_free(EdgeState& s, const PlanarEmbedding& emb, EdgeId e, int cap)
{
    const std::vector<Color> snap = s.colors();
    auto restore = [&] {
        for (EdgeId h = 0; h < emb.num_edges(); ++h)
            s.set(h, 0);
        for (EdgeId h = 0; h < emb.num_edges(); ++h)
            s.set(h, snap[h]);
    };
    auto [x, y] = emb.edge(e);
    for (VertexId end : {x, y})
        for (EdgeId f : emb.incident_edges(end)) {
            const Color old = s.color(f);
            if (f == e || old == 0)
                continue;
            s.set(f, 0);
            auto [p, q] = emb.edge(f);
            bool moved = false;
            for (Color c = 1; c <= cap && !moved; ++c)
                if (c != old && s.free(p, c) && s.free(q, c)) {
                    s.set(f, c);
                    moved = true;
                }
            if (!moved)
                moved = kempe_free(s, emb, f, cap, old);
            if (moved) {
                if (Color c = s.lowest_common(e, cap)) {
                    s.set(e, c);
                    return true;
                }
                if (kempe_free(s, emb, e, cap))
                    return true;
            }
            restore();
        }
    return false;
}

/// Misra-Gries fan step colouring e at u within 1..k.
bool vizing_fan(EdgeState& s, const PlanarEmbedding& emb, EdgeId e, VertexId u, int k)
{
    std::vector<VertexId> fan{emb.other_end(e, u)};
    std::vector<char> in_fan(emb.num_vertices(), 0);
    in_fan[fan[0]] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (VertexId w : emb.neighbors(u)) {
            if (in_fan[w])
                continue;
            const Color c = s.color(emb.edge_id(u, w));
            if (c > 0 && c <= k && s.free(fan.back(), c)) {
                fan.push_back(w);
                in_fan[w] = 1;
                grew = true;
                break;
            }
        }
    }
    const Color c = s.lowest_free(u, k);
    const Color d = s.lowest_free(fan.back(), k);
    if (!c || !d)
        return false;
    if (c != d && !s.free(u, d))
        s.swap_path(s.path(s.at(u, d), c, d));
    // first fan prefix that is still a fan and ends at a vertex missing d
    int w = -1;
    for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
        if (i > 0) {
            const Color ci = s.color(emb.edge_id(u, fan[i]));
            if (ci == 0 || !s.free(fan[i - 1], ci))
                break;
        }
        if (s.free(fan[i], d)) {
            w = i;
            break;
        }
    }
    if (w < 0 || !s.free(u, d))
        return false;
    std::vector<Color> shifted;
    for (int j = 0; j < w; ++j)
        shifted.push_back(s.color(emb.edge_id(u, fan[j + 1])));
    for (int j = 0; j <= w; ++j)
        s.set(emb.edge_id(u, fan[j]), 0);
    for (int j = 0; j < w; ++j)
        s.set(emb.edge_id(u, fan[j]), shifted[j]);
    s.set(emb.edge_id(u, fan[w]), d);
    return true;
}

ImpasseMechanism resolve_at(EdgeState& s, const PlanarEmbedding& emb, const SpiralDecomposition& dec, VertexId v,
                            int cap, bool allow_extra, int& switches)
{
    ImpasseMechanism used = ImpasseMechanism::None;
    const auto fan = fan_order(emb, dec, v);
    for (EdgeId e : fan) {
        if (s.color(e) > 0)
            continue;
        if (Color c = s.lowest_common(e, cap)) {
            s.set(e, c);
            continue;
        }
        if (cyclic_shift(s, emb, fan, v, e, cap)) {
            used = std::max(used, ImpasseMechanism::CyclicShift);
            continue;
        }
        if (kempe_free(s, emb, e, cap)) {
            ++switches;
            used = std::max(used, ImpasseMechanism::KempeSwitch);
            continue;
        }
        if (vizing_fan(s, emb, e, v, cap) || (allow_extra && vizing_fan(s, emb, e, v, cap + 1))) {
            used = std::max(used, ImpasseMechanism::VizingFan);
            continue;
        }
        return ImpasseMechanism::Unresolved;
    }
    return used;
}

} // namespace

std::vector<EdgeId> spiral_edge_order(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition)
{
    std::vector<char> seen(embedding.num_edges(), 0);
    std::vector<EdgeId> out;
    for (VertexId v : decomposition.coloring_order())
        for (EdgeId e : fan_order(embedding, decomposition, v))
            if (!seen[e]) {
                seen[e] = 1;
                out.push_back(e);
            }
    return out;
}

ImpasseResolution resolve_impasse(const EdgeColoring& coloring, const PlanarEmbedding& embedding,
                                  const SpiralDecomposition& decomposition, VertexId v, int cap, bool allow_extra)
{
    EdgeState s(embedding, coloring.edge, std::max(cap + 1, coloring.colors_used()));
    ImpasseResolution out;
    out.mechanism = resolve_at(s, embedding, decomposition, v, cap, allow_extra, out.switches);
    out.coloring = coloring;
    out.coloring.edge = s.colors();
    return out;
}

EdgeKempePath edge_kempe_path(const EdgeColoring& coloring, const PlanarEmbedding& embedding, EdgeId e,
                              std::pair<Color, Color> pair)
{
    if (e < 0 || e >= embedding.num_edges())
        throw Error(ErrorKind::InvalidArgument, "edge out of range");
    const Color c = coloring.edge[e];
    if (c != pair.first && c != pair.second)
        throw Error(ErrorKind::ColorNotInPair, "edge " + std::to_string(e) + " is not coloured from the pair");
    EdgeState s(embedding, coloring.edge, std::max({coloring.colors_used(), pair.first, pair.second}));
    return s.path(e, pair.first, pair.second);
}

EdgeColoring kempe_switch_edge(const EdgeColoring& coloring, const PlanarEmbedding& embedding, EdgeId e,
                               std::pair<Color, Color> pair)
{
    const auto p = edge_kempe_path(coloring, embedding, e, pair);
    EdgeColoring out = coloring;
    for (EdgeId f : p.edges)
        out.edge[f] = coloring.edge[f] == pair.first ? pair.second : pair.first;
    return out;
}

ColoringResult spiral_edge_color(const PlanarEmbedding& emb, const SpiralDecomposition& dec, const RepairBudget& budget)
{
    const auto t0 = std::chrono::steady_clock::now();
    const int delta = std::max(emb.max_degree(), 1);
    const int cap = budget.palette_cap > 0 ? budget.palette_cap : delta + 1;
    const int target = std::min(delta, cap);
    ColoringResult res;
    RunStats& st = res.stats;
    st.target_palette = target;
    st.hard_cap = cap;
    st.chains = dec.num_chains();

    EdgeState s(emb, std::vector<Color>(emb.num_edges(), 0), cap + 1);
    int switches = 0;
    for (VertexId v : dec.coloring_order()) {
        const auto fan = fan_order(emb, dec, v);
        bool pending = false;
        for (EdgeId e : fan) {
            if (s.color(e) > 0)
                continue;
            if (Color c = s.lowest_common(e, target))
                s.set(e, c);
            else
                pending = true;
        }
        if (!pending)
            continue;
        auto mech = resolve_at(s, emb, dec, v, target, false, switches);
        if (mech == ImpasseMechanism::CyclicShift)
            ++st.shift_resolutions;
        if (mech == ImpasseMechanism::VizingFan)
            ++st.fallback_switches;
        if (mech == ImpasseMechanism::Unresolved) {
            ++st.fallback_switches;
            mech = resolve_at(s, emb, dec, v, target, cap > target, switches);
            if (mech == ImpasseMechanism::Unresolved)
                throw Error(ErrorKind::BudgetExhausted,
                            "edge colouring exceeded " + std::to_string(cap) + " colours at vertex " + std::to_string(v));
        }
        if (switches > budget.max_kempe_switches)
            throw Error(ErrorKind::BudgetExhausted, "Kempe switch budget exhausted");
    }

    // try to push every overflow edge back under the target
    for (EdgeId e = 0; e < emb.num_edges(); ++e) {
        if (s.color(e) <= target)
            continue;
        const Color old = s.color(e);
        s.set(e, 0);
        if (Color c = s.lowest_common(e, target)) {
            s.set(e, c);
            continue;
        }
        if (kempe_free(s, emb, e, target)) {
            ++switches;
            continue;
        }
        const VertexId u = emb.edge(e).first;
        if (vizing_fan(s, emb, e, u, target) || vizing_fan(s, emb, e, emb.edge(e).second, target))
            continue;
        if (two_step_free(s, emb, e, target)) {
            switches += 2;
            continue;
        }
        s.set(e, old);
    }

    st.kempe_switches = switches;
    res.coloring.edge = s.colors();
    res.coloring.palette = cap;
    for (Color c : res.coloring.edge)
        if (c > target)
            ++st.overflow_elements;
    st.palette_used = res.coloring.colors_used();
    st.distinct_colors = res.coloring.distinct_colors();
    if (st.palette_used > cap)
        throw Error(ErrorKind::BudgetExhausted, "edge colouring exceeded the palette cap");
    st.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace spiralcolor
