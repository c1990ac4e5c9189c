#include "spiralcolor/spiral.hpp"
#include "spiralcolor/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace spiralcolor {

std::string to_string(TriangleClass cls)
{
    switch (cls) {
    case TriangleClass::Alpha: return "alpha";
    case TriangleClass::Beta: return "beta";
    case TriangleClass::Gamma: return "gamma";
    }
    return "?";
}

std::string to_string(const TriangleType& t)
{
    static const char* names[] = {"a", "b", "g"};
    return std::string(names[static_cast<int>(t.cls)]) + (t.side == Side::Lower ? "l" : "u");
}

std::string to_string(const std::vector<TriangleType>& seq)
{
    std::string out = "<";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            out += ' ';
        out += to_string(seq[i]);
    }
    return out + ">";
}

int SpiralDecomposition::num_spiral_edges() const
{
    return static_cast<int>(std::count(spiral_edge.begin(), spiral_edge.end(), 1));
}

VertexId SpiralDecomposition::predecessor(VertexId v) const
{
    const int p = position[v];
    return p == 0 ? -1 : chains[chain_of[v]].vertices[p - 1];
}

VertexId SpiralDecomposition::successor(VertexId v) const
{
    const auto& c = chains[chain_of[v]].vertices;
    const int p = position[v];
    return p + 1 < static_cast<int>(c.size()) ? c[p + 1] : -1;
}

std::vector<VertexId> SpiralDecomposition::coloring_order() const
{
    std::vector<VertexId> order(sequence.rbegin(), sequence.rend());
    return order;
}

namespace {

void finalize(const PlanarEmbedding& emb, SpiralDecomposition& dec)
{
    const int n = emb.num_vertices();
    dec.spiral_edge.assign(emb.num_edges(), 0);
    dec.chain_of.assign(n, -1);
    dec.position.assign(n, -1);
    dec.rank.assign(n, -1);
    dec.sequence.clear();
    for (int c = 0; c < dec.num_chains(); ++c) {
        const auto& vs = dec.chains[c].vertices;
        for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
            const VertexId v = vs[i];
            if (v < 0 || v >= n || dec.chain_of[v] >= 0)
                throw Error(ErrorKind::InvalidArgument, "chains do not partition the vertex set");
            dec.chain_of[v] = c;
            dec.position[v] = i;
            dec.rank[v] = static_cast<int>(dec.sequence.size());
            dec.sequence.push_back(v);
            if (i > 0) {
                const EdgeId e = emb.edge_id(vs[i - 1], v);
                if (e < 0)
                    throw Error(ErrorKind::InvalidArgument, "consecutive chain vertices are not adjacent");
                dec.spiral_edge[e] = 1;
            }
        }
    }
    if (static_cast<int>(dec.sequence.size()) != n)
        throw Error(ErrorKind::InvalidArgument, "chains do not cover every vertex");
}

/// First alive neighbour of v strictly clockwise after rotation index k.
VertexId first_alive_after(const PlanarEmbedding& emb, const std::vector<char>& alive, VertexId v, int k)
{
    const auto& nb = emb.neighbors(v);
    const int d = static_cast<int>(nb.size());
    for (int s = 1; s <= d; ++s) {
        const VertexId u = nb[(k + s) % d];
        if (alive[u])
            return u;
    }
    return -1;
}

int index_in_rotation(const PlanarEmbedding& emb, VertexId v, VertexId u)
{
    const auto& nb = emb.neighbors(v);
    return static_cast<int>(std::find(nb.begin(), nb.end(), u) - nb.begin());
}

/// Boundary walk of the alive subgraph starting at x, leaving x into the
/// sector that contains the (dead) neighbour `via`. Stops before the first
/// repeated vertex.
std::vector<VertexId> walk_from(const PlanarEmbedding& emb, const std::vector<char>& alive, VertexId x, VertexId via,
                                bool& truncated)
{
    std::vector<VertexId> path{x};
    truncated = false;
    VertexId next = first_alive_after(emb, alive, x, index_in_rotation(emb, x, via));
    if (next < 0)
        return path;
    std::vector<char> in_path(emb.num_vertices(), 0);
    in_path[x] = 1;
    VertexId prev = x;
    VertexId cur = next;
    const VertexId first_step = next;
    while (!in_path[cur]) {
        in_path[cur] = 1;
        path.push_back(cur);
        const VertexId nxt = first_alive_after(emb, alive, cur, index_in_rotation(emb, cur, prev));
        prev = cur;
        cur = nxt;
    }
    // a full boundary cycle ends by returning to x through the closing edge
    if (!(cur == x && (prev != x) && first_alive_after(emb, alive, x, index_in_rotation(emb, x, prev)) == first_step))
        truncated = true;
    return path;
}

} // namespace

SpiralDecomposition SpiralDecomposition::from_chains(const PlanarEmbedding& embedding,
                                                     const std::vector<std::vector<VertexId>>& chains)
{
    SpiralDecomposition dec;
    for (const auto& c : chains)
        dec.chains.push_back({c, {}});
    finalize(embedding, dec);
    dec.start = dec.sequence.empty() ? 0 : dec.sequence.front();
    return dec;
}

SpiralDecomposition decompose(const PlanarEmbedding& input, std::optional<VertexId> start, Direction direction)
{
    const PlanarEmbedding mirrored = direction == Direction::Counterclockwise ? input.mirrored() : PlanarEmbedding{};
    const PlanarEmbedding& emb = direction == Direction::Counterclockwise ? mirrored : input;
    const int n = emb.num_vertices();
    const Face& outer = emb.face(emb.outer_face());

    VertexId s = start.value_or(*std::min_element(outer.vertices.begin(), outer.vertices.end()));
    if (std::find(outer.vertices.begin(), outer.vertices.end(), s) == outer.vertices.end())
        throw Error(ErrorKind::InvalidArgument, "start vertex " + std::to_string(s) + " is not on the outer face");

    SpiralDecomposition dec;
    dec.start = s;
    dec.direction = direction;
    std::vector<char> alive(n, 1);
    int remaining = n;

    // first sub-path: the outer face walk from s, omitting the closing edge
    std::vector<VertexId> path;
    {
        const auto& fv = outer.vertices;
        const int k = static_cast<int>(fv.size());
        const int at = static_cast<int>(std::find(fv.begin(), fv.end(), s) - fv.begin());
        std::vector<char> seen(n, 0);
        for (int i = 0; i < std::max(k, 1); ++i) {
            const VertexId v = fv[(at + i) % std::max(k, 1)];
            if (seen[v]) {
                dec.anomalies.push_back("outer walk truncated at repeated vertex " + std::to_string(v));
                break;
            }
            seen[v] = 1;
            path.push_back(v);
        }
    }
    dec.chains.push_back({});

    while (true) {
        auto& chain = dec.chains.back();
        if (!chain.vertices.empty()) {
            const EdgeId link = emb.edge_id(chain.vertices.back(), path.front());
            chain.link_edges.push_back(link);
        }
        for (VertexId v : path) {
            chain.vertices.push_back(v);
            alive[v] = 0;
            --remaining;
        }
        if (remaining == 0)
            break;

        const VertexId last = chain.vertices.back();
        const VertexId pred = chain.vertices.size() >= 2 ? chain.vertices[chain.vertices.size() - 2] : -1;
        VertexId link_target = -1;
        if (emb.degree(last) > 0) {
            const int from = pred >= 0 ? index_in_rotation(emb, last, pred) : emb.degree(last) - 1;
            link_target = first_alive_after(emb, alive, last, from);
        }

        bool truncated = false;
        if (link_target >= 0) {
            path = walk_from(emb, alive, link_target, last, truncated);
        } else {
            // nearest surviving vertex by hop distance in G, ties to the smallest id
            std::vector<int> dist(n, -1);
            std::queue<VertexId> q;
            dist[last] = 0;
            q.push(last);
            VertexId best = -1;
            while (!q.empty()) {
                const VertexId v = q.front();
                q.pop();
                if (best >= 0 && dist[v] > dist[best])
                    break;
                for (VertexId u : emb.neighbors(v)) {
                    if (dist[u] >= 0)
                        continue;
                    dist[u] = dist[v] + 1;
                    if (alive[u]) {
                        if (best < 0 || (dist[u] == dist[best] && u < best))
                            best = u;
                    }
                    q.push(u);
                }
            }
            VertexId via = -1;
            for (VertexId u : emb.neighbors(best))
                if (!alive[u]) {
                    via = u;
                    break;
                }
            dec.anomalies.push_back("no link edge after vertex " + std::to_string(last) + "; new chain at " +
                                    std::to_string(best) + " (distance " + std::to_string(dist[best]) + ")");
            dec.chains.push_back({});
            path = walk_from(emb, alive, best, via, truncated);
        }
        if (truncated)
            dec.anomalies.push_back("boundary walk from " + std::to_string(path.front()) +
                                    " truncated at a repeated vertex");
    }
    finalize(input, dec);
    return dec;
}

std::vector<std::optional<TriangleClass>> classify_triangles(const PlanarEmbedding& embedding,
                                                             const SpiralDecomposition& decomposition)
{
    if (!is_maximal_planar(embedding))
        throw Error(ErrorKind::NotMaximal, "triangle classification needs a maximal planar embedding");
    std::vector<std::optional<TriangleClass>> out(embedding.num_faces());
    for (FaceId f = 0; f < embedding.num_faces(); ++f) {
        if (f == embedding.outer_face())
            continue;
        int spiral = 0;
        for (DartId d : embedding.face(f).darts)
            spiral += decomposition.spiral_edge[PlanarEmbedding::dart_edge(d)];
        out[f] = spiral == 0 ? TriangleClass::Alpha : spiral == 1 ? TriangleClass::Beta : TriangleClass::Gamma;
    }
    return out;
}

TriangleCensus triangle_census(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition)
{
    TriangleCensus c;
    for (const auto& cls : classify_triangles(embedding, decomposition)) {
        if (!cls)
            continue;
        if (*cls == TriangleClass::Alpha)
            ++c.alpha;
        else if (*cls == TriangleClass::Beta)
            ++c.beta;
        else
            ++c.gamma;
    }
    return c;
}

TriangleCensus outerplanar_cycle_census(const PlanarEmbedding& embedding)
{
    const Face& outer = embedding.face(embedding.outer_face());
    std::vector<VertexId> sorted = outer.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (outer.length() != embedding.num_vertices() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::PreconditionViolated, "outer face is not a Hamiltonian cycle");
    std::vector<char> on_cycle(embedding.num_edges(), 0);
    for (DartId d : outer.darts)
        on_cycle[PlanarEmbedding::dart_edge(d)] = 1;
    TriangleCensus c;
    for (FaceId f = 0; f < embedding.num_faces(); ++f) {
        if (f == embedding.outer_face())
            continue;
        if (embedding.face(f).length() != 3)
            throw Error(ErrorKind::PreconditionViolated, "internal face is not a triangle");
        int k = 0;
        for (DartId d : embedding.face(f).darts)
            k += on_cycle[PlanarEmbedding::dart_edge(d)];
        if (k == 0)
            ++c.alpha;
        else if (k == 1)
            ++c.beta;
        else
            ++c.gamma;
    }
    return c;
}

bool induced_outerplanar(const PlanarEmbedding& embedding, const std::vector<VertexId>& vertices)
{
    if (vertices.size() <= 2)
        return true;
    const int n = embedding.num_vertices();
    std::vector<char> in(n, 0);
    for (VertexId v : vertices)
        in[v] = 1;
    const int want = static_cast<int>(vertices.size());

    std::vector<char> used(2 * embedding.num_edges(), 0);
    std::vector<int> stamp(n, -1);
    int face_no = 0;
    for (VertexId v : vertices) {
        for (VertexId u : embedding.neighbors(v)) {
            if (!in[u])
                continue;
            const DartId d0 = embedding.dart(v, u);
            if (used[d0])
                continue;
            int distinct = 0;
            DartId d = d0;
            do {
                used[d] = 1;
                const VertexId tail = embedding.dart_tail(d);
                const VertexId head = embedding.dart_head(d);
                if (stamp[tail] != face_no) {
                    stamp[tail] = face_no;
                    ++distinct;
                }
                const VertexId nxt = first_alive_after(embedding, in, head, index_in_rotation(embedding, head, tail));
                d = embedding.dart(head, nxt);
            } while (d != d0);
            if (distinct == want)
                return true;
            ++face_no;
        }
    }
    return false;
}

std::vector<SpiralSegment> segment(const std::vector<VertexId>& chain, const PlanarEmbedding& embedding)
{
    std::vector<SpiralSegment> out;
    std::size_t i = 0;
    while (i < chain.size()) {
        SpiralSegment seg;
        seg.index = static_cast<int>(out.size()) + 1;
        seg.vertices.push_back(chain[i++]);
        while (i < chain.size()) {
            seg.vertices.push_back(chain[i]);
            if (!induced_outerplanar(embedding, seg.vertices)) {
                seg.vertices.pop_back();
                break;
            }
            ++i;
        }
        out.push_back(std::move(seg));
    }
    return out;
}

std::vector<SailingBoat> find_sailing_boats(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition)
{
    std::vector<SailingBoat> boats;
    const auto& spiral = decomposition.spiral_edge;
    auto nonspiral = [&](VertexId a, VertexId b) {
        const EdgeId e = embedding.edge_id(a, b);
        return e >= 0 && !spiral[e];
    };
    for (VertexId v = 0; v < embedding.num_vertices(); ++v) {
        const VertexId a = decomposition.predecessor(v);
        const VertexId b = decomposition.successor(v);
        if (a < 0 || b < 0 || embedding.degree(v) != 4 || !nonspiral(a, b))
            continue;
        const FaceId gamma = embedding.triangle_face(a, v, b);
        if (gamma < 0)
            continue;
        std::vector<VertexId> rest;
        for (VertexId u : embedding.neighbors(v))
            if (u != a && u != b)
                rest.push_back(u);
        if (rest.size() != 2)
            continue;
        VertexId r = rest[0], r1 = rest[1];
        const EdgeId upper = embedding.edge_id(r, r1);
        if (upper < 0 || !spiral[upper])
            continue;
        if (!embedding.adjacent(r, a))
            std::swap(r, r1);
        if (!nonspiral(r, a) || !nonspiral(r, v) || !nonspiral(r1, v) || !nonspiral(r1, b))
            continue;
        const FaceId f1 = embedding.triangle_face(a, v, r);
        const FaceId f2 = embedding.triangle_face(v, r, r1);
        const FaceId f3 = embedding.triangle_face(v, r1, b);
        if (f1 < 0 || f2 < 0 || f3 < 0)
            continue;
        boats.push_back({{a, v, b}, {r, r1}, gamma, {f1, f2, f3}});
    }
    return boats;
}

ConfigSequence config_sequence(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition, VertexId v)
{
    if (!is_maximal_planar(embedding))
        throw Error(ErrorKind::NotMaximal, "configuration sequences need a maximal planar embedding");
    const auto classes = classify_triangles(embedding, decomposition);
    ConfigSequence out;
    out.vertex = v;
    const auto& nb = embedding.neighbors(v);
    const int d = static_cast<int>(nb.size());
    const FaceId outer = embedding.outer_face();

    // sector k lies clockwise between nb[k] and nb[k+1]
    std::vector<FaceId> sector(d);
    for (int k = 0; k < d; ++k) {
        sector[k] = embedding.face_of_dart(embedding.dart(nb[k], v));
        if (sector[k] == outer)
            out.boundary = true;
    }
    auto side_of = [&](FaceId f) {
        if (out.boundary)
            return Side::Lower;
        const auto& fv = embedding.face(f).vertices;
        for (VertexId w : fv)
            if (w != v && decomposition.rank[w] > decomposition.rank[v])
                return Side::Lower;
        return Side::Upper;
    };

    // anticlockwise = decreasing sector index
    int begin = -1;
    for (int k = 0; k < d && begin < 0; ++k) {
        const int here = ((d - 1 - k) % d + d) % d;
        const int before = (here + 1) % d; // previous sector in anticlockwise order
        if (sector[here] != outer && side_of(sector[here]) == Side::Lower && sector[before] != outer &&
            side_of(sector[before]) == Side::Upper)
            begin = here;
    }
    if (begin < 0) {
        VertexId anchor = decomposition.successor(v);
        if (anchor < 0)
            anchor = decomposition.predecessor(v);
        const int j = anchor >= 0 ? index_in_rotation(embedding, v, anchor) : 0;
        begin = (j - 1 + d) % d;
        if (out.boundary) {
            // start right after the outer face
            for (int k = 0; k < d; ++k)
                if (sector[k] == outer)
                    begin = (k - 1 + d) % d;
        }
    }
    for (int s = 0; s < d; ++s) {
        const int k = ((begin - s) % d + d) % d;
        if (sector[k] == outer)
            continue;
        out.sequence.push_back({*classes[sector[k]], side_of(sector[k])});
    }
    return out;
}

namespace {

std::vector<TriangleType> parse_seq(const std::string& text)
{
    std::vector<TriangleType> seq;
    for (std::size_t i = 0; i + 1 < text.size(); i += 3) {
        TriangleType t{};
        t.cls = text[i] == 'a' ? TriangleClass::Alpha : text[i] == 'b' ? TriangleClass::Beta : TriangleClass::Gamma;
        t.side = text[i + 1] == 'l' ? Side::Lower : Side::Upper;
        seq.push_back(t);
    }
    return seq;
}

} // namespace

const std::vector<std::vector<TriangleType>>& configuration_catalogue()
{
    static const std::vector<std::vector<TriangleType>> catalogue = {
        parse_seq("bl bl bl bl bl"),    // (1)
        parse_seq("bl bl bl bl bu bu"), // (2)
        parse_seq("gl al al gl bu bu"), // (3)
        parse_seq("bl bl al gl bu bu"), // (4)
        parse_seq("gl al bl bl bu bu"), // (5)
        parse_seq("gl bl al bl bu bu"), // (6)
        parse_seq("bl al bl gl bu bu"), // (7)
        parse_seq("gl al bl bu bu bu"), // (8)
        parse_seq("bl al gl bu bu bu"), // (9)
        parse_seq("gl al bl bu au bu"), // (10)
        parse_seq("bl al gl bu au bu"), // (11)
        parse_seq("bl bl bl bu bu bu"), // (12)
    };
    return catalogue;
}

const std::vector<std::vector<TriangleType>>& terminal_case_catalogue()
{
    static const std::vector<std::vector<TriangleType>> cases = {
        parse_seq("bl bl bl al gl"), // Case 1, degree 6
        parse_seq("bl bl bl bl bl"), // Case 2, degree 6
        parse_seq("bl bl bl bl"),    // Case 3, degree 5
        parse_seq("bl bl bl"),       // Case 4, degree 4
    };
    return cases;
}

std::optional<int> match_catalogue(const std::vector<TriangleType>& seq,
                                   const std::vector<std::vector<TriangleType>>& catalogue)
{
    for (std::size_t k = 0; k < catalogue.size(); ++k) {
        const auto& entry = catalogue[k];
        if (entry.size() != seq.size())
            continue;
        const std::size_t d = seq.size();
        for (std::size_t r = 0; r < std::max<std::size_t>(d, 1); ++r) {
            bool same = true;
            for (std::size_t i = 0; i < d && same; ++i)
                same = seq[(i + r) % d] == entry[i];
            if (same)
                return static_cast<int>(k) + 1;
        }
    }
    return std::nullopt;
}

CaseCensus config_case_table(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition)
{
    CaseCensus census;
    for (VertexId v = 0; v < embedding.num_vertices(); ++v) {
        if (embedding.degree(v) != 6)
            continue;
        ++census.degree6_vertices;
        const auto cs = config_sequence(embedding, decomposition, v);
        if (auto k = match_catalogue(cs.sequence, configuration_catalogue()))
            ++census.entries[*k - 1];
        else
            census.uncatalogued.push_back(v);
    }
    // terminal vertex: the second vertex of the first chain (coloured just before the last one)
    if (!decomposition.chains.empty() && decomposition.chains.front().vertices.size() >= 2) {
        const VertexId t = decomposition.chains.front().vertices[1];
        const auto cs = config_sequence(embedding, decomposition, t);
        if (auto k = match_catalogue(cs.sequence, terminal_case_catalogue())) {
            census.terminal_case = *k;
            ++census.terminal_cases[*k - 1];
        }
    }
    return census;
}

NonSpiralStructure nonspiral_structure(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition)
{
    const int n = embedding.num_vertices();
    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeId e = 0; e < embedding.num_edges(); ++e) {
        if (decomposition.spiral_edge[e])
            continue;
        auto [u, v] = embedding.edge(e);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    NonSpiralStructure out;
    std::vector<int> comp(n, -1), depth(n, 0), parent(n, -1);
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        if (adj[s].empty()) {
            comp[s] = s;
            out.isolated.push_back(s);
            continue;
        }
        std::vector<VertexId> members{s};
        std::queue<VertexId> q;
        q.push(s);
        comp[s] = s;
        int edge_ends = 0;
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            for (VertexId u : adj[v]) {
                ++edge_ends;
                if (comp[u] < 0) {
                    comp[u] = s;
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    members.push_back(u);
                    q.push(u);
                }
            }
        }
        const int edges = edge_ends / 2;
        const int cyclomatic = edges - static_cast<int>(members.size()) + 1;
        int last_len = 0;
        for (VertexId v : members) {
            for (VertexId u : adj[v]) {
                if (u < v || parent[u] == v || parent[v] == u)
                    continue;
                // fundamental cycle through the non-tree edge v-u
                VertexId a = v, b = u;
                int len = 1;
                while (a != b) {
                    if (depth[a] >= depth[b]) {
                        a = parent[a];
                    } else {
                        b = parent[b];
                    }
                    ++len;
                }
                last_len = len;
                if (len % 2)
                    ++out.odd_cycles;
                else
                    ++out.even_cycles;
            }
        }
        std::sort(members.begin(), members.end());
        if (cyclomatic == 0)
            out.trees.push_back(std::move(members));
        else if (cyclomatic == 1)
            out.cycles.push_back({std::move(members), last_len});
        else
            out.complex.push_back(std::move(members));
    }
    return out;
}

} // namespace spiralcolor
