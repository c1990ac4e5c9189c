#include "spiralcolor/planar.hpp"
#include "spiralcolor/error.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace spiralcolor {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonSimple: return "NonSimple";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::BoundaryVertex: return "BoundaryVertex";
    case ErrorKind::ColorNotInPair: return "ColorNotInPair";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotAnMChain: return "NotAnMChain";
    case ErrorKind::IncompleteColoring: return "IncompleteColoring";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::uint64_t pair_key(VertexId u, VertexId v)
{
    if (u > v)
        std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

std::uint64_t triple_key(VertexId a, VertexId b, VertexId c)
{
    std::array<VertexId, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return (static_cast<std::uint64_t>(t[0]) << 42) | (static_cast<std::uint64_t>(t[1]) << 21) |
           static_cast<std::uint64_t>(t[2]);
}

} // namespace

bool is_connected(const RotationSystem& rotation)
{
    const int n = static_cast<int>(rotation.neighbors.size());
    if (n == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : rotation.neighbors[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

FaceId default_outer_face(const std::vector<Face>& faces)
{
    FaceId best = 0;
    std::vector<VertexId> best_key;
    for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
        std::vector<VertexId> key = faces[f].vertices;
        std::sort(key.begin(), key.end());
        if (f == 0) {
            best_key = std::move(key);
            continue;
        }
        const int len = faces[f].length();
        const int best_len = faces[best].length();
        if (len > best_len || (len == best_len && key < best_key)) {
            best = f;
            best_key = std::move(key);
        }
    }
    return best;
}

PlanarEmbedding PlanarEmbedding::build(RotationSystem rotation, std::optional<FaceId> outer)
{
    PlanarEmbedding emb;
    const int n = static_cast<int>(rotation.neighbors.size());
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "empty graph");

    for (VertexId v = 0; v < n; ++v) {
        const auto& nb = rotation.neighbors[v];
        std::vector<VertexId> sorted = nb;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorKind::NonSimple, "repeated neighbour at vertex " + std::to_string(v));
        for (VertexId u : nb) {
            if (u < 0 || u >= n)
                throw Error(ErrorKind::InvalidArgument, "neighbour out of range at vertex " + std::to_string(v));
            if (u == v)
                throw Error(ErrorKind::NonSimple, "self-loop at vertex " + std::to_string(v));
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : rotation.neighbors[v]) {
            const auto& back = rotation.neighbors[u];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw Error(ErrorKind::NonSimple, "asymmetric adjacency " + std::to_string(v) + "-" + std::to_string(u));
        }
    }
    if (!is_connected(rotation))
        throw Error(ErrorKind::Disconnected, "rotation system describes a disconnected graph");

    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : rotation.neighbors[v])
            if (v < u)
                emb.edges_.emplace_back(v, u);
    std::sort(emb.edges_.begin(), emb.edges_.end());
    for (EdgeId e = 0; e < static_cast<EdgeId>(emb.edges_.size()); ++e)
        emb.edge_index_.emplace(pair_key(emb.edges_[e].first, emb.edges_[e].second), e);

    emb.incident_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : rotation.neighbors[v])
            emb.incident_[v].push_back(emb.edge_index_.at(pair_key(v, u)));
    }
    emb.dart_head_pos_.assign(2 * emb.edges_.size(), 0);
    for (VertexId v = 0; v < n; ++v) {
        const auto& nb = rotation.neighbors[v];
        for (int k = 0; k < static_cast<int>(nb.size()); ++k) {
            const EdgeId e = emb.incident_[v][k];
            const DartId into_v = emb.edges_[e].first == nb[k] ? 2 * e : 2 * e + 1;
            emb.dart_head_pos_[into_v] = k;
        }
    }
    emb.rotation_ = std::move(rotation);

    const int m = emb.num_edges();
    emb.dart_face_.assign(2 * m, -1);
    for (DartId start = 0; start < 2 * m; ++start) {
        if (emb.dart_face_[start] >= 0)
            continue;
        Face face;
        const FaceId id = static_cast<FaceId>(emb.faces_.size());
        DartId d = start;
        do {
            emb.dart_face_[d] = id;
            face.darts.push_back(d);
            face.vertices.push_back(emb.dart_tail(d));
            d = emb.next_dart(d);
        } while (d != start);
        emb.faces_.push_back(std::move(face));
    }
    if (m == 0) {
        // single vertex: one face with an empty walk
        emb.faces_.push_back(Face{{0}, {}});
    }

    const int f = emb.num_faces();
    if (n - m + f != 2) {
        throw Error(ErrorKind::NotPlanarEmbedding, "Euler check failed: n - m + f = " + std::to_string(n) + " - " +
                                                       std::to_string(m) + " + " + std::to_string(f));
    }

    for (FaceId id = 0; id < f; ++id) {
        const auto& fv = emb.faces_[id].vertices;
        if (fv.size() == 3)
            emb.triangle_index_.emplace(triple_key(fv[0], fv[1], fv[2]), id);
    }

    if (outer) {
        if (*outer < 0 || *outer >= f)
            throw Error(ErrorKind::InvalidArgument, "outer face index out of range");
        emb.outer_ = *outer;
        emb.outer_explicit_ = true;
    } else {
        emb.outer_ = default_outer_face(emb.faces_);
    }
    return emb;
}

PlanarEmbedding PlanarEmbedding::from_faces(int n, const std::vector<std::vector<VertexId>>& faces,
                                            std::optional<FaceId> outer)
{
    std::vector<std::map<VertexId, VertexId>> succ(n);
    for (const auto& walk : faces) {
        const int k = static_cast<int>(walk.size());
        for (int i = 0; i < k; ++i) {
            VertexId prev = walk[(i + k - 1) % k];
            VertexId v = walk[i];
            VertexId next = walk[(i + 1) % k];
            if (!succ[v].emplace(prev, next).second)
                throw Error(ErrorKind::NotPlanarEmbedding, "dart used twice in face list at vertex " + std::to_string(v));
        }
    }
    RotationSystem rot;
    rot.neighbors.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        if (succ[v].empty())
            continue;
        VertexId first = succ[v].begin()->first;
        VertexId u = first;
        do {
            rot.neighbors[v].push_back(u);
            auto it = succ[v].find(u);
            if (it == succ[v].end())
                throw Error(ErrorKind::NotPlanarEmbedding, "broken rotation at vertex " + std::to_string(v));
            u = it->second;
        } while (u != first && rot.neighbors[v].size() <= succ[v].size());
        if (rot.neighbors[v].size() != succ[v].size())
            throw Error(ErrorKind::NotPlanarEmbedding, "rotation at vertex " + std::to_string(v) + " is not one cycle");
    }
    return build(std::move(rot), outer);
}

int PlanarEmbedding::max_degree() const
{
    int d = 0;
    for (const auto& nb : rotation_.neighbors)
        d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

EdgeId PlanarEmbedding::edge_id(VertexId u, VertexId v) const
{
    auto it = edge_index_.find(pair_key(u, v));
    return it == edge_index_.end() ? -1 : it->second;
}

DartId PlanarEmbedding::dart(VertexId from, VertexId to) const
{
    EdgeId e = edge_id(from, to);
    if (e < 0)
        return -1;
    return edges_[e].first == from ? 2 * e : 2 * e + 1;
}

DartId PlanarEmbedding::next_dart(DartId d) const
{
    const VertexId v = dart_head(d);
    const int deg = degree(v);
    const EdgeId e = incident_[v][(dart_head_pos_[d] + 1) % deg];
    return edges_[e].first == v ? 2 * e : 2 * e + 1;
}

PlanarEmbedding PlanarEmbedding::with_outer(FaceId outer) const
{
    if (outer < 0 || outer >= num_faces())
        throw Error(ErrorKind::InvalidArgument, "outer face index out of range");
    PlanarEmbedding copy = *this;
    copy.outer_ = outer;
    copy.outer_explicit_ = true;
    return copy;
}

PlanarEmbedding PlanarEmbedding::mirrored() const
{
    RotationSystem rot = rotation_;
    for (auto& nb : rot.neighbors)
        std::reverse(nb.begin(), nb.end());
    // keep the same outer boundary: the reversed walk of our outer face
    PlanarEmbedding m = build(rot);
    const DartId d = faces_[outer_].darts.empty() ? -1 : faces_[outer_].darts.front();
    if (d >= 0) {
        const DartId rev = d ^ 1;
        m.outer_ = m.dart_face_[rev];
        m.outer_explicit_ = outer_explicit_;
    }
    return m;
}

FaceId PlanarEmbedding::triangle_face(VertexId a, VertexId b, VertexId c) const
{
    auto it = triangle_index_.find(triple_key(a, b, c));
    return it == triangle_index_.end() ? -1 : it->second;
}

DualGraph dual(const PlanarEmbedding& embedding)
{
    DualGraph g;
    g.num_vertices = embedding.num_faces();
    g.incidence.resize(g.num_vertices);
    for (EdgeId e = 0; e < embedding.num_edges(); ++e) {
        auto [a, b] = embedding.edge_faces(e);
        const int idx = static_cast<int>(g.edges.size());
        g.edges.push_back({a, b, e});
        g.incidence[a].push_back(idx);
        if (b != a)
            g.incidence[b].push_back(idx);
    }
    return g;
}

PlanarEmbedding simple_dual_embedding(const PlanarEmbedding& embedding)
{
    const int f = embedding.num_faces();
    // keep, for every unordered face pair, the parallel copy with the smallest primal edge id
    std::unordered_map<std::uint64_t, EdgeId> keep;
    for (EdgeId e = 0; e < embedding.num_edges(); ++e) {
        auto [a, b] = embedding.edge_faces(e);
        if (a == b)
            continue;
        auto key = pair_key(a, b);
        auto it = keep.find(key);
        if (it == keep.end() || e < it->second)
            keep[key] = e;
    }
    RotationSystem rot;
    rot.neighbors.resize(f);
    for (FaceId id = 0; id < f; ++id) {
        for (DartId d : embedding.face(id).darts) {
            const FaceId other = embedding.face_of_dart(d ^ 1);
            if (other == id)
                continue;
            if (keep.at(pair_key(id, other)) != PlanarEmbedding::dart_edge(d))
                continue;
            rot.neighbors[id].push_back(other);
        }
    }
    return PlanarEmbedding::build(std::move(rot));
}

std::vector<std::vector<FaceId>> dual_face_walks(const PlanarEmbedding& embedding)
{
    std::vector<std::vector<FaceId>> walks(embedding.num_vertices());
    for (VertexId v = 0; v < embedding.num_vertices(); ++v) {
        for (VertexId u : embedding.neighbors(v))
            walks[v].push_back(embedding.face_of_dart(embedding.dart(u, v)));
    }
    return walks;
}

int max_degree(const PlanarEmbedding& embedding) { return embedding.max_degree(); }

bool is_maximal_planar(const PlanarEmbedding& embedding)
{
    if (embedding.num_vertices() < 3)
        return false;
    for (const auto& face : embedding.faces())
        if (face.length() != 3)
            return false;
    return true;
}

bool is_triangle_free(const PlanarEmbedding& embedding)
{
    const int n = embedding.num_vertices();
    std::vector<char> mark(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : embedding.neighbors(v))
            mark[u] = 1;
        for (VertexId u : embedding.neighbors(v)) {
            if (u < v)
                continue;
            for (VertexId w : embedding.neighbors(u))
                if (mark[w])
                    return false;
        }
        for (VertexId u : embedding.neighbors(v))
            mark[u] = 0;
    }
    return true;
}

bool has_cycles_of_length(const PlanarEmbedding& embedding, const std::set<int>& lengths)
{
    if (lengths.empty())
        return false;
    const int max_len = *lengths.rbegin();
    if (max_len > 6 || *lengths.begin() < 3)
        throw Error(ErrorKind::InvalidArgument, "cycle lengths must lie in [3, 6]");
    const int n = embedding.num_vertices();
    std::vector<char> on_path(n, 0);
    // cycles are enumerated from their smallest vertex
    std::function<bool(VertexId, VertexId, int)> dfs = [&](VertexId start, VertexId v, int depth) -> bool {
        for (VertexId u : embedding.neighbors(v)) {
            if (u == start && depth >= 3 && lengths.count(depth))
                return true;
            if (u <= start || on_path[u] || depth >= max_len)
                continue;
            on_path[u] = 1;
            bool found = dfs(start, u, depth + 1);
            on_path[u] = 0;
            if (found)
                return true;
        }
        return false;
    };
    for (VertexId s = 0; s < n; ++s) {
        on_path[s] = 1;
        bool found = dfs(s, s, 1);
        on_path[s] = 0;
        if (found)
            return true;
    }
    return false;
}

std::string to_rot(const PlanarEmbedding& embedding)
{
    std::ostringstream out;
    out << embedding.num_vertices() << '\n';
    for (VertexId v = 0; v < embedding.num_vertices(); ++v) {
        out << v << ':';
        for (VertexId u : embedding.neighbors(v))
            out << ' ' << u;
        out << '\n';
    }
    if (embedding.outer_explicit())
        out << "outer: " << embedding.outer_face() << '\n';
    return out.str();
}

PlanarEmbedding parse_rot(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    auto fail = [](const std::string& msg) -> PlanarEmbedding { throw Error(ErrorKind::ParseError, msg); };

    if (!std::getline(in, line))
        return fail("missing vertex count");
    int n = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> n) || n <= 0)
            return fail("bad vertex count line: '" + line + "'");
    }
    RotationSystem rot;
    rot.neighbors.resize(n);
    std::vector<char> seen(n, 0);
    std::optional<FaceId> outer;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            return fail("line " + std::to_string(lineno) + ": expected ':'");
        const std::string head = line.substr(0, colon);
        std::istringstream rest(line.substr(colon + 1));
        if (head == "outer") {
            int f = 0;
            if (!(rest >> f))
                return fail("line " + std::to_string(lineno) + ": bad outer face");
            outer = f;
            continue;
        }
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(head, &used);
            if (used != head.size())
                throw std::invalid_argument(head);
        } catch (const std::exception&) {
            return fail("line " + std::to_string(lineno) + ": bad vertex id '" + head + "'");
        }
        if (v < 0 || v >= n)
            return fail("line " + std::to_string(lineno) + ": vertex id out of range");
        if (seen[v])
            return fail("line " + std::to_string(lineno) + ": vertex listed twice");
        seen[v] = 1;
        int u = 0;
        while (rest >> u)
            rot.neighbors[v].push_back(u);
        if (!rest.eof())
            return fail("line " + std::to_string(lineno) + ": bad neighbour list");
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            return fail("vertex " + std::to_string(v) + " missing");
    return PlanarEmbedding::build(std::move(rot), outer);
}

PlanarEmbedding read_rot_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_rot(buf.str());
}

std::string to_dimacs(const PlanarEmbedding& embedding, const std::string& comment)
{
    std::ostringstream out;
    if (!comment.empty())
        out << "c " << comment << '\n';
    out << "p edge " << embedding.num_vertices() << ' ' << embedding.num_edges() << '\n';
    for (auto [u, v] : embedding.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

} // namespace spiralcolor
