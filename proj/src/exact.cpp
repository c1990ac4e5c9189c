#include "exact.hpp"

#include <bit>

namespace spiralcolor::detail {

namespace {

struct Search {
    const std::vector<std::vector<int>>& adj;
    int k;
    std::int64_t limit;
    const std::vector<std::uint64_t>& allowed;
    bool symmetric;
    std::vector<int> color;
    std::vector<std::vector<int>> seen; // seen[v][c]: neighbours of v coloured c
    std::vector<std::uint64_t> mask;    // colours present around v
    std::int64_t nodes = 0;
    bool exhausted = false;

    int pick() const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
            if (color[v])
                continue;
            const int sat = std::popcount(mask[v]);
            const int deg = static_cast<int>(adj[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(int v, int c, int delta)
    {
        for (int u : adj[v]) {
            int& s = seen[u][c];
            s += delta;
            if (s == 0)
                mask[u] &= ~(std::uint64_t{1} << c);
            else
                mask[u] |= std::uint64_t{1} << c;
        }
    }

    bool run(int used)
    {
        if (++nodes > limit) {
            exhausted = true;
            return false;
        }
        const int v = pick();
        if (v < 0)
            return true;
        const int top = symmetric ? std::min(k, used + 1) : k;
        for (int c = 1; c <= top; ++c) {
            if (mask[v] >> c & 1)
                continue;
            if (!allowed.empty() && !(allowed[v] >> c & 1))
                continue;
            color[v] = c;
            assign(v, c, +1);
            if (run(std::max(used, c)))
                return true;
            assign(v, c, -1);
            color[v] = 0;
            if (exhausted)
                return false;
        }
        return false;
    }
};

} // namespace

SearchResult exact_k_coloring(const std::vector<std::vector<int>>& adj, int k, std::int64_t node_limit,
                              const std::vector<std::uint64_t>& allowed)
{
    const int n = static_cast<int>(adj.size());
    Search s{adj, k, node_limit, allowed, allowed.empty(), std::vector<int>(n, 0),
             std::vector<std::vector<int>>(n, std::vector<int>(k + 1, 0)), std::vector<std::uint64_t>(n, 0)};
    SearchResult out;
    if (k <= 0 || k > 62) {
        out.found = n == 0;
        return out;
    }
    out.found = s.run(0);
    out.exhausted = s.exhausted;
    out.nodes = s.nodes;
    if (out.found)
        out.colors = std::move(s.color);
    return out;
}

bool local_recolor(const std::vector<std::vector<int>>& adj, std::vector<int>& col, int center, int k,
                   int max_radius, std::int64_t node_limit, std::int64_t& nodes)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> dist(n, -1);
    std::vector<int> ball{center};
    dist[center] = 0;
    std::size_t head = 0;
    for (int r = 1; r <= max_radius; ++r) {
        const std::size_t end = ball.size();
        for (; head < end; ++head)
            for (int u : adj[ball[head]])
                if (dist[u] < 0 && col[u] > 0) {
                    dist[u] = r;
                    ball.push_back(u);
                }
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < ball.size(); ++i)
            local[ball[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> sub(ball.size());
        const std::uint64_t full = ((std::uint64_t{1} << (k + 1)) - 1) & ~std::uint64_t{1};
        std::vector<std::uint64_t> allowed(ball.size(), full);
        for (std::size_t i = 0; i < ball.size(); ++i)
            for (int u : adj[ball[i]]) {
                if (local[u] >= 0)
                    sub[i].push_back(local[u]);
                else if (col[u] > 0 && col[u] <= k)
                    allowed[i] &= ~(std::uint64_t{1} << col[u]);
            }
        auto res = exact_k_coloring(sub, k, node_limit, allowed);
        nodes += res.nodes;
        if (res.found) {
            for (std::size_t i = 0; i < ball.size(); ++i)
                col[ball[i]] = res.colors[i];
            return true;
        }
        if (ball.size() == end && head == ball.size())
            break; // ball stopped growing
    }
    return false;
}

} // namespace spiralcolor::detail
