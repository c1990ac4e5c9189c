#include "spiralcolor/bench.hpp"
#include "spiralcolor/chromatic.hpp"
#include "spiralcolor/composite.hpp"
#include "spiralcolor/edge.hpp"
#include "spiralcolor/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <random>
#include <thread>

namespace spiralcolor {

Algorithm parse_algorithm(const std::string& name)
{
    if (name == "vertex")
        return Algorithm::Vertex;
    if (name == "edge")
        return Algorithm::Edge;
    if (name == "total")
        return Algorithm::Total;
    if (name == "entire")
        return Algorithm::Entire;
    if (name == "three")
        return Algorithm::Three;
    throw Error(ErrorKind::InvalidArgument, "unknown algorithm \"" + name + "\"");
}

std::string to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::Vertex: return "vertex";
    case Algorithm::Edge: return "edge";
    case Algorithm::Total: return "total";
    case Algorithm::Entire: return "entire";
    case Algorithm::Three: return "three";
    }
    return "?";
}

ElementSet element_set(Algorithm a)
{
    switch (a) {
    case Algorithm::Edge: return ElementSet::Edges;
    case Algorithm::Total: return ElementSet::Total;
    case Algorithm::Entire: return ElementSet::Entire;
    default: return ElementSet::Vertices;
    }
}

ColoringResult run_algorithm(const PlanarEmbedding& emb, const SpiralDecomposition& dec, Algorithm a,
                             const RepairBudget& budget)
{
    switch (a) {
    case Algorithm::Vertex: return four_color(emb, dec, budget);
    case Algorithm::Edge: return spiral_edge_color(emb, dec, budget);
    case Algorithm::Total: return total_color(emb, dec, budget);
    case Algorithm::Entire: return entire_color(emb, dec, budget);
    case Algorithm::Three: return three_color_triangle_free(emb, dec, budget);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown algorithm");
}

std::vector<GenSpec> corpus_specs(const CorpusSpec& spec)
{
    if (spec.n_min > spec.n_max)
        throw Error(ErrorKind::InvalidArgument, "n_min exceeds n_max");
    std::vector<GenSpec> out;
    for (int i = 0; i < spec.count; ++i) {
        const std::uint64_t seed = spec.seed0 + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(seed);
        const int n = spec.n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1));
        out.push_back({spec.kind, n, seed, -1, {}});
    }
    return out;
}

namespace {

InstanceReport run_instance(int id, const GenSpec& spec, Algorithm a, const RepairBudget& budget, int oracle_max_edges)
{
    InstanceReport r;
    r.id = id;
    r.spec = spec;
    try {
        const auto emb = generate(spec);
        r.n = emb.num_vertices();
        r.m = emb.num_edges();
        r.max_degree = emb.max_degree();
        const auto dec = decompose(emb);
        auto res = run_algorithm(emb, dec, a, budget);
        r.stats = res.stats;
        r.violations = verify(emb, res.coloring, element_set(a)).size();
        r.valid = r.violations == 0;
        r.target_met = r.valid && res.stats.palette_used <= res.stats.target_palette;
        if (oracle_max_edges > 0 && r.m <= oracle_max_edges) {
            OracleLimits lim;
            lim.max_vertices = r.n;
            lim.max_edges = r.m;
            r.oracle = exact_colors(emb, element_set(a), res.stats.palette_used, lim);
        }
    } catch (const Error& e) {
        r.error = std::string(to_string(e.kind()));
    }
    return r;
}

} // namespace

CorpusReport run_corpus(const std::vector<GenSpec>& corpus, Algorithm a, const RepairBudget& budget, int threads,
                        int oracle_max_edges)
{
    CorpusReport rep;
    rep.instances.resize(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();)
            rep.instances[i] = run_instance(static_cast<int>(i), corpus[i], a, budget, oracle_max_edges);
    };
    const int k = std::max(1, std::min<int>(threads, static_cast<int>(corpus.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < k; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const auto& r : rep.instances) {
        rep.valid += r.valid;
        rep.target_met += r.target_met;
        rep.errors += !r.error.empty();
        if (r.oracle) {
            ++rep.oracle_checked;
            rep.oracle_equal += *r.oracle == r.stats.palette_used;
        }
    }
    return rep;
}

Json report_to_json(const CorpusReport& rep, bool with_timing)
{
    Json inst = Json::array();
    for (const auto& r : rep.instances) {
        Json j = {{"id", r.id},
                  {"seed", r.spec.seed},
                  {"n", r.n},
                  {"m", r.m},
                  {"max_degree", r.max_degree},
                  {"valid", r.valid},
                  {"target_met", r.target_met},
                  {"violations", r.violations},
                  {"stats", stats_to_json(r.stats, with_timing)}};
        j["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
        j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
        inst.push_back(j);
    }
    const int total = static_cast<int>(rep.instances.size());
    auto rate = [&](int k, int of) { return of == 0 ? Json(nullptr) : Json(static_cast<double>(k) / of); };
    return {{"instances", inst},
            {"aggregate",
             {{"count", total},
              {"valid", rep.valid},
              {"target_met", rep.target_met},
              {"errors", rep.errors},
              {"valid_rate", rate(rep.valid, total)},
              {"target_rate", rate(rep.target_met, total)},
              {"oracle_checked", rep.oracle_checked},
              {"oracle_equal", rep.oracle_equal},
              {"oracle_rate", rate(rep.oracle_equal, rep.oracle_checked)}}}};
}

std::string report_table(const CorpusReport& rep)
{
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%5s %10s %5s %6s %4s %6s %7s %6s %6s %8s %s\n", "id", "seed", "n", "m", "D", "pal",
                  "target", "valid", "kempe", "fallback", "error");
    out += buf;
    for (const auto& r : rep.instances) {
        std::snprintf(buf, sizeof buf, "%5d %10llu %5d %6d %4d %6d %7s %6s %6lld %8lld %s\n", r.id,
                      static_cast<unsigned long long>(r.spec.seed), r.n, r.m, r.max_degree, r.stats.palette_used,
                      r.target_met ? "yes" : "no", r.valid ? "yes" : "no",
                      static_cast<long long>(r.stats.kempe_switches), static_cast<long long>(r.stats.fallback_switches),
                      r.error.empty() ? "-" : r.error.c_str());
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "instances %zu  valid %d  target %d  errors %d  oracle %d/%d\n",
                  rep.instances.size(), rep.valid, rep.target_met, rep.errors, rep.oracle_equal, rep.oracle_checked);
    out += buf;
    return out;
}

} // namespace spiralcolor
