// spiralcolor command-line tool.
// Exit codes: 0 success, 1 validation failure, 2 budget exhausted, 3 input error.

#include "spiralcolor/bench.hpp"
#include "spiralcolor/error.hpp"
#include "spiralcolor/layout.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spiralcolor;

namespace {

struct Options {
    std::string input;
    std::string kind = "maximal";
    std::string name;
    int n = 12;
    std::uint64_t seed = 1;
    int flips = -1;
    std::optional<int> start;
    bool ccw = false;
    std::int64_t budget_switches = RepairBudget{}.max_kempe_switches;
    std::int64_t budget_backtracks = RepairBudget{}.max_backtrack_nodes;
    int palette_cap = 0;
    std::string format = "json";
    std::string out;
    bool timing = false;
};

void add_source(CLI::App* app, Options& o)
{
    app->add_option("input", o.input, ".rot file (omit to generate from --kind/--n/--seed)");
    app->add_option("--kind", o.kind, "generator: maximal, trianglefree, outerplanar, named")
        ->check(CLI::IsMember({"maximal", "trianglefree", "outerplanar", "named"}));
    app->add_option("--name", o.name, "named instance (implies --kind named)");
    app->add_option("--n", o.n, "vertex count for generated inputs");
    app->add_option("--seed", o.seed, "generator seed");
    app->add_option("--flips", o.flips, "edge flips for maximal inputs (-1 = 2n)");
}

void add_decomposition(CLI::App* app, Options& o)
{
    app->add_option("--start", o.start, "first spiral vertex (on the outer face)");
    app->add_flag("--ccw", o.ccw, "walk counterclockwise");
}

void add_budget(CLI::App* app, Options& o)
{
    app->add_option("--budget-switches", o.budget_switches, "maximum Kempe switches");
    app->add_option("--budget-backtracks", o.budget_backtracks, "maximum backtracking nodes");
    app->add_option("--palette-cap", o.palette_cap, "hard palette cap (0 = algorithm default)");
}

void add_output(CLI::App* app, Options& o, bool with_format = true)
{
    if (with_format)
        app->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app->add_option("--out", o.out, "output file (default stdout)");
}

PlanarEmbedding load(const Options& o)
{
    if (!o.input.empty())
        return read_rot_file(o.input);
    if (!o.name.empty() || o.kind == "named")
        return named_instance(o.name);
    if (o.kind == "outerplanar")
        return gen_maximal_outerplanar(o.n, o.seed);
    GenSpec spec{o.kind == "trianglefree" ? GenKind::TriangleFree : GenKind::Maximal, o.n, o.seed, o.flips, {}};
    return generate(spec);
}

SpiralDecomposition decomposition(const PlanarEmbedding& emb, const Options& o)
{
    return decompose(emb, o.start, o.ccw ? Direction::Counterclockwise : Direction::Clockwise);
}

RepairBudget budget(const Options& o)
{
    return {o.budget_switches, o.budget_backtracks, o.palette_cap};
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::InvalidArgument, "cannot write " + o.out);
    f << text;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

ElementSet parse_set(const std::string& s)
{
    if (s == "three")
        return ElementSet::Vertices;
    return element_set(parse_algorithm(s));
}

std::string stats_text(const RunStats& s)
{
    std::ostringstream t;
    t << "palette_used " << s.palette_used << " (target " << s.target_palette << ", cap " << s.hard_cap << ")\n"
      << "kempe_switches " << s.kempe_switches << "\nfallback_switches " << s.fallback_switches
      << "\nm_kempe_switches " << s.m_kempe_switches << "\nbacktrack_nodes " << s.backtrack_nodes
      << "\noverflow_elements " << s.overflow_elements << "\nreconciliation_activations "
      << s.reconciliation_activations << "\ncensus alpha " << s.census.alpha << " beta " << s.census.beta
      << " gamma " << s.census.gamma << "\nchains " << s.chains << "\nsailing_boats " << s.sailing_boats << "\n";
    return t.str();
}

int exit_code(ErrorKind k)
{
    return k == ErrorKind::BudgetExhausted || k == ErrorKind::CapExceeded ? 2 : 3;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spiral-chain colouring of plane graphs"};
    app.require_subcommand(1);
    Options o;
    int code = 0;

    auto* gen = app.add_subcommand("gen", "generate a plane graph");
    add_source(gen, o);
    gen->add_option("--format", o.format, "rot or dimacs")->check(CLI::IsMember({"rot", "dimacs"}));
    gen->add_option("--out", o.out, "output file (default stdout)");
    gen->callback([&] {
        if (o.format == "json")
            o.format = "rot";
        const auto emb = load(o);
        emit(o, o.format == "dimacs" ? to_dimacs(emb) : to_rot(emb));
    });

    auto* dec = app.add_subcommand("decompose", "spiral chain decomposition");
    add_source(dec, o);
    add_decomposition(dec, o);
    add_output(dec, o);
    dec->callback([&] {
        const auto emb = load(o);
        const auto d = decomposition(emb, o);
        if (o.format == "json")
            return emit(o, dump(decomposition_to_json(emb, d)));
        std::ostringstream t;
        for (std::size_t i = 0; i < d.chains.size(); ++i) {
            t << "S" << i + 1 << ":";
            for (VertexId v : d.chains[i].vertices)
                t << " " << v;
            t << "\n";
        }
        if (is_maximal_planar(emb)) {
            const auto c = triangle_census(emb, d);
            t << "census alpha " << c.alpha << " beta " << c.beta << " gamma " << c.gamma << "\n";
        }
        for (const auto& a : d.anomalies)
            t << "anomaly: " << a << "\n";
        emit(o, t.str());
    });

    auto* color = app.add_subcommand("color", "colour with a spiral algorithm");
    std::string algorithm;
    color->add_option("algorithm", algorithm, "vertex, edge, total, entire or three")
        ->required()
        ->check(CLI::IsMember({"vertex", "edge", "total", "entire", "three"}));
    add_source(color, o);
    add_decomposition(color, o);
    add_budget(color, o);
    add_output(color, o);
    color->add_flag("--timing", o.timing, "include wall time in the output");
    color->callback([&] {
        const auto emb = load(o);
        const auto d = decomposition(emb, o);
        const auto a = parse_algorithm(algorithm);
        const auto r = run_algorithm(emb, d, a, budget(o));
        const auto violations = verify(emb, r.coloring, element_set(a));
        if (o.format == "json")
            emit(o, dump(result_to_json(r, o.timing)));
        else
            emit(o, stats_text(r.stats) + "violations " + std::to_string(violations.size()) + "\n");
        code = violations.empty() ? 0 : 1;
    });

    auto* ver = app.add_subcommand("verify", "check a colouring document against a graph");
    std::string coloring_path, set_name = "vertex";
    add_source(ver, o);
    ver->add_option("--coloring", coloring_path, "colouring JSON")->required();
    ver->add_option("--set", set_name, "vertex, edge, total or entire")
        ->check(CLI::IsMember({"vertex", "edge", "total", "entire", "three"}));
    add_output(ver, o);
    ver->callback([&] {
        const auto emb = load(o);
        Json doc;
        try {
            doc = Json::parse(read_file(coloring_path));
        } catch (const Json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
        const auto violations = verify(emb, coloring_from_json(doc), parse_set(set_name));
        if (o.format == "json")
            emit(o, dump({{"valid", violations.empty()}, {"violations", violations_to_json(violations)}}));
        else {
            std::string t = violations.empty() ? "valid\n" : "";
            for (const auto& v : violations)
                t += to_string(v.kind) + " " + std::to_string(v.first.id) + " " + std::to_string(v.second.id) + "\n";
            emit(o, t);
        }
        code = violations.empty() ? 0 : 1;
    });

    auto* orc = app.add_subcommand("oracle", "exact optimum by backtracking (small inputs)");
    int cap = 32;
    add_source(orc, o);
    orc->add_option("--set", set_name, "vertex, edge, total or entire")
        ->check(CLI::IsMember({"vertex", "edge", "total", "entire"}));
    orc->add_option("--cap", cap, "largest palette tried");
    orc->add_option("--budget-backtracks", o.budget_backtracks, "maximum backtracking nodes");
    add_output(orc, o);
    orc->callback([&] {
        const auto emb = load(o);
        OracleLimits lim;
        lim.node_limit = o.budget_backtracks;
        const int k = exact_colors(emb, parse_set(set_name), cap, lim);
        emit(o, o.format == "json" ? dump({{"set", set_name}, {"optimum", k}}) : std::to_string(k) + "\n");
    });

    auto* ren = app.add_subcommand("render", "SVG drawing (Tutte layout)");
    std::string render_algorithm;
    add_source(ren, o);
    add_decomposition(ren, o);
    add_budget(ren, o);
    ren->add_option("--color", render_algorithm, "colour first with this algorithm")
        ->check(CLI::IsMember({"vertex", "edge", "total", "entire", "three"}));
    add_output(ren, o, false);
    ren->callback([&] {
        const auto emb = load(o);
        const auto d = decomposition(emb, o);
        const auto layout = tutte_layout(emb);
        for (const auto& w : layout.warnings)
            std::cerr << "warning: " << w << "\n";
        std::optional<ColoringResult> r;
        if (!render_algorithm.empty())
            r = run_algorithm(emb, d, parse_algorithm(render_algorithm), budget(o));
        emit(o, render_svg(emb, layout, r ? &r->coloring : nullptr, &d));
    });

    auto* bench = app.add_subcommand("bench", "run an algorithm over a generated corpus");
    CorpusSpec corpus;
    std::string bench_algorithm = "vertex";
    int threads = 1, oracle_edges = 0;
    bench->add_option("--algorithm", bench_algorithm, "vertex, edge, total, entire or three")
        ->check(CLI::IsMember({"vertex", "edge", "total", "entire", "three"}));
    bench->add_option("--kind", o.kind, "maximal or trianglefree")
        ->check(CLI::IsMember({"maximal", "trianglefree"}));
    bench->add_option("--count", corpus.count, "instances");
    bench->add_option("--n-min", corpus.n_min, "smallest n");
    bench->add_option("--n-max", corpus.n_max, "largest n");
    bench->add_option("--seed", corpus.seed0, "seed of instance 0");
    bench->add_option("--threads", threads, "worker threads");
    bench->add_option("--oracle-edges", oracle_edges, "run exact oracles up to this many edges");
    add_budget(bench, o);
    add_output(bench, o);
    bench->add_flag("--timing", o.timing, "include wall time in the output");
    bench->callback([&] {
        corpus.kind = o.kind == "trianglefree" ? GenKind::TriangleFree : GenKind::Maximal;
        const auto rep =
            run_corpus(corpus_specs(corpus), parse_algorithm(bench_algorithm), budget(o), threads, oracle_edges);
        emit(o, o.format == "json" ? dump(report_to_json(rep, o.timing)) : report_table(rep));
        code = rep.valid == static_cast<int>(rep.instances.size()) ? 0 : 1;
    });

    auto* exp = app.add_subcommand("export", "DIMACS edge list");
    add_source(exp, o);
    exp->add_option("--out", o.out, "output file (default stdout)");
    exp->callback([&] { emit(o, to_dimacs(load(o))); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return code;
}
