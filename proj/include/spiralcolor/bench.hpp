#pragma once

// Algorithm dispatch and the corpus runner behind `bench`.

#include "spiralcolor/generate.hpp"
#include "spiralcolor/io.hpp"

#include <optional>
#include <string>

namespace spiralcolor {

enum class Algorithm { Vertex, Edge, Total, Entire, Three };

Algorithm parse_algorithm(const std::string& name); ///< throws InvalidArgument
std::string to_string(Algorithm algorithm);
ElementSet element_set(Algorithm algorithm);

ColoringResult run_algorithm(const PlanarEmbedding& embedding, const SpiralDecomposition& decomposition,
                             Algorithm algorithm, const RepairBudget& budget = {});

/// `count` instances; instance i uses seed seed0 + i and a size drawn from
/// [n_min, n_max] by a generator seeded with that seed.
struct CorpusSpec {
    GenKind kind = GenKind::Maximal;
    int count = 100;
    int n_min = 4;
    int n_max = 60;
    std::uint64_t seed0 = 1;
};

std::vector<GenSpec> corpus_specs(const CorpusSpec& spec);

struct InstanceReport {
    int id = 0;
    GenSpec spec;
    int n = 0;
    int m = 0;
    int max_degree = 0;
    bool valid = false;
    bool target_met = false;
    std::size_t violations = 0;
    std::optional<int> oracle; ///< exact optimum for small instances
    std::string error;         ///< error kind name when the pipeline threw
    RunStats stats;
};

struct CorpusReport {
    std::vector<InstanceReport> instances; ///< sorted by id
    int valid = 0;
    int target_met = 0;
    int errors = 0;
    int oracle_checked = 0;
    int oracle_equal = 0; ///< palette used equals the exact optimum
};

/// Failures are recorded per instance and never abort the batch. Instances
/// are processed by `threads` workers; the report does not depend on it.
/// Oracles run when the instance has at most `oracle_max_edges` edges (0 = off).
CorpusReport run_corpus(const std::vector<GenSpec>& corpus, Algorithm algorithm, const RepairBudget& budget = {},
                        int threads = 1, int oracle_max_edges = 0);

Json report_to_json(const CorpusReport& report, bool with_timing = false);
std::string report_table(const CorpusReport& report);

} // namespace spiralcolor
