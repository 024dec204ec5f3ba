#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jumpkit/convex_body.hpp"
#include "jumpkit/oscillatory.hpp"
#include "jumpkit/result_table.hpp"
#include "jumpkit/sampled_path.hpp"

namespace jumpkit {

struct DimensionSweepConfig {
    int d_min = 1, d_max = 6;
    int M = 16;
    std::vector<int> N{1, 2, 4};  // cube radii, the lacunary times of the path
    int fields = 50;
    std::vector<double> p{1.51, 2, 3};
    std::string field_kind = "normal";  // normal | zero
    bool delta = true;                  // also run the unit mass at the origin
    double growth_limit = 1.5;
    // optional l^q-ball averages at the given radii, run on the same random fields
    std::vector<double> convex_q;
    std::vector<double> convex_t;
    // explicit mode: the field's paths go straight to the seminorm
    std::optional<FieldOfPaths> field;
};

struct VdcEntry {
    bool multi = false;
    PhaseSpec phase;
    AmplitudeSpec amplitude;
    std::vector<double> lambdas;  // 1-d: lambda of the monomial phase
    std::vector<double> scales;   // multi: factor applied to every coefficient
    double R = 1;
};

struct VdcSweepConfig {
    std::vector<VdcEntry> corpus;
    double constant = 0;  // rows with ratio above this are flagged; 0 disables
};

struct BoundaryConfig {
    std::vector<ConvexBodySpec> bodies;
    std::vector<int> s_exponents{2, 3, 4, 5, 6, 7, 8};  // s = diam 2^-j
    std::vector<double> s;                                // absolute radii, used instead when given
    std::uint64_t samples = 1000000;
};

struct SymbolConfig {
    std::vector<std::string> checks{"resolution", "lp-bound", "off-diagonal", "discrete", "cube-envelope"};
    std::vector<int> dims{1, 2, 4};
    std::vector<int> discrete_dims{1, 2, 3, 4, 5, 6};
    std::uint64_t grid_points = 1000;
    int K = 20;
    int j_max = 20;
    int k_range = 40;
    int n_max = 64;
};

struct JumpCorpusConfig {
    std::uint64_t paths = 10000;
    int max_len = 32;
    std::vector<double> lambdas{0.5, 1, 1.5};
    std::vector<double> r{1, 1.5, 2, 3};
};

// Single-object queries behind the jump-count, variation, jump-seminorm and lewko commands.
struct PointQueryConfig {
    std::optional<SampledPath> path;
    std::optional<FieldOfPaths> field;
    std::vector<double> values;  // lambda, r or p
};

struct ExperimentConfig {
    // dimension-sweep | vdc-sweep | symbol-envelope | boundary-measure | jump-corpus |
    // jump-count | variation | jump-seminorm | lewko
    std::string kind;
    std::uint64_t seed = 0;
    std::string canonical;  // sorted-key JSON of the effective config, seed included
    std::variant<DimensionSweepConfig, VdcSweepConfig, BoundaryConfig, SymbolConfig, JumpCorpusConfig,
                 PointQueryConfig>
        params;

    std::string hash() const;
};

// Validates against the schema of `kind` (unknown keys rejected). A "kind" key in the text must
// agree with the argument; a seed override replaces the config's seed.
ExperimentConfig parse_experiment_config(const std::string& kind, const std::string& json_text,
                                         std::optional<std::uint64_t> seed_override = std::nullopt);

ResultTable run_experiment(const ExperimentConfig& config);
ResultTable run_dimension_sweep(const ExperimentConfig& config);
ResultTable run_vdc_sweep(const ExperimentConfig& config);
ResultTable run_boundary_sweep(const ExperimentConfig& config);
ResultTable run_symbol_checks(const ExperimentConfig& config);
ResultTable run_jump_corpus(const ExperimentConfig& config);
ResultTable run_point_query(const ExperimentConfig& config);

}  // namespace jumpkit
