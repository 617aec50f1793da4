// End-to-end pipeline: preprocess -> stratified grid -> hypergraphs ->
// hitting set -> tour assembly -> validation, with every structural
// guarantee of the construction evaluated per run and recorded in the
// report. Reports serialize deterministically (timings stay out of the
// byte stream and go to the log instead).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tspn/hitting_set.hpp"
#include "tspn/instance.hpp"
#include "tspn/preprocess.hpp"
#include "tspn/stratified_grid.hpp"
#include "tspn/tour_assembly.hpp"

namespace tspn {

struct RunConfig {
    enum class Solver { greedy, exact };
    enum class OracleMode { off, on, automatic };

    Solver solver = Solver::greedy;
    OracleMode oracle = OracleMode::automatic;
    int oracle_limit = 8;
    std::uint64_t seed = 0;  // recorded in reports; the pipeline itself is deterministic

    // Relative tolerances, scaled by max(r, instance scale) at run time.
    double tau_id_rel = 1e-9;       // vertex identification
    double eps_v_rel = 1e-9;        // tour validation
    double touring_tol_rel = 1e-10; // touring convergence (x instance scale)

    bool emit_svg = false;
    bool emit_report = true;

    void validate() const;
};

struct PropertyOutcome {
    std::string name;
    bool pass = false;
    double observed = 0.0;  // worst observed excess/count, <= bound when passing
    double bound = 0.0;
    std::string detail;
};

struct RunReport {
    std::string digest;
    int n = 0;
    double scale = 0.0;
    double r = 0.0;
    int independent_count = 0;
    int s1 = 0, s2 = 0, s3 = 0;
    int grid_squares = 0;
    int grid_max_depth = 0;
    int sentinel_count = 0;
    std::string solver = "none";
    int hitting_chosen = 0;
    double hitting_weight = 0.0;
    double len_g1 = 0.0, len_g2 = 0.0, len_g3 = 0.0;
    double tour_length = 0.0;
    bool oracle_ran = false;
    double oracle_length = 0.0;
    bool ratio_finite = false;
    double ratio = 0.0;
    double kappa_sentinel = 0.0;   // max sentinel weight / owner diameter
    double lift_weight_ratio = 0.0;  // sum diam(H) / hitting weight
    double lemma6_constant = 0.0;  // logged only; 0 when unavailable
    ValidationReport validation;
    std::vector<PropertyOutcome> properties;
    bool all_properties_pass = false;

    // Wall-clock timings (milliseconds); never serialized.
    double ms_preprocess = 0.0, ms_grid = 0.0, ms_hitting = 0.0, ms_assembly = 0.0,
           ms_oracle = 0.0, ms_total = 0.0;

    // Artifacts for rendering and downstream checks.
    PreprocessResult pre;
    StratifiedGrid grid;
    std::vector<int> chosen_squares;
    std::vector<Point> chosen_sentinel_points;
    GeometricGraph g3;
    Tour tour;

    const PropertyOutcome* find_property(const std::string& name) const;
};

RunReport run_pipeline(const Instance& inst, const RunConfig& cfg);

// Flat key-value document plus the per-property table and the tour vertex
// list; byte-deterministic for identical (instance, config).
std::string serialize_report(const RunReport& rep);

}  // namespace tspn
