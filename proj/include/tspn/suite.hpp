// Batch property suite: a fixed 200-instance batch (4 kinds x n in
// {4,8,16,32}, seeds derived from a base seed) run through the pipeline,
// aggregated into the acceptance checks that can be evaluated without
// test-only code (the oracle cross-check solver lives with the tests).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tspn/instance.hpp"
#include "tspn/pipeline.hpp"

namespace tspn {

// Empirical ratio regression bound: 1.1 x the maximum pipeline/oracle ratio
// observed on the calibration batch (base seed 20240601, 200 runs).
extern const double kRatioRegressionBound;

struct SuiteConfig {
    std::uint64_t base_seed = 20240601;
    int runs = 200;
    RunConfig::Solver solver = RunConfig::Solver::greedy;
    int jobs = 0;             // 0 = hardware concurrency
    std::string out_dir;      // when set, per-run reports are written here
    bool check_determinism = true;  // re-run the batch and compare report bytes
};

struct BatchCase {
    InstanceKind kind;
    int n;
    std::uint64_t seed;
    std::string label;  // kind-n-seed
};

std::vector<BatchCase> suite_batch(const SuiteConfig& cfg);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    int runs = 0;
    int oracle_runs = 0;
    int finite_ratio_runs = 0;
    double ratio_median = 0.0;
    double ratio_max = 0.0;
    double total_seconds = 0.0;
    std::string batch_digest;  // FNV over the concatenated report bytes
};

SuiteResult run_suite(const SuiteConfig& cfg);

std::string format_suite_result(const SuiteResult& res);

}  // namespace tspn
