#include "tspn/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <thread>

#include "tspn/format.hpp"
#include "tspn/hitting_set.hpp"

namespace tspn {

// Calibrated on the default batch; see README for the recalibration protocol.
const double kRatioRegressionBound = 40.7;

std::vector<BatchCase> suite_batch(const SuiteConfig& cfg) {
    static const InstanceKind kinds[] = {InstanceKind::uniform, InstanceKind::clustered,
                                         InstanceKind::nested, InstanceKind::touching_chain};
    static const int sizes[] = {4, 8, 16, 32};
    std::vector<BatchCase> batch;
    batch.reserve(cfg.runs);
    for (int k = 0; k < cfg.runs; ++k) {
        BatchCase c;
        c.kind = kinds[k % 4];
        c.n = sizes[(k / 4) % 4];
        c.seed = cfg.base_seed + static_cast<std::uint64_t>(k);
        c.label = to_string(c.kind) + "-n" + std::to_string(c.n) + "-s" + std::to_string(c.seed);
        batch.push_back(std::move(c));
    }
    return batch;
}

namespace {

template <typename Fn>
void parallel_for(int count, int jobs, Fn fn) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

double harmonic(int m) {
    double h = 0.0;
    for (int k = 1; k <= m; ++k) h += 1.0 / k;
    return h;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<BatchCase> batch = suite_batch(cfg);
    const int runs = static_cast<int>(batch.size());

    std::vector<Instance> instances(runs);
    for (int i = 0; i < runs; ++i) {
        instances[i] = generate_instance(batch[i].kind, batch[i].n, batch[i].seed);
    }

    RunConfig rc;
    rc.solver = cfg.solver;
    rc.oracle = RunConfig::OracleMode::automatic;

    std::vector<RunReport> reports(runs);
    std::vector<std::string> report_bytes(runs);
    parallel_for(runs, cfg.jobs, [&](int i) {
        RunConfig one = rc;
        one.seed = batch[i].seed;
        reports[i] = run_pipeline(instances[i], one);
        report_bytes[i] = serialize_report(reports[i]);
    });

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        for (int i = 0; i < runs; ++i) {
            std::ofstream f(cfg.out_dir + "/" + batch[i].label + ".report", std::ios::binary);
            f << report_bytes[i];
        }
    }

    SuiteResult res;
    res.runs = runs;

    // 1. every recorded lemma/invariant passes on every run
    {
        int failures = 0;
        std::string first;
        for (int i = 0; i < runs; ++i) {
            if (!reports[i].all_properties_pass) {
                ++failures;
                if (first.empty()) {
                    for (const PropertyOutcome& p : reports[i].properties) {
                        if (!p.pass) {
                            first = batch[i].label + ": " + p.name +
                                    " observed=" + format_double(p.observed);
                            break;
                        }
                    }
                }
            }
        }
        res.criteria.push_back({1, "lemma suite 100% pass",
                                failures == 0,
                                failures == 0 ? std::to_string(runs) + " runs clean"
                                              : std::to_string(failures) +
                                                    " failing runs; first: " + first});
    }

    // 2. grid bounds on the full batch
    {
        bool ok = true;
        std::string detail;
        int max_cells = 0;
        for (int i = 0; i < runs; ++i) {
            const auto* min_diam = reports[i].find_property("grid_min_diam");
            const auto* count = reports[i].find_property("grid_count");
            max_cells = std::max(max_cells, reports[i].grid_squares);
            if (!min_diam || !min_diam->pass || !count || !count->pass) {
                ok = false;
                if (detail.empty()) detail = batch[i].label;
            }
        }
        res.criteria.push_back({2, "grid bounds (diam >= r/4n, |Q| <= 64n^2)", ok,
                                ok ? "max |Q| = " + std::to_string(max_cells)
                                   : "violated at " + detail});
    }

    // 3. end-to-end validity
    {
        int invalid = 0;
        std::string first;
        for (int i = 0; i < runs; ++i) {
            if (!reports[i].validation.valid) {
                ++invalid;
                if (first.empty()) first = batch[i].label;
            }
        }
        res.criteria.push_back({3, "validate_tour passes on 100% of the batch", invalid == 0,
                                invalid == 0 ? "all tours valid"
                                             : std::to_string(invalid) + " invalid; first: " +
                                                   first});
    }

    // 4. length identity and G2 bound on every run
    {
        bool ok = true;
        std::string first;
        for (int i = 0; i < runs; ++i) {
            const auto* ident = reports[i].find_property("euler_length_identity");
            const auto* g2 = reports[i].find_property("g2_len_le_r");
            if (!ident || !ident->pass || !g2 || !g2->pass) {
                ok = false;
                if (first.empty()) first = batch[i].label;
            }
        }
        res.criteria.push_back({4, "tour = 2(G1+G2+G3) and len(G2) <= r", ok,
                                ok ? "identities hold" : "violated at " + first});
    }

    // 5. oracle lower bound and ratio regression
    {
        bool ok = true;
        std::string first;
        std::vector<double> ratios;
        for (int i = 0; i < runs; ++i) {
            if (!reports[i].oracle_ran) continue;
            ++res.oracle_runs;
            const auto* lb = reports[i].find_property("oracle_lower_bound");
            if (!lb || !lb->pass) {
                ok = false;
                if (first.empty()) first = batch[i].label + " (lower bound)";
            }
            if (reports[i].ratio_finite) ratios.push_back(reports[i].ratio);
        }
        res.finite_ratio_runs = static_cast<int>(ratios.size());
        if (!ratios.empty()) {
            std::sort(ratios.begin(), ratios.end());
            res.ratio_median = ratios[ratios.size() / 2];
            res.ratio_max = ratios.back();
            if (res.ratio_max > kRatioRegressionBound) {
                ok = false;
                if (first.empty()) {
                    first = "max ratio " + format_double(res.ratio_max) + " > bound " +
                            format_double(kRatioRegressionBound);
                }
            }
        }
        res.criteria.push_back(
            {5, "oracle ratio (lower bound + regression)", ok,
             "oracle on " + std::to_string(res.oracle_runs) + " runs, finite ratios " +
                 std::to_string(res.finite_ratio_runs) + ", median " +
                 format_double(res.ratio_median) + ", max " + format_double(res.ratio_max) +
                 ", bound " + format_double(kRatioRegressionBound) +
                 (ok ? "" : "; FAIL: " + first)});
    }

    // 6. greedy validity plus the H(m) guarantee against the exact solver
    {
        bool ok = true;
        std::string first;
        int compared = 0;
        for (int i = 0; i < runs; ++i) {
            const RunReport& rep = reports[i];
            if (rep.pre.partition.s3.empty()) continue;
            const auto* valid = rep.find_property("hitting_set_valid");
            if (!valid || !valid->pass) {
                ok = false;
                if (first.empty()) first = batch[i].label + " (validity)";
                continue;
            }
            if (rep.sentinel_count > 20) continue;
            const SentinelHypergraph h =
                build_sentinel_hypergraph(rep.grid, instances[i], rep.pre.partition.s3);
            const HittingSetSolution greedy = greedy_mwhs(h);
            const HittingSetSolution exact = exact_mwhs(h, 20);
            int m = 0;
            for (std::size_t s = 0; s < h.sentinels.size(); ++s) {
                int cnt = 0;
                for (const auto& e : h.edges) {
                    if (std::find(e.begin(), e.end(), static_cast<int>(s)) != e.end()) ++cnt;
                }
                m = std::max(m, cnt);
            }
            ++compared;
            if (greedy.weight > harmonic(m) * exact.weight * (1.0 + 1e-9)) {
                ok = false;
                if (first.empty()) {
                    first = batch[i].label + " greedy " + format_double(greedy.weight) +
                            " > H(" + std::to_string(m) + ") * " + format_double(exact.weight);
                }
            }
        }
        res.criteria.push_back({6, "greedy MWHS validity and H(m) guarantee", ok,
                                ok ? std::to_string(compared) + " exact comparisons"
                                   : "FAIL: " + first});
    }

    // 8. byte-identical reports on a second pass (criterion 7 is the oracle
    // cross-check and lives with the test-only solver).
    if (cfg.check_determinism) {
        std::vector<char> same(runs, 1);
        parallel_for(runs, cfg.jobs, [&](int i) {
            RunConfig one = rc;
            one.seed = batch[i].seed;
            const RunReport again = run_pipeline(instances[i], one);
            same[i] = serialize_report(again) == report_bytes[i];
        });
        int mismatches = 0;
        std::string first;
        for (int i = 0; i < runs; ++i) {
            if (!same[i]) {
                ++mismatches;
                if (first.empty()) first = batch[i].label;
            }
        }
        res.criteria.push_back({8, "byte-identical reports across identical batches",
                                mismatches == 0,
                                mismatches == 0 ? "second pass identical"
                                                : std::to_string(mismatches) +
                                                      " mismatches; first: " + first});
    }

    std::string all_bytes;
    for (const std::string& b : report_bytes) all_bytes += b;
    res.batch_digest = fnv1a_hex(all_bytes);

    res.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.all_pass = true;
    for (const CriterionResult& c : res.criteria) {
        if (!c.pass) res.all_pass = false;
    }
    return res;
}

std::string format_suite_result(const SuiteResult& res) {
    std::string out;
    for (const CriterionResult& c : res.criteria) {
        out += std::string(c.pass ? "PASS" : "FAIL") + " - criterion " + std::to_string(c.id) +
               ": " + c.name + " (" + c.detail + ")\n";
    }
    out += "batch: " + std::to_string(res.runs) + " runs, digest " + res.batch_digest + ", " +
           format_double(res.total_seconds) + " s\n";
    return out;
}

}  // namespace tspn
