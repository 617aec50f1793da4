#include "tspn/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "tspn/format.hpp"
#include "tspn/oracle.hpp"

namespace tspn {

void RunConfig::validate() const {
    if (tau_id_rel <= 0.0 || eps_v_rel <= 0.0 || touring_tol_rel <= 0.0) {
        throw std::invalid_argument("config: tolerances must be positive");
    }
    if (oracle_limit < 1) throw std::invalid_argument("config: oracle_limit must be >= 1");
}

const PropertyOutcome* RunReport::find_property(const std::string& name) const {
    for (const PropertyOutcome& p : properties) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

// Sentinel weight bound constant (per owner diameter) and the lift weight
// ratio bound. Desk-scale constants; a violation is a finding, not noise.
constexpr double kKappaSentinelBound = 16.0;
constexpr double kLiftWeightBound = 16.0;
constexpr double kGridCountFactor = 64.0;

struct Checker {
    std::vector<PropertyOutcome>& out;
    double tol;

    // Passes iff observed_excess <= bound + tol.
    void excess(const std::string& name, double observed, double bound,
                const std::string& detail) {
        out.push_back({name, observed <= bound + tol, observed, bound, detail});
    }
    void boolean(const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok, ok ? 0.0 : 1.0, 0.0, detail});
    }
    void vacuous(const std::string& name, const std::string& why) {
        out.push_back({name, true, 0.0, 0.0, "vacuous: " + why});
    }
};

}  // namespace

RunReport run_pipeline(const Instance& inst, const RunConfig& cfg) {
    cfg.validate();
    inst.validate();
    const auto t_start = clock_type::now();

    RunReport rep;
    rep.digest = instance_digest(inst);
    rep.n = static_cast<int>(inst.size());
    rep.scale = inst.scale();

    // --- preprocess ---------------------------------------------------------
    auto t0 = clock_type::now();
    rep.pre = preprocess(inst, cfg.touring_tol_rel * rep.scale);
    rep.ms_preprocess = ms_since(t0);
    rep.r = rep.pre.r;
    rep.independent_count = static_cast<int>(rep.pre.independent.size());
    rep.s1 = static_cast<int>(rep.pre.partition.s1.size());
    rep.s2 = static_cast<int>(rep.pre.partition.s2.size());
    rep.s3 = static_cast<int>(rep.pre.partition.s3.size());
    rep.len_g1 = rep.pre.g1.length();
    rep.len_g2 = rep.pre.g2.length();

    const double scale_ref = std::max(rep.r, rep.scale);
    const double tau = cfg.tau_id_rel * scale_ref;
    const double eps_v = cfg.eps_v_rel * scale_ref;
    const double tol = 1e-9 * scale_ref;

    // --- stratified grid ----------------------------------------------------
    t0 = clock_type::now();
    rep.grid = stratify(rep.pre.bounding, rep.pre.g1, rep.n, rep.r);
    rep.ms_grid = ms_since(t0);
    rep.grid_squares = static_cast<int>(rep.grid.squares.size());
    rep.grid_max_depth = rep.grid.max_depth;

    // --- hitting set --------------------------------------------------------
    t0 = clock_type::now();
    SquareHypergraph square_hg;
    SentinelHypergraph sentinel_hg;
    HittingSetSolution solution;
    const bool have_s3 = !rep.pre.partition.s3.empty();
    if (have_s3) {
        square_hg = build_square_hypergraph(rep.grid, inst, rep.pre.partition.s3);
        sentinel_hg = build_sentinel_hypergraph(rep.grid, inst, rep.pre.partition.s3);
        rep.sentinel_count = static_cast<int>(sentinel_hg.sentinels.size());
        solution = cfg.solver == RunConfig::Solver::greedy ? greedy_mwhs(sentinel_hg)
                                                           : exact_mwhs(sentinel_hg);
        rep.solver = cfg.solver == RunConfig::Solver::greedy ? "greedy" : "exact";
        rep.hitting_chosen = static_cast<int>(solution.chosen.size());
        rep.hitting_weight = solution.weight;
        rep.chosen_squares = lift_to_squares(solution, sentinel_hg, rep.grid);
        for (int si : solution.chosen) {
            rep.chosen_sentinel_points.push_back(sentinel_hg.sentinels[si].location);
        }
        rep.g3 = build_g3(rep.chosen_squares, rep.grid, rep.pre.g1);
    }
    rep.ms_hitting = ms_since(t0);
    rep.len_g3 = rep.g3.length();

    // --- tour assembly and validation ---------------------------------------
    t0 = clock_type::now();
    rep.tour = assemble_tour(rep.pre.g1, rep.pre.g2, rep.g3, tau);
    rep.tour_length = rep.tour.length();
    rep.validation = validate_tour(rep.tour, inst, eps_v);
    rep.ms_assembly = ms_since(t0);

    // --- oracle --------------------------------------------------------------
    t0 = clock_type::now();
    const bool want_oracle = cfg.oracle == RunConfig::OracleMode::on ||
                             (cfg.oracle == RunConfig::OracleMode::automatic &&
                              rep.n <= cfg.oracle_limit);
    TouringSolution oracle_sol;
    if (want_oracle) {
        oracle_sol = optimal_tspn_small(inst, cfg.oracle_limit, cfg.touring_tol_rel);
        rep.oracle_ran = true;
        rep.oracle_length = oracle_sol.length;
        if (rep.oracle_length > 1e-12 * rep.scale) {
            rep.ratio_finite = true;
            rep.ratio = rep.tour_length / rep.oracle_length;
        }
    }
    rep.ms_oracle = ms_since(t0);

    // --- property suite -------------------------------------------------------
    Checker ck{rep.properties, tol};
    const GeometricGraph& g1 = rep.pre.g1;
    const double rn = rep.r / static_cast<double>(rep.n);

    {  // dist(D, G1) <= diam(D) for every disk
        double worst = -std::numeric_limits<double>::infinity();
        for (const Disk& d : inst.disks) {
            worst = std::max(worst, dist_disk_graph(d, g1) - d.diameter());
        }
        ck.excess("lemma1_dist_le_diam", worst, 0.0, "dist(D,G1) - diam(D) over all disks");
    }
    if (have_s3) {
        double worst_d = -std::numeric_limits<double>::infinity();
        double worst_diam = -std::numeric_limits<double>::infinity();
        for (int i : rep.pre.partition.s3) {
            worst_d = std::max(worst_d, rn - dist_disk_graph(inst.disks[i], g1));
            worst_diam = std::max(worst_diam, rn - inst.disks[i].diameter());
        }
        ck.excess("eq1_s3_dist_gt_rn", worst_d, 0.0, "r/n - dist(D,G1) over S3");
        ck.excess("cor1_s3_diam_gt_rn", worst_diam, 0.0, "r/n - diam(D) over S3");
    } else {
        ck.vacuous("eq1_s3_dist_gt_rn", "S3 empty");
        ck.vacuous("cor1_s3_diam_gt_rn", "S3 empty");
    }
    {  // partition sanity: S1 at distance 0; S2 in (0, r/n]
        double worst = -std::numeric_limits<double>::infinity();
        for (int i : rep.pre.partition.s1) {
            worst = std::max(worst, dist_disk_graph(inst.disks[i], g1));
        }
        for (int i : rep.pre.partition.s2) {
            worst = std::max(worst, dist_disk_graph(inst.disks[i], g1) - rn);
        }
        ck.excess("partition_thresholds", worst, 0.0, "S1 at distance 0, S2 within r/n");
        const bool sizes_ok = rep.s1 + rep.s2 + rep.s3 == rep.n;
        ck.boolean("partition_covers", sizes_ok, "S1+S2+S3 = S");
    }
    ck.boolean("g1_connected", g1.is_connected(tau), "G1 connected as a point set");
    {  // every independent disk touches xi0
        const GeometricGraph xi0_graph = rep.pre.xi0.as_graph();
        double worst = -std::numeric_limits<double>::infinity();
        for (int i : rep.pre.independent) {
            worst = std::max(worst, dist_disk_graph(inst.disks[i], xi0_graph));
        }
        ck.excess("xi0_hits_independent", worst, 0.0, "dist(D,xi0) over I");
    }
    {  // G1 u G2 covers S1 u S2
        GeometricGraph g12 = g1;
        g12.append(rep.pre.g2);
        double worst = -std::numeric_limits<double>::infinity();
        for (int i : rep.pre.partition.s1) {
            worst = std::max(worst, dist_disk_graph(inst.disks[i], g12));
        }
        for (int i : rep.pre.partition.s2) {
            worst = std::max(worst, dist_disk_graph(inst.disks[i], g12));
        }
        ck.excess("g1_g2_hit_s1_s2", worst, 0.0, "dist(D, G1 u G2) over S1 u S2");
    }
    {  // G2 length bound and summation identity
        double sum = 0.0;
        for (int i : rep.pre.partition.s2) sum += dist_disk_graph(inst.disks[i], g1);
        ck.excess("g2_len_le_r", rep.len_g2 - rep.r, 0.0, "len(G2) <= r");
        ck.excess("g2_len_identity", std::abs(rep.len_g2 - sum), 0.0,
                  "len(G2) = sum of S2 distances");
    }

    {  // grid structure
        double worst_stop = -std::numeric_limits<double>::infinity();
        double worst_l3 = -std::numeric_limits<double>::infinity();
        double worst_min_diam = -std::numeric_limits<double>::infinity();
        double worst_gamma_lo = -std::numeric_limits<double>::infinity();
        double worst_gamma_hi = -std::numeric_limits<double>::infinity();
        const double stop_threshold = rep.r / (2.0 * rep.n);
        for (const GridSquare& q : rep.grid.squares) {
            const double diam = q.diameter();
            if (q.cell.side > 0.0) {
                worst_stop = std::max(worst_stop,
                                      std::min(diam - stop_threshold, diam - q.dist_to_g1));
            }
            worst_l3 = std::max(worst_l3, q.dist_to_g1 - 3.0 * diam);
            worst_min_diam = std::max(worst_min_diam, rep.r / (4.0 * rep.n) - diam);
            const double gamma_len = 4.0 * q.cell.side + q.dist_to_g1;
            worst_gamma_lo = std::max(worst_gamma_lo, 2.0 * std::numbers::sqrt2 * diam - gamma_len);
            worst_gamma_hi = std::max(worst_gamma_hi,
                                      gamma_len - (3.0 + 2.0 * std::numbers::sqrt2) * diam);
        }
        ck.excess("stratify_stop_condition", worst_stop, 0.0,
                  "emitted squares satisfy diam < r/(2n) or diam < dist");
        ck.excess("lemma3_dist_le_3diam", worst_l3, 0.0, "dist(Q,G1) <= 3 diam(Q)");
        ck.excess("grid_min_diam", worst_min_diam, 0.0, "diam(Q) >= r/(4n)");
        ck.excess("cor2_gamma_lower", worst_gamma_lo, 0.0, "len(gamma) >= 2*sqrt2*diam");
        ck.excess("cor2_gamma_upper", worst_gamma_hi, 0.0, "len(gamma) <= (3+2*sqrt2)*diam");
        ck.excess("grid_count", static_cast<double>(rep.grid_squares),
                  kGridCountFactor * rep.n * rep.n, "|Q| <= 64 n^2");

        double area = 0.0;
        for (const GridSquare& q : rep.grid.squares) area += q.cell.side * q.cell.side;
        const double r2 = rep.r * rep.r;
        ck.excess("grid_tiling_area", std::abs(area - r2), 1e-6 * std::max(r2, tol * tol),
                  "cell areas sum to r^2");
        ck.boolean("grid_interiors_disjoint", grid_interiors_disjoint(rep.grid),
                   "exact dyadic interior disjointness");

        int worst_depth_gap = 0;
        std::vector<int> neighbor_count(rep.grid.squares.size(), 0);
        for (const auto& [a, b] : rep.grid.adjacency) {
            worst_depth_gap = std::max(
                worst_depth_gap, std::abs(rep.grid.squares[a].depth - rep.grid.squares[b].depth));
            neighbor_count[a]++;
            neighbor_count[b]++;
        }
        const int max_neighbors =
            neighbor_count.empty() ? 0 : *std::max_element(neighbor_count.begin(),
                                                           neighbor_count.end());
        ck.out.push_back({"lemma5_adjacent_depth_gap", worst_depth_gap <= 1,
                          static_cast<double>(worst_depth_gap), 1.0,
                          "adjacent cell depths differ by at most 1"});
        ck.out.push_back({"adjacency_max_neighbors", max_neighbors <= 12,
                          static_cast<double>(max_neighbors), 12.0,
                          "each cell has at most 12 neighbors"});
    }

    if (have_s3) {
        // incidence-level guarantees on the square hypergraph
        double worst_diam = -std::numeric_limits<double>::infinity();
        double worst_boundary = -std::numeric_limits<double>::infinity();
        double worst_sentinel = -std::numeric_limits<double>::infinity();
        for (std::size_t e = 0; e < square_hg.edges.size(); ++e) {
            const Disk& d = inst.disks[square_hg.edge_disks[e]];
            for (int qi : square_hg.edges[e]) {
                const GridSquare& q = rep.grid.squares[qi];
                worst_diam = std::max(worst_diam, q.diameter() - 2.0 * d.diameter());
                worst_boundary = std::max(
                    worst_boundary, dist_point_square_boundary(d.center, q.cell) - d.radius);
                double best = std::numeric_limits<double>::infinity();
                for (const Point& s : make_sentinels(q.cell)) {
                    best = std::min(best, dist(s, d.center) - d.radius);
                }
                worst_sentinel = std::max(worst_sentinel, best);
            }
        }
        ck.excess("lemma4_diam_le_2diam", worst_diam, 0.0,
                  "diam(Q) <= 2 diam(D) per incidence");
        ck.excess("lemma4_boundary_hit", worst_boundary, 0.0,
                  "D intersects the boundary of Q per incidence");
        ck.excess("lemma7_sentinel_in_disk", worst_sentinel, 0.0,
                  "an intersecting disk contains a sentinel of Q");

        double total_weight = 0.0;
        double kappa = 0.0;
        for (const Sentinel& s : sentinel_hg.sentinels) {
            total_weight += s.weight;
            for (int qi : s.owners) {
                kappa = std::max(kappa, s.weight / rep.grid.squares[qi].diameter());
            }
        }
        double total_diam = 0.0;
        for (const GridSquare& q : rep.grid.squares) total_diam += q.diameter();
        rep.kappa_sentinel = kappa;
        ck.excess("sentinel_total_weight", total_weight - 25.0 * total_diam, 0.0,
                  "sum of sentinel weights <= 25 sum of diameters");
        ck.out.push_back({"lemma8_sentinel_weight", kappa <= kKappaSentinelBound, kappa,
                          kKappaSentinelBound, "sentinel weight <= 16 x owner diameter"});

        // Lemma "lift" direction 1: sentinels generated by a square hitting
        // set hit every sentinel edge. (Uses the lifted set, which is itself
        // a square hitting set when direction 2 holds.)
        std::vector<char> from_h(sentinel_hg.sentinels.size(), 0);
        for (int qi : rep.chosen_squares) {
            for (std::size_t si = 0; si < sentinel_hg.sentinels.size(); ++si) {
                if (std::find(sentinel_hg.sentinels[si].owners.begin(),
                              sentinel_hg.sentinels[si].owners.end(),
                              qi) != sentinel_hg.sentinels[si].owners.end()) {
                    from_h[si] = 1;
                }
            }
        }
        bool dir1 = true;
        for (const auto& edge : sentinel_hg.edges) {
            bool hit = false;
            for (int si : edge) {
                if (from_h[si]) {
                    hit = true;
                    break;
                }
            }
            if (!hit) dir1 = false;
        }
        ck.boolean("lemma9_lift_sentinels_valid", dir1,
                   "sentinels of the lifted squares hit every sentinel edge");

        bool dir2 = true;
        {
            std::vector<char> in_h(rep.grid.squares.size(), 0);
            for (int qi : rep.chosen_squares) in_h[qi] = 1;
            for (const auto& edge : square_hg.edges) {
                bool hit = false;
                for (int qi : edge) {
                    if (in_h[qi]) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) dir2 = false;
            }
        }
        ck.boolean("lemma9_lift_squares_valid", dir2,
                   "lifted squares hit every square edge");

        double lifted_diam = 0.0;
        for (int qi : rep.chosen_squares) lifted_diam += rep.grid.squares[qi].diameter();
        rep.lift_weight_ratio = solution.weight > 0.0 ? lifted_diam / solution.weight : 0.0;
        ck.out.push_back({"lemma9_lift_weight", rep.lift_weight_ratio <= kLiftWeightBound,
                          rep.lift_weight_ratio, kLiftWeightBound,
                          "sum diam(H) <= 16 x hitting set weight"});

        ck.boolean("hitting_set_valid", true, "verified inside the solver");

        double worst_g3 = -std::numeric_limits<double>::infinity();
        for (int i : rep.pre.partition.s3) {
            worst_g3 = std::max(worst_g3, dist_disk_graph(inst.disks[i], rep.g3));
        }
        ck.excess("g3_hits_s3", worst_g3, 0.0, "dist(D, G3) over S3");
    } else {
        for (const char* name :
             {"lemma4_diam_le_2diam", "lemma4_boundary_hit", "lemma7_sentinel_in_disk",
              "sentinel_total_weight", "lemma8_sentinel_weight", "lemma9_lift_sentinels_valid",
              "lemma9_lift_squares_valid", "lemma9_lift_weight", "hitting_set_valid",
              "g3_hits_s3"}) {
            ck.vacuous(name, "S3 empty");
        }
    }

    {  // doubled Euler tour length identity
        const double expected = 2.0 * (rep.len_g1 + rep.len_g2 + rep.len_g3);
        ck.excess("euler_length_identity", std::abs(rep.tour_length - expected), 0.0,
                  "tour length = 2 (len G1 + len G2 + len G3)");
    }
    ck.out.push_back({"tour_valid", rep.validation.valid, rep.validation.max_violation, eps_v,
                      "every disk within eps_v of the tour"});
    if (rep.oracle_ran) {
        const double excess = rep.oracle_length - rep.tour_length * (1.0 + 1e-6);
        ck.excess("oracle_lower_bound", excess, 0.0, "oracle length <= tour length");
        if (have_s3) {
            const GeometricGraph oracle_graph = Tour{oracle_sol.points}.as_graph();
            double crossed = 0.0;
            for (const GridSquare& q : rep.grid.squares) {
                if (dist_square_graph(q.cell, oracle_graph) == 0.0) crossed += q.diameter();
            }
            if (crossed > 0.0) rep.lemma6_constant = rep.oracle_length / crossed;
        }
    }

    rep.all_properties_pass = true;
    for (const PropertyOutcome& p : rep.properties) {
        if (!p.pass) rep.all_properties_pass = false;
    }
    rep.ms_total = ms_since(t_start);
    return rep;
}

std::string serialize_report(const RunReport& rep) {
    std::string out = "tspn-report/1\n";
    const auto kv = [&out](const std::string& k, const std::string& v) {
        out += k + " = " + v + "\n";
    };
    const auto kvd = [&](const std::string& k, double v) { kv(k, format_double(v)); };
    const auto kvi = [&](const std::string& k, long v) { kv(k, std::to_string(v)); };

    kv("digest", rep.digest);
    kvi("n", rep.n);
    kvd("scale", rep.scale);
    kvd("r", rep.r);
    kvi("independent", rep.independent_count);
    kvi("s1", rep.s1);
    kvi("s2", rep.s2);
    kvi("s3", rep.s3);
    kvi("grid_squares", rep.grid_squares);
    kvi("grid_max_depth", rep.grid_max_depth);
    kvi("sentinels", rep.sentinel_count);
    kv("solver", rep.solver);
    kvi("hitting_chosen", rep.hitting_chosen);
    kvd("hitting_weight", rep.hitting_weight);
    kvd("len_g1", rep.len_g1);
    kvd("len_g2", rep.len_g2);
    kvd("len_g3", rep.len_g3);
    kvd("tour_length", rep.tour_length);
    kvi("tour_vertices", static_cast<long>(rep.tour.vertices.size()));
    kv("oracle", rep.oracle_ran ? "on" : "off");
    if (rep.oracle_ran) {
        kvd("oracle_length", rep.oracle_length);
        kv("ratio", rep.ratio_finite ? format_double(rep.ratio) : "inf");
    }
    kvd("kappa_sentinel", rep.kappa_sentinel);
    kvd("lift_weight_ratio", rep.lift_weight_ratio);
    kvd("lemma6_constant", rep.lemma6_constant);
    kv("valid", rep.validation.valid ? "true" : "false");
    kvd("max_violation", rep.validation.max_violation);
    kv("properties_pass", rep.all_properties_pass ? "true" : "false");

    out += "[properties]\n";
    for (const PropertyOutcome& p : rep.properties) {
        out += p.name + " = " + (p.pass ? "pass" : "FAIL") +
               " observed=" + format_double(p.observed) + " bound=" + format_double(p.bound) +
               " (" + p.detail + ")\n";
    }

    out += "[tour]\n";
    for (std::size_t i = 0; i < rep.tour.vertices.size(); ++i) {
        const Point& p = rep.tour.vertices[i];
        out += format_double(p.x) + "," + format_double(p.y);
        out += (i + 1 < rep.tour.vertices.size()) ? "; " : "\n";
    }
    return out;
}

}  // namespace tspn
