#include "tspn/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "tspn/oracle.hpp"

namespace tspn {

namespace {

bool disks_disjoint(const Disk& a, const Disk& b) {
    return dist(a.center, b.center) > a.radius + b.radius;
}

}  // namespace

std::vector<int> greedy_independent_set(const Instance& inst) {
    inst.validate();
    const int n = static_cast<int>(inst.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.disks[a].radius < inst.disks[b].radius;
    });
    std::vector<int> chosen;
    for (int i : order) {
        bool ok = true;
        for (int j : chosen) {
            if (!disks_disjoint(inst.disks[i], inst.disks[j])) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(i);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

std::vector<int> nearest_neighbor_order(const std::vector<Disk>& disks) {
    const int m = static_cast<int>(disks.size());
    std::vector<int> order;
    order.reserve(m);
    std::vector<bool> used(m, false);
    int cur = 0;
    order.push_back(0);
    used[0] = true;
    for (int step = 1; step < m; ++step) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int j = 0; j < m; ++j) {
            if (used[j]) continue;
            const double d = dist(disks[cur].center, disks[j].center);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        order.push_back(best);
        used[best] = true;
        cur = best;
    }
    return order;
}

void two_opt_centers(std::vector<int>& order, const std::vector<Disk>& disks, double eps) {
    const int m = static_cast<int>(order.size());
    if (m < 4) return;
    const auto d = [&](int a, int b) { return dist(disks[a].center, disks[b].center); };
    const long max_moves = 50L * m * m;
    long moves = 0;
    bool improved = true;
    while (improved && moves < max_moves) {
        improved = false;
        for (int i = 1; i < m - 1 && moves < max_moves; ++i) {
            for (int j = i + 1; j < m && moves < max_moves; ++j) {
                const int a = order[i - 1], b = order[i];
                const int c = order[j], e = order[(j + 1) % m];
                const double delta = d(a, c) + d(b, e) - d(a, b) - d(c, e);
                if (delta < -eps) {
                    std::reverse(order.begin() + i, order.begin() + j + 1);
                    ++moves;
                    improved = true;
                }
            }
        }
    }
}

}  // namespace

Tour disjoint_disk_tour(const std::vector<Disk>& disks, double touring_tol) {
    if (disks.empty()) throw std::invalid_argument("disjoint_disk_tour: no disks");
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            if (!disks_disjoint(disks[i], disks[j])) {
                throw std::invalid_argument("disjoint_disk_tour: disks not pairwise disjoint");
            }
        }
    }
    if (disks.size() == 1) {
        const Disk& d = disks[0];
        return Tour{{{d.center.x + d.radius, d.center.y}}};
    }

    double scale = 0.0;
    for (const Disk& d : disks) {
        for (const Disk& e : disks) scale = std::max(scale, dist(d.center, e.center));
    }

    std::vector<int> order = nearest_neighbor_order(disks);
    two_opt_centers(order, disks, 1e-12 * std::max(scale, 1.0));
    const TouringSolution sol = touring_disks_fixed_order(order, disks, touring_tol);
    return Tour{sol.points};
}

namespace {

// Feasible lower-left corners for side s against one disk form the Minkowski
// sum of the box [c-s, c] and the disk radius; projection is closed-form.
Point project_corner(Point v, const Disk& d, double s) {
    const AxisSquare box{{d.center.x - s, d.center.y - s}, s};
    const Point q = clamp_to_square(v, box);
    const double delta = dist(v, q);
    if (delta <= d.radius) return v;
    return q + (d.radius / delta) * (v - q);
}

double max_violation(Point v, const Instance& inst, double s) {
    double worst = 0.0;
    for (const Disk& d : inst.disks) {
        const double g = dist_point_square(d.center, AxisSquare{v, s}) - d.radius;
        worst = std::max(worst, g);
    }
    return worst;
}

std::optional<Point> pocs_feasible(const Instance& inst, double s, Point init, double gap_tol) {
    const int passes = 10 * static_cast<int>(inst.size());
    Point v = init;
    for (int pass = 0; pass < passes; ++pass) {
        for (const Disk& d : inst.disks) v = project_corner(v, d, s);
        if (max_violation(v, inst, s) <= gap_tol) return v;
    }
    return std::nullopt;
}

// Expands the square just enough to absorb residual feasibility violations,
// so every disk intersects the returned square under the closed predicate.
AxisSquare absorb_violation(AxisSquare sq, const Instance& inst, double spread) {
    const double viol = max_violation(sq.corner, inst, sq.side);
    if (viol <= 0.0) return sq;
    const double grow = viol + 1e-12 * spread;
    AxisSquare out{{sq.corner.x - grow, sq.corner.y - grow}, sq.side + 2.0 * grow};
    if (max_violation(out.corner, inst, out.side) > 0.0) {
        throw std::logic_error("min_enclosing_square: square misses a disk after expansion");
    }
    return out;
}

}  // namespace

AxisSquare min_enclosing_square(const Instance& inst) {
    inst.validate();
    const double spread = inst.scale();

    if (inst.size() == 1) {
        const Disk& d = inst.disks[0];
        return absorb_violation(AxisSquare{{d.center.x + d.radius, d.center.y}, 0.0}, inst,
                                spread);
    }

    Point centroid{0.0, 0.0};
    for (const Disk& d : inst.disks) centroid = centroid + d.center;
    centroid = (1.0 / static_cast<double>(inst.size())) * centroid;
    const double gap_tol = 1e-9 * spread;

    if (auto v = pocs_feasible(inst, 0.0, centroid, gap_tol)) {
        return absorb_violation(AxisSquare{*v, 0.0}, inst, spread);
    }

    // Bounding box of the centers is feasible by containment.
    double lo_x = inst.disks[0].center.x, lo_y = inst.disks[0].center.y;
    double hi_x = lo_x, hi_y = lo_y;
    for (const Disk& d : inst.disks) {
        lo_x = std::min(lo_x, d.center.x);
        lo_y = std::min(lo_y, d.center.y);
        hi_x = std::max(hi_x, d.center.x);
        hi_y = std::max(hi_y, d.center.y);
    }
    double hi = std::max(hi_x - lo_x, hi_y - lo_y);
    Point best_v{lo_x, lo_y};
    if (hi <= 0.0) return absorb_violation(AxisSquare{best_v, 0.0}, inst, spread);

    double lo = 0.0;
    while (hi - lo > 1e-7 * hi) {
        const double mid = 0.5 * (lo + hi);
        const Point init{centroid.x - mid / 2, centroid.y - mid / 2};
        if (auto v = pocs_feasible(inst, mid, init, gap_tol)) {
            hi = mid;
            best_v = *v;
        } else {
            lo = mid;
        }
    }
    return absorb_violation(AxisSquare{best_v, hi}, inst, spread);
}

GeometricGraph build_g1(const Tour& xi0, const AxisSquare& R) {
    const GeometricGraph tour_graph = xi0.as_graph();
    GeometricGraph border;
    for (const Segment& s : boundary_segments(R)) border.add(s);

    GeometricGraph g1 = tour_graph;
    g1.append(border);
    const ClosestPair cp = closest_graphs(tour_graph, border);
    if (cp.distance > 0.0) g1.add({cp.on_first, cp.on_second});
    return g1;
}

Partition partition_disks(const Instance& inst, const GeometricGraph& g1, double r) {
    if (g1.empty()) throw std::invalid_argument("partition_disks: empty g1");
    const double threshold = r / static_cast<double>(inst.size());
    Partition part;
    for (int i = 0; i < static_cast<int>(inst.size()); ++i) {
        const double d = dist_disk_graph(inst.disks[i], g1);
        if (d == 0.0) {
            part.s1.push_back(i);
        } else if (d <= threshold) {
            part.s2.push_back(i);
        } else {
            part.s3.push_back(i);
        }
    }
    return part;
}

GeometricGraph build_g2(const Instance& inst, const std::vector<int>& s2,
                        const GeometricGraph& g1) {
    GeometricGraph g2;
    for (int i : s2) {
        if (dist_disk_graph(inst.disks[i], g1) == 0.0) {
            throw std::invalid_argument("build_g2: disk " + std::to_string(i) +
                                        " already intersects g1");
        }
        g2.add(shortest_connector(inst.disks[i], g1));
    }
    return g2;
}

PreprocessResult preprocess(const Instance& inst, double touring_tol) {
    inst.validate();
    PreprocessResult res;
    res.independent = greedy_independent_set(inst);

    std::vector<Disk> chosen;
    chosen.reserve(res.independent.size());
    for (int i : res.independent) chosen.push_back(inst.disks[i]);
    res.xi0 = disjoint_disk_tour(chosen, touring_tol);

    res.bounding = min_enclosing_square(inst);
    res.r = res.bounding.side;
    res.g1 = build_g1(res.xi0, res.bounding);
    res.partition = partition_disks(inst, res.g1, res.r);
    res.g2 = build_g2(inst, res.partition.s2, res.g1);
    return res;
}

}  // namespace tspn
