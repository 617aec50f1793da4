#include "tspn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tspn {

namespace {

Point disk_boundary_point(const Disk& d, double theta) {
    return {d.center.x + d.radius * std::cos(theta), d.center.y + d.radius * std::sin(theta)};
}

// min_{p in D} |a - p| + |p - b| for fixed anchors a, b.
Point best_visit_point(Point a, Point b, const Disk& d) {
    if (a == b) {
        const double da = dist(a, d.center);
        if (da <= d.radius) return a;
        return d.center + (d.radius / da) * (a - d.center);
    }
    const Segment chord{a, b};
    const Point on_seg = closest_point_on_segment(d.center, chord);
    if (dist(on_seg, d.center) <= d.radius) return on_seg;  // zero marginal length

    // Boundary case. The two-anchor objective restricted to the circle can
    // have two local minima; scan coarsely, then refine by golden section.
    const auto objective = [&](double theta) {
        const Point p = disk_boundary_point(d, theta);
        return dist(a, p) + dist(p, b);
    };
    constexpr int kSamples = 64;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    int best_i = 0;
    double best_f = objective(0.0);
    for (int i = 1; i < kSamples; ++i) {
        const double f = objective(kTwoPi * i / kSamples);
        if (f < best_f) {
            best_f = f;
            best_i = i;
        }
    }
    double lo = kTwoPi * (best_i - 1) / kSamples;
    double hi = kTwoPi * (best_i + 1) / kSamples;
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > 1e-12) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = objective(x2);
        }
    }
    return disk_boundary_point(d, 0.5 * (lo + hi));
}

double cyclic_length(const std::vector<Point>& pts) {
    double len = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        len += dist(pts[i], pts[(i + 1) % pts.size()]);
    }
    return len;
}

}  // namespace

TouringSolution touring_disks_fixed_order(const std::vector<int>& order,
                                          const std::vector<Disk>& disks, double tol,
                                          const std::vector<Point>* init) {
    const int m = static_cast<int>(disks.size());
    if (m == 0) throw std::invalid_argument("touring: no disks");
    if (static_cast<int>(order.size()) != m) throw std::invalid_argument("touring: order size mismatch");
    if (tol <= 0.0) throw std::invalid_argument("touring: tol must be positive");
    {
        std::vector<bool> seen(m, false);
        for (int idx : order) {
            if (idx < 0 || idx >= m || seen[idx]) {
                throw std::invalid_argument("touring: order is not a permutation");
            }
            seen[idx] = true;
        }
    }

    TouringSolution sol;
    sol.order = order;
    sol.points.resize(m);
    if (init) {
        if (static_cast<int>(init->size()) != m) throw std::invalid_argument("touring: init size mismatch");
        sol.points = *init;
    } else {
        for (int k = 0; k < m; ++k) sol.points[k] = disks[order[k]].center;
    }
    if (m == 1) {
        if (!init) sol.points[0] = disks[order[0]].center;
        sol.length = 0.0;
        sol.converged = true;
        return sol;
    }

    double len = cyclic_length(sol.points);
    constexpr int kMaxSweeps = 1000;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        for (int k = 0; k < m; ++k) {
            const Point prev = sol.points[(k + m - 1) % m];
            const Point next = sol.points[(k + 1) % m];
            sol.points[k] = best_visit_point(prev, next, disks[order[k]]);
        }
        const double new_len = cyclic_length(sol.points);
        if (len - new_len < tol) {
            sol.length = new_len;
            sol.converged = true;
            return sol;
        }
        len = new_len;
    }
    sol.length = len;
    sol.converged = false;
    return sol;
}

TouringSolution optimal_tspn_small(const Instance& inst, int n_max, double tol) {
    inst.validate();
    const int n = static_cast<int>(inst.size());
    if (n > n_max) {
        throw std::invalid_argument("optimal_tspn_small: instance size " + std::to_string(n) +
                                    " exceeds limit " + std::to_string(n_max));
    }
    const double abs_tol = tol * inst.scale();

    if (n == 1) {
        TouringSolution sol;
        sol.order = {0};
        sol.points = {inst.disks[0].center};
        sol.length = 0.0;
        sol.converged = true;
        return sol;
    }

    // Pairwise boundary gaps give an admissible per-order lower bound.
    std::vector<std::vector<double>> gap(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            gap[i][j] = std::max(0.0, dist(inst.disks[i].center, inst.disks[j].center) -
                                          inst.disks[i].radius - inst.disks[j].radius);
        }
    }

    TouringSolution best;
    bool have_best = false;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    // First element fixed; reflections removed by requiring order[1] < order[n-1].
    std::vector<int> rest(order.begin() + 1, order.end());
    do {
        if (n >= 3 && rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        if (have_best) {
            double bound = 0.0;
            for (int k = 0; k < n; ++k) bound += gap[order[k]][order[(k + 1) % n]];
            if (bound >= best.length) continue;
        }
        TouringSolution cand = touring_disks_fixed_order(order, inst.disks, abs_tol);
        if (!have_best || cand.length < best.length) {
            best = cand;
            have_best = true;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

}  // namespace tspn
