// Desk-scale ground truth for small instances: exhaustive cyclic-order
// enumeration on top of a convex fixed-order touring solver. Used to measure
// the pipeline's empirical approximation ratio, never as part of it.
#pragma once

#include <cstdint>
#include <vector>

#include "tspn/geometry.hpp"
#include "tspn/instance.hpp"

namespace tspn {

struct TouringSolution {
    std::vector<int> order;     // permutation of disk indices, visiting order
    std::vector<Point> points;  // one visit point per disk, points[k] in disks[order[k]]
    double length = 0.0;        // cyclic tour length over points
    bool converged = false;
};

// Minimizes the cyclic tour length for a fixed visiting order by cyclic
// coordinate descent over the visit points; the objective is convex, so the
// descent reaches the global optimum for the given order (within tol).
//
// Each update solves min_{p in D} |prev - p| + |p - next|: any chord point
// when the segment prev->next crosses the disk, otherwise a boundary point
// found by a 64-sample angular scan refined by golden-section search.
//
// `init` optionally overrides the default start (disk centers); it must have
// one point per disk, in `order`'s positions.
TouringSolution touring_disks_fixed_order(const std::vector<int>& order,
                                          const std::vector<Disk>& disks, double tol,
                                          const std::vector<Point>* init = nullptr);

// Exact-order oracle: minimum of touring_disks_fixed_order over all
// (n-1)!/2 distinct cyclic orders. Refuses instances larger than n_max.
TouringSolution optimal_tspn_small(const Instance& inst, int n_max = 8,
                                   double tol = 1e-10);

}  // namespace tspn
