// Preprocessing stage: greedy independent set, heuristic tour for the
// disjoint disks, minimum enclosing square, the backbone graph G1, the
// distance partition S1/S2/S3, and the connector graph G2.
#pragma once

#include <vector>

#include "tspn/geometry.hpp"
#include "tspn/instance.hpp"
#include "tspn/tour.hpp"

namespace tspn {

struct Partition {
    std::vector<int> s1;  // disks intersecting G1
    std::vector<int> s2;  // 0 < dist(D, G1) <= r/n
    std::vector<int> s3;  // dist(D, G1) > r/n
};

struct PreprocessResult {
    std::vector<int> independent;  // ascending disk indices
    Tour xi0;
    AxisSquare bounding;  // R, side r
    double r = 0.0;
    GeometricGraph g1;
    GeometricGraph g2;
    Partition partition;
};

// Scans disks by ascending radius (ties by index) and keeps each disk that is
// disjoint from all previously kept ones; tangency counts as intersecting.
// Returns ascending indices.
std::vector<int> greedy_independent_set(const Instance& inst);

// Heuristic tour touching every disk of a pairwise-disjoint family:
// nearest-neighbor over centers, 2-opt to a local optimum (move cap 50 n^2),
// then convex touring refinement of the visit points. Deterministic.
Tour disjoint_disk_tour(const std::vector<Disk>& disks, double touring_tol);

// Minimum-side axis-parallel square intersecting every disk, to 1e-7 relative
// on the side. Bisection over the side with a cyclic-projection feasibility
// inner loop (the feasible corner set for a fixed side is an intersection of
// disk/square Minkowski sums). The result intersects every disk exactly.
AxisSquare min_enclosing_square(const Instance& inst);

// Union of xi0, the boundary of R, and a shortest connector when they are
// disjoint. len = len(xi0) + 4r + dist(xi0, boundary of R).
GeometricGraph build_g1(const Tour& xi0, const AxisSquare& R);

// n in the r/n threshold is the full instance size.
Partition partition_disks(const Instance& inst, const GeometricGraph& g1, double r);

// One shortest connector per S2 disk. Throws if a disk already touches g1.
GeometricGraph build_g2(const Instance& inst, const std::vector<int>& s2,
                        const GeometricGraph& g1);

PreprocessResult preprocess(const Instance& inst, double touring_tol);

}  // namespace tspn
