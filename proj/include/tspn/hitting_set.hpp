// Reduction of "connect the far disks" to weighted hitting set: the
// square-vs-disk hypergraph over the stratified grid, the sentinel-point
// hypergraph it is translated into, two solvers (weighted greedy and an
// exact branch-and-bound for small instances), and the lift back to squares.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tspn/instance.hpp"
#include "tspn/stratified_grid.hpp"

namespace tspn {

// Vertices are grid squares weighted by diameter; one edge per far disk
// listing the squares it intersects.
struct SquareHypergraph {
    std::vector<double> weights;          // diam per grid square
    std::vector<int> edge_disks;          // instance disk index per edge
    std::vector<std::vector<int>> edges;  // ascending square indices
};

struct Sentinel {
    Point location;
    std::int64_t gx = 0, gy = 0;  // exact dyadic coordinates at coord_depth
    double weight = 0.0;          // sum of owner diameters
    std::vector<int> owners;      // generating square indices
};

struct SentinelHypergraph {
    std::vector<Sentinel> sentinels;
    std::vector<int> edge_disks;
    std::vector<std::vector<int>> edges;  // ascending sentinel indices per far disk
    int coord_depth = 0;                  // grid.max_depth + 1
};

struct HittingSetSolution {
    enum class Solver { greedy, exact };
    std::vector<int> chosen;  // ascending vertex indices
    double weight = 0.0;
    Solver solver_tag = Solver::greedy;
};

SquareHypergraph build_square_hypergraph(const StratifiedGrid& grid, const Instance& inst,
                                         const std::vector<int>& s3);

// The 25 lattice points (a+ih/2, b+jh/2), i,j in {-1..3}, i-major order.
std::array<Point, 25> make_sentinels(const AxisSquare& q);

// Sentinels of all grid squares, clipped to closed R and deduplicated by
// exact dyadic coordinates; owners and weights accumulate across squares.
SentinelHypergraph build_sentinel_hypergraph(const StratifiedGrid& grid, const Instance& inst,
                                             const std::vector<int>& s3);

// Weighted greedy: repeatedly takes the sentinel minimizing
// weight / (newly hit edges); ties break to the lowest index. The returned
// set is re-verified against every edge before returning.
HittingSetSolution greedy_mwhs(const SentinelHypergraph& h);

// Exact minimum-weight hitting set by branch-and-bound (candidates in
// ascending weight order); refuses instances with more sentinels than limit.
HittingSetSolution exact_mwhs(const SentinelHypergraph& h, int limit = 24);

// Squares whose closed cell contains a chosen sentinel (exact coordinates).
std::vector<int> lift_to_squares(const HittingSetSolution& sol, const SentinelHypergraph& h,
                                 const StratifiedGrid& grid);

}  // namespace tspn
