// Adaptive dyadic subdivision of the bounding square R driven by distance to
// the backbone graph G1: a cell splits while its diameter is at least both
// r/(2n) and its distance to G1. Cell positions are kept as integers
// (depth + grid coordinates) so interior-disjointness and adjacency are exact.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tspn/geometry.hpp"

namespace tspn {

struct GridSquare {
    AxisSquare cell;
    int depth = 0;            // side = r / 2^depth
    std::int64_t ix = 0;      // dyadic position within its depth, in [0, 2^depth)
    std::int64_t iy = 0;
    double dist_to_g1 = 0.0;  // cached at emission time

    double diameter() const { return cell.diameter(); }
};

struct StratifiedGrid {
    AxisSquare root;  // R
    double r = 0.0;
    int n = 0;
    int max_depth = 0;
    std::vector<GridSquare> squares;
    std::vector<std::pair<int, int>> adjacency;  // index pairs sharing a boundary point
};

// FIFO transcription of the subdivision loop; children are enqueued in
// SW, SE, NW, NE order, so the output order is reproducible. A side-0 root
// (degenerate R) is emitted as the single cell.
StratifiedGrid stratify(const AxisSquare& R, const GeometricGraph& g1, int n, double r);

// All unordered index pairs whose closed cells intersect (shared edge or
// corner), from exact integer coordinates; pairs are (i < j), sorted.
std::vector<std::pair<int, int>> adjacency_pairs(const StratifiedGrid& grid);

// Exact check that no two cells overlap in their interiors.
bool grid_interiors_disjoint(const StratifiedGrid& grid);

}  // namespace tspn
