#include "tspn/stratified_grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace tspn {

namespace {

struct Node {
    int depth;
    std::int64_t ix, iy;
};

AxisSquare cell_of(const AxisSquare& root, int depth, std::int64_t ix, std::int64_t iy) {
    const double side = std::ldexp(root.side, -depth);
    return {{root.corner.x + static_cast<double>(ix) * side,
             root.corner.y + static_cast<double>(iy) * side},
            side};
}

struct IntBox {
    std::int64_t x1, x2, y1, y2;
};

std::vector<IntBox> normalized_boxes(const StratifiedGrid& grid) {
    std::vector<IntBox> boxes;
    boxes.reserve(grid.squares.size());
    for (const GridSquare& q : grid.squares) {
        const int shift = grid.max_depth - q.depth;
        boxes.push_back({q.ix << shift, (q.ix + 1) << shift, q.iy << shift, (q.iy + 1) << shift});
    }
    return boxes;
}

// X-sweep over normalized boxes; visit(i, j) is called for every pair whose
// closed X-intervals intersect, with j from the still-active set.
template <typename Visit>
void sweep_pairs(const std::vector<IntBox>& boxes, Visit visit) {
    const int n = static_cast<int>(boxes.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return boxes[a].x1 != boxes[b].x1 ? boxes[a].x1 < boxes[b].x1 : a < b;
    });
    std::vector<int> active;
    for (int i : order) {
        std::erase_if(active, [&](int j) { return boxes[j].x2 < boxes[i].x1; });
        for (int j : active) visit(i, j);
        active.push_back(i);
    }
}

}  // namespace

StratifiedGrid stratify(const AxisSquare& R, const GeometricGraph& g1, int n, double r) {
    if (g1.empty()) throw std::invalid_argument("stratify: empty g1");
    if (n < 1) throw std::invalid_argument("stratify: n must be >= 1");
    if (std::abs(r - R.side) > 1e-12 * std::max(1.0, r)) {
        throw std::invalid_argument("stratify: r does not match R.side");
    }

    StratifiedGrid grid;
    grid.root = R;
    grid.r = r;
    grid.n = n;

    const double stop_threshold = r / (2.0 * static_cast<double>(n));
    std::deque<Node> queue{{0, 0, 0}};
    while (!queue.empty()) {
        const Node node = queue.front();
        queue.pop_front();
        const AxisSquare cell = cell_of(R, node.depth, node.ix, node.iy);
        const double d = dist_square_graph(cell, g1);
        if (cell.side > 0.0 && cell.diameter() >= std::max(stop_threshold, d)) {
            queue.push_back({node.depth + 1, 2 * node.ix, 2 * node.iy});
            queue.push_back({node.depth + 1, 2 * node.ix + 1, 2 * node.iy});
            queue.push_back({node.depth + 1, 2 * node.ix, 2 * node.iy + 1});
            queue.push_back({node.depth + 1, 2 * node.ix + 1, 2 * node.iy + 1});
        } else {
            grid.squares.push_back({cell, node.depth, node.ix, node.iy, d});
            grid.max_depth = std::max(grid.max_depth, node.depth);
        }
    }

    grid.adjacency = adjacency_pairs(grid);
    return grid;
}

std::vector<std::pair<int, int>> adjacency_pairs(const StratifiedGrid& grid) {
    const auto boxes = normalized_boxes(grid);
    std::vector<std::pair<int, int>> pairs;
    sweep_pairs(boxes, [&](int i, int j) {
        if (boxes[i].y1 <= boxes[j].y2 && boxes[j].y1 <= boxes[i].y2) {
            pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
    });
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

bool grid_interiors_disjoint(const StratifiedGrid& grid) {
    const auto boxes = normalized_boxes(grid);
    bool ok = true;
    sweep_pairs(boxes, [&](int i, int j) {
        if (boxes[i].x1 < boxes[j].x2 && boxes[j].x1 < boxes[i].x2 &&
            boxes[i].y1 < boxes[j].y2 && boxes[j].y1 < boxes[i].y2) {
            ok = false;
        }
    });
    return ok;
}

}  // namespace tspn
