// Final stage: per-square connector graphs, G3, and the doubled Euler tour
// of G1 u G2 u G3. Segments are subdivided at mutual touching points so the
// doubled multigraph is connected through every geometric contact, then a
// Hierholzer walk with deterministic edge choice produces the tour.
#pragma once

#include <vector>

#include "tspn/geometry.hpp"
#include "tspn/instance.hpp"
#include "tspn/stratified_grid.hpp"
#include "tspn/tour.hpp"

namespace tspn {

struct ValidationReport {
    std::vector<double> disk_distances;  // per-disk distance to the tour
    double max_violation = 0.0;
    bool valid = false;
};

// Boundary of the cell plus a shortest connector to g1 (omitted when the
// cell already touches g1). Length is 4*side + dist(Q, g1).
GeometricGraph gamma(const GridSquare& q, const GeometricGraph& g1);

// Union of gamma over the chosen squares, as a segment multiset (shared cell
// boundaries are kept per square so each gamma keeps its own length).
GeometricGraph build_g3(const std::vector<int>& chosen, const StratifiedGrid& grid,
                        const GeometricGraph& g1);

// Euler circuit of the doubled multigraph of g1 u g2 u g3. merge_tol is the
// vertex identification tolerance. Throws if the union is disconnected.
Tour assemble_tour(const GeometricGraph& g1, const GeometricGraph& g2,
                   const GeometricGraph& g3, double merge_tol);

ValidationReport validate_tour(const Tour& t, const Instance& inst, double eps_v);

}  // namespace tspn
