#pragma once

#include <vector>

#include "tspn/geometry.hpp"

namespace tspn {

// Closed polygonal curve as a cyclic vertex list. A single vertex is a
// degenerate point tour of length 0.
struct Tour {
    std::vector<Point> vertices;

    double length() const {
        double len = 0.0;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            len += dist(vertices[i], vertices[(i + 1) % vertices.size()]);
        }
        return len;
    }

    // Cyclic edges as a geometric graph; a point tour becomes one degenerate
    // segment so the graph still carries the location.
    GeometricGraph as_graph() const {
        GeometricGraph g;
        if (vertices.size() == 1) {
            g.add({vertices[0], vertices[0]});
            return g;
        }
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            g.add({vertices[i], vertices[(i + 1) % vertices.size()]});
        }
        return g;
    }
};

}  // namespace tspn
