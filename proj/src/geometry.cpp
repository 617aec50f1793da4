#include "tspn/geometry.hpp"

#include <algorithm>
#include <limits>

namespace tspn {

Point closest_point_on_segment(Point p, const Segment& s) {
    const Point d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return s.a;
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return lerp(s.a, s.b, t);
}

double dist_point_segment(Point p, const Segment& s) {
    return dist(p, closest_point_on_segment(p, s));
}

ClosestPair closest_segments(const Segment& s, const Segment& t) {
    // Clamped quadratic solve; handles crossing, parallel and degenerate
    // segments (Ericson, Real-Time Collision Detection, 5.1.9).
    const Point d1 = s.b - s.a;
    const Point d2 = t.b - t.a;
    const Point r = s.a - t.a;
    const double a = dot(d1, d1);
    const double e = dot(d2, d2);
    const double f = dot(d2, r);

    double u = 0.0, v = 0.0;
    if (a == 0.0 && e == 0.0) {
        // both points
    } else if (a == 0.0) {
        v = std::clamp(f / e, 0.0, 1.0);
    } else if (e == 0.0) {
        u = std::clamp(-dot(d1, r) / a, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        const double b = dot(d1, d2);
        const double denom = a * e - b * b;
        u = denom != 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
        v = (b * u + f) / e;
        if (v < 0.0) {
            v = 0.0;
            u = std::clamp(-c / a, 0.0, 1.0);
        } else if (v > 1.0) {
            v = 1.0;
            u = std::clamp((b - c) / a, 0.0, 1.0);
        }
    }
    const Point p1 = lerp(s.a, s.b, u);
    const Point p2 = lerp(t.a, t.b, v);
    return {p1, p2, dist(p1, p2)};
}

Point clamp_to_square(Point p, const AxisSquare& q) {
    const Point hi = q.max_corner();
    return {std::clamp(p.x, q.corner.x, hi.x), std::clamp(p.y, q.corner.y, hi.y)};
}

double dist_point_square(Point p, const AxisSquare& q) {
    return dist(p, clamp_to_square(p, q));
}

std::array<Segment, 4> boundary_segments(const AxisSquare& q) {
    const Point a = q.corner;
    const Point b = {q.corner.x + q.side, q.corner.y};
    const Point c = q.max_corner();
    const Point d = {q.corner.x, q.corner.y + q.side};
    return {Segment{a, b}, Segment{b, c}, Segment{c, d}, Segment{d, a}};
}

double dist_point_square_boundary(Point p, const AxisSquare& q) {
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& e : boundary_segments(q)) {
        best = std::min(best, dist_point_segment(p, e));
    }
    return best;
}

bool square_disk_intersects(const AxisSquare& q, const Disk& d) {
    return dist_point_square(d.center, q) <= d.radius;
}

bool point_in_square(Point p, const AxisSquare& q) {
    const Point hi = q.max_corner();
    return p.x >= q.corner.x && p.x <= hi.x && p.y >= q.corner.y && p.y <= hi.y;
}

ClosestPair closest_segment_square(const Segment& s, const AxisSquare& q) {
    if (point_in_square(s.a, q)) return {s.a, s.a, 0.0};
    if (point_in_square(s.b, q)) return {s.b, s.b, 0.0};
    // Both endpoints outside: the closest square point lies on the boundary,
    // and a segment through the interior crosses some edge (distance 0).
    ClosestPair best{{}, {}, std::numeric_limits<double>::infinity()};
    for (const Segment& e : boundary_segments(q)) {
        ClosestPair cp = closest_segments(s, e);
        if (cp.distance < best.distance) best = cp;
    }
    return best;
}

double dist_segment_square(const Segment& s, const AxisSquare& q) {
    return closest_segment_square(s, q).distance;
}

void GeometricGraph::append(const GeometricGraph& other) {
    segments_.insert(segments_.end(), other.segments_.begin(), other.segments_.end());
}

double GeometricGraph::length() const {
    double total = 0.0;
    for (const Segment& s : segments_) total += s.length();
    return total;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool GeometricGraph::is_connected(double tol) const {
    if (segments_.size() <= 1) return true;
    const int n = static_cast<int>(segments_.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (closest_segments(segments_[i], segments_[j]).distance <= tol) {
                uf.unite(i, j);
            }
        }
    }
    const int root = uf.find(0);
    for (int i = 1; i < n; ++i) {
        if (uf.find(i) != root) return false;
    }
    return true;
}

double dist_point_graph(Point p, const GeometricGraph& g) {
    if (g.empty()) throw std::invalid_argument("dist_point_graph: empty graph");
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& s : g.segments()) best = std::min(best, dist_point_segment(p, s));
    return best;
}

double dist_disk_graph(const Disk& d, const GeometricGraph& g) {
    if (g.empty()) throw std::invalid_argument("dist_disk_graph: empty graph");
    return std::max(0.0, dist_point_graph(d.center, g) - d.radius);
}

double dist_square_graph(const AxisSquare& q, const GeometricGraph& g) {
    if (g.empty()) throw std::invalid_argument("dist_square_graph: empty graph");
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& s : g.segments()) {
        best = std::min(best, dist_segment_square(s, q));
        if (best == 0.0) break;
    }
    return best;
}

ClosestPair closest_graphs(const GeometricGraph& a, const GeometricGraph& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("closest_graphs: empty graph");
    ClosestPair best{{}, {}, std::numeric_limits<double>::infinity()};
    for (const Segment& s : a.segments()) {
        for (const Segment& t : b.segments()) {
            ClosestPair cp = closest_segments(s, t);
            if (cp.distance < best.distance) best = cp;
        }
    }
    return best;
}

Segment shortest_connector(const Disk& d, const GeometricGraph& g) {
    if (g.empty()) throw std::invalid_argument("shortest_connector: empty graph");
    double best = std::numeric_limits<double>::infinity();
    Point on_graph{};
    for (const Segment& s : g.segments()) {
        const Point c = closest_point_on_segment(d.center, s);
        const double dd = dist(d.center, c);
        if (dd < best) {
            best = dd;
            on_graph = c;
        }
    }
    if (best <= d.radius) return {on_graph, on_graph};  // touching point inside the disk
    const Point dir = on_graph - d.center;
    const Point on_disk = d.center + (d.radius / best) * dir;
    return {on_disk, on_graph};
}

Segment shortest_connector(const AxisSquare& q, const GeometricGraph& g) {
    if (g.empty()) throw std::invalid_argument("shortest_connector: empty graph");
    ClosestPair best{{}, {}, std::numeric_limits<double>::infinity()};
    for (const Segment& s : g.segments()) {
        ClosestPair cp = closest_segment_square(s, q);
        if (cp.distance < best.distance) best = cp;
    }
    // on_second is the square-side point (on the boundary when disjoint).
    return {best.on_second, best.on_first};
}

}  // namespace tspn
