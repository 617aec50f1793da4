// Planar primitives shared by the whole pipeline: points, disks,
// axis-parallel squares, segments, and geometric graphs (finite segment
// sets), plus the distance kernels everything else is built on.
//
// Conventions: all regions are closed (tangency counts as intersection),
// all computations are double precision, squares are solid unless a
// function name says "boundary".
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tspn {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point lerp(Point a, Point b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

struct Disk {
    Point center;
    double radius = 1.0;  // > 0

    double diameter() const { return 2.0 * radius; }
};

// Degenerate segments (a == b) are allowed and treated as points.
struct Segment {
    Point a;
    Point b;

    double length() const { return dist(a, b); }
};

// Axis-parallel square given by its lower-left corner; side >= 0
// (side 0 degenerates to a point).
struct AxisSquare {
    Point corner;
    double side = 0.0;

    double diameter() const { return side * std::numbers::sqrt2; }
    Point max_corner() const { return {corner.x + side, corner.y + side}; }
    Point center() const { return {corner.x + side / 2, corner.y + side / 2}; }
};

// A pair of mutually closest points between two sets, with their distance.
struct ClosestPair {
    Point on_first;
    Point on_second;
    double distance = 0.0;
};

// --- point/segment/square kernels -----------------------------------------

Point closest_point_on_segment(Point p, const Segment& s);
double dist_point_segment(Point p, const Segment& s);

// Closest points between two segments (Ericson's clamped solve); exact for
// crossing, parallel and degenerate configurations.
ClosestPair closest_segments(const Segment& s, const Segment& t);

Point clamp_to_square(Point p, const AxisSquare& q);

// Euclidean distance from p to the solid square (0 if p is inside).
double dist_point_square(Point p, const AxisSquare& q);

// Distance from p to the four boundary edges of q (positive inside).
double dist_point_square_boundary(Point p, const AxisSquare& q);

std::array<Segment, 4> boundary_segments(const AxisSquare& q);

// Closed intersection test; shares the dist_point_square code path so the
// predicate and the distance can never disagree.
bool square_disk_intersects(const AxisSquare& q, const Disk& d);

bool point_in_square(Point p, const AxisSquare& q);

// Closest pair between a segment and a solid square; distance 0 with a
// common witness point when they intersect. on_first lies on the segment,
// on_second on the square (its boundary when the distance is positive).
ClosestPair closest_segment_square(const Segment& s, const AxisSquare& q);
double dist_segment_square(const Segment& s, const AxisSquare& q);

// --- geometric graphs ------------------------------------------------------

// A finite set of segments. Vertex identity is by coordinate proximity and
// is resolved by the consumers that need it (tour assembly, connectivity);
// the graph itself is just the segment list.
class GeometricGraph {
public:
    GeometricGraph() = default;
    explicit GeometricGraph(std::vector<Segment> segments)
        : segments_(std::move(segments)) {}

    const std::vector<Segment>& segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }
    std::size_t size() const { return segments_.size(); }

    void add(const Segment& s) { segments_.push_back(s); }
    void append(const GeometricGraph& other);

    // Sum of segment lengths (multiset semantics: duplicates count).
    double length() const;

    // Point-set connectivity: segments are joined wherever they touch or
    // cross within tol, not only at shared endpoints.
    bool is_connected(double tol) const;

private:
    std::vector<Segment> segments_;
};

double dist_point_graph(Point p, const GeometricGraph& g);

// max(0, dist(center, G) - radius); 0 iff the disk intersects G.
// Throws std::invalid_argument on an empty graph.
double dist_disk_graph(const Disk& d, const GeometricGraph& g);

// min over segments of the segment/solid-square distance; 0 iff they
// intersect. Throws std::invalid_argument on an empty graph.
double dist_square_graph(const AxisSquare& q, const GeometricGraph& g);

// Closest pair between two graphs (min over segment pairs).
ClosestPair closest_graphs(const GeometricGraph& a, const GeometricGraph& b);

// Shortest segment connecting the disk (resp. square) to the graph: one
// endpoint on the shape's boundary, the other on the graph. When the
// distance is 0 the result is a degenerate segment at a common point.
Segment shortest_connector(const Disk& d, const GeometricGraph& g);
Segment shortest_connector(const AxisSquare& q, const GeometricGraph& g);

}  // namespace tspn
