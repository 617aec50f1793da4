#include "tspn/tour_assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace tspn {

GeometricGraph gamma(const GridSquare& q, const GeometricGraph& g1) {
    if (g1.empty()) throw std::invalid_argument("gamma: empty g1");
    GeometricGraph g;
    for (const Segment& s : boundary_segments(q.cell)) g.add(s);
    const Segment conn = shortest_connector(q.cell, g1);
    if (conn.length() > 0.0) g.add(conn);
    return g;
}

GeometricGraph build_g3(const std::vector<int>& chosen, const StratifiedGrid& grid,
                        const GeometricGraph& g1) {
    GeometricGraph g;
    for (int qi : chosen) g.append(gamma(grid.squares[qi], g1));
    return g;
}

namespace {

double segment_param(const Segment& s, Point p) {
    const Point d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return 0.0;
    return std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
}

// Tolerance-based vertex identification; the representative of a cluster is
// the first point seen there, so constructed coincidences stay bit-stable.
class VertexMerger {
public:
    explicit VertexMerger(double tol) : tol_(tol) {}

    int id_of(Point p) {
        const std::int64_t cx = cell(p.x);
        const std::int64_t cy = cell(p.y);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = buckets_.find(key(cx + dx, cy + dy));
                if (it == buckets_.end()) continue;
                for (int idx : it->second) {
                    if (dist(points_[idx], p) <= tol_) return idx;
                }
            }
        }
        const int idx = static_cast<int>(points_.size());
        points_.push_back(p);
        buckets_[key(cx, cy)].push_back(idx);
        return idx;
    }

    const std::vector<Point>& points() const { return points_; }

private:
    std::int64_t cell(double v) const {
        return tol_ > 0.0 ? static_cast<std::int64_t>(std::floor(v / tol_)) : 0;
    }
    static std::uint64_t key(std::int64_t x, std::int64_t y) {
        return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ull ^
               static_cast<std::uint64_t>(y);
    }

    double tol_;
    std::vector<Point> points_;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

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

bool bbox_close(const Segment& s, const Segment& t, double tol) {
    const double sx1 = std::min(s.a.x, s.b.x) - tol, sx2 = std::max(s.a.x, s.b.x) + tol;
    const double sy1 = std::min(s.a.y, s.b.y) - tol, sy2 = std::max(s.a.y, s.b.y) + tol;
    const double tx1 = std::min(t.a.x, t.b.x), tx2 = std::max(t.a.x, t.b.x);
    const double ty1 = std::min(t.a.y, t.b.y), ty2 = std::max(t.a.y, t.b.y);
    return sx1 <= tx2 && tx1 <= sx2 && sy1 <= ty2 && ty1 <= sy2;
}

}  // namespace

Tour assemble_tour(const GeometricGraph& g1, const GeometricGraph& g2,
                   const GeometricGraph& g3, double merge_tol) {
    std::vector<Segment> segs;
    Point anchor{};
    bool have_anchor = false;
    for (const GeometricGraph* g : {&g1, &g2, &g3}) {
        for (const Segment& s : g->segments()) {
            if (!have_anchor) {
                anchor = s.a;
                have_anchor = true;
            }
            if (s.length() > 0.0) segs.push_back(s);
        }
    }
    if (!have_anchor) throw std::logic_error("assemble_tour: empty graph union");
    if (segs.empty()) return Tour{{anchor}};  // everything degenerate: a point tour

    // Split every segment where another one touches or crosses it.
    const int m = static_cast<int>(segs.size());
    std::vector<std::vector<double>> params(m, std::vector<double>{0.0, 1.0});
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (!bbox_close(segs[i], segs[j], merge_tol)) continue;
            const ClosestPair cp = closest_segments(segs[i], segs[j]);
            if (cp.distance <= merge_tol) {
                params[i].push_back(segment_param(segs[i], cp.on_first));
                params[j].push_back(segment_param(segs[j], cp.on_second));
            }
        }
    }

    VertexMerger merger(merge_tol);
    struct Edge {
        int u, v;
    };
    std::vector<Edge> edges;  // doubled below
    for (int i = 0; i < m; ++i) {
        std::sort(params[i].begin(), params[i].end());
        Point prev = segs[i].a;
        int prev_id = merger.id_of(prev);
        for (double t : params[i]) {
            if (t == 0.0) continue;
            const Point p = t == 1.0 ? segs[i].b : lerp(segs[i].a, segs[i].b, t);
            if (p == prev) continue;
            const int pid = merger.id_of(p);
            edges.push_back({prev_id, pid});
            edges.push_back({prev_id, pid});
            prev = p;
            prev_id = pid;
        }
    }

    const int nv = static_cast<int>(merger.points().size());
    std::vector<int> degree(nv, 0);
    UnionFind uf(nv);
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge id, other vertex)
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        degree[edges[e].u]++;
        degree[edges[e].v]++;
        uf.unite(edges[e].u, edges[e].v);
        adj[edges[e].u].emplace_back(e, edges[e].v);
        if (edges[e].u != edges[e].v) adj[edges[e].v].emplace_back(e, edges[e].u);
    }
    for (int v = 0; v < nv; ++v) {
        if (degree[v] % 2 != 0) {
            throw std::logic_error("assemble_tour: odd vertex degree in doubled multigraph");
        }
    }
    int root = -1;
    for (int v = 0; v < nv; ++v) {
        if (degree[v] > 0) {
            if (root < 0) root = uf.find(v);
            if (uf.find(v) != root) {
                throw std::logic_error("assemble_tour: doubled multigraph is disconnected");
            }
        }
    }

    // Hierholzer with lowest-edge-id choice at every vertex.
    int start = 0;
    while (degree[start] == 0) ++start;
    std::vector<char> used(edges.size(), 0);
    std::vector<std::size_t> cursor(nv, 0);
    std::vector<int> stack{start};
    std::vector<int> circuit;
    while (!stack.empty()) {
        const int v = stack.back();
        auto& list = adj[v];
        while (cursor[v] < list.size() && used[list[cursor[v]].first]) ++cursor[v];
        if (cursor[v] == list.size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            const auto [eid, w] = list[cursor[v]];
            used[eid] = 1;
            stack.push_back(w);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    circuit.pop_back();  // closed walk: last == first

    Tour tour;
    tour.vertices.reserve(circuit.size());
    for (int v : circuit) {
        const Point p = merger.points()[v];
        if (!tour.vertices.empty() && tour.vertices.back() == p) continue;
        tour.vertices.push_back(p);
    }
    while (tour.vertices.size() > 1 && tour.vertices.front() == tour.vertices.back()) {
        tour.vertices.pop_back();
    }
    return tour;
}

ValidationReport validate_tour(const Tour& t, const Instance& inst, double eps_v) {
    if (t.vertices.empty()) throw std::invalid_argument("validate_tour: empty tour");
    const GeometricGraph g = t.as_graph();
    ValidationReport rep;
    rep.disk_distances.reserve(inst.size());
    for (const Disk& d : inst.disks) {
        const double dd = dist_disk_graph(d, g);
        rep.disk_distances.push_back(dd);
        rep.max_violation = std::max(rep.max_violation, dd);
    }
    rep.valid = rep.max_violation <= eps_v;
    return rep;
}

}  // namespace tspn
