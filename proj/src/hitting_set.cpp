#include "tspn/hitting_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tspn {

SquareHypergraph build_square_hypergraph(const StratifiedGrid& grid, const Instance& inst,
                                         const std::vector<int>& s3) {
    SquareHypergraph h;
    h.weights.reserve(grid.squares.size());
    for (const GridSquare& q : grid.squares) h.weights.push_back(q.diameter());
    for (int di : s3) {
        const Disk& d = inst.disks[di];
        std::vector<int> edge;
        for (int qi = 0; qi < static_cast<int>(grid.squares.size()); ++qi) {
            if (square_disk_intersects(grid.squares[qi].cell, d)) edge.push_back(qi);
        }
        if (edge.empty()) {
            throw std::logic_error("square hypergraph: disk " + std::to_string(di) +
                                   " misses the grid (grid must cover R)");
        }
        h.edge_disks.push_back(di);
        h.edges.push_back(std::move(edge));
    }
    return h;
}

std::array<Point, 25> make_sentinels(const AxisSquare& q) {
    std::array<Point, 25> pts;
    const double half = q.side / 2.0;
    int k = 0;
    for (int i = -1; i <= 3; ++i) {
        for (int j = -1; j <= 3; ++j) {
            pts[k++] = {q.corner.x + i * half, q.corner.y + j * half};
        }
    }
    return pts;
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& p) const {
        const std::uint64_t a = static_cast<std::uint64_t>(p.first);
        const std::uint64_t b = static_cast<std::uint64_t>(p.second);
        std::uint64_t h = a * 0x9E3779B97F4A7C15ull ^ (b + 0x517CC1B727220A95ull);
        h ^= h >> 29;
        return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
    }
};

}  // namespace

SentinelHypergraph build_sentinel_hypergraph(const StratifiedGrid& grid, const Instance& inst,
                                             const std::vector<int>& s3) {
    SentinelHypergraph h;
    h.coord_depth = grid.max_depth + 1;
    const std::int64_t full = std::int64_t{1} << h.coord_depth;
    const double unit = std::ldexp(grid.r, -h.coord_depth);

    std::unordered_map<std::pair<std::int64_t, std::int64_t>, int, PairHash> index;
    for (int qi = 0; qi < static_cast<int>(grid.squares.size()); ++qi) {
        const GridSquare& q = grid.squares[qi];
        const int shift = h.coord_depth - q.depth;  // >= 1
        const std::int64_t half = std::int64_t{1} << (shift - 1);
        const std::int64_t cx = q.ix << shift;
        const std::int64_t cy = q.iy << shift;
        for (int i = -1; i <= 3; ++i) {
            for (int j = -1; j <= 3; ++j) {
                const std::int64_t gx = cx + i * half;
                const std::int64_t gy = cy + j * half;
                if (gx < 0 || gx > full || gy < 0 || gy > full) continue;  // outside closed R
                auto [it, inserted] = index.try_emplace({gx, gy},
                                                        static_cast<int>(h.sentinels.size()));
                if (inserted) {
                    Sentinel s;
                    s.gx = gx;
                    s.gy = gy;
                    s.location = {grid.root.corner.x + static_cast<double>(gx) * unit,
                                  grid.root.corner.y + static_cast<double>(gy) * unit};
                    h.sentinels.push_back(std::move(s));
                }
                Sentinel& s = h.sentinels[it->second];
                s.owners.push_back(qi);
                s.weight += q.diameter();
            }
        }
    }

    for (int di : s3) {
        const Disk& d = inst.disks[di];
        std::vector<int> edge;
        for (int si = 0; si < static_cast<int>(h.sentinels.size()); ++si) {
            const Point p = h.sentinels[si].location;
            if (std::abs(p.x - d.center.x) > d.radius) continue;
            if (dist(p, d.center) <= d.radius) edge.push_back(si);
        }
        if (edge.empty()) {
            throw std::logic_error("sentinel hypergraph: disk " + std::to_string(di) +
                                   " contains no sentinel (sentinel containment violated)");
        }
        h.edge_disks.push_back(di);
        h.edges.push_back(std::move(edge));
    }
    return h;
}

namespace {

void verify_hitting(const SentinelHypergraph& h, const std::vector<int>& chosen,
                    const char* who) {
    std::vector<char> in_set(h.sentinels.size(), 0);
    for (int s : chosen) in_set[s] = 1;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        bool hit = false;
        for (int s : h.edges[e]) {
            if (in_set[s]) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            throw std::logic_error(std::string(who) + ": edge " + std::to_string(e) +
                                   " left unhit");
        }
    }
}

}  // namespace

HittingSetSolution greedy_mwhs(const SentinelHypergraph& h) {
    for (const auto& e : h.edges) {
        if (e.empty()) throw std::logic_error("greedy_mwhs: empty edge");
    }
    const int ns = static_cast<int>(h.sentinels.size());
    std::vector<std::vector<int>> hits(ns);  // sentinel -> edge indices
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        for (int s : h.edges[e]) hits[s].push_back(e);
    }

    std::vector<char> covered(h.edges.size(), 0);
    std::vector<int> count(ns, 0);
    for (int s = 0; s < ns; ++s) count[s] = static_cast<int>(hits[s].size());
    std::size_t remaining = h.edges.size();

    HittingSetSolution sol;
    sol.solver_tag = HittingSetSolution::Solver::greedy;
    while (remaining > 0) {
        int best = -1;
        for (int s = 0; s < ns; ++s) {
            if (count[s] == 0) continue;
            if (best < 0 ||
                h.sentinels[s].weight * count[best] < h.sentinels[best].weight * count[s]) {
                best = s;
            }
        }
        if (best < 0) throw std::logic_error("greedy_mwhs: uncoverable edge");
        sol.chosen.push_back(best);
        sol.weight += h.sentinels[best].weight;
        for (int e : hits[best]) {
            if (covered[e]) continue;
            covered[e] = 1;
            --remaining;
            for (int s : h.edges[e]) --count[s];
        }
    }
    std::sort(sol.chosen.begin(), sol.chosen.end());
    verify_hitting(h, sol.chosen, "greedy_mwhs");
    return sol;
}

namespace {

struct BranchState {
    const SentinelHypergraph* h;
    std::vector<int> order;            // sentinel indices, ascending weight
    std::vector<int> current;
    std::vector<int> best;
    double current_weight = 0.0;
    double best_weight = std::numeric_limits<double>::infinity();

    void dfs(std::vector<char>& covered, std::size_t uncovered) {
        if (current_weight >= best_weight) return;
        if (uncovered == 0) {
            best = current;
            best_weight = current_weight;
            return;
        }
        int edge = -1;
        for (int e = 0; e < static_cast<int>(h->edges.size()); ++e) {
            if (!covered[e]) {
                edge = e;
                break;
            }
        }
        // Candidates of the chosen edge in ascending weight order.
        for (int s : order) {
            if (std::find(h->edges[edge].begin(), h->edges[edge].end(), s) ==
                h->edges[edge].end()) {
                continue;
            }
            std::vector<int> newly;
            for (int e = 0; e < static_cast<int>(h->edges.size()); ++e) {
                if (covered[e]) continue;
                if (std::find(h->edges[e].begin(), h->edges[e].end(), s) != h->edges[e].end()) {
                    covered[e] = 1;
                    newly.push_back(e);
                }
            }
            current.push_back(s);
            current_weight += h->sentinels[s].weight;
            dfs(covered, uncovered - newly.size());
            current.pop_back();
            current_weight -= h->sentinels[s].weight;
            for (int e : newly) covered[e] = 0;
        }
    }
};

}  // namespace

HittingSetSolution exact_mwhs(const SentinelHypergraph& h, int limit) {
    const int ns = static_cast<int>(h.sentinels.size());
    if (ns > limit) {
        throw std::invalid_argument("exact_mwhs: " + std::to_string(ns) +
                                    " sentinels exceed limit " + std::to_string(limit));
    }
    for (const auto& e : h.edges) {
        if (e.empty()) throw std::logic_error("exact_mwhs: empty edge");
    }

    BranchState st;
    st.h = &h;
    st.order.resize(ns);
    std::iota(st.order.begin(), st.order.end(), 0);
    std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        return h.sentinels[a].weight < h.sentinels[b].weight;
    });

    std::vector<char> covered(h.edges.size(), 0);
    st.dfs(covered, h.edges.size());

    HittingSetSolution sol;
    sol.solver_tag = HittingSetSolution::Solver::exact;
    sol.chosen = st.best;
    std::sort(sol.chosen.begin(), sol.chosen.end());
    sol.weight = 0.0;
    for (int s : sol.chosen) sol.weight += h.sentinels[s].weight;
    verify_hitting(h, sol.chosen, "exact_mwhs");
    return sol;
}

std::vector<int> lift_to_squares(const HittingSetSolution& sol, const SentinelHypergraph& h,
                                 const StratifiedGrid& grid) {
    std::vector<int> out;
    for (int si : sol.chosen) {
        const Sentinel& s = h.sentinels[si];
        for (int qi = 0; qi < static_cast<int>(grid.squares.size()); ++qi) {
            const GridSquare& q = grid.squares[qi];
            const int shift = h.coord_depth - q.depth;
            const std::int64_t cx = q.ix << shift;
            const std::int64_t cy = q.iy << shift;
            const std::int64_t span = std::int64_t{1} << shift;
            if (s.gx >= cx && s.gx <= cx + span && s.gy >= cy && s.gy <= cy + span) {
                out.push_back(qi);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tspn
