#ifndef FRECHET_FREESPACE_HPP
#define FRECHET_FREESPACE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/// Boundary summary of one free-space cell. Cell (i,j) pairs edge i of the
/// first curve with edge j of the second; free_top/free_right are the free
/// intervals on its top and right boundaries, reach_top/reach_right the
/// portions reachable from the origin by a monotone path.
struct CellSummary {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    Interval free_top;
    Interval free_right;
    Interval reach_top;
    Interval reach_right;
};

/// Sparse representation of the relevant free space at radius delta: only
/// cells reachable from the origin by a monotone path are stored.
struct ReachableDiagram {
    double delta = 0.0;
    std::size_t edges_a = 0;
    std::size_t edges_b = 0;
    bool end_reachable = false;
    std::vector<CellSummary> cells;
    std::unordered_map<std::uint64_t, std::uint32_t> index;

    std::size_t visited_count() const { return cells.size(); }
    static std::uint64_t key(std::uint32_t i, std::uint32_t j) {
        return (std::uint64_t(i) << 32) | j;
    }
    const CellSummary* cell(std::uint32_t i, std::uint32_t j) const {
        auto it = index.find(key(i, j));
        return it == index.end() ? nullptr : &cells[it->second];
    }
};

/// BFS over the relevant free-space cells. end_reachable is true iff the
/// Fréchet distance of the two curves is at most delta (free space is
/// closed, so equality counts). Runs in time linear in the number of
/// relevant cells.
ReachableDiagram decide_reachable(const PolygonalCurve& a, const PolygonalCurve& b, double delta);

/// Monotone matching of width <= delta extracted by backtracking through
/// the reach intervals. Requires d.end_reachable.
Matching extract_matching(const ReachableDiagram& d, const PolygonalCurve& a,
                          const PolygonalCurve& b);

/// Radii of the vertex-edge events on the top and right boundaries of every
/// stored cell, filtered to <= d.delta, sorted ascending, duplicates kept.
std::vector<double> relevant_vertex_edge_radii(const ReachableDiagram& d,
                                               const PolygonalCurve& a, const PolygonalCurve& b);

/// Reference decision procedure: full-grid dynamic program over all
/// edge_count(a) * edge_count(b) cells with no relevance pruning.
/// Serial, O(edges_b) memory. Kept as the baseline the fast path is
/// tested and benchmarked against.
bool naive_decide(const PolygonalCurve& a, const PolygonalCurve& b, double delta);

}  // namespace frechet

#endif
