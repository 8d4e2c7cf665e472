#ifndef FRECHET_ORACLE_HPP
#define FRECHET_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

enum class CriticalKind { endpoint, vertex_vertex, vertex_edge, monotonicity };

struct CriticalValue {
    double value = 0.0;
    CriticalKind kind = CriticalKind::vertex_edge;
};

/// All candidate radii at which the reachability structure of the free
/// space can change: endpoint distances, every cross vertex-edge radius,
/// and every monotonicity radius (unfiltered superset, no direction test).
/// Sorted ascending. O(n^3) values.
struct CriticalValueSet {
    std::vector<CriticalValue> values;
};

CriticalValueSet critical_values(const PolygonalCurve& a, const PolygonalCurve& b);

/// Exact Fréchet distance as the smallest critical value whose decision is
/// reachable. Desk-scale only: throws std::invalid_argument when the
/// combined vertex count exceeds max_total_vertices.
double exact_frechet(const PolygonalCurve& a, const PolygonalCurve& b,
                     std::size_t max_total_vertices = 200);

/// Classic coupling dynamic program over the two vertex sequences. In
/// cyclic mode the minimum over all rotations of p is taken, q fixed;
/// callers densify the sequences first.
double discrete_frechet(const std::vector<Point>& p, const std::vector<Point>& q,
                        bool cyclic = false);

/// Subdivides every edge into pieces no longer than max_edge_len.
std::vector<Point> densify(const std::vector<Point>& vertices, bool closed, double max_edge_len);

}  // namespace frechet

#endif
