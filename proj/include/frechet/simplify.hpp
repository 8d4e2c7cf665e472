#ifndef FRECHET_SIMPLIFY_HPP
#define FRECHET_SIMPLIFY_HPP

#include <cstddef>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/// Output of the greedy radius simplification. kept_indices always starts
/// at 0 and ends at the last vertex index; every edge of the simplified
/// curve except possibly the last has length >= radius.
struct SimplificationResult {
    PolygonalCurve simplified;
    std::vector<std::size_t> kept_indices;
    double radius = 0.0;
};

/// Greedy scan: mark the first vertex, repeatedly scan forward to the first
/// vertex at distance >= mu from the current marked vertex and mark it, and
/// always mark the final vertex. A vertex at distance exactly mu counts as
/// "at least mu" and is marked. Single pass, O(n).
SimplificationResult simplify(const PolygonalCurve& p, double mu);

/// The explicit matching between a curve and its simplification: for each
/// simplified edge, the simplified point holds at the edge's start vertex
/// while the original traverses all but the last sub-edge of its portion,
/// then both move in sync over the last sub-edge. Its width is <= mu.
Matching simplification_matching(const PolygonalCurve& p, const SimplificationResult& r);

/// Chain two matchings through their shared middle curve. Breakpoints are
/// the union of both matchings' middle-curve breakpoints; where one matching
/// holds the middle coordinate over a span while the other moves, the full
/// moved range is paired against the held value.
Matching compose_matchings(const Matching& ab, const Matching& bc);

/// Greedy simplification of a closed curve: the scan starts at vertex 0 and
/// the final marked vertex closes back to vertex 0. The closing edge may be
/// shorter than mu, mirroring the open-curve last-edge caveat. The result
/// may degenerate to fewer than three kept vertices.
struct ClosedSimplificationResult {
    std::vector<std::size_t> kept_indices;
    double radius = 0.0;
};
ClosedSimplificationResult simplify_closed(const ClosedCurve& p, double mu);

}  // namespace frechet

#endif
