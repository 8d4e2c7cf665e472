#ifndef FRECHET_WSPD_HPP
#define FRECHET_WSPD_HPP

#include <cstddef>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

struct WspdPair {
    Point rep_a;
    Point rep_b;
    std::size_t count_a = 0;
    std::size_t count_b = 0;
};

/// Sorted multiset of positive radii searched over for the Fréchet value.
struct CandidateRadii {
    std::vector<double> values;
    std::size_t pair_count = 0;

    bool empty() const { return values.empty(); }
    double min() const { return values.front(); }
    double max() const { return values.back(); }
};

/// Well-separated pair decomposition of the deduplicated points over a
/// fair-split tree, separation such that max(diam X, diam Y) <= dist(X,Y)/8.
std::vector<WspdPair> wspd_pairs(const std::vector<Point>& points);

/// Approximate distance selection: for every pairwise distance y of the
/// input there are x, x' in the result with x <= y <= x' <= 2x. Emits
/// l = (3/4)|rep_a rep_b| and 2l per well-separated pair, sorted.
CandidateRadii approx_distances(const std::vector<Point>& points);

}  // namespace frechet

#endif
