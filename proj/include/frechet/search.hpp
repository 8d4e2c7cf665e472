#ifndef FRECHET_SEARCH_HPP
#define FRECHET_SEARCH_HPP

#include <vector>

#include "frechet/geometry.hpp"
#include "frechet/wspd.hpp"

namespace frechet {

/// Per-invocation instrumentation. cells_visited sums the relevant
/// free-space cells over every decision made by the pipeline.
struct SearchStats {
    long long cells_visited = 0;
    int decider_calls = 0;
    std::vector<long long> round_cells;  // cascade rounds
};

/// Outcome of the fuzzy decision procedure. at_most carries a witness
/// matching between the original curves of width <= bound = (1+eps)*delta;
/// otherwise the distance is certainly greater than delta.
struct FuzzyOutcome {
    bool at_most = false;
    double bound = 0.0;
    Matching matching;
};

/// Simplify both curves at mu = (eps/4)*delta and decide at delta + 2*mu.
/// Guarantees: d <= delta implies at_most; d > (1+eps)*delta implies
/// greater; between them either answer, always correct.
FuzzyOutcome fuzzy_decide(const PolygonalCurve& a, const PolygonalCurve& b, double delta,
                          double eps, SearchStats* stats = nullptr);

/// Exact-ized decider built from two fuzzy calls at eps' = eps/3.
struct DecideOutcome {
    enum Kind { approximation, less, greater } kind = greater;
    double value = 0.0;  // approximation: witness width; less/greater: delta
    Matching matching;   // valid for approximation and less
};
DecideOutcome exact_decide(const PolygonalCurve& a, const PolygonalCurve& b, double delta,
                           double eps, SearchStats* stats = nullptr);

enum class SearchMode { simplified, direct };

/// Binary search over the grid a*(1+eps)^i within [a,b]. `below` certifies
/// the distance is <= a (witness attached); `above` that it exceeds b;
/// `bracketed` carries a (1+eps)-approximation witness.
struct IntervalSearchResult {
    enum Kind { bracketed, below, above } kind = above;
    double value = 0.0;
    Matching matching;
};
IntervalSearchResult interval_search(const PolygonalCurve& a, const PolygonalCurve& b, double lo,
                                     double hi, double eps, SearchMode mode,
                                     SearchStats* stats = nullptr);

/// Binary search over the candidate radii for the atomic interval holding
/// the distance. below_min means the distance is at most the smallest
/// candidate. An early approximation from the decider short-circuits.
struct AtomicIntervalResult {
    bool early = false;
    double value = 0.0;
    Matching matching;
    bool below_min = false;
    double lo = 0.0;
    double hi = 0.0;
};
AtomicIntervalResult approx_binary_search(const PolygonalCurve& a, const PolygonalCurve& b,
                                          const CandidateRadii& z, double eps,
                                          SearchStats* stats = nullptr);

struct ApproxResult {
    double value = 0.0;
    Matching matching;  // between the original curves
    double eps = 0.0;
    SearchStats stats;
};

/// Event-driven search on a fixed pair of curves, no further
/// simplification: harvest the relevant vertex-edge radii at psi_hi,
/// locate the atomic event interval, then run direct interval searches on
/// its two fringes. Requires the distance in [psi_lo, psi_hi] and no
/// pairwise vertex distance strictly inside. psi_lo == 0 derives the lower
/// end from the smallest positive harvested radius.
ApproxResult fixed_simplification_search(const PolygonalCurve& c, const PolygonalCurve& d,
                                         double psi_lo, double psi_hi, double eps,
                                         SearchStats* stats = nullptr);

/// The full (1+eps)-approximation of the Fréchet distance, eps in (0,1).
ApproxResult approx_frechet(const PolygonalCurve& a, const PolygonalCurve& b, double eps);

/// Same contract with the cascaded schedule: a coarse first round, then
/// interval halving with the decision accuracy tightening per round.
ApproxResult approx_frechet_cascade(const PolygonalCurve& a, const PolygonalCurve& b, double eps);

/// Joint vertex set of two curves.
std::vector<Point> joint_vertices(const PolygonalCurve& a, const PolygonalCurve& b);

}  // namespace frechet

#endif
