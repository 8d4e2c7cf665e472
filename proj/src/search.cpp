#include "frechet/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frechet/freespace.hpp"
#include "frechet/oracle.hpp"
#include "frechet/simplify.hpp"

namespace frechet {

namespace {

constexpr std::size_t kExactOracleCap = 200;

void bump(SearchStats* stats, const ReachableDiagram& d) {
    if (!stats) return;
    stats->cells_visited += (long long)d.visited_count();
    stats->decider_calls += 1;
}

Matching lift_through(const PolygonalCurve& a, const SimplificationResult& sa,
                      const Matching& mid, const PolygonalCurve& b,
                      const SimplificationResult& sb) {
    Matching left = simplification_matching(a, sa);
    Matching right = simplification_matching(b, sb).swapped();
    return compose_matchings(compose_matchings(left, mid), right);
}

ApproxResult exact_fallback(const PolygonalCurve& a, const PolygonalCurve& b, double eps) {
    double v = exact_frechet(a, b, kExactOracleCap);
    ApproxResult out;
    out.eps = eps;
    ReachableDiagram d = decide_reachable(a, b, v);
    bump(&out.stats, d);
    out.matching = extract_matching(d, a, b);
    out.value = matching_width(out.matching, a, b);
    return out;
}

}  // namespace

std::vector<Point> joint_vertices(const PolygonalCurve& a, const PolygonalCurve& b) {
    std::vector<Point> pts;
    pts.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) pts.push_back(a.point(i));
    for (std::size_t i = 0; i < b.size(); ++i) pts.push_back(b.point(i));
    return pts;
}

FuzzyOutcome fuzzy_decide(const PolygonalCurve& a, const PolygonalCurve& b, double delta,
                          double eps, SearchStats* stats) {
    if (delta <= 0.0) throw std::invalid_argument("fuzzy_decide: delta must be positive");
    if (eps <= 0.0 || eps > 1.0) throw std::invalid_argument("fuzzy_decide: eps must be in (0,1]");
    double mu = 0.25 * eps * delta;
    SimplificationResult sa = simplify(a, mu);
    SimplificationResult sb = simplify(b, mu);
    double delta_wide = delta + 2.0 * mu;
    ReachableDiagram d = decide_reachable(sa.simplified, sb.simplified, delta_wide);
    bump(stats, d);
    FuzzyOutcome out;
    if (!d.end_reachable) {
        out.at_most = false;
        out.bound = delta;
        return out;
    }
    out.at_most = true;
    out.bound = (1.0 + eps) * delta;
    Matching mid = extract_matching(d, sa.simplified, sb.simplified);
    out.matching = lift_through(a, sa, mid, b, sb);
    return out;
}

DecideOutcome exact_decide(const PolygonalCurve& a, const PolygonalCurve& b, double delta,
                           double eps, SearchStats* stats) {
    if (delta <= 0.0) throw std::invalid_argument("exact_decide: delta must be positive");
    if (eps <= 0.0 || eps > 1.0) throw std::invalid_argument("exact_decide: eps must be in (0,1]");
    double eps_inner = eps / 3.0;  // (1+eps/3)^2 <= 1+eps on (0,1]
    double delta_low = delta / (1.0 + eps_inner);

    DecideOutcome out;
    FuzzyOutcome high = fuzzy_decide(a, b, delta, eps_inner, stats);
    if (!high.at_most) {
        out.kind = DecideOutcome::greater;
        out.value = delta;
        return out;
    }
    FuzzyOutcome low = fuzzy_decide(a, b, delta_low, eps_inner, stats);
    if (low.at_most) {
        // (1+eps') * delta_low == delta, so this certifies <= delta
        out.kind = DecideOutcome::less;
        out.value = delta;
        out.matching = std::move(low.matching);
        return out;
    }
    // distance sits in (delta_low, (1+eps')*delta]: the first witness is a
    // (1+eps)-approximation
    out.kind = DecideOutcome::approximation;
    out.matching = std::move(high.matching);
    out.value = matching_width(out.matching, a, b);
    return out;
}

IntervalSearchResult interval_search(const PolygonalCurve& a, const PolygonalCurve& b, double lo,
                                     double hi, double eps, SearchMode mode, SearchStats* stats) {
    if (!(lo > 0.0) || lo > hi) throw std::invalid_argument("interval_search: need 0 < lo <= hi");
    if (eps <= 0.0 || eps > 1.0) throw std::invalid_argument("interval_search: eps must be in (0,1]");

    long long steps = (long long)std::floor(std::log(hi / lo) / std::log1p(eps));
    auto grid = [&](long long i) {
        if (i <= 0) return lo;
        if (i > steps) return hi;
        return lo * std::pow(1.0 + eps, double(i));
    };

    IntervalSearchResult res;
    // probe(delta): true when the distance is certified <= delta, recording
    // the witness; false when certified > delta
    Matching witness;
    bool have_witness = false;
    auto probe = [&](double delta) -> bool {
        if (mode == SearchMode::direct) {
            ReachableDiagram d = decide_reachable(a, b, delta);
            bump(stats, d);
            if (!d.end_reachable) return false;
            witness = extract_matching(d, a, b);
            have_witness = true;
            return true;
        }
        DecideOutcome dec = exact_decide(a, b, delta, eps, stats);
        if (dec.kind == DecideOutcome::greater) return false;
        witness = std::move(dec.matching);
        have_witness = true;
        if (dec.kind == DecideOutcome::approximation) {
            res.kind = IntervalSearchResult::bracketed;
            res.value = dec.value;
            res.matching = witness;
        }
        return true;
    };

    if (!probe(hi)) {
        res.kind = IntervalSearchResult::above;
        res.value = hi;
        return res;
    }
    if (res.kind == IntervalSearchResult::bracketed) return res;
    if (probe(lo)) {
        if (res.kind == IntervalSearchResult::bracketed) return res;
        res.kind = IntervalSearchResult::below;
        res.matching = std::move(witness);
        res.value = matching_width(res.matching, a, b);
        return res;
    }

    long long g_lo = 0, g_hi = steps + 1;  // greater at g_lo, at-most at g_hi
    while (g_lo + 1 < g_hi) {
        long long mid = g_lo + (g_hi - g_lo) / 2;
        if (probe(grid(mid))) {
            if (res.kind == IntervalSearchResult::bracketed) return res;
            g_hi = mid;
        } else {
            g_lo = mid;
        }
    }
    res.kind = IntervalSearchResult::bracketed;
    res.matching = std::move(witness);
    res.value = matching_width(res.matching, a, b);
    return res;
}

AtomicIntervalResult approx_binary_search(const PolygonalCurve& a, const PolygonalCurve& b,
                                          const CandidateRadii& z, double eps,
                                          SearchStats* stats) {
    if (z.empty()) throw std::invalid_argument("approx_binary_search: empty candidate set");
    std::vector<double> vals = z.values;
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    AtomicIntervalResult res;
    auto probe = [&](double delta) -> int {
        DecideOutcome dec = exact_decide(a, b, delta, eps, stats);
        if (dec.kind == DecideOutcome::approximation) {
            res.early = true;
            res.value = dec.value;
            res.matching = std::move(dec.matching);
            return 0;
        }
        return dec.kind == DecideOutcome::less ? 1 : -1;
    };

    int first = probe(vals.front());
    if (res.early) return res;
    if (first > 0) {
        res.below_min = true;
        res.hi = vals.front();
        return res;
    }
    int last = probe(vals.back());
    if (res.early) return res;
    if (last < 0)
        throw std::logic_error(
            "approx_binary_search: distance above the largest candidate radius");

    std::size_t lo = 0, hi = vals.size() - 1;
    while (lo + 1 < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        int r = probe(vals[mid]);
        if (res.early) return res;
        if (r > 0)
            hi = mid;
        else
            lo = mid;
    }
    res.lo = vals[lo];
    res.hi = vals[hi];
    return res;
}

ApproxResult fixed_simplification_search(const PolygonalCurve& c, const PolygonalCurve& d,
                                         double psi_lo, double psi_hi, double eps,
                                         SearchStats* stats) {
    if (psi_hi <= 0.0 || psi_lo > psi_hi)
        throw std::invalid_argument("fixed_simplification_search: bad interval");
    if (eps <= 0.0 || eps > 1.0)
        throw std::invalid_argument("fixed_simplification_search: eps must be in (0,1]");

    ReachableDiagram top = decide_reachable(c, d, psi_hi);
    bump(stats, top);
    if (!top.end_reachable)
        throw std::logic_error("fixed_simplification_search: upper end is not reachable");

    std::vector<double> events = relevant_vertex_edge_radii(top, c, d);
    events.erase(std::unique(events.begin(), events.end()), events.end());
    while (!events.empty() && events.front() <= 0.0) events.erase(events.begin());
    if (psi_lo <= 0.0) psi_lo = events.empty() ? psi_hi / 4.0 : events.front() / 4.0;
    events.erase(std::remove_if(events.begin(), events.end(),
                                [&](double e) { return e < psi_lo || e > psi_hi; }),
                 events.end());

    auto reach = [&](double delta) {
        ReachableDiagram dg = decide_reachable(c, d, delta);
        bump(stats, dg);
        return dg.end_reachable;
    };

    // atomic event interval (a_end, b_end] containing the distance
    double a_end = psi_lo, b_end = psi_hi;
    if (!events.empty()) {
        if (reach(events.front())) {
            b_end = events.front();
        } else if (!reach(events.back())) {
            a_end = events.back();
        } else {
            std::size_t lo = 0, hi = events.size() - 1;
            while (lo + 1 < hi) {
                std::size_t mid = lo + (hi - lo) / 2;
                if (reach(events[mid]))
                    hi = mid;
                else
                    lo = mid;
            }
            a_end = events[lo];
            b_end = events[hi];
        }
    }

    auto finish = [&](const IntervalSearchResult& r) {
        ApproxResult out;
        out.eps = eps;
        out.value = r.value;
        out.matching = r.matching;
        return out;
    };

    // between consecutive events only monotonicity changes can hide, and
    // those live within the factor-[1/2,3] band of a harvested event, so
    // the distance falls in one of the two fringes
    IntervalSearchResult low_fringe =
        interval_search(c, d, a_end, std::min(4.0 * a_end, b_end), eps, SearchMode::direct, stats);
    if (low_fringe.kind != IntervalSearchResult::above) return finish(low_fringe);

    IntervalSearchResult high_fringe = interval_search(c, d, std::max(b_end / 4.0, a_end), b_end,
                                                       eps, SearchMode::direct, stats);
    if (high_fringe.kind == IntervalSearchResult::bracketed) return finish(high_fringe);
    throw std::logic_error("fixed_simplification_search: no fringe bracketed the distance");
}

ApproxResult approx_frechet(const PolygonalCurve& a, const PolygonalCurve& b, double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("approx_frechet: eps must be in (0,1)");
    if (a.dim() != b.dim()) throw std::invalid_argument("approx_frechet: dimension mismatch");

    ApproxResult out;
    out.eps = eps;
    if (a.dim() == b.dim() && a.flat() == b.flat()) {
        out.matching = Matching::identity(a.edge_count());
        return out;
    }
    std::size_t total = a.size() + b.size();
    if (eps < 1.0 / double(total) && total <= kExactOracleCap) return exact_fallback(a, b, eps);

    SearchStats* stats = &out.stats;
    CandidateRadii z = approx_distances(joint_vertices(a, b));
    if (z.empty()) {
        // all vertices coincide yet the sequences differ: distance is zero
        ReachableDiagram d0 = decide_reachable(a, b, 0.0);
        bump(stats, d0);
        out.matching = extract_matching(d0, a, b);
        out.value = matching_width(out.matching, a, b);
        return out;
    }

    AtomicIntervalResult atomic = approx_binary_search(a, b, z, eps, stats);
    if (atomic.early) {
        out.value = atomic.value;
        out.matching = std::move(atomic.matching);
        return out;
    }

    if (atomic.below_min) {
        // below every candidate the simplification is the identity; check
        // zero, then search the event structure of the original curves
        ReachableDiagram d0 = decide_reachable(a, b, 0.0);
        bump(stats, d0);
        if (d0.end_reachable) {
            out.matching = extract_matching(d0, a, b);
            out.value = matching_width(out.matching, a, b);
            return out;
        }
        ApproxResult sub = fixed_simplification_search(a, b, 0.0, atomic.hi, eps, stats);
        out.value = sub.value;
        out.matching = std::move(sub.matching);
        return out;
    }

    double alpha = atomic.lo, beta = atomic.hi;
    double alpha_wide = (30.0 / eps) * alpha;
    double beta_slim = beta / 3.0;

    IntervalSearchResult low = interval_search(a, b, alpha, std::min(4.0 * alpha_wide, beta), eps,
                                               SearchMode::simplified, stats);
    if (low.kind != IntervalSearchResult::above) {
        out.value = low.value;
        out.matching = std::move(low.matching);
        return out;
    }
    IntervalSearchResult high = interval_search(a, b, std::max(beta_slim / 4.0, alpha), beta, eps,
                                                SearchMode::simplified, stats);
    if (high.kind == IntervalSearchResult::bracketed) {
        out.value = high.value;
        out.matching = std::move(high.matching);
        return out;
    }
    if (high.kind == IntervalSearchResult::above)
        throw std::logic_error("approx_frechet: distance escaped its atomic interval");

    // distance confined to (4*alpha_wide, beta_slim/4): simplify once at
    // mu = 3*alpha, where the simplification is stable, and search the
    // fixed pair directly
    double mu = 3.0 * alpha;
    SimplificationResult sa = simplify(a, mu);
    SimplificationResult sb = simplify(b, mu);
    ApproxResult fixed = fixed_simplification_search(sa.simplified, sb.simplified, alpha_wide,
                                                     beta_slim, eps / 4.0, stats);
    out.matching = lift_through(a, sa, fixed.matching, b, sb);
    out.value = matching_width(out.matching, a, b);
    return out;
}

ApproxResult approx_frechet_cascade(const PolygonalCurve& a, const PolygonalCurve& b, double eps) {
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("approx_frechet_cascade: eps must be in (0,1)");
    std::size_t total = a.size() + b.size();
    if (a.dim() == b.dim() && a.flat() == b.flat()) {
        ApproxResult out;
        out.eps = eps;
        out.matching = Matching::identity(a.edge_count());
        return out;
    }
    if (eps < 1.0 / double(total) && total <= kExactOracleCap) {
        ApproxResult out = exact_fallback(a, b, eps);
        out.eps = eps;
        return out;
    }

    ApproxResult coarse = approx_frechet(a, b, 0.5);
    ApproxResult out;
    out.eps = eps;
    out.stats = coarse.stats;
    out.stats.round_cells.push_back(coarse.stats.cells_visited);
    if (coarse.value == 0.0) {
        out.matching = std::move(coarse.matching);
        return out;
    }

    double lo = coarse.value / 1.5, hi = coarse.value;
    int rounds = int(std::ceil(std::log2(1.0 / eps)));
    for (int i = 1; i <= rounds; ++i) {
        double eps_round = std::min(1.0, std::pow(0.5, i) / 8.0);
        long long cells_before = out.stats.cells_visited;
        double width = hi - lo;
        double x1 = lo + 0.25 * width, x2 = lo + 0.5 * width, x3 = lo + 0.75 * width;

        bool done = false;
        auto probe = [&](double delta) -> int {
            DecideOutcome dec = exact_decide(a, b, delta, eps_round, &out.stats);
            if (dec.kind == DecideOutcome::approximation) {
                // tighten to the witness interval and keep cascading
                hi = std::min(hi, dec.value);
                lo = std::max(lo, dec.value / (1.0 + eps_round));
                done = true;
                return 0;
            }
            return dec.kind == DecideOutcome::less ? 1 : -1;
        };
        if (probe(x1) > 0) {
            hi = x2;
        } else if (!done) {
            if (probe(x2) > 0) {
                lo = x1;
                hi = x3;
            } else if (!done) {
                int r3 = probe(x3);
                if (!done) {
                    if (r3 > 0) {
                        lo = x1;
                        hi = x3;
                    } else {
                        lo = x2;
                    }
                }
            }
        }
        out.stats.round_cells.push_back(out.stats.cells_visited - cells_before);
        if (hi <= lo) break;
    }

    // one final fuzzy call produces the witness; hi <= (1+eps/2)*distance,
    // so accuracy eps/4 keeps the product within (1+eps)
    long long cells_before = out.stats.cells_visited;
    FuzzyOutcome fin = fuzzy_decide(a, b, hi, std::min(1.0, eps / 4.0), &out.stats);
    if (!fin.at_most)
        throw std::logic_error("approx_frechet_cascade: final witness call failed");
    out.stats.round_cells.push_back(out.stats.cells_visited - cells_before);
    out.matching = std::move(fin.matching);
    out.value = matching_width(out.matching, a, b);
    return out;
}

}  // namespace frechet
