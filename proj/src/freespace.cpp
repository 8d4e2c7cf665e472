#include "frechet/freespace.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace frechet {

namespace {

Interval clip_from(Interval iv, double lo) {
    if (iv.is_empty()) return iv;
    iv.lo = std::max(iv.lo, lo);
    return iv;
}

// Reachability propagation inside one convex cell. If the left boundary is
// reachable anywhere, every free point of the top boundary can be reached
// by a straight monotone segment; otherwise only top points at or right of
// the leftmost reachable bottom abscissa can. Symmetrically for the right
// boundary.
void propagate(const Interval& r_left, const Interval& r_bottom, const Interval& free_top,
               const Interval& free_right, Interval& reach_top, Interval& reach_right) {
    if (!r_left.is_empty())
        reach_top = free_top;
    else if (!r_bottom.is_empty())
        reach_top = clip_from(free_top, r_bottom.lo);
    else
        reach_top = Interval::empty();

    if (!r_bottom.is_empty())
        reach_right = free_right;
    else if (!r_left.is_empty())
        reach_right = clip_from(free_right, r_left.lo);
    else
        reach_right = Interval::empty();
}

}  // namespace

ReachableDiagram decide_reachable(const PolygonalCurve& a, const PolygonalCurve& b, double delta) {
    if (delta < 0.0) throw std::invalid_argument("decide_reachable: delta must be >= 0");
    if (a.dim() != b.dim()) throw std::invalid_argument("decide_reachable: dimension mismatch");

    ReachableDiagram d;
    d.delta = delta;
    d.edges_a = a.edge_count();
    d.edges_b = b.edge_count();

    if (dist_sq(a.front(), b.front()) > delta * delta) return d;

    std::deque<std::uint64_t> queue;
    queue.push_back(ReachableDiagram::key(0, 0));
    d.index.emplace(ReachableDiagram::key(0, 0), 0);
    d.cells.push_back({});

    auto seg_a = [&](std::uint32_t i) { return std::pair(a.vertex(i), a.vertex(i + 1)); };
    auto seg_b = [&](std::uint32_t j) { return std::pair(b.vertex(j), b.vertex(j + 1)); };

    while (!queue.empty()) {
        std::uint64_t k = queue.front();
        queue.pop_front();
        std::uint32_t i = std::uint32_t(k >> 32), j = std::uint32_t(k & 0xffffffffu);

        Interval r_left, r_bottom;
        if (i == 0) {
            if (j == 0) {
                auto [ba, bb] = seg_b(0);
                Interval f = free_space_interval(a.vertex(0), ba, bb, delta);
                if (f.contains(0.0)) r_left = Interval::of(0.0, f.hi);
            }
        } else if (const CellSummary* left = d.cell(i - 1, j)) {
            r_left = left->reach_right;
        }
        if (j == 0) {
            if (i == 0) {
                auto [aa, ab] = seg_a(0);
                Interval f = free_space_interval(b.vertex(0), aa, ab, delta);
                if (f.contains(0.0)) r_bottom = Interval::of(0.0, f.hi);
            }
        } else if (const CellSummary* below = d.cell(i, j - 1)) {
            r_bottom = below->reach_top;
        }

        auto [aa, ab] = seg_a(i);
        auto [ba, bb] = seg_b(j);
        CellSummary cell;
        cell.i = i;
        cell.j = j;
        cell.free_top = free_space_interval(b.vertex(j + 1), aa, ab, delta);
        cell.free_right = free_space_interval(a.vertex(i + 1), ba, bb, delta);
        propagate(r_left, r_bottom, cell.free_top, cell.free_right, cell.reach_top,
                  cell.reach_right);
        d.cells[d.index.at(k)] = cell;

        auto enqueue = [&](std::uint32_t ni, std::uint32_t nj) {
            std::uint64_t nk = ReachableDiagram::key(ni, nj);
            if (d.index.emplace(nk, std::uint32_t(d.cells.size())).second) {
                d.cells.push_back({});
                queue.push_back(nk);
            }
        };
        // FIFO queue processes cells in diagonal order, so both in-neighbors
        // of a cell are final before it is dequeued.
        if (!cell.reach_top.is_empty() && j + 1 < d.edges_b) enqueue(i, j + 1);
        if (!cell.reach_right.is_empty() && i + 1 < d.edges_a) enqueue(i + 1, j);
    }

    if (const CellSummary* last = d.cell(std::uint32_t(d.edges_a - 1), std::uint32_t(d.edges_b - 1)))
        d.end_reachable = last->reach_top.contains(1.0) || last->reach_right.contains(1.0);
    return d;
}

Matching extract_matching(const ReachableDiagram& d, const PolygonalCurve& a,
                          const PolygonalCurve& b) {
    if (!d.end_reachable)
        throw std::invalid_argument("extract_matching: end corner is not reachable");

    std::vector<std::array<double, 2>> rev;
    std::uint32_t i = std::uint32_t(d.edges_a - 1), j = std::uint32_t(d.edges_b - 1);
    double sx = 1.0, tx = 1.0;  // exit point in cell-local coordinates
    rev.push_back({double(d.edges_a), double(d.edges_b)});

    while (!(i == 0 && j == 0)) {
        Interval r_left, r_bottom;
        if (i > 0) {
            if (const CellSummary* left = d.cell(i - 1, j)) r_left = left->reach_right;
        }
        if (j > 0) {
            if (const CellSummary* below = d.cell(i, j - 1)) r_bottom = below->reach_top;
        }

        if (!r_left.is_empty() && r_left.lo <= tx && i > 0) {
            rev.push_back({double(i), double(j) + r_left.lo});
            tx = r_left.lo;
            sx = 1.0;
            --i;
        } else if (!r_bottom.is_empty() && r_bottom.lo <= sx && j > 0) {
            rev.push_back({double(i) + r_bottom.lo, double(j)});
            sx = r_bottom.lo;
            tx = 1.0;
            --j;
        } else {
            throw std::logic_error("extract_matching: dead end while backtracking");
        }
    }
    rev.push_back({0.0, 0.0});

    Matching m;
    m.breakpoints.reserve(rev.size());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        if (!m.breakpoints.empty() && m.breakpoints.back() == *it) continue;
        m.breakpoints.push_back(*it);
    }
    return m;
}

std::vector<double> relevant_vertex_edge_radii(const ReachableDiagram& d, const PolygonalCurve& a,
                                               const PolygonalCurve& b) {
    std::vector<double> out;
    out.reserve(2 * d.cells.size());
    for (const CellSummary& c : d.cells) {
        double top = vertex_edge_event_radius(b.vertex(c.j + 1), a.vertex(c.i), a.vertex(c.i + 1));
        if (top <= d.delta) out.push_back(top);
        double right = vertex_edge_event_radius(a.vertex(c.i + 1), b.vertex(c.j), b.vertex(c.j + 1));
        if (right <= d.delta) out.push_back(right);
        // diagram-border boundaries carry the vertex-0 events; without them
        // an event binding the optimal matching could escape the harvest
        if (c.i == 0) {
            double left = vertex_edge_event_radius(a.vertex(0), b.vertex(c.j), b.vertex(c.j + 1));
            if (left <= d.delta) out.push_back(left);
        }
        if (c.j == 0) {
            double bottom = vertex_edge_event_radius(b.vertex(0), a.vertex(c.i), a.vertex(c.i + 1));
            if (bottom <= d.delta) out.push_back(bottom);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool naive_decide(const PolygonalCurve& a, const PolygonalCurve& b, double delta) {
    if (delta < 0.0) throw std::invalid_argument("naive_decide: delta must be >= 0");
    if (a.dim() != b.dim()) throw std::invalid_argument("naive_decide: dimension mismatch");
    if (dist_sq(a.front(), b.front()) > delta * delta) return false;

    std::size_t ea = a.edge_count(), eb = b.edge_count();
    // reach_top of the previous row, indexed by column
    std::vector<Interval> row_top(ea, Interval::empty());
    Interval seed_left, seed_bottom;
    {
        Interval f = free_space_interval(a.vertex(0), b.vertex(0), b.vertex(1), delta);
        if (f.contains(0.0)) seed_left = Interval::of(0.0, f.hi);
        f = free_space_interval(b.vertex(0), a.vertex(0), a.vertex(1), delta);
        if (f.contains(0.0)) seed_bottom = Interval::of(0.0, f.hi);
    }
    Interval end_top, end_right;

    for (std::size_t j = 0; j < eb; ++j) {
        Interval carry_right = Interval::empty();
        for (std::size_t i = 0; i < ea; ++i) {
            Interval r_left = i == 0 ? (j == 0 ? seed_left : Interval::empty()) : carry_right;
            Interval r_bottom = j == 0 ? (i == 0 ? seed_bottom : Interval::empty()) : row_top[i];
            Interval free_top =
                free_space_interval(b.vertex(j + 1), a.vertex(i), a.vertex(i + 1), delta);
            Interval free_right =
                free_space_interval(a.vertex(i + 1), b.vertex(j), b.vertex(j + 1), delta);
            Interval reach_top, reach_right;
            propagate(r_left, r_bottom, free_top, free_right, reach_top, reach_right);
            row_top[i] = reach_top;
            carry_right = reach_right;
            if (i + 1 == ea && j + 1 == eb) {
                end_top = reach_top;
                end_right = reach_right;
            }
        }
    }
    return end_top.contains(1.0) || end_right.contains(1.0);
}

}  // namespace frechet
