#include "frechet/wspd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frechet {

namespace {

struct Node {
    std::size_t begin = 0, end = 0;  // range of point indices in `order`
    std::vector<double> box_lo, box_hi;
    int left = -1, right = -1;

    std::size_t count() const { return end - begin; }
};

struct FairSplitTree {
    const std::vector<Point>* pts = nullptr;
    std::vector<std::size_t> order;
    std::vector<Node> nodes;
    int root = -1;

    double diameter_bound(const Node& n) const {
        double s = 0.0;
        for (std::size_t k = 0; k < n.box_lo.size(); ++k) {
            double d = n.box_hi[k] - n.box_lo[k];
            s += d * d;
        }
        return std::sqrt(s);
    }

    double box_gap(const Node& a, const Node& b) const {
        double s = 0.0;
        for (std::size_t k = 0; k < a.box_lo.size(); ++k) {
            double d = std::max({a.box_lo[k] - b.box_hi[k], b.box_lo[k] - a.box_hi[k], 0.0});
            s += d * d;
        }
        return std::sqrt(s);
    }

    // Iterative build; the tree can be deep for clustered inputs.
    void build() {
        struct Work {
            std::size_t begin, end;
            int parent;
            bool is_left;
        };
        std::vector<Work> stack;
        stack.push_back({0, order.size(), -1, false});
        while (!stack.empty()) {
            Work w = stack.back();
            stack.pop_back();
            Node n;
            n.begin = w.begin;
            n.end = w.end;
            const auto& p0 = (*pts)[order[w.begin]];
            n.box_lo.assign(p0.coords.begin(), p0.coords.end());
            n.box_hi = n.box_lo;
            for (std::size_t i = w.begin + 1; i < w.end; ++i) {
                const auto& p = (*pts)[order[i]];
                for (std::size_t k = 0; k < n.box_lo.size(); ++k) {
                    n.box_lo[k] = std::min(n.box_lo[k], p[k]);
                    n.box_hi[k] = std::max(n.box_hi[k], p[k]);
                }
            }
            int idx = int(nodes.size());
            nodes.push_back(std::move(n));
            if (w.parent < 0)
                root = idx;
            else if (w.is_left)
                nodes[w.parent].left = idx;
            else
                nodes[w.parent].right = idx;
            if (w.end - w.begin <= 1) continue;

            // split the tight box at the midpoint of its longest side; both
            // halves are non-empty because the extremes lie on the box
            const Node& cur = nodes[idx];
            std::size_t axis = 0;
            double best = -1.0;
            for (std::size_t k = 0; k < cur.box_lo.size(); ++k) {
                double d = cur.box_hi[k] - cur.box_lo[k];
                if (d > best) {
                    best = d;
                    axis = k;
                }
            }
            double mid = 0.5 * (cur.box_lo[axis] + cur.box_hi[axis]);
            auto it = std::partition(order.begin() + w.begin, order.begin() + w.end,
                                     [&](std::size_t i) { return (*pts)[i][axis] < mid; });
            std::size_t cut = std::size_t(it - order.begin());
            if (cut == w.begin || cut == w.end) {
                // rounding put everything on one side; median split instead
                cut = w.begin + (w.end - w.begin) / 2;
                std::nth_element(order.begin() + w.begin, order.begin() + cut,
                                 order.begin() + w.end, [&](std::size_t a, std::size_t b) {
                                     return (*pts)[a][axis] < (*pts)[b][axis];
                                 });
            }
            stack.push_back({w.begin, cut, idx, true});
            stack.push_back({cut, w.end, idx, false});
        }
    }

    std::size_t representative(int i) const { return order[nodes[i].begin]; }
};

}  // namespace

std::vector<WspdPair> wspd_pairs(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("wspd_pairs: no points");
    std::size_t dim = points.front().dim();
    for (const auto& p : points)
        if (p.dim() != dim) throw std::invalid_argument("wspd_pairs: mixed dimensions");

    std::vector<Point> uniq = points;
    std::sort(uniq.begin(), uniq.end(),
              [](const Point& a, const Point& b) { return a.coords < b.coords; });
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

    std::vector<WspdPair> out;
    if (uniq.size() <= 1) return out;

    FairSplitTree t;
    t.pts = &uniq;
    t.order.resize(uniq.size());
    for (std::size_t i = 0; i < uniq.size(); ++i) t.order[i] = i;
    t.nodes.reserve(2 * uniq.size());
    t.build();

    std::vector<std::pair<int, int>> work = {{t.root, t.root}};
    while (!work.empty()) {
        auto [ia, ib] = work.back();
        work.pop_back();
        const Node& a = t.nodes[ia];
        const Node& b = t.nodes[ib];
        if (ia == ib) {
            if (a.count() <= 1) continue;
            work.push_back({a.left, a.left});
            work.push_back({a.right, a.right});
            work.push_back({a.left, a.right});
            continue;
        }
        double da = t.diameter_bound(a), db = t.diameter_bound(b);
        if (std::max(da, db) <= t.box_gap(a, b) / 8.0) {
            WspdPair p;
            p.rep_a = uniq[t.representative(ia)];
            p.rep_b = uniq[t.representative(ib)];
            p.count_a = a.count();
            p.count_b = b.count();
            out.push_back(std::move(p));
            continue;
        }
        if (da >= db) {
            work.push_back({a.left, ib});
            work.push_back({a.right, ib});
        } else {
            work.push_back({ia, b.left});
            work.push_back({ia, b.right});
        }
    }
    return out;
}

CandidateRadii approx_distances(const std::vector<Point>& points) {
    CandidateRadii z;
    std::vector<WspdPair> pairs = wspd_pairs(points);
    z.pair_count = pairs.size();
    z.values.reserve(2 * pairs.size());
    for (const auto& p : pairs) {
        double l = 0.75 * dist(p.rep_a, p.rep_b);
        z.values.push_back(l);
        z.values.push_back(2.0 * l);
    }
    std::sort(z.values.begin(), z.values.end());
    return z;
}

}  // namespace frechet
