#include "frechet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "frechet/freespace.hpp"

namespace frechet {

namespace {

// Vertex-edge radius together with the foot classification: radii attained
// at a segment endpoint are plain vertex-vertex distances.
CriticalValue classified_vertex_edge(PointRef p, PointRef sa, PointRef sb) {
    double A = 0.0, dota = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double u = sb[i] - sa[i];
        dota += (p[i] - sa[i]) * u;
        A += u * u;
    }
    double t = A == 0.0 ? 0.0 : dota / A;
    CriticalValue cv;
    cv.kind = (t <= 0.0 || t >= 1.0) ? CriticalKind::vertex_vertex : CriticalKind::vertex_edge;
    cv.value = vertex_edge_event_radius(p, sa, sb);
    return cv;
}

void append_vertex_edge(const PolygonalCurve& verts, const PolygonalCurve& edges,
                        std::vector<CriticalValue>& out) {
    std::size_t base = out.size();
    out.resize(base + verts.size() * edges.edge_count());
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < (long long)(verts.size() * edges.edge_count()); ++k) {
        std::size_t v = std::size_t(k) / edges.edge_count();
        std::size_t e = std::size_t(k) % edges.edge_count();
        out[base + k] = classified_vertex_edge(verts.vertex(v), edges.vertex(e), edges.vertex(e + 1));
    }
}

void append_monotonicity(const PolygonalCurve& verts, const PolygonalCurve& edges,
                         std::vector<CriticalValue>& out) {
    std::size_t n = verts.size();
    std::size_t npairs = n * (n - 1) / 2;
    std::size_t ne = edges.edge_count();
    std::vector<double> radii(npairs * ne, std::numeric_limits<double>::quiet_NaN());
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < (long long)(npairs * ne); ++k) {
        std::size_t pair = std::size_t(k) / ne;
        std::size_t e = std::size_t(k) % ne;
        // unrank the (i<j) pair
        std::size_t i = 0, rem = pair;
        while (rem >= n - 1 - i) {
            rem -= n - 1 - i;
            ++i;
        }
        std::size_t j = i + 1 + rem;
        if (dist_sq(verts.vertex(i), verts.vertex(j)) == 0.0) continue;
        MonotonicityRadius m = monotonicity_event_radius(verts.vertex(i), verts.vertex(j),
                                                         edges.vertex(e), edges.vertex(e + 1));
        if (m.defined) radii[k] = m.radius;
    }
    for (double r : radii)
        if (!std::isnan(r)) out.push_back({r, CriticalKind::monotonicity});
}

}  // namespace

CriticalValueSet critical_values(const PolygonalCurve& a, const PolygonalCurve& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("critical_values: dimension mismatch");
    CriticalValueSet s;
    s.values.push_back({dist(a.front(), b.front()), CriticalKind::endpoint});
    s.values.push_back({dist(a.back(), b.back()), CriticalKind::endpoint});
    append_vertex_edge(a, b, s.values);
    append_vertex_edge(b, a, s.values);
    append_monotonicity(a, b, s.values);
    append_monotonicity(b, a, s.values);
    std::sort(s.values.begin(), s.values.end(),
              [](const CriticalValue& x, const CriticalValue& y) { return x.value < y.value; });
    return s;
}

double exact_frechet(const PolygonalCurve& a, const PolygonalCurve& b,
                     std::size_t max_total_vertices) {
    if (a.size() + b.size() > max_total_vertices)
        throw std::invalid_argument(
            "exact_frechet: input too large for the exact oracle, use the approximation");
    CriticalValueSet s = critical_values(a, b);
    std::vector<double> vals;
    vals.reserve(s.values.size());
    for (const auto& cv : s.values) vals.push_back(cv.value);
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    // the distance is one of the candidates, so the last one is feasible
    std::size_t lo = 0, hi = vals.size() - 1;
    if (decide_reachable(a, b, vals[lo]).end_reachable) return vals[lo];
    while (lo + 1 < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (decide_reachable(a, b, vals[mid]).end_reachable)
            hi = mid;
        else
            lo = mid;
    }
    return vals[hi];
}

double discrete_frechet(const std::vector<Point>& p, const std::vector<Point>& q, bool cyclic) {
    if (p.empty() || q.empty()) throw std::invalid_argument("discrete_frechet: empty sequence");
    auto open_df = [](const std::vector<Point>& pp, const std::vector<Point>& qq) {
        std::size_t m = pp.size(), n = qq.size();
        std::vector<double> prev(n), cur(n);
        for (std::size_t j = 0; j < n; ++j) {
            double d = dist(pp[0], qq[j]);
            prev[j] = j == 0 ? d : std::max(prev[j - 1], d);
        }
        for (std::size_t i = 1; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double d = dist(pp[i], qq[j]);
                double best;
                if (j == 0)
                    best = prev[0];
                else
                    best = std::min({prev[j], prev[j - 1], cur[j - 1]});
                cur[j] = std::max(d, best);
            }
            std::swap(prev, cur);
        }
        return prev[n - 1];
    };
    if (!cyclic) return open_df(p, q);
    // seam enforced by closing both sequences; p's offset ranges over all
    // of its entries
    std::vector<Point> q_closed = q;
    q_closed.push_back(q.front());
    double best = std::numeric_limits<double>::infinity();
    std::vector<Point> rot = p;
    for (std::size_t r = 0; r < p.size(); ++r) {
        std::rotate(rot.begin(), rot.begin() + (r == 0 ? 0 : 1), rot.end());
        std::vector<Point> rot_closed = rot;
        rot_closed.push_back(rot.front());
        best = std::min(best, open_df(rot_closed, q_closed));
    }
    return best;
}

std::vector<Point> densify(const std::vector<Point>& vertices, bool closed, double max_edge_len) {
    if (max_edge_len <= 0.0) throw std::invalid_argument("densify: max_edge_len must be positive");
    std::vector<Point> out;
    std::size_t n = vertices.size();
    std::size_t edges = closed ? n : n - 1;
    for (std::size_t e = 0; e < edges; ++e) {
        const Point& a = vertices[e];
        const Point& b = vertices[(e + 1) % n];
        double len = dist(a, b);
        std::size_t pieces = std::max<std::size_t>(1, std::size_t(std::ceil(len / max_edge_len)));
        for (std::size_t k = 0; k < pieces; ++k) {
            double f = double(k) / double(pieces);
            Point p;
            p.coords.resize(a.dim());
            for (std::size_t d = 0; d < a.dim(); ++d) p.coords[d] = a[d] + f * (b[d] - a[d]);
            out.push_back(std::move(p));
        }
    }
    if (!closed) out.push_back(vertices.back());
    return out;
}

}  // namespace frechet
