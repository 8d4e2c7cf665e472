#include "frechet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frechet {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

double max_abs_coord(PointRef a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

Matching Matching::identity(std::size_t edge_count) {
    Matching m;
    m.breakpoints.push_back({0.0, 0.0});
    m.breakpoints.push_back({double(edge_count), double(edge_count)});
    return m;
}

Matching Matching::swapped() const {
    Matching m;
    m.breakpoints.reserve(breakpoints.size());
    for (const auto& bp : breakpoints) m.breakpoints.push_back({bp[1], bp[0]});
    return m;
}

PolygonalCurve::PolygonalCurve(std::vector<double> flat, std::size_t dim)
    : flat_(std::move(flat)), dim_(dim) {
    require(dim_ >= 1 && flat_.size() % dim_ == 0, "curve: flat size not a multiple of dim");
}

PolygonalCurve::PolygonalCurve(const std::vector<Point>& pts) {
    require(!pts.empty(), "curve: no vertices");
    dim_ = pts.front().dim();
    flat_.reserve(pts.size() * dim_);
    for (const auto& p : pts) {
        require(p.dim() == dim_, "curve: mixed dimensions");
        flat_.insert(flat_.end(), p.coords.begin(), p.coords.end());
    }
}

void PolygonalCurve::push_vertex(PointRef p) {
    if (dim_ == 0) dim_ = p.size();
    require(p.size() == dim_, "curve: mixed dimensions");
    flat_.insert(flat_.end(), p.begin(), p.end());
}

void PolygonalCurve::validate(bool allow_degenerate_last_edge) const {
    require(dim_ >= 1, "curve: dimension must be >= 1");
    require(size() >= 2, "curve: needs at least two vertices");
    for (double x : flat_)
        require(std::isfinite(x), "curve: non-finite coordinate");
    for (std::size_t i = 0; i + 1 < size(); ++i) {
        if (dist_sq(vertex(i), vertex(i + 1)) == 0.0) {
            bool last = (i + 2 == size());
            require(allow_degenerate_last_edge && last,
                    "curve: consecutive identical vertices");
        }
    }
}

Point PolygonalCurve::eval(EdgeCoord t) const {
    require(t >= 0.0 && t <= double(edge_count()), "eval: edge coordinate out of range");
    std::size_t i = std::min(std::size_t(t), edge_count() - 1);
    double f = t - double(i);
    PointRef a = vertex(i), b = vertex(i + 1);
    Point p;
    p.coords.resize(dim_);
    for (std::size_t k = 0; k < dim_; ++k) p.coords[k] = a[k] + f * (b[k] - a[k]);
    return p;
}

double PolygonalCurve::length() const {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < size(); ++i) s += dist(vertex(i), vertex(i + 1));
    return s;
}

ClosedCurve::ClosedCurve(std::vector<double> flat, std::size_t dim)
    : flat_(std::move(flat)), dim_(dim) {
    require(dim_ >= 1 && flat_.size() % dim_ == 0, "closed curve: flat size not a multiple of dim");
}

ClosedCurve::ClosedCurve(const std::vector<Point>& pts) {
    require(!pts.empty(), "closed curve: no vertices");
    dim_ = pts.front().dim();
    flat_.reserve(pts.size() * dim_);
    for (const auto& p : pts) {
        require(p.dim() == dim_, "closed curve: mixed dimensions");
        flat_.insert(flat_.end(), p.coords.begin(), p.coords.end());
    }
}

void ClosedCurve::validate() const {
    require(dim_ >= 1, "closed curve: dimension must be >= 1");
    require(size() >= 3, "closed curve: needs at least three vertices");
    for (double x : flat_)
        require(std::isfinite(x), "closed curve: non-finite coordinate");
    for (std::size_t i = 0; i < size(); ++i)
        require(dist_sq(vertex(i), vertex(i + 1)) > 0.0,
                "closed curve: consecutive identical vertices");
}

Point ClosedCurve::eval(EdgeCoord t) const {
    require(t >= 0.0 && t <= double(edge_count()), "eval: edge coordinate out of range");
    std::size_t i = std::min(std::size_t(t), edge_count() - 1);
    double f = t - double(i);
    PointRef a = vertex(i), b = vertex(i + 1);
    Point p;
    p.coords.resize(dim_);
    for (std::size_t k = 0; k < dim_; ++k) p.coords[k] = a[k] + f * (b[k] - a[k]);
    return p;
}

double ClosedCurve::length() const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) s += dist(vertex(i), vertex(i + 1));
    return s;
}

PolygonalCurve ClosedCurve::opened_at(EdgeCoord where) const {
    require(where >= 0.0 && where <= double(edge_count()), "opened_at: coordinate out of range");
    std::size_t n = size();
    if (where == double(n)) where = 0.0;
    std::size_t i = std::size_t(where);
    double f = where - double(i);
    if (f == 1.0) {
        i = (i + 1) % n;
        f = 0.0;
    }
    PolygonalCurve out;
    Point split = eval(where);
    out.push_vertex(split);
    if (f > 0.0) {
        // interior split: continue with the tail of edge i
        for (std::size_t k = 1; k <= n; ++k) out.push_vertex(vertex(i + k));
    } else {
        for (std::size_t k = 1; k < n; ++k) out.push_vertex(vertex(i + k));
    }
    out.push_vertex(split);
    return out;
}

double dist_sq(PointRef p, PointRef q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

double dist(PointRef p, PointRef q) {
    require(p.size() == q.size(), "dist: dimension mismatch");
    return std::sqrt(dist_sq(p, q));
}

Interval free_space_interval(PointRef p, PointRef seg_a, PointRef seg_b, double delta) {
    require(p.size() == seg_a.size() && seg_a.size() == seg_b.size(),
            "free_space_interval: dimension mismatch");
    require(delta >= 0.0, "free_space_interval: delta must be >= 0");
    // |a + t(b-a) - p|^2 <= delta^2  as  A t^2 + B t + C <= 0
    double A = 0.0, B = 0.0, C = -delta * delta;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double u = seg_b[i] - seg_a[i];
        double v = seg_a[i] - p[i];
        A += u * u;
        B += 2.0 * u * v;
        C += v * v;
    }
    if (A == 0.0) return C <= 0.0 ? Interval::of(0.0, 1.0) : Interval::empty();
    double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) {
        // tangency cases are exact on paper but fuzzy in floating point;
        // clamp slightly negative discriminants to zero
        double scale = std::max({max_abs_coord(p), max_abs_coord(seg_a), max_abs_coord(seg_b),
                                 delta, 1e-154});
        double s2 = scale * scale;
        if (disc >= -1e-12 * s2 * s2)
            disc = 0.0;
        else
            return Interval::empty();
    }
    double root = std::sqrt(disc);
    double t0 = (-B - root) / (2.0 * A);
    double t1 = (-B + root) / (2.0 * A);
    t0 = std::max(t0, 0.0);
    t1 = std::min(t1, 1.0);
    if (t0 > t1) return Interval::empty();
    return Interval::of(t0, t1);
}

Interval free_space_interval(const Point& p, const Segment& seg, double delta) {
    return free_space_interval(p, seg.start, seg.end, delta);
}

double vertex_edge_event_radius(PointRef p, PointRef seg_a, PointRef seg_b) {
    require(p.size() == seg_a.size() && seg_a.size() == seg_b.size(),
            "vertex_edge_event_radius: dimension mismatch");
    double A = 0.0, dota = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double u = seg_b[i] - seg_a[i];
        dota += (p[i] - seg_a[i]) * u;
        A += u * u;
    }
    double t = A == 0.0 ? 0.0 : std::clamp(dota / A, 0.0, 1.0);
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = seg_a[i] + t * (seg_b[i] - seg_a[i]) - p[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double vertex_edge_event_radius(const Point& p, const Segment& seg) {
    return vertex_edge_event_radius(p, seg.start, seg.end);
}

MonotonicityRadius monotonicity_event_radius(PointRef p, PointRef q, PointRef seg_a, PointRef seg_b) {
    require(p.size() == q.size() && p.size() == seg_a.size() && p.size() == seg_b.size(),
            "monotonicity_event_radius: dimension mismatch");
    if (dist_sq(p, q) == 0.0)
        throw std::invalid_argument("monotonicity_event_radius: p == q, bisector undefined");
    // g(t) = |seg(t)-p|^2 - |seg(t)-q|^2 is linear in t
    double g0 = dist_sq(seg_a, p) - dist_sq(seg_a, q);
    double g1 = dist_sq(seg_b, p) - dist_sq(seg_b, q);
    MonotonicityRadius out;
    if (g0 == g1) {
        if (g0 != 0.0) return out;
        // segment lies inside the bisector: use the point closest to p,
        // which gives the minimal event radius
        out.defined = true;
        out.t = 0.0;
        double A = 0.0, dota = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            double u = seg_b[i] - seg_a[i];
            dota += (p[i] - seg_a[i]) * u;
            A += u * u;
        }
        if (A != 0.0) out.t = std::clamp(dota / A, 0.0, 1.0);
    } else {
        double t = g0 / (g0 - g1);
        if (t < 0.0 || t > 1.0) return out;
        out.defined = true;
        out.t = t;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = seg_a[i] + out.t * (seg_b[i] - seg_a[i]) - p[i];
        s += d * d;
    }
    out.radius = std::sqrt(s);
    return out;
}

MonotonicityRadius monotonicity_event_radius(const Point& p, const Point& q, const Segment& seg) {
    return monotonicity_event_radius(p, q, seg.start, seg.end);
}

double segment_length_in_ball(PointRef seg_a, PointRef seg_b, PointRef center, double r) {
    require(r >= 0.0, "segment_length_in_ball: radius must be >= 0");
    Interval t = free_space_interval(center, seg_a, seg_b, r);
    return t.length() * dist(seg_a, seg_b);
}

double segment_length_in_ball(const Segment& seg, const Point& center, double r) {
    return segment_length_in_ball(seg.start, seg.end, center, r);
}

double curve_length_in_ball(const PolygonalCurve& c, PointRef center, double r) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        s += segment_length_in_ball(c.vertex(i), c.vertex(i + 1), center, r);
    return s;
}

double curve_length_in_ball(const ClosedCurve& c, PointRef center, double r) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        s += segment_length_in_ball(c.vertex(i), c.vertex(i + 1), center, r);
    return s;
}

double matching_width(const Matching& m, const PolygonalCurve& a, const PolygonalCurve& b) {
    require(!m.breakpoints.empty(), "matching_width: empty matching");
    double ea = double(a.edge_count()), eb = double(b.edge_count());
    double prev_s = -1.0, prev_t = -1.0;
    for (const auto& bp : m.breakpoints) {
        require(bp[0] >= prev_s && bp[1] >= prev_t, "matching_width: non-monotone matching");
        require(bp[0] >= 0.0 && bp[0] <= ea && bp[1] >= 0.0 && bp[1] <= eb,
                "matching_width: coordinate out of range");
        prev_s = bp[0];
        prev_t = bp[1];
    }
    require(m.breakpoints.front()[0] == 0.0 && m.breakpoints.front()[1] == 0.0,
            "matching_width: matching must start at (0,0)");
    require(m.breakpoints.back()[0] == ea && m.breakpoints.back()[1] == eb,
            "matching_width: matching must end at the final corner");

    // Between breakpoints the leash length is convex only while both points
    // stay on fixed edges, so each piece is subdivided at every vertex
    // crossing before taking the endpoint maximum.
    double w = dist(a.eval(m.breakpoints[0][0]), b.eval(m.breakpoints[0][1]));
    std::vector<double> cuts;
    for (std::size_t k = 0; k + 1 < m.breakpoints.size(); ++k) {
        double s0 = m.breakpoints[k][0], t0 = m.breakpoints[k][1];
        double s1 = m.breakpoints[k + 1][0], t1 = m.breakpoints[k + 1][1];
        cuts.clear();
        cuts.push_back(1.0);
        auto add_crossings = [&cuts](double u0, double u1) {
            if (u1 <= u0) return;
            for (double g = std::floor(u0) + 1.0; g < u1; g += 1.0)
                if (g > u0) cuts.push_back((g - u0) / (u1 - u0));
        };
        add_crossings(s0, s1);
        add_crossings(t0, t1);
        std::sort(cuts.begin(), cuts.end());
        for (double f : cuts) {
            double s = s0 + f * (s1 - s0), t = t0 + f * (t1 - t0);
            w = std::max(w, dist(a.eval(s), b.eval(t)));
        }
    }
    return w;
}

}  // namespace frechet
