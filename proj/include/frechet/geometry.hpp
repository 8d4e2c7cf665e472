#ifndef FRECHET_GEOMETRY_HPP
#define FRECHET_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace frechet {

using PointRef = std::span<const double>;

/// A point in R^d, d >= 1. Coordinates are plain doubles throughout;
/// the library is approximate by design and never uses exact arithmetic.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    explicit Point(PointRef r) : coords(r.begin(), r.end()) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }
    operator PointRef() const { return {coords.data(), coords.size()}; }

    bool operator==(const Point& o) const { return coords == o.coords; }
};

struct Segment {
    Point start;
    Point end;
};

/// Closed subinterval of [0,1], or empty. Kept closed at both ends so a
/// tangency (distance exactly delta) counts as free.
struct Interval {
    double lo = 1.0;
    double hi = 0.0;

    static Interval empty() { return {1.0, 0.0}; }
    static Interval of(double a, double b) { return {a, b}; }
    bool is_empty() const { return lo > hi; }
    bool contains(double x) const { return !is_empty() && lo <= x && x <= hi; }
    double length() const { return is_empty() ? 0.0 : hi - lo; }
};

/// Global edge coordinate on a curve: integer part selects the edge,
/// fractional part the position along it. Ranges over [0, edge_count].
using EdgeCoord = double;

/// Monotone piecewise-linear reparameterization pair, stored as breakpoints
/// in edge coordinates of the two curves. Between breakpoints both curve
/// points move linearly, so the leash length is convex on each piece and
/// the width is attained at a breakpoint.
struct Matching {
    std::vector<std::array<double, 2>> breakpoints;

    static Matching identity(std::size_t edge_count);
    /// Matching with the two coordinate roles exchanged (B<->A).
    Matching swapped() const;
};

/// Ordered vertex list in R^d. At least two vertices, all the same
/// dimension, no two consecutive vertices identical. Vertices are stored
/// flat so hot loops touch contiguous memory.
class PolygonalCurve {
  public:
    PolygonalCurve() = default;
    PolygonalCurve(std::vector<double> flat, std::size_t dim);
    explicit PolygonalCurve(const std::vector<Point>& pts);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
    std::size_t edge_count() const { return size() == 0 ? 0 : size() - 1; }

    PointRef vertex(std::size_t i) const { return {flat_.data() + i * dim_, dim_}; }
    PointRef front() const { return vertex(0); }
    PointRef back() const { return vertex(size() - 1); }
    Point point(std::size_t i) const { return Point(vertex(i)); }

    /// Point at a global edge coordinate in [0, edge_count].
    Point eval(EdgeCoord t) const;

    /// Sum of edge lengths.
    double length() const;

    const std::vector<double>& flat() const { return flat_; }

    void push_vertex(PointRef p);

    /// Throws std::invalid_argument if the invariants above are violated.
    /// Simplification output may carry one zero-length final edge; input
    /// curves from files or callers must not.
    void validate(bool allow_degenerate_last_edge = false) const;

  private:
    std::vector<double> flat_;
    std::size_t dim_ = 0;
};

/// Closed polygonal curve: at least three vertices, the closing edge from
/// the last vertex back to the first is implied and not stored.
class ClosedCurve {
  public:
    ClosedCurve() = default;
    ClosedCurve(std::vector<double> flat, std::size_t dim);
    explicit ClosedCurve(const std::vector<Point>& pts);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
    std::size_t edge_count() const { return size(); }

    PointRef vertex(std::size_t i) const { return {flat_.data() + (i % size()) * dim_, dim_}; }
    Point point(std::size_t i) const { return Point(vertex(i)); }

    /// Point at a cyclic edge coordinate in [0, edge_count].
    Point eval(EdgeCoord t) const;

    double length() const;

    const std::vector<double>& flat() const { return flat_; }

    /// Open polygonal curve traversing the cycle once, starting and ending
    /// at the given cyclic edge coordinate (a split vertex is inserted when
    /// the coordinate falls in the interior of an edge).
    PolygonalCurve opened_at(EdgeCoord where) const;

    void validate() const;

  private:
    std::vector<double> flat_;
    std::size_t dim_ = 0;
};

// ---------------------------------------------------------------------------
// Primitive operations.

double dist_sq(PointRef p, PointRef q);
double dist(PointRef p, PointRef q);

/// The set {t in [0,1] : |p - seg(t)| <= delta} as a closed interval.
/// Solves the quadratic |seg(t) - p|^2 <= delta^2; near-tangent
/// discriminants are clamped to zero so tangency counts as free.
Interval free_space_interval(PointRef p, PointRef seg_a, PointRef seg_b, double delta);
Interval free_space_interval(const Point& p, const Segment& seg, double delta);

/// Minimum distance from p to the segment, i.e. the smallest delta at which
/// the free-space interval becomes non-empty.
double vertex_edge_event_radius(PointRef p, PointRef seg_a, PointRef seg_b);
double vertex_edge_event_radius(const Point& p, const Segment& seg);

/// Radius at which the segment meets the bisector of p and q: returns
/// |p - c| for the intersection point c of seg with the bisector hyperplane,
/// or nothing when the bisector misses the segment. No direction filtering;
/// callers treat the result as a candidate critical value. If the segment
/// lies inside the bisector, the point of seg closest to p is used.
/// Throws std::invalid_argument when p == q.
struct MonotonicityRadius {
    bool defined = false;
    double radius = 0.0;
    double t = 0.0;  // parameter of c on the segment
};
MonotonicityRadius monotonicity_event_radius(PointRef p, PointRef q, PointRef seg_a, PointRef seg_b);
MonotonicityRadius monotonicity_event_radius(const Point& p, const Point& q, const Segment& seg);

/// Exact length of seg intersected with the closed ball B(center, r).
double segment_length_in_ball(PointRef seg_a, PointRef seg_b, PointRef center, double r);
double segment_length_in_ball(const Segment& seg, const Point& center, double r);

/// Total length of the curve inside the closed ball B(center, r).
double curve_length_in_ball(const PolygonalCurve& c, PointRef center, double r);
double curve_length_in_ball(const ClosedCurve& c, PointRef center, double r);

/// Maximum leash length of a matching over its breakpoints. Throws
/// std::invalid_argument on non-monotone breakpoints or coordinates out of
/// the curves' edge ranges.
double matching_width(const Matching& m, const PolygonalCurve& a, const PolygonalCurve& b);

}  // namespace frechet

#endif
