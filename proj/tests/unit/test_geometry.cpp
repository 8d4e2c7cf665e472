#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "frechet/geometry.hpp"
#include "support.hpp"

using namespace frechet;

TEST_CASE("euclidean distance") {
    CHECK(dist(Point{0, 0}, Point{0, 0}) == 0.0);
    CHECK(dist(Point{0, 0}, Point{3, 4}) == doctest::Approx(5.0));
    CHECK(dist(Point{1, 2, 2}, Point{0, 0, 0}) == doctest::Approx(3.0));
    CHECK_THROWS_AS((void)dist(Point{0, 0}, Point{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("free space interval of a point against a segment") {
    Point p{0, 0};
    Segment seg{Point{0, 1}, Point{2, 1}};

    Interval i = free_space_interval(p, seg, std::sqrt(2.0));
    REQUIRE(!i.is_empty());
    CHECK(i.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(i.hi == doctest::Approx(0.5).epsilon(1e-12));

    Interval tangent = free_space_interval(p, seg, 1.0);
    REQUIRE(!tangent.is_empty());
    CHECK(tangent.lo == doctest::Approx(0.0));
    CHECK(tangent.hi == doctest::Approx(0.0));

    CHECK(free_space_interval(p, seg, 0.5).is_empty());
}

TEST_CASE("free space interval grows with delta") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int it = 0; it < 300; ++it) {
        Point p{u(rng), u(rng), u(rng)};
        Segment seg{Point{u(rng), u(rng), u(rng)}, Point{u(rng), u(rng), u(rng)}};
        double d1 = std::abs(u(rng)), d2 = d1 + std::abs(u(rng));
        Interval small = free_space_interval(p, seg, d1);
        Interval big = free_space_interval(p, seg, d2);
        if (!small.is_empty()) {
            REQUIRE(!big.is_empty());
            CHECK(big.lo <= small.lo + 1e-12);
            CHECK(big.hi >= small.hi - 1e-12);
        }
    }
}

TEST_CASE("vertex-edge event radius") {
    CHECK(vertex_edge_event_radius(Point{1, 0}, Segment{Point{0, 1}, Point{2, 1}}) ==
          doctest::Approx(1.0));
    CHECK(vertex_edge_event_radius(Point{0, 0}, Segment{Point{1, 1}, Point{2, 1}}) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK(vertex_edge_event_radius(Point{1, 1}, Segment{Point{0, 0}, Point{2, 2}}) ==
          doctest::Approx(0.0));
}

TEST_CASE("vertex-edge event radius is the smallest feasible delta") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int it = 0; it < 100; ++it) {
        Point p{u(rng), u(rng)};
        Segment seg{Point{u(rng), u(rng)}, Point{u(rng), u(rng)}};
        double r = vertex_edge_event_radius(p, seg);
        // bisect the smallest delta with a non-empty interval
        double lo = 0.0, hi = r + 10.0;
        for (int k = 0; k < 80; ++k) {
            double mid = 0.5 * (lo + hi);
            if (free_space_interval(p, seg, mid).is_empty())
                lo = mid;
            else
                hi = mid;
        }
        CHECK(hi == doctest::Approx(r).epsilon(1e-9));
    }
}

TEST_CASE("monotonicity event radius") {
    auto m = monotonicity_event_radius(Point{0, 0}, Point{2, 0}, Segment{Point{0, 1}, Point{2, 1}});
    REQUIRE(m.defined);
    CHECK(m.radius == doctest::Approx(std::sqrt(2.0)));

    auto none =
        monotonicity_event_radius(Point{0, 0}, Point{10, 0}, Segment{Point{0, 1}, Point{2, 1}});
    CHECK(!none.defined);

    // segment inside the bisector hyperplane: closest point to p is used
    auto flat =
        monotonicity_event_radius(Point{0, 0}, Point{0, 2}, Segment{Point{-1, 1}, Point{1, 1}});
    REQUIRE(flat.defined);
    CHECK(flat.radius == doctest::Approx(1.0));

    CHECK_THROWS_AS(
        (void)monotonicity_event_radius(Point{1, 1}, Point{1, 1}, Segment{Point{0, 0}, Point{1, 0}}),
        std::invalid_argument);
}

TEST_CASE("segment length inside a ball") {
    CHECK(segment_length_in_ball(Segment{Point{-2, 0}, Point{2, 0}}, Point{0, 0}, 1.0) ==
          doctest::Approx(2.0));
    CHECK(segment_length_in_ball(Segment{Point{5, 5}, Point{6, 5}}, Point{0, 0}, 1.0) == 0.0);
    CHECK(segment_length_in_ball(Segment{Point{0, 0}, Point{2, 0}}, Point{0, 0}, 1.0) ==
          doctest::Approx(1.0));
}

TEST_CASE("segment length in ball is bounded and monotone in r") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int it = 0; it < 200; ++it) {
        Segment seg{Point{u(rng), u(rng)}, Point{u(rng), u(rng)}};
        Point c{u(rng), u(rng)};
        double r1 = std::abs(u(rng)), r2 = r1 + std::abs(u(rng));
        double l1 = segment_length_in_ball(seg, c, r1);
        double l2 = segment_length_in_ball(seg, c, r2);
        double full = dist(seg.start, seg.end);
        CHECK(l1 <= full + 1e-12);
        CHECK(l1 <= l2 + 1e-12);
    }
}

TEST_CASE("matching width") {
    PolygonalCurve a(std::vector<Point>{Point{0, 0}, Point{1, 0}});
    PolygonalCurve b(std::vector<Point>{Point{0, 1}, Point{1, 1}});

    CHECK(matching_width(Matching::identity(1), a, a) == 0.0);
    CHECK(matching_width(Matching::identity(1), a, b) == doctest::Approx(1.0));

    Matching bad;
    bad.breakpoints = {{0.0, 0.0}, {1.0, 0.8}, {0.5, 1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS((void)matching_width(bad, a, b), std::invalid_argument);
}

TEST_CASE("matching width equals the dense-sampling maximum") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 20; ++it) {
        PolygonalCurve a = testsupport::random_walk_curve(rng, 6, 2);
        PolygonalCurve b = testsupport::random_walk_curve(rng, 5, 2);
        // random monotone matching through the parameter rectangle
        std::uniform_real_distribution<double> u(0.0, 1.0);
        Matching m;
        m.breakpoints.push_back({0.0, 0.0});
        double s = 0.0, t = 0.0;
        while (s < a.edge_count() || t < b.edge_count()) {
            s = std::min(s + u(rng), double(a.edge_count()));
            t = std::min(t + u(rng), double(b.edge_count()));
            m.breakpoints.push_back({s, t});
        }
        m.breakpoints.back() = {double(a.edge_count()), double(b.edge_count())};

        double w = matching_width(m, a, b);
        // independent oracle: uniform samples plus every parameter at which
        // either coordinate crosses a vertex (the leash is convex between
        // those, so this set contains the maximizer)
        double dense = 0.0;
        for (std::size_t k = 0; k + 1 < m.breakpoints.size(); ++k) {
            double s0 = m.breakpoints[k][0], t0 = m.breakpoints[k][1];
            double s1 = m.breakpoints[k + 1][0], t1 = m.breakpoints[k + 1][1];
            std::vector<double> fs = {0.0, 1.0};
            for (int q = 1; q < 400; ++q) fs.push_back(q / 400.0);
            for (double g = std::floor(s0) + 1.0; g < s1; g += 1.0)
                if (g > s0) fs.push_back((g - s0) / (s1 - s0));
            for (double g = std::floor(t0) + 1.0; g < t1; g += 1.0)
                if (g > t0) fs.push_back((g - t0) / (t1 - t0));
            for (double f : fs)
                dense = std::max(dense, dist(a.eval(s0 + f * (s1 - s0)), b.eval(t0 + f * (t1 - t0))));
        }
        CHECK(dense <= w * (1.0 + 1e-9) + 1e-12);
        CHECK(w <= dense * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("curve eval and opened closed curve") {
    ClosedCurve sq(std::vector<Point>{Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}});
    CHECK(sq.length() == doctest::Approx(4.0));
    CHECK(sq.eval(3.5) == Point{0.0, 0.5});

    PolygonalCurve at_vertex = sq.opened_at(1.0);
    CHECK(at_vertex.size() == 5);
    CHECK(at_vertex.front()[0] == 1.0);
    CHECK(at_vertex.point(0) == at_vertex.point(4));

    PolygonalCurve mid_edge = sq.opened_at(0.5);
    CHECK(mid_edge.size() == 6);
    CHECK(mid_edge.point(0) == Point{0.5, 0.0});
    CHECK(mid_edge.point(0) == mid_edge.point(5));
    CHECK(mid_edge.length() == doctest::Approx(4.0));
}
