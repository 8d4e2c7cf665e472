#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "frechet/geometry.hpp"
#include "frechet/simplify.hpp"
#include "support.hpp"

using namespace frechet;

TEST_CASE("greedy simplification scan") {
    PolygonalCurve p(std::vector<Point>{Point{0, 0}, Point{0.5, 0}, Point{2, 0}, Point{2.5, 0}});

    SimplificationResult r = simplify(p, 1.0);
    CHECK(r.kept_indices == std::vector<std::size_t>{0, 2, 3});
    CHECK(r.simplified.size() == 3);

    SimplificationResult all = simplify(p, 0.0);
    CHECK(all.kept_indices.size() == p.size());

    PolygonalCurve tight(std::vector<Point>{Point{0, 0}, Point{0.1, 0}, Point{0.2, 0.1}, Point{0, 0.2}});
    SimplificationResult two = simplify(tight, 10.0);
    CHECK(two.kept_indices == std::vector<std::size_t>{0, 3});
}

TEST_CASE("ties at exactly mu are kept") {
    PolygonalCurve p(std::vector<Point>{Point{0, 0}, Point{1, 0}, Point{3, 0}});
    SimplificationResult r = simplify(p, 1.0);
    CHECK(r.kept_indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("every simplified edge except the last is at least mu long") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int it = 0; it < 100; ++it) {
        PolygonalCurve p = testsupport::random_walk_curve(rng, 2 + it % 30, 2, 0.7);
        double mu = u(rng);
        SimplificationResult r = simplify(p, mu);
        for (std::size_t k = 0; k + 2 < r.simplified.size(); ++k)
            CHECK(dist(r.simplified.vertex(k), r.simplified.vertex(k + 1)) >= mu);
    }
}

TEST_CASE("simplification matching stays within mu") {
    PolygonalCurve p(std::vector<Point>{Point{0, 0}, Point{0.5, 0}, Point{2, 0}, Point{2.5, 0}});
    SimplificationResult r = simplify(p, 1.0);
    Matching m = simplification_matching(p, r);
    double w = matching_width(m, p, r.simplified);
    CHECK(w == doctest::Approx(0.5));
    CHECK(w <= 1.0 + 1e-12);

    SimplificationResult identity = simplify(p, 0.0);
    CHECK(matching_width(simplification_matching(p, identity), p, identity.simplified) == 0.0);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 2.5);
    for (int it = 0; it < 200; ++it) {
        PolygonalCurve q = testsupport::random_walk_curve(rng, 2 + it % 25, 1 + it % 3, 0.8);
        double mu = u(rng);
        SimplificationResult s = simplify(q, mu);
        CHECK(matching_width(simplification_matching(q, s), q, s.simplified) <= mu + 1e-12);
    }
}

TEST_CASE("simplification is stable inside atomic distance intervals") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 50; ++it) {
        PolygonalCurve p = testsupport::random_walk_curve(rng, 8, 2, 1.0);
        std::vector<double> dists;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) dists.push_back(dist(p.vertex(i), p.vertex(j)));
        std::sort(dists.begin(), dists.end());
        for (std::size_t k = 0; k + 1 < dists.size(); ++k) {
            if (dists[k + 1] - dists[k] < 1e-9) continue;
            double mu1 = dists[k] + 0.25 * (dists[k + 1] - dists[k]);
            double mu2 = dists[k] + 0.75 * (dists[k + 1] - dists[k]);
            CHECK(simplify(p, mu1).kept_indices == simplify(p, mu2).kept_indices);
        }
        double tiny = dists.front() * 0.5;
        if (tiny > 0.0) CHECK(simplify(p, tiny).kept_indices.size() == p.size());
    }
}

TEST_CASE("composing matchings") {
    Matching m1;
    m1.breakpoints = {{0.0, 0.0}, {1.0, 0.5}, {2.0, 2.0}};
    Matching m2;
    m2.breakpoints = {{0.0, 0.0}, {1.0, 1.0}, {2.0, 3.0}};
    Matching c = compose_matchings(m1, m2);
    REQUIRE(c.breakpoints.size() == 4);
    CHECK(c.breakpoints[0] == std::array<double, 2>{0.0, 0.0});
    CHECK(c.breakpoints[1] == std::array<double, 2>{1.0, 0.5});
    CHECK(c.breakpoints[2][0] == doctest::Approx(4.0 / 3.0));
    CHECK(c.breakpoints[2][1] == doctest::Approx(1.0));
    CHECK(c.breakpoints[3] == std::array<double, 2>{2.0, 3.0});

    Matching held;
    held.breakpoints = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 2.0}};
    Matching through;
    through.breakpoints = {{0.0, 0.0}, {2.0, 4.0}};
    Matching hc = compose_matchings(held, through);
    REQUIRE(hc.breakpoints.size() == 3);
    CHECK(hc.breakpoints[1] == std::array<double, 2>{1.0, 0.0});
    CHECK(hc.breakpoints[2] == std::array<double, 2>{2.0, 4.0});
}

TEST_CASE("composition with the identity preserves width") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 30; ++it) {
        PolygonalCurve a = testsupport::random_walk_curve(rng, 6, 2);
        PolygonalCurve b = testsupport::random_walk_curve(rng, 7, 2);
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

        Matching c = compose_matchings(m, Matching::identity(b.edge_count()));
        CHECK(matching_width(c, a, b) == doctest::Approx(matching_width(m, a, b)));
    }
}

TEST_CASE("lifting through simplifications obeys the triangle bound") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.05, 1.5);
    for (int it = 0; it < 60; ++it) {
        PolygonalCurve a = testsupport::random_walk_curve(rng, 4 + it % 20, 2);
        double mu_a = u(rng), mu_b = u(rng);
        SimplificationResult sa = simplify(a, mu_a);
        PolygonalCurve b = testsupport::perturbed(rng, a, 0.1);
        SimplificationResult sb = simplify(b, mu_b);

        // a ~ simplified(a) ~ ... we need a middle matching between the two
        // simplified curves; any monotone matching will do for the bound
        Matching mid;
        mid.breakpoints = {{0.0, 0.0},
                           {double(sa.simplified.edge_count()), double(sb.simplified.edge_count())}};
        double wmid = matching_width(mid, sa.simplified, sb.simplified);

        Matching lift = compose_matchings(
            compose_matchings(simplification_matching(a, sa), mid),
            simplification_matching(b, sb).swapped());
        double w = matching_width(lift, a, b);
        CHECK(w <= wmid + mu_a + mu_b + 1e-9);
    }
}
