#ifndef FRECHET_TESTS_SUPPORT_HPP
#define FRECHET_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "frechet/geometry.hpp"

namespace testsupport {

inline frechet::PolygonalCurve random_walk_curve(std::mt19937_64& rng, std::size_t n,
                                                 std::size_t dim, double step = 1.0) {
    std::normal_distribution<double> g(0.0, step);
    std::vector<double> flat;
    flat.reserve(n * dim);
    std::vector<double> cur(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            for (;;) {
                std::vector<double> nxt = cur;
                double len2 = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    double d = g(rng);
                    nxt[k] += d;
                    len2 += d * d;
                }
                if (len2 > 0.0) {
                    cur = nxt;
                    break;
                }
            }
        }
        flat.insert(flat.end(), cur.begin(), cur.end());
    }
    return frechet::PolygonalCurve(std::move(flat), dim);
}

/// Random perturbation of a curve, vertex-wise, capped at `amp`.
inline frechet::PolygonalCurve perturbed(std::mt19937_64& rng, const frechet::PolygonalCurve& c,
                                         double amp) {
    std::uniform_real_distribution<double> u(-amp, amp);
    std::vector<double> flat = c.flat();
    for (double& x : flat) x += u(rng);
    frechet::PolygonalCurve out(std::move(flat), c.dim());
    try {
        out.validate();
        return out;
    } catch (...) {
        return c;
    }
}

}  // namespace testsupport

#endif
