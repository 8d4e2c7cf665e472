#include "frechet/simplify.hpp"

#include <algorithm>
#include <stdexcept>

namespace frechet {

SimplificationResult simplify(const PolygonalCurve& p, double mu) {
    if (mu < 0.0) throw std::invalid_argument("simplify: mu must be >= 0");
    std::size_t n = p.size();
    SimplificationResult out;
    out.radius = mu;
    out.kept_indices.push_back(0);
    double mu2 = mu * mu;
    std::size_t cur = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (dist_sq(p.vertex(cur), p.vertex(i)) >= mu2) {
            out.kept_indices.push_back(i);
            cur = i;
        }
    }
    if (out.kept_indices.back() != n - 1) out.kept_indices.push_back(n - 1);

    std::vector<double> flat;
    flat.reserve(out.kept_indices.size() * p.dim());
    for (std::size_t k : out.kept_indices) {
        PointRef v = p.vertex(k);
        flat.insert(flat.end(), v.begin(), v.end());
    }
    out.simplified = PolygonalCurve(std::move(flat), p.dim());
    return out;
}

Matching simplification_matching(const PolygonalCurve& p, const SimplificationResult& r) {
    const auto& kept = r.kept_indices;
    if (kept.empty() || kept.front() != 0 || kept.back() != p.size() - 1 ||
        r.simplified.size() != kept.size())
        throw std::invalid_argument("simplification_matching: result does not match curve");
    Matching m;
    m.breakpoints.push_back({0.0, 0.0});
    for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
        std::size_t lo = kept[k], hi = kept[k + 1];
        if (hi > lo + 1) {
            // hold the simplified point at vertex k through the interior vertices
            m.breakpoints.push_back({double(hi - 1), double(k)});
        }
        m.breakpoints.push_back({double(hi), double(k + 1)});
    }
    return m;
}

Matching compose_matchings(const Matching& ab, const Matching& bc) {
    const auto& m1 = ab.breakpoints;
    const auto& m2 = bc.breakpoints;
    if (m1.empty() || m2.empty()) throw std::invalid_argument("compose_matchings: empty matching");
    if (m1.back()[1] != m2.back()[0] || m1.front()[1] != m2.front()[0])
        throw std::invalid_argument("compose_matchings: middle-curve ranges disagree");

    Matching out;
    auto emit = [&out](double a, double c) {
        if (!out.breakpoints.empty()) {
            const auto& last = out.breakpoints.back();
            if (last[0] == a && last[1] == c) return;
        }
        out.breakpoints.push_back({a, c});
    };

    std::size_t i = 0, j = 0;
    double a_cur = m1.front()[0], c_cur = m2.front()[1];
    emit(a_cur, c_cur);
    while (i + 1 < m1.size() || j + 1 < m2.size()) {
        bool m1_left = i + 1 < m1.size();
        bool m2_left = j + 1 < m2.size();
        // vertical/horizontal steps: the middle coordinate holds while one
        // side moves, so pair the full moved range against the held value
        if (m1_left && m1[i + 1][1] == m1[i][1]) {
            a_cur = m1[i + 1][0];
            emit(a_cur, c_cur);
            ++i;
            continue;
        }
        if (m2_left && m2[j + 1][0] == m2[j][0]) {
            c_cur = m2[j + 1][1];
            emit(a_cur, c_cur);
            ++j;
            continue;
        }
        if (!m1_left || !m2_left)
            throw std::invalid_argument("compose_matchings: middle-curve ranges disagree");
        double b1 = m1[i + 1][1], b2 = m2[j + 1][0];
        double b_next = std::min(b1, b2);
        if (b_next >= b1) {
            a_cur = m1[i + 1][0];
            ++i;
        } else {
            double f = (b_next - m1[i][1]) / (m1[i + 1][1] - m1[i][1]);
            a_cur = m1[i][0] + f * (m1[i + 1][0] - m1[i][0]);
        }
        if (b_next >= b2) {
            c_cur = m2[j + 1][1];
            ++j;
        } else {
            double f = (b_next - m2[j][0]) / (m2[j + 1][0] - m2[j][0]);
            c_cur = m2[j][1] + f * (m2[j + 1][1] - m2[j][1]);
        }
        emit(a_cur, c_cur);
    }
    return out;
}

ClosedSimplificationResult simplify_closed(const ClosedCurve& p, double mu) {
    if (mu < 0.0) throw std::invalid_argument("simplify_closed: mu must be >= 0");
    ClosedSimplificationResult out;
    out.radius = mu;
    out.kept_indices.push_back(0);
    double mu2 = mu * mu;
    std::size_t cur = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (dist_sq(p.vertex(cur), p.vertex(i)) >= mu2) {
            out.kept_indices.push_back(i);
            cur = i;
        }
    }
    return out;
}

}  // namespace frechet
