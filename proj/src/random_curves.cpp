#include "nodal/random_curves.hpp"

#include <algorithm>

namespace nodal {

namespace {

std::size_t below(std::mt19937_64& gen, std::size_t n) { return static_cast<std::size_t>(gen() % n); }

PointOnLine fresh_point(std::mt19937_64& gen, const std::vector<PointOnLine>& taken, bool allow_infinity) {
    while (true) {
        PointOnLine p = (allow_infinity && below(gen, 6) == 0) ? PointOnLine::infinity()
                                                                : PointOnLine(random_rational(gen, 12, 5));
        if (std::find(taken.begin(), taken.end(), p) == taken.end()) return p;
    }
}

}  // namespace

Rational random_rational(std::mt19937_64& gen, long max_abs_num, long max_den) {
    const long num = static_cast<long>(below(gen, static_cast<std::size_t>(2 * max_abs_num + 1))) - max_abs_num;
    const long den = static_cast<long>(below(gen, static_cast<std::size_t>(max_den))) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

NodalCurve random_nodal_curve(std::mt19937_64& gen, const RandomCurveOptions& options) {
    const std::size_t k = 1 + below(gen, std::max<std::size_t>(options.max_components, 1));
    const std::size_t tree = k - 1;
    const std::size_t max_nodes = std::max(options.max_nodes, tree);
    const std::size_t n = tree + below(gen, max_nodes - tree + 1);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < k; ++i) edges.emplace_back(i, below(gen, i));
    while (edges.size() < n) edges.emplace_back(below(gen, k), below(gen, k));

    NodalCurve curve;
    for (std::size_t i = 0; i < k; ++i) curve.components.push_back({"C" + std::to_string(i + 1), {}});
    const auto add_point = [&](std::size_t comp) {
        auto& pts = curve.components[comp].marked_points;
        pts.push_back(fresh_point(gen, pts, options.allow_infinity));
        return BranchRef{comp, pts.size() - 1};
    };
    for (auto [u, v] : edges) {
        BranchRef a = add_point(u);
        BranchRef b = add_point(v);
        if (below(gen, 2) == 1) std::swap(a, b);
        curve.nodes.push_back({a, b});
    }
    return curve;
}

LineBundle random_line_bundle(std::mt19937_64& gen, std::shared_ptr<const NodalCurve> curve, long dmin, long dmax) {
    std::vector<long> deg;
    for (std::size_t i = 0; i < curve->components.size(); ++i)
        deg.push_back(dmin + static_cast<long>(below(gen, static_cast<std::size_t>(dmax - dmin + 1))));
    std::vector<Rational> glue;
    for (std::size_t n = 0; n < curve->nodes.size(); ++n) {
        Rational q;
        do q = random_rational(gen, 9, 5);
        while (q == 0);
        glue.push_back(q);
    }
    return LineBundle(std::move(curve), std::move(deg), std::move(glue));
}

}  // namespace nodal
