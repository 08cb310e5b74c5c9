#include "nodal/curve.hpp"

#include <algorithm>
#include <numeric>

namespace nodal {

const Rational& PointOnLine::value() const {
    if (!value_) throw std::logic_error("point at infinity has no affine coordinate");
    return *value_;
}

std::string PointOnLine::str() const { return value_ ? to_string(*value_) : "inf"; }

PointOnLine PointOnLine::parse(std::string_view text) {
    if (text == "inf" || text == "infinity") return infinity();
    return PointOnLine(parse_rational(text));
}

std::optional<std::size_t> NodalCurve::component_index(std::string_view name) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].name == name) return i;
    return std::nullopt;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

// Union-find over component indices, joined along the given edges.
std::size_t count_classes(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t classes = n;
    for (auto [u, v] : edges) {
        const auto ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --classes;
        }
    }
    return classes;
}

}  // namespace

InvalidCurve::InvalidCurve(const std::vector<std::string>& violations)
    : std::invalid_argument("invalid nodal curve: " + join(violations)), violations_(violations) {}

std::vector<std::string> validate(const NodalCurve& curve) {
    std::vector<std::string> out;
    if (curve.components.empty()) {
        out.emplace_back("curve has no components");
        return out;
    }
    for (std::size_t i = 0; i < curve.components.size(); ++i) {
        const auto& comp = curve.components[i];
        for (std::size_t j = 0; j < i; ++j)
            if (curve.components[j].name == comp.name) out.push_back("component name '" + comp.name + "' is used twice");
        const auto& pts = comp.marked_points;
        for (std::size_t p = 0; p < pts.size(); ++p)
            for (std::size_t q = p + 1; q < pts.size(); ++q)
                if (pts[p] == pts[q])
                    out.push_back("component '" + comp.name + "': marked points " + std::to_string(p) + " and " +
                                  std::to_string(q) + " coincide (" + pts[p].str() + ")");
    }

    std::vector<std::vector<int>> uses(curve.components.size());
    for (std::size_t i = 0; i < curve.components.size(); ++i) uses[i].assign(curve.components[i].marked_points.size(), 0);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool references_ok = true;
    for (std::size_t n = 0; n < curve.nodes.size(); ++n) {
        const auto& node = curve.nodes[n];
        bool ok = true;
        for (const BranchRef* br : {&node.a, &node.b}) {
            if (br->component >= curve.components.size() ||
                br->point >= curve.components[br->component].marked_points.size()) {
                out.push_back("node " + std::to_string(n) + ": branch references a missing marked point");
                ok = false;
            }
        }
        if (!ok) {
            references_ok = false;
            continue;
        }
        if (node.a == node.b) out.push_back("node " + std::to_string(n) + ": both branches are the same marked point");
        ++uses[node.a.component][node.a.point];
        if (!(node.a == node.b)) ++uses[node.b.component][node.b.point];
        edges.emplace_back(node.a.component, node.b.component);
    }
    for (std::size_t i = 0; i < uses.size(); ++i)
        for (std::size_t p = 0; p < uses[i].size(); ++p) {
            if (uses[i][p] == 0)
                out.push_back("component '" + curve.components[i].name + "': marked point " + std::to_string(p) +
                              " is not a node branch");
            else if (uses[i][p] > 1)
                out.push_back("component '" + curve.components[i].name + "': marked point " + std::to_string(p) +
                              " is used by " + std::to_string(uses[i][p]) + " node branches");
        }
    if (references_ok && count_classes(curve.components.size(), edges) != 1)
        out.emplace_back("dual graph is not connected");
    return out;
}

void require_valid(const NodalCurve& curve) {
    auto violations = validate(curve);
    if (!violations.empty()) throw InvalidCurve(violations);
}

std::size_t DualGraph::loop_count() const {
    std::size_t n = 0;
    for (auto [u, v] : edges) n += (u == v) ? 1 : 0;
    return n;
}

std::size_t DualGraph::connected_components() const { return count_classes(vertices, edges); }

DualGraph dual_graph(const NodalCurve& curve) {
    require_valid(curve);
    DualGraph g;
    g.vertices = curve.components.size();
    for (const auto& node : curve.nodes) g.edges.emplace_back(node.a.component, node.b.component);
    return g;
}

long arithmetic_genus(const NodalCurve& curve) {
    require_valid(curve);
    return static_cast<long>(curve.nodes.size()) - static_cast<long>(curve.components.size()) + 1;
}

std::size_t betti_1(const DualGraph& graph) {
    return graph.edges.size() + graph.connected_components() - graph.vertices;
}

std::size_t jacobian_dimension(const NodalCurve& curve) { return betti_1(dual_graph(curve)); }

PointOnLine MobiusTransform::apply(const PointOnLine& p) const {
    if (p.is_infinity()) {
        if (c == 0) return PointOnLine::infinity();
        return PointOnLine(Rational(a / c));
    }
    const Rational den = c * p.value() + d;
    if (den == 0) return PointOnLine::infinity();
    return PointOnLine(Rational((a * p.value() + b) / den));
}

MobiusTransform MobiusTransform::compose(const MobiusTransform& in) const {
    return {a * in.a + b * in.c, a * in.b + b * in.d, c * in.a + d * in.c, c * in.b + d * in.d};
}

MobiusTransform MobiusTransform::inverse() const { return {d, -b, -c, a}; }

MobiusTransform mobius_from_triple(const PointOnLine& p1, const PointOnLine& p2, const PointOnLine& p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3) throw std::invalid_argument("Möbius triple must consist of distinct points");
    // Cross-ratio map t -> ((t - p1)(p2 - p3)) / ((t - p3)(p2 - p1)), with the
    // factors involving an infinite point dropped.
    if (p1.is_infinity()) return {0, p2.value() - p3.value(), 1, -p3.value()};
    if (p2.is_infinity()) return {1, -p1.value(), 1, -p3.value()};
    if (p3.is_infinity()) return {1, -p1.value(), 0, p2.value() - p1.value()};
    const Rational u = p2.value() - p3.value();
    const Rational v = p2.value() - p1.value();
    return {u, -p1.value() * u, v, -p3.value() * v};
}

namespace {

// First of 0, 1, 2, ... not among `taken`.
PointOnLine spare_affine(const std::vector<PointOnLine>& taken) {
    for (long k = 0;; ++k) {
        PointOnLine cand(k);
        if (std::find(taken.begin(), taken.end(), cand) == taken.end()) return cand;
    }
}

MobiusTransform canonical_transform(const std::vector<PointOnLine>& pts, NormalizationStyle style) {
    const auto inf = PointOnLine::infinity();
    const bool paper = style == NormalizationStyle::paper;
    switch (pts.size()) {
        case 0:
            return {};
        case 1: {
            // p -> 0 via (p, s, r) -> (0, 1, inf); the images of s and r are irrelevant.
            const auto s = spare_affine(pts);
            const auto r = pts[0].is_infinity() ? spare_affine({pts[0], s}) : inf;
            return mobius_from_triple(pts[0], s, r);
        }
        case 2: {
            if (paper) {
                const auto s = spare_affine(pts);
                return mobius_from_triple(pts[0], s, pts[1]);
            }
            // (p1, p2, r) -> (0, 1, inf) with r chosen off the marked points.
            const bool any_inf = pts[0].is_infinity() || pts[1].is_infinity();
            const auto r = any_inf ? spare_affine(pts) : inf;
            return mobius_from_triple(pts[0], pts[1], r);
        }
        case 3: {
            const auto to_standard = mobius_from_triple(pts[0], pts[1], pts[2]);
            if (paper) return to_standard;
            const auto target = mobius_from_triple(PointOnLine(0), PointOnLine(1), PointOnLine(2));
            return target.inverse().compose(to_standard);
        }
        default:
            throw std::invalid_argument("no canonical coordinates for a component with more than three marked points");
    }
}

}  // namespace

NodalCurve normalize(const NodalCurve& curve, NormalizationStyle style) {
    require_valid(curve);
    NodalCurve out = curve;
    for (auto& comp : out.components) {
        if (comp.marked_points.size() > 3)
            throw std::invalid_argument("component '" + comp.name + "' has more than three marked points");
        const auto t = canonical_transform(comp.marked_points, style);
        for (auto& p : comp.marked_points) p = t.apply(p);
    }
    return out;
}

NodalCurve paper_example_curve() {
    NodalCurve x;
    x.components = {
        {"C1", {PointOnLine(0), PointOnLine(1)}},
        {"C2", {PointOnLine(0), PointOnLine(1), PointOnLine(2)}},
        {"C3", {PointOnLine(0)}},
    };
    x.nodes = {
        {{0, 0}, {2, 0}},  // a1 ~ c1
        {{0, 1}, {1, 1}},  // a2 ~ b2
        {{1, 0}, {1, 2}},  // b1 ~ b3
    };
    return x;
}

bool all_points_affine(const NodalCurve& curve) {
    for (const auto& comp : curve.components)
        for (const auto& p : comp.marked_points)
            if (p.is_infinity()) return false;
    return true;
}

}  // namespace nodal
