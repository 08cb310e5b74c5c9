#ifndef NODAL_CURVE_HPP
#define NODAL_CURVE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodal/exactlin.hpp"

namespace nodal {

/// A point of the projective line: an affine coordinate or the point at infinity.
class PointOnLine {
public:
    PointOnLine() = default;  // 0
    PointOnLine(Rational affine) : value_(std::move(affine)) {}  // NOLINT(google-explicit-constructor)
    PointOnLine(long affine) : value_(affine) {}                 // NOLINT(google-explicit-constructor)

    static PointOnLine infinity() {
        PointOnLine p;
        p.value_.reset();
        return p;
    }

    bool is_infinity() const { return !value_.has_value(); }
    const Rational& value() const;

    /// "inf" or the exact rational text.
    std::string str() const;
    /// Accepts "inf", "p" or "p/q".
    static PointOnLine parse(std::string_view text);

    friend bool operator==(const PointOnLine& a, const PointOnLine& b) { return a.value_ == b.value_; }

private:
    std::optional<Rational> value_ = Rational(0);
};

struct Component {
    std::string name;
    std::vector<PointOnLine> marked_points;

    friend bool operator==(const Component&, const Component&) = default;
};

struct BranchRef {
    std::size_t component = 0;
    std::size_t point = 0;

    friend bool operator==(const BranchRef&, const BranchRef&) = default;
};

/// An ordered identification of two marked points. Gluing scalars of line
/// bundles are always read relative to this order (branch a, then branch b).
struct NodeGluing {
    BranchRef a;
    BranchRef b;

    friend bool operator==(const NodeGluing&, const NodeGluing&) = default;
};

struct NodalCurve {
    std::vector<Component> components;
    std::vector<NodeGluing> nodes;

    const PointOnLine& point(const BranchRef& ref) const { return components.at(ref.component).marked_points.at(ref.point); }
    std::optional<std::size_t> component_index(std::string_view name) const;

    friend bool operator==(const NodalCurve&, const NodalCurve&) = default;
};

struct DualGraph {
    std::size_t vertices = 0;
    /// One (u, v) pair per node, in node order; u == v is a loop.
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t loop_count() const;
    std::size_t connected_components() const;
};

/// Thrown by operations that require a valid curve.
class InvalidCurve : public std::invalid_argument {
public:
    explicit InvalidCurve(const std::vector<std::string>& violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Every broken structural rule, in a stable order. Empty iff the curve is valid.
std::vector<std::string> validate(const NodalCurve& curve);
void require_valid(const NodalCurve& curve);

DualGraph dual_graph(const NodalCurve& curve);

/// |nodes| - |components| + 1. All components are rational.
long arithmetic_genus(const NodalCurve& curve);

std::size_t betti_1(const DualGraph& graph);

/// Dimension of the torus of gluing-scalar moduli (first Betti number of the dual graph).
std::size_t jacobian_dimension(const NodalCurve& curve);

/// Element of PGL2 acting by t -> (a t + b) / (c t + d).
struct MobiusTransform {
    Rational a = 1, b = 0, c = 0, d = 1;

    PointOnLine apply(const PointOnLine& p) const;
    MobiusTransform compose(const MobiusTransform& inner) const;  // this after inner
    MobiusTransform inverse() const;
};

/// The unique transform sending (p1, p2, p3) to (0, 1, inf).
MobiusTransform mobius_from_triple(const PointOnLine& p1, const PointOnLine& p2, const PointOnLine& p3);

enum class NormalizationStyle {
    /// 1 point -> 0; 2 points -> (0, inf); 3 points -> (0, 1, inf).
    paper,
    /// 1 point -> 0; 2 points -> (0, 1); 3 points -> (0, 1, 2). No point at infinity.
    affine_safe,
};

/// Moves each component's marked points to the canonical positions of `style`
/// by a Möbius change of coordinate. Node structure is untouched. Throws
/// InvalidCurve for invalid curves and std::invalid_argument for a component
/// carrying more than three marked points.
NodalCurve normalize(const NodalCurve& curve, NormalizationStyle style);

/// Three lines C1, C2, C3 with C1 points (0, 1), C2 points (0, 1, 2), C3 point (0),
/// glued as C1.0 ~ C3.0, C1.1 ~ C2.1, C2.0 ~ C2.2.
NodalCurve paper_example_curve();

bool all_points_affine(const NodalCurve& curve);

}  // namespace nodal

#endif  // NODAL_CURVE_HPP
