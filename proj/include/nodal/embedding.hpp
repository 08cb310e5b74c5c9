#ifndef NODAL_EMBEDDING_HPP
#define NODAL_EMBEDDING_HPP

// Global generation, very ampleness, the map to projective space given by the
// complete linear series, and the degree-2 part of the ideal of the image.
//
// The criterion path (all d_i >= 2 resp. >= 3) is the sound certificate. The
// direct path evaluates the section basis on a deterministic sample of curve
// points (every node, points next to every branch point, and pseudo-random
// rational points) and is falsification-oriented.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nodal/bundles.hpp"

namespace nodal {

enum class Branch { a, b };

/// A point of the curve: a smooth point on a component, or a node. A node may
/// carry a branch selector when a branch-local functional is meant; without
/// one, evaluation uses branch a.
struct CurvePoint {
    enum class Kind { smooth, node };

    Kind kind = Kind::smooth;
    std::size_t index = 0;  // component for smooth points, node for nodes
    PointOnLine coordinate;
    std::optional<Branch> branch;

    static CurvePoint smooth(std::size_t component, PointOnLine p) { return {Kind::smooth, component, std::move(p), {}}; }
    static CurvePoint node(std::size_t node, std::optional<Branch> br = {}) { return {Kind::node, node, {}, br}; }

    bool same_point(const CurvePoint& other) const;
    std::string describe(const NodalCurve& curve) const;
};

struct AmpleVerdict {
    enum class Status { criterion_satisfied, verified_on_samples, failed };

    Status status = Status::failed;
    bool criterion = false;
    std::size_t samples_checked = 0;
    /// The first failing point (or pair), present iff status == failed.
    std::vector<CurvePoint> witness;
    std::string reason;
};

std::string to_string(AmpleVerdict::Status s);

/// Fixed default seed for sampling; reports are reproducible unless overridden.
inline constexpr std::uint64_t default_sample_seed = 20240611;

/// Nodes first (in node order), then per component: points next to each
/// marked point, then `extra_samples` pseudo-random rational points. No
/// marked point and no duplicate ever appears.
std::vector<CurvePoint> sample_points(const NodalCurve& curve, std::size_t extra_samples,
                                      std::uint64_t seed = default_sample_seed);

/// Values of the basis sections at x (one entry per basis element).
Vector evaluation_vector(const SectionSpace& space, const CurvePoint& x);
/// First-derivative values of the basis sections at a smooth point, or along
/// the selected branch of a node (branch a when none is selected).
Vector jet_vector(const SectionSpace& space, const CurvePoint& x);

AmpleVerdict globally_generated(const LineBundle& b, std::size_t extra_samples, std::uint64_t seed = default_sample_seed);

/// True iff the evaluation vectors at x and y are linearly independent.
/// Throws std::invalid_argument if x and y are the same point.
bool separates_points(const SectionSpace& space, const CurvePoint& x, const CurvePoint& y);
bool separates_points(const LineBundle& b, const CurvePoint& x, const CurvePoint& y);

/// Smooth x: evaluation and jet vectors independent. Node x: the test runs
/// on each branch (or only the selected one) and all must pass.
bool separates_jets(const SectionSpace& space, const CurvePoint& x);
bool separates_jets(const LineBundle& b, const CurvePoint& x);

AmpleVerdict very_ample(const LineBundle& b, std::size_t extra_samples, std::uint64_t seed = default_sample_seed);

/// Projective coordinates of the image of x. Throws std::domain_error when
/// every section vanishes at x.
Vector embed_point(const SectionSpace& space, const CurvePoint& x);

/// Multisets i_1 <= ... <= i_m over {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> sym_monomials(std::size_t n, std::size_t m);

struct MultiplicationMap {
    SectionSpace source;   // basis of H0(L)
    SectionSpace target;   // basis of H0(L^m)
    std::vector<std::vector<std::size_t>> monomials;
    Matrix matrix;         // target.dimension() x monomials.size()
    std::size_t rank = 0;

    bool surjective() const { return rank == target.dimension(); }
};

/// Sym^m H0(L) -> H0(L^m): each monomial in the basis of H0(L) is multiplied
/// out and written in the canonical basis of H0(L^m).
MultiplicationMap multiplication_map(const LineBundle& b, std::size_t m);

struct QuadricIdeal {
    std::size_t variables = 0;                         // h0(L)
    std::vector<std::vector<std::size_t>> monomials;   // x_i x_j, i <= j, lexicographic
    std::vector<Vector> quadrics;                      // coefficients on `monomials`
    std::size_t multiplication_rank = 0;
};

/// Quadrics vanishing on the embedded curve: the kernel of the m = 2 map.
QuadricIdeal quadric_ideal(const LineBundle& b);
QuadricIdeal quadric_ideal(const MultiplicationMap& degree_two);

Rational evaluate_quadric(const QuadricIdeal& ideal, const Vector& quadric, const Vector& point);

/// Rank of the Jacobian of the quadrics at an affine point of the cone. A
/// heuristic singularity probe: the quadrics need not cut out the cone
/// scheme-theoretically.
std::size_t cone_jacobian_rank(const QuadricIdeal& ideal, const Vector& point);

}  // namespace nodal

#endif  // NODAL_EMBEDDING_HPP
