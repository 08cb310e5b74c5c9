#ifndef NODAL_BUNDLES_HPP
#define NODAL_BUNDLES_HPP

// Line bundles on nodal curves with rational components.
//
// A bundle is a multidegree (one integer per component) plus one nonzero
// gluing scalar per node. On component i a section is a polynomial of degree
// <= d_i in the affine coordinate t, written on the monomial basis
// 1, t, ..., t^d_i; its value at infinity is the leading coefficient a_{d_i}.
// At a node with ordered branches (i, p), (j, q) a global section satisfies
//
//     s_i(p) = lambda * s_j(q).
//
// Global sections are therefore the kernel of the gluing matrix Phi, which has
// one row per node and one column block per component of nonnegative degree.

#include <cstddef>
#include <memory>
#include <vector>

#include "nodal/curve.hpp"
#include "nodal/exactlin.hpp"

namespace nodal {

class LineBundle {
public:
    LineBundle(std::shared_ptr<const NodalCurve> curve, std::vector<long> multidegree, std::vector<Rational> gluings);
    /// All gluing scalars 1.
    LineBundle(std::shared_ptr<const NodalCurve> curve, std::vector<long> multidegree);

    static LineBundle trivial(std::shared_ptr<const NodalCurve> curve);

    const NodalCurve& curve() const { return *curve_; }
    const std::shared_ptr<const NodalCurve>& curve_ptr() const { return curve_; }
    const std::vector<long>& multidegree() const { return multidegree_; }
    const std::vector<Rational>& gluings() const { return gluings_; }
    long degree() const;

    /// Number of monomial coefficients carried by component i: max(0, d_i + 1).
    std::size_t block_size(std::size_t component) const;
    /// Column offset of component i's block inside the gluing matrix.
    std::size_t block_offset(std::size_t component) const;
    std::size_t ambient_dimension() const;

    friend bool operator==(const LineBundle& a, const LineBundle& b) {
        return a.curve_ == b.curve_ && a.multidegree_ == b.multidegree_ && a.gluings_ == b.gluings_;
    }

private:
    std::shared_ptr<const NodalCurve> curve_;
    std::vector<long> multidegree_;
    std::vector<Rational> gluings_;
};

/// One coefficient vector per component; component i's vector has length max(0, d_i + 1).
struct Section {
    std::vector<Vector> blocks;

    Vector flatten() const;
    static Section unflatten(const LineBundle& bundle, const Vector& flat);
};

struct SectionSpace {
    LineBundle bundle;
    std::vector<Section> basis;

    std::size_t dimension() const { return basis.size(); }
};

std::size_t component_h0(long d);
std::size_t component_h1(long d);

/// Row of ev_p on 1, t, ..., t^d. Throws std::invalid_argument for d < 0.
Vector evaluation_row(long d, const PointOnLine& p);
/// Row of the first-derivative functional at p (coefficient a_{d-1} at infinity).
/// Throws std::invalid_argument for d < 1.
Vector jet_row(long d, const PointOnLine& p);

Matrix gluing_matrix(const LineBundle& b);
SectionSpace section_basis(const LineBundle& b);
std::size_t h0(const LineBundle& b);
/// dim coker(Phi) + sum of component h1, from the normalization sequence.
std::size_t h1_direct(const LineBundle& b);

LineBundle tensor(const LineBundle& a, const LineBundle& b);
LineBundle dual(const LineBundle& b);
LineBundle power(const LineBundle& b, long m);

/// Bundle whose sections are differentials with simple poles at the branch
/// points and opposite residues at each node. Requires every marked point to
/// be affine; normalize with NormalizationStyle::affine_safe first otherwise.
LineBundle dualizing_bundle(std::shared_ptr<const NodalCurve> curve);
/// Inverse of the dualizing bundle.
LineBundle tangent_bundle(std::shared_ptr<const NodalCurve> curve);

struct RiemannRochReport {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    long degree = 0;
    long genus = 0;
    bool balanced = false;
};

RiemannRochReport riemann_roch_report(const LineBundle& b);

struct SerreDualityCheck {
    std::size_t h1 = 0;       // h1_direct(F)
    std::size_t h0_dual = 0;  // h0(omega (x) F^-1)
    bool holds() const { return h1 == h0_dual; }
};

SerreDualityCheck serre_duality_check(const LineBundle& b);

/// Value of s on the named component at p (leading coefficient at infinity).
/// Throws std::invalid_argument when that component carries a negative degree.
Rational evaluate_section(const LineBundle& b, const Section& s, std::size_t component, const PointOnLine& p);
/// Componentwise polynomial product, laid out on the blocks of `target`
/// (normally tensor of the two factors' bundles). Throws std::invalid_argument
/// if a product exceeds a target block's degree bound.
Section multiply_sections(const LineBundle& target, const Section& s, const Section& t);
/// True iff every gluing constraint of b holds exactly for s.
bool satisfies_gluing(const LineBundle& b, const Section& s);

}  // namespace nodal

#endif  // NODAL_BUNDLES_HPP
