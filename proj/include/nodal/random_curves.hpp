#ifndef NODAL_RANDOM_CURVES_HPP
#define NODAL_RANDOM_CURVES_HPP

// Seeded generators for property suites. Only raw engine output is used, so a
// given seed produces the same curves on every platform.

#include <cstdint>
#include <random>

#include "nodal/bundles.hpp"

namespace nodal {

struct RandomCurveOptions {
    std::size_t max_components = 4;
    std::size_t max_nodes = 4;
    /// Let some marked points sit at infinity.
    bool allow_infinity = false;
};

/// A connected nodal curve: a random spanning tree of nodes plus extra nodes
/// (loops allowed) up to max_nodes, with random distinct marked points and
/// random branch order.
NodalCurve random_nodal_curve(std::mt19937_64& gen, const RandomCurveOptions& options = {});

/// Multidegree uniform in [dmin, dmax]; gluing scalars random nonzero rationals.
LineBundle random_line_bundle(std::mt19937_64& gen, std::shared_ptr<const NodalCurve> curve, long dmin = -4, long dmax = 4);

Rational random_rational(std::mt19937_64& gen, long max_abs_num, long max_den);

}  // namespace nodal

#endif  // NODAL_RANDOM_CURVES_HPP
