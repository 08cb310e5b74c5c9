#ifndef NODAL_CONE_HPP
#define NODAL_CONE_HPP

// Graded deformation data of the affine cone over a curve embedded by L.
//
// The weight-m pieces are T0_m = H0(F_m) and T1_m = H1(F_m) with
// F_m = T_X (x) L^m, where T_X is the inverse of the dualizing bundle. Formula
// mode uses the closed forms t0 = deg(L) m for m >= 1, t1 = -deg(L) m for
// m <= -1, and 0 otherwise. Direct mode computes the cohomology of F_m from
// its gluing matrix. At m = 0 both are reported side by side and nothing is
// substituted.

#include <optional>
#include <string>
#include <vector>

#include "nodal/bundles.hpp"

namespace nodal {

/// dim of the degree-m piece of the section ring, h0(L^m). Equals 1 at m = 0.
std::size_t hilbert_function(const LineBundle& b, long m);

/// T_X (x) L^m. Throws std::invalid_argument if a marked point is at infinity.
LineBundle deformation_bundle(const LineBundle& b, long m);

enum class DimensionMode { formula, direct };

std::size_t t0_dim(const LineBundle& b, long m, DimensionMode mode);
std::size_t t1_dim(const LineBundle& b, long m, DimensionMode mode);

enum class WeightClass { smoothing, equisingular_slot, embedding_slot };

WeightClass classify_weight(long m);
std::string to_string(WeightClass c);
/// One-line reading of a weight class.
std::string describe(WeightClass c);

struct WeightEntry {
    long m = 0;
    std::size_t t0_formula = 0;
    std::size_t t0_direct = 0;
    std::size_t t1_formula = 0;
    std::size_t t1_direct = 0;
    std::size_t hilbert = 0;  // h0(L^m); 0 for m < 0
    long f_degree = 0;        // deg F_m
    WeightClass classification = WeightClass::equisingular_slot;
    std::optional<std::string> euler_note;  // m = 0 only
    bool discrepancy = false;
};

struct GradedReport {
    std::vector<long> multidegree;
    long degree = 0;
    long genus = 0;
    std::vector<WeightEntry> entries;  // sorted by m, includes m = 0

    const WeightEntry& at(long m) const;
};

inline constexpr long default_weight_min = -5;
inline constexpr long default_weight_max = 5;

/// Requires m_min <= 0 <= m_max.
GradedReport graded_report(const LineBundle& b, long m_min = default_weight_min, long m_max = default_weight_max);

}  // namespace nodal

#endif  // NODAL_CONE_HPP
