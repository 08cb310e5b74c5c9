#include "nodal/cone.hpp"

#include <stdexcept>

namespace nodal {

std::size_t hilbert_function(const LineBundle& b, long m) {
    if (m < 0) throw std::invalid_argument("section ring is graded by m >= 0");
    if (m == 0) return 1;
    return h0(power(b, m));
}

LineBundle deformation_bundle(const LineBundle& b, long m) {
    return tensor(tangent_bundle(b.curve_ptr()), power(b, m));
}

std::size_t t0_dim(const LineBundle& b, long m, DimensionMode mode) {
    if (mode == DimensionMode::direct) return h0(deformation_bundle(b, m));
    const long v = m >= 1 ? b.degree() * m : 0;
    return v > 0 ? static_cast<std::size_t>(v) : 0;
}

std::size_t t1_dim(const LineBundle& b, long m, DimensionMode mode) {
    if (mode == DimensionMode::direct) return h1_direct(deformation_bundle(b, m));
    const long v = m <= -1 ? -b.degree() * m : 0;
    return v > 0 ? static_cast<std::size_t>(v) : 0;
}

WeightClass classify_weight(long m) {
    if (m < 0) return WeightClass::smoothing;
    if (m == 0) return WeightClass::equisingular_slot;
    return WeightClass::embedding_slot;
}

std::string to_string(WeightClass c) {
    switch (c) {
        case WeightClass::smoothing:
            return "smoothing";
        case WeightClass::equisingular_slot:
            return "equisingular-slot";
        case WeightClass::embedding_slot:
            return "embedding-slot";
    }
    return "unknown";
}

std::string describe(WeightClass c) {
    switch (c) {
        case WeightClass::smoothing:
            return "negative weight: smoothing directions of the cone vertex";
        case WeightClass::equisingular_slot:
            return "weight zero: equisingular deformations preserving the cone structure";
        case WeightClass::embedding_slot:
            return "positive weight: deformations of the embedding";
    }
    return "";
}

const WeightEntry& GradedReport::at(long m) const {
    for (const auto& e : entries)
        if (e.m == m) return e;
    throw std::out_of_range("weight " + std::to_string(m) + " is outside the report range");
}

GradedReport graded_report(const LineBundle& b, long m_min, long m_max) {
    if (m_min > 0 || m_max < 0) throw std::invalid_argument("weight range must contain 0");
    GradedReport report;
    report.multidegree = b.multidegree();
    report.degree = b.degree();
    report.genus = arithmetic_genus(b.curve());
    const auto tangent = tangent_bundle(b.curve_ptr());
    for (long m = m_min; m <= m_max; ++m) {
        const auto f = tensor(tangent, power(b, m));
        WeightEntry e;
        e.m = m;
        e.t0_formula = t0_dim(b, m, DimensionMode::formula);
        e.t1_formula = t1_dim(b, m, DimensionMode::formula);
        e.t0_direct = h0(f);
        e.t1_direct = h1_direct(f);
        e.hilbert = m >= 0 ? hilbert_function(b, m) : 0;
        e.f_degree = f.degree();
        e.classification = classify_weight(m);
        if (m == 0) {
            e.euler_note =
                "formula values are the claimed intrinsic T0_0 = T1_0 = 0 for generic gluing data; the Euler "
                "derivation adds +1 to T0_0 under the convention that counts it; it is not added to t0_direct";
        }
        e.discrepancy = e.t0_formula != e.t0_direct || e.t1_formula != e.t1_direct;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace nodal
