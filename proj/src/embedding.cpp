#include "nodal/embedding.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace nodal {

std::string to_string(AmpleVerdict::Status s) {
    switch (s) {
        case AmpleVerdict::Status::criterion_satisfied:
            return "criterion-satisfied";
        case AmpleVerdict::Status::verified_on_samples:
            return "verified-on-samples";
        case AmpleVerdict::Status::failed:
            return "failed";
    }
    return "unknown";
}

bool CurvePoint::same_point(const CurvePoint& other) const {
    if (kind != other.kind || index != other.index) return false;
    return kind == Kind::node || coordinate == other.coordinate;
}

std::string CurvePoint::describe(const NodalCurve& curve) const {
    if (kind == Kind::node) {
        std::string s = "node " + std::to_string(index);
        if (branch) s += *branch == Branch::a ? " (branch a)" : " (branch b)";
        return s;
    }
    return curve.components.at(index).name + " at t=" + coordinate.str();
}

namespace {

struct Location {
    std::size_t component;
    PointOnLine point;
};

Location locate(const NodalCurve& curve, const CurvePoint& x, Branch br) {
    if (x.kind == CurvePoint::Kind::smooth) {
        if (x.index >= curve.components.size()) throw std::invalid_argument("curve point names a missing component");
        const auto& pts = curve.components[x.index].marked_points;
        if (std::find(pts.begin(), pts.end(), x.coordinate) != pts.end())
            throw std::invalid_argument("smooth curve point coincides with a marked point; use the node instead");
        return {x.index, x.coordinate};
    }
    if (x.index >= curve.nodes.size()) throw std::invalid_argument("curve point names a missing node");
    const auto& ref = br == Branch::a ? curve.nodes[x.index].a : curve.nodes[x.index].b;
    return {ref.component, curve.point(ref)};
}

Vector apply_functional(const SectionSpace& space, std::size_t component, const Vector& row) {
    Vector out(space.dimension());
    for (std::size_t k = 0; k < space.dimension(); ++k) {
        const auto& coeffs = space.basis[k].blocks[component];
        Rational acc = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (coeffs[j] != 0) acc += row[j] * coeffs[j];
        out[k] = std::move(acc);
    }
    return out;
}

Vector evaluation_on(const SectionSpace& space, const Location& loc) {
    const long d = space.bundle.multidegree()[loc.component];
    if (d < 0) return Vector(space.dimension());
    return apply_functional(space, loc.component, evaluation_row(d, loc.point));
}

Vector jet_on(const SectionSpace& space, const Location& loc) {
    const long d = space.bundle.multidegree()[loc.component];
    if (d < 1) return Vector(space.dimension());
    return apply_functional(space, loc.component, jet_row(d, loc.point));
}

bool independent(const Vector& u, const Vector& v) {
    return rank(Matrix::from_rows({u, v}, u.size())) == 2;
}

bool jets_separated_on(const SectionSpace& space, const Location& loc) {
    return independent(evaluation_on(space, loc), jet_on(space, loc));
}

std::vector<Branch> branches_of(const CurvePoint& x) {
    if (x.kind == CurvePoint::Kind::smooth) return {Branch::a};
    if (x.branch) return {*x.branch};
    return {Branch::a, Branch::b};
}

}  // namespace

std::vector<CurvePoint> sample_points(const NodalCurve& curve, std::size_t extra_samples, std::uint64_t seed) {
    std::vector<CurvePoint> out;
    for (std::size_t n = 0; n < curve.nodes.size(); ++n) out.push_back(CurvePoint::node(n));

    // Raw engine output only: distribution objects are not reproducible across standard libraries.
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < curve.components.size(); ++i) {
        const auto& marked = curve.components[i].marked_points;
        std::vector<PointOnLine> taken = marked;
        const auto offer = [&](const PointOnLine& p) {
            if (std::find(taken.begin(), taken.end(), p) != taken.end()) return false;
            taken.push_back(p);
            out.push_back(CurvePoint::smooth(i, p));
            return true;
        };
        for (const auto& p : marked) {
            const Rational base = p.is_infinity() ? Rational(97) : p.value();
            for (long k = 1; !offer(PointOnLine(Rational(base + Rational(k, 97)))); ++k) {
            }
        }
        offer(PointOnLine::infinity());
        for (std::size_t s = 0; s < extra_samples;) {
            const long num = static_cast<long>(gen() % 81) - 40;
            const long den = static_cast<long>(gen() % 9) + 1;
            Rational q(num, den);
            q.canonicalize();
            if (offer(PointOnLine(q))) ++s;
        }
    }
    return out;
}

Vector evaluation_vector(const SectionSpace& space, const CurvePoint& x) {
    return evaluation_on(space, locate(space.bundle.curve(), x, x.branch.value_or(Branch::a)));
}

Vector jet_vector(const SectionSpace& space, const CurvePoint& x) {
    return jet_on(space, locate(space.bundle.curve(), x, x.branch.value_or(Branch::a)));
}

AmpleVerdict globally_generated(const LineBundle& b, std::size_t extra_samples, std::uint64_t seed) {
    const auto space = section_basis(b);
    AmpleVerdict v;
    const auto& md = b.multidegree();
    v.criterion = !md.empty() && *std::min_element(md.begin(), md.end()) >= 2;
    for (const auto& x : sample_points(b.curve(), extra_samples, seed)) {
        ++v.samples_checked;
        if (is_zero(evaluation_vector(space, x))) {
            v.status = AmpleVerdict::Status::failed;
            v.witness = {x};
            v.reason = "every section vanishes at " + x.describe(b.curve());
            return v;
        }
    }
    v.status = v.criterion ? AmpleVerdict::Status::criterion_satisfied : AmpleVerdict::Status::verified_on_samples;
    return v;
}

bool separates_points(const SectionSpace& space, const CurvePoint& x, const CurvePoint& y) {
    if (x.same_point(y)) throw std::invalid_argument("separation test needs two distinct points");
    return independent(evaluation_vector(space, x), evaluation_vector(space, y));
}

bool separates_points(const LineBundle& b, const CurvePoint& x, const CurvePoint& y) {
    return separates_points(section_basis(b), x, y);
}

bool separates_jets(const SectionSpace& space, const CurvePoint& x) {
    for (auto br : branches_of(x))
        if (!jets_separated_on(space, locate(space.bundle.curve(), x, br))) return false;
    return true;
}

bool separates_jets(const LineBundle& b, const CurvePoint& x) { return separates_jets(section_basis(b), x); }

AmpleVerdict very_ample(const LineBundle& b, std::size_t extra_samples, std::uint64_t seed) {
    const auto space = section_basis(b);
    const auto& curve = b.curve();
    AmpleVerdict v;
    const auto& md = b.multidegree();
    v.criterion = !md.empty() && *std::min_element(md.begin(), md.end()) >= 3;

    const auto samples = sample_points(curve, extra_samples, seed);
    std::vector<Vector> values;
    values.reserve(samples.size());
    for (const auto& x : samples) values.push_back(evaluation_vector(space, x));

    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            ++v.samples_checked;
            if (!independent(values[i], values[j])) {
                v.status = AmpleVerdict::Status::failed;
                v.witness = {samples[i], samples[j]};
                v.reason = "sections do not separate " + samples[i].describe(curve) + " and " + samples[j].describe(curve);
                return v;
            }
        }
    }
    for (const auto& x : samples) {
        for (auto br : branches_of(x)) {
            ++v.samples_checked;
            if (!jets_separated_on(space, locate(curve, x, br))) {
                auto w = x;
                if (x.kind == CurvePoint::Kind::node) w.branch = br;
                v.status = AmpleVerdict::Status::failed;
                v.witness = {w};
                v.reason = "sections do not separate tangent directions at " + w.describe(curve);
                return v;
            }
        }
    }
    v.status = v.criterion ? AmpleVerdict::Status::criterion_satisfied : AmpleVerdict::Status::verified_on_samples;
    return v;
}

Vector embed_point(const SectionSpace& space, const CurvePoint& x) {
    auto v = evaluation_vector(space, x);
    if (is_zero(v)) throw std::domain_error("all sections vanish at the point; the bundle is not globally generated there");
    return v;
}

std::vector<std::vector<std::size_t>> sym_monomials(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    if (m == 0) return {{}};
    if (n == 0) return out;
    std::vector<std::size_t> cur(m, 0);
    while (true) {
        out.push_back(cur);
        // Advance to the next nondecreasing sequence.
        std::size_t k = m;
        while (k > 0 && cur[k - 1] == n - 1) --k;
        if (k == 0) break;
        ++cur[k - 1];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(k), cur.end(), cur[k - 1]);
    }
    return out;
}

MultiplicationMap multiplication_map(const LineBundle& b, std::size_t m) {
    auto source = section_basis(b);
    const long mm = static_cast<long>(m);
    auto target = section_basis(power(b, mm));

    std::vector<LineBundle> powers;
    for (long k = 0; k <= mm; ++k) powers.push_back(power(b, k));
    Section unit;
    for (std::size_t i = 0; i < b.multidegree().size(); ++i) unit.blocks.push_back(Vector{Rational(1)});

    auto monomials = sym_monomials(source.dimension(), m);
    std::vector<Vector> products;
    products.reserve(monomials.size());
    for (const auto& mono : monomials) {
        Section acc = unit;
        for (std::size_t k = 0; k < mono.size(); ++k) acc = multiply_sections(powers[k + 1], acc, source.basis[mono[k]]);
        products.push_back(acc.flatten());
    }

    const std::size_t ambient = target.bundle.ambient_dimension();
    std::vector<Vector> basis_columns;
    for (const auto& s : target.basis) basis_columns.push_back(s.flatten());
    const auto coords = solve_columns(Matrix::from_columns(basis_columns, ambient), Matrix::from_columns(products, ambient));
    if (!coords) throw std::logic_error("a product of sections is not a global section of the power bundle");

    MultiplicationMap out{std::move(source), std::move(target), std::move(monomials), *coords, 0};
    out.rank = rank(out.matrix);
    return out;
}

QuadricIdeal quadric_ideal(const MultiplicationMap& degree_two) {
    if (!degree_two.monomials.empty() && degree_two.monomials.front().size() != 2)
        throw std::invalid_argument("quadric ideal needs the degree-2 multiplication map");
    QuadricIdeal ideal;
    ideal.variables = degree_two.source.dimension();
    ideal.monomials = degree_two.monomials;
    ideal.quadrics = kernel_basis(degree_two.matrix);
    ideal.multiplication_rank = degree_two.rank;
    return ideal;
}

QuadricIdeal quadric_ideal(const LineBundle& b) { return quadric_ideal(multiplication_map(b, 2)); }

Rational evaluate_quadric(const QuadricIdeal& ideal, const Vector& quadric, const Vector& point) {
    if (point.size() != ideal.variables || quadric.size() != ideal.monomials.size())
        throw std::invalid_argument("quadric or point has the wrong length");
    Rational acc = 0;
    for (std::size_t k = 0; k < quadric.size(); ++k) {
        if (quadric[k] == 0) continue;
        acc += quadric[k] * point[ideal.monomials[k][0]] * point[ideal.monomials[k][1]];
    }
    return acc;
}

std::size_t cone_jacobian_rank(const QuadricIdeal& ideal, const Vector& point) {
    if (point.size() != ideal.variables) throw std::invalid_argument("point has the wrong length");
    Matrix jac(ideal.quadrics.size(), ideal.variables);
    for (std::size_t q = 0; q < ideal.quadrics.size(); ++q) {
        for (std::size_t k = 0; k < ideal.monomials.size(); ++k) {
            const Rational& c = ideal.quadrics[q][k];
            if (c == 0) continue;
            const auto i = ideal.monomials[k][0], j = ideal.monomials[k][1];
            // d(x_i x_j) = x_j dx_i + x_i dx_j
            jac(q, i) += c * point[j];
            jac(q, j) += c * point[i];
        }
    }
    return rank(jac);
}

}  // namespace nodal
