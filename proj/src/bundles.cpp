#include "nodal/bundles.hpp"

#include <numeric>

namespace nodal {

namespace {

void require_same_curve(const LineBundle& a, const LineBundle& b) {
    if (a.curve_ptr() != b.curve_ptr() && !(a.curve() == b.curve()))
        throw std::invalid_argument("line bundles live on different curves");
}

Rational rational_power(const Rational& q, long m) {
    const unsigned long e = static_cast<unsigned long>(m < 0 ? -m : m);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
    Rational r = m < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

LineBundle::LineBundle(std::shared_ptr<const NodalCurve> curve, std::vector<long> multidegree, std::vector<Rational> gluings)
    : curve_(std::move(curve)), multidegree_(std::move(multidegree)), gluings_(std::move(gluings)) {
    if (!curve_) throw std::invalid_argument("line bundle needs a curve");
    if (multidegree_.size() != curve_->components.size())
        throw std::invalid_argument("multidegree has " + std::to_string(multidegree_.size()) + " entries for " +
                                    std::to_string(curve_->components.size()) + " components");
    if (gluings_.size() != curve_->nodes.size())
        throw std::invalid_argument("expected one gluing scalar per node (" + std::to_string(curve_->nodes.size()) +
                                    "), got " + std::to_string(gluings_.size()));
    for (std::size_t n = 0; n < gluings_.size(); ++n)
        if (gluings_[n] == 0) throw std::invalid_argument("gluing scalar must be nonzero (node " + std::to_string(n) + ")");
}

LineBundle::LineBundle(std::shared_ptr<const NodalCurve> curve, std::vector<long> multidegree)
    : LineBundle(curve, std::move(multidegree), std::vector<Rational>(curve ? curve->nodes.size() : 0, Rational(1))) {}

LineBundle LineBundle::trivial(std::shared_ptr<const NodalCurve> curve) {
    const auto n = curve->components.size();
    return LineBundle(std::move(curve), std::vector<long>(n, 0));
}

long LineBundle::degree() const { return std::accumulate(multidegree_.begin(), multidegree_.end(), 0L); }

std::size_t LineBundle::block_size(std::size_t component) const { return component_h0(multidegree_.at(component)); }

std::size_t LineBundle::block_offset(std::size_t component) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < component; ++i) off += block_size(i);
    return off;
}

std::size_t LineBundle::ambient_dimension() const { return block_offset(multidegree_.size()); }

Vector Section::flatten() const {
    Vector out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

Section Section::unflatten(const LineBundle& bundle, const Vector& flat) {
    if (flat.size() != bundle.ambient_dimension()) throw std::invalid_argument("flat section has the wrong length");
    Section s;
    std::size_t off = 0;
    for (std::size_t i = 0; i < bundle.multidegree().size(); ++i) {
        const auto n = bundle.block_size(i);
        s.blocks.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(off),
                              flat.begin() + static_cast<std::ptrdiff_t>(off + n));
        off += n;
    }
    return s;
}

std::size_t component_h0(long d) { return d >= 0 ? static_cast<std::size_t>(d + 1) : 0; }
std::size_t component_h1(long d) { return d >= -1 ? 0 : static_cast<std::size_t>(-d - 1); }

Vector evaluation_row(long d, const PointOnLine& p) {
    if (d < 0) throw std::invalid_argument("evaluation functional needs degree >= 0");
    Vector row(static_cast<std::size_t>(d + 1));
    if (p.is_infinity()) {
        row.back() = 1;
        return row;
    }
    Rational acc = 1;
    for (auto& x : row) {
        x = acc;
        acc *= p.value();
    }
    return row;
}

Vector jet_row(long d, const PointOnLine& p) {
    if (d < 1) throw std::invalid_argument("jet functional needs degree >= 1");
    Vector row(static_cast<std::size_t>(d + 1));
    if (p.is_infinity()) {
        // chart s = 1/t: s^d f(1/s) = a_d + a_{d-1} s + ...
        row[static_cast<std::size_t>(d - 1)] = 1;
        return row;
    }
    Rational acc = 1;  // p^(k-1)
    for (long k = 1; k <= d; ++k) {
        row[static_cast<std::size_t>(k)] = Rational(k) * acc;
        acc *= p.value();
    }
    return row;
}

Matrix gluing_matrix(const LineBundle& b) {
    const auto& curve = b.curve();
    Matrix phi(curve.nodes.size(), b.ambient_dimension());
    for (std::size_t n = 0; n < curve.nodes.size(); ++n) {
        const auto& node = curve.nodes[n];
        const auto add = [&](const BranchRef& br, const Rational& coeff) {
            const long d = b.multidegree()[br.component];
            if (d < 0) return;
            const auto row = evaluation_row(d, curve.point(br));
            const auto off = b.block_offset(br.component);
            for (std::size_t k = 0; k < row.size(); ++k) phi(n, off + k) += coeff * row[k];
        };
        add(node.a, Rational(1));
        add(node.b, Rational(-b.gluings()[n]));
    }
    return phi;
}

SectionSpace section_basis(const LineBundle& b) {
    SectionSpace space{b, {}};
    for (const auto& v : kernel_basis(gluing_matrix(b))) space.basis.push_back(Section::unflatten(b, v));
    return space;
}

std::size_t h0(const LineBundle& b) {
    const auto phi = gluing_matrix(b);
    return phi.cols() - rank(phi);
}

std::size_t h1_direct(const LineBundle& b) {
    const auto phi = gluing_matrix(b);
    std::size_t h1 = phi.rows() - rank(phi);
    for (long d : b.multidegree()) h1 += component_h1(d);
    return h1;
}

LineBundle tensor(const LineBundle& a, const LineBundle& b) {
    require_same_curve(a, b);
    std::vector<long> deg(a.multidegree().size());
    for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = a.multidegree()[i] + b.multidegree()[i];
    std::vector<Rational> glue(a.gluings().size());
    for (std::size_t n = 0; n < glue.size(); ++n) glue[n] = a.gluings()[n] * b.gluings()[n];
    return LineBundle(a.curve_ptr(), std::move(deg), std::move(glue));
}

LineBundle dual(const LineBundle& b) { return power(b, -1); }

LineBundle power(const LineBundle& b, long m) {
    std::vector<long> deg(b.multidegree());
    for (auto& d : deg) d *= m;
    std::vector<Rational> glue;
    for (const auto& g : b.gluings()) glue.push_back(rational_power(g, m));
    return LineBundle(b.curve_ptr(), std::move(deg), std::move(glue));
}

LineBundle dualizing_bundle(std::shared_ptr<const NodalCurve> curve) {
    require_valid(*curve);
    if (!all_points_affine(*curve))
        throw std::invalid_argument("dualizing bundle needs affine marked points; normalize the curve (affine-safe) first");

    // A section on C_i is f(t) dt / prod_{p in D_i} (t - p) with deg f <= n_i - 2;
    // its residue at p is f(p) / c_p with c_p = prod_{p' != p} (p - p').
    const auto residue_weight = [&](const BranchRef& br) {
        const auto& pts = curve->components[br.component].marked_points;
        Rational c = 1;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (k != br.point) c *= pts[br.point].value() - pts[k].value();
        return c;
    };
    std::vector<long> deg;
    for (const auto& comp : curve->components) deg.push_back(static_cast<long>(comp.marked_points.size()) - 2);
    // Opposite residues: f_a(p) / c_p = -f_b(q) / c_q.
    std::vector<Rational> glue;
    for (const auto& node : curve->nodes) glue.push_back(Rational(-residue_weight(node.a) / residue_weight(node.b)));
    return LineBundle(std::move(curve), std::move(deg), std::move(glue));
}

LineBundle tangent_bundle(std::shared_ptr<const NodalCurve> curve) { return dual(dualizing_bundle(std::move(curve))); }

RiemannRochReport riemann_roch_report(const LineBundle& b) {
    RiemannRochReport r;
    r.h0 = h0(b);
    r.h1 = h1_direct(b);
    r.degree = b.degree();
    r.genus = arithmetic_genus(b.curve());
    r.balanced = static_cast<long>(r.h0) - static_cast<long>(r.h1) == r.degree - r.genus + 1;
    return r;
}

SerreDualityCheck serre_duality_check(const LineBundle& b) {
    const auto omega = dualizing_bundle(b.curve_ptr());
    return {h1_direct(b), h0(tensor(omega, dual(b)))};
}

Rational evaluate_section(const LineBundle& b, const Section& s, std::size_t component, const PointOnLine& p) {
    const long d = b.multidegree().at(component);
    if (d < 0) throw std::invalid_argument("cannot evaluate on a component of negative degree");
    const auto row = evaluation_row(d, p);
    const auto& coeffs = s.blocks.at(component);
    if (coeffs.size() != row.size()) throw std::invalid_argument("section block does not match the bundle's degree");
    Rational acc = 0;
    for (std::size_t k = 0; k < row.size(); ++k) acc += row[k] * coeffs[k];
    return acc;
}

Section multiply_sections(const LineBundle& target, const Section& s, const Section& t) {
    const auto n = target.multidegree().size();
    if (s.blocks.size() != n || t.blocks.size() != n) throw std::invalid_argument("sections have the wrong number of blocks");
    Section out;
    for (std::size_t i = 0; i < n; ++i) {
        Vector prod(target.block_size(i));
        const auto& f = s.blocks[i];
        const auto& g = t.blocks[i];
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (f[j] == 0) continue;
            for (std::size_t k = 0; k < g.size(); ++k) {
                if (g[k] == 0) continue;
                if (j + k >= prod.size()) throw std::invalid_argument("product exceeds the target degree bound");
                prod[j + k] += f[j] * g[k];
            }
        }
        out.blocks.push_back(std::move(prod));
    }
    return out;
}

bool satisfies_gluing(const LineBundle& b, const Section& s) {
    const auto flat = s.flatten();
    if (flat.size() != b.ambient_dimension()) return false;
    return is_zero(gluing_matrix(b) * flat);
}

}  // namespace nodal
