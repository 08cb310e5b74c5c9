// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "nodal/cone.hpp"
#include "nodal/embedding.hpp"
#include "nodal/random_curves.hpp"

using namespace nodal;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::shared_ptr<const NodalCurve> example_x() { return std::make_shared<const NodalCurve>(paper_example_curve()); }

std::pair<int, std::string> capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {status, out};
}

Outcome genus_and_graph() {
    const auto x = paper_example_curve();
    const auto g = dual_graph(x);
    const bool ok = arithmetic_genus(x) == 1 && betti_1(g) == 1 && g.vertices == 3 && g.edges.size() == 3 &&
                    g.loop_count() == 1;
    return {ok, "p_a=" + std::to_string(arithmetic_genus(x)) + " b1=" + std::to_string(betti_1(g)) + " V=" +
                    std::to_string(g.vertices) + " E=" + std::to_string(g.edges.size()) +
                    " loops=" + std::to_string(g.loop_count())};
}

Outcome section_counts() {
    const auto x = example_x();
    std::string detail;
    bool ok = true;
    for (const auto& [md, want] : std::vector<std::pair<std::vector<long>, std::size_t>>{
             {{3, 3, 3}, 9}, {{4, 3, 3}, 10}, {{4, 4, 3}, 11}}) {
        const LineBundle b(x, md);
        const auto k = kernel_basis(gluing_matrix(b)).size();
        ok = ok && k == want && h0(b) == want;
        detail += "h0=" + std::to_string(k) + " (P^" + std::to_string(k - 1) + ") ";
    }
    return {ok, detail};
}

Outcome very_ampleness() {
    const auto x = example_x();
    bool ok = true;
    std::string detail;
    for (const auto& md : std::vector<std::vector<long>>{{4, 3, 3}, {3, 3, 3}}) {
        const LineBundle b(x, md);
        const auto v = very_ample(b, 4);
        const auto pts = sample_points(*x, 4);
        const std::size_t pairs = pts.size() * (pts.size() - 1) / 2;
        ok = ok && v.status == AmpleVerdict::Status::criterion_satisfied && v.witness.empty() && pairs >= 50;
        detail += to_string(v.status) + " (" + std::to_string(pairs) + " pairs, " + std::to_string(v.samples_checked) +
                  " tests) ";
    }
    return {ok, detail};
}

Outcome deformation_tables() {
    const LineBundle l(example_x(), {4, 3, 3});
    const auto r = graded_report(l, -5, 5);
    bool ok = true;
    for (long m = 1; m <= 5; ++m) {
        const auto& p = r.at(m);
        const auto& n = r.at(-m);
        ok = ok && p.t0_direct == static_cast<std::size_t>(10 * m) && p.t1_direct == 0;
        ok = ok && n.t1_direct == static_cast<std::size_t>(10 * m) && n.t0_direct == 0;
        ok = ok && p.t0_formula == p.t0_direct && p.t1_formula == p.t1_direct;
        ok = ok && n.t0_formula == n.t0_direct && n.t1_formula == n.t1_direct;
    }
    return {ok, "m=-5..5 excluding 0"};
}

Outcome riemann_roch_suite() {
    std::mt19937_64 gen(1001);
    std::size_t good = 0, total = 60;
    for (std::size_t k = 0; k < total; ++k) {
        auto curve = std::make_shared<const NodalCurve>(random_nodal_curve(gen, {4, 4, true}));
        const auto b = random_line_bundle(gen, curve, -4, 4);
        const long lhs = static_cast<long>(h0(b)) - static_cast<long>(h1_direct(b));
        good += lhs == b.degree() - arithmetic_genus(*curve) + 1 ? 1 : 0;
    }
    return {good == total, std::to_string(good) + "/" + std::to_string(total) + " bundles"};
}

Outcome serre_duality_suite() {
    std::mt19937_64 gen(2002);
    std::size_t good = 0, omega = 0, total = 25;
    for (std::size_t k = 0; k < total; ++k) {
        auto curve = std::make_shared<const NodalCurve>(random_nodal_curve(gen, {4, 4, false}));
        const auto b = random_line_bundle(gen, curve, -4, 4);
        good += h1_direct(b) == h0(tensor(dualizing_bundle(curve), dual(b))) ? 1 : 0;
        omega += static_cast<long>(h0(dualizing_bundle(curve))) == arithmetic_genus(*curve) ? 1 : 0;
    }
    return {good == total && omega == total,
            std::to_string(good) + "/" + std::to_string(total) + " dualities, " + std::to_string(omega) + "/" +
                std::to_string(total) + " h0(omega)=p_a"};
}

Outcome projective_normality() {
    const LineBundle l(example_x(), {4, 3, 3});
    const auto mm = multiplication_map(l, 2);
    const auto ideal = quadric_ideal(mm);
    const auto space = section_basis(l);
    const auto pts = sample_points(l.curve(), 6);
    bool vanish = pts.size() >= 25;
    for (std::size_t i = 0; i < 25 && i < pts.size(); ++i) {
        const auto v = embed_point(space, pts[i]);
        for (const auto& q : ideal.quadrics) vanish = vanish && evaluate_quadric(ideal, q, v) == 0;
    }
    const bool ok = mm.monomials.size() == 55 && mm.target.dimension() == 20 && mm.rank == 20 &&
                    ideal.quadrics.size() == 35 && vanish;
    return {ok, "source " + std::to_string(mm.monomials.size()) + ", target " + std::to_string(mm.target.dimension()) +
                    ", rank " + std::to_string(mm.rank) + ", |I2|=" + std::to_string(ideal.quadrics.size()) +
                    ", vanish at 25 points " + (vanish ? "yes" : "no")};
}

Outcome node_consistency() {
    const auto x = example_x();
    bool ok = true;
    std::size_t checked = 0;
    for (const auto& md : std::vector<std::vector<long>>{{3, 3, 3}, {4, 3, 3}, {4, 4, 3}})
        for (const auto& glue : std::vector<std::vector<Rational>>{{1, 1, 1}, {2, Rational(-3, 7), 5}}) {
            const LineBundle b(x, md, glue);
            const auto space = section_basis(b);
            for (std::size_t n = 0; n < x->nodes.size(); ++n) {
                const auto a = evaluation_vector(space, CurvePoint::node(n, Branch::a));
                const auto c = evaluation_vector(space, CurvePoint::node(n, Branch::b));
                for (std::size_t k = 0; k < a.size(); ++k) ok = ok && a[k] == glue[n] * c[k];
                ++checked;
            }
        }
    return {ok, std::to_string(checked) + " node/bundle pairs"};
}

Outcome m0_row() {
    const auto [status, out] = capture("'" NODALCONE_CLI "' deform --json '" NODALCONE_CURVES_DIR "/paper-x.json'");
    if (status != 0) return {false, "deform exited with status " + std::to_string(status)};
    const auto doc = nlohmann::json::parse(out, nullptr, false);
    if (doc.is_discarded()) return {false, "output is not JSON"};
    const auto& m0 = doc["sections"]["deform"]["m0"];
    const bool ok = m0.contains("claimed") && m0.contains("direct") && m0["claimed"].contains("t0") &&
                    m0["claimed"].contains("t1") && m0["direct"].contains("t0") && m0["direct"].contains("t1") &&
                    m0["discrepancy"].is_boolean();
    return {ok, "claimed " + m0["claimed"].dump() + ", direct " + m0["direct"].dump() +
                    ", discrepancy=" + m0["discrepancy"].dump()};
}

Outcome determinism() {
    const std::string cmd = "'" NODALCONE_CLI "' verify --json '" NODALCONE_CURVES_DIR "/paper-x.json'";
    const auto first = capture(cmd);
    const auto second = capture(cmd);
    const bool ok = first.first == 0 && second.first == 0 && !first.second.empty() && first.second == second.second;
    return {ok, std::to_string(first.second.size()) + " bytes, identical=" + (first.second == second.second ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"genus and dual graph", genus_and_graph},
        {"section counts", section_counts},
        {"very ampleness", very_ampleness},
        {"deformation tables", deformation_tables},
        {"Riemann-Roch property suite", riemann_roch_suite},
        {"Serre duality property suite", serre_duality_suite},
        {"projective normality at m=2", projective_normality},
        {"node image consistency", node_consistency},
        {"m=0 dual-valued row", m0_row},
        {"determinism of verify --json", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail
                  << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
