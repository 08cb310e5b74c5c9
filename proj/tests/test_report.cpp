#include <doctest.h>

#include "nodal/report.hpp"

using namespace nodal;

namespace {

const CurveSpec& example_spec() {
    static const CurveSpec spec = load_spec(NODALCONE_CURVES_DIR "/paper-x.json");
    return spec;
}

nlohmann::ordered_json part(Subcommand sub, RunOptions opts = {}) {
    const auto r = run(sub, example_spec(), "raw", opts);
    return r.document["sections"][to_string(sub)];
}

}  // namespace

TEST_CASE("subcommand names and ranges") {
    for (auto s : {Subcommand::info, Subcommand::sections, Subcommand::ample, Subcommand::embed, Subcommand::ideal,
                   Subcommand::deform, Subcommand::verify})
        CHECK(parse_subcommand(to_string(s)) == s);
    CHECK_FALSE(parse_subcommand("bogus"));
    CHECK(parse_range("-3:3") == std::pair<long, long>{-3, 3});
    CHECK(parse_range("0:0") == std::pair<long, long>{0, 0});
    CHECK_THROWS_AS(parse_range("1:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a:b"), std::invalid_argument);
}

TEST_CASE("document envelope") {
    const auto r = run(Subcommand::info, example_spec(), "abc", {});
    CHECK(r.document["tool"] == "nodalcone");
    // SHA-256 of "abc".
    CHECK(r.document["input_digest"] == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(r.document["subcommand"] == "info");
    CHECK(r.ok);
    CHECK_FALSE(r.text.empty());
}

TEST_CASE("info, sections and ample parts") {
    const auto info = part(Subcommand::info);
    CHECK(info["arithmetic_genus"] == 1);
    CHECK(info["betti_1"] == 1);
    CHECK(info["dual_graph"]["vertices"] == 3);
    CHECK(info["dual_graph"]["loops"] == 1);

    RunOptions with_basis;
    with_basis.basis = true;
    const auto sec = part(Subcommand::sections, with_basis);
    CHECK(sec["h0"] == 10);
    CHECK(sec["h1"] == 0);
    CHECK(sec["riemann_roch"]["balanced"] == true);
    CHECK(sec["serre_duality"]["holds"] == true);
    CHECK(sec["basis"].size() == 10);

    const auto amp = part(Subcommand::ample);
    CHECK(amp["globally_generated"]["status"] == "criterion-satisfied");
    CHECK(amp["very_ample"]["status"] == "criterion-satisfied");
}

TEST_CASE("embed, ideal and deform parts") {
    const auto emb = part(Subcommand::embed);
    CHECK(emb["target"] == "P^9");
    for (const auto& n : emb["node_consistency"]) CHECK(n["consistent"] == true);

    const auto ideal = part(Subcommand::ideal);
    CHECK(ideal["projective_normality"]["m2"]["rank"] == 20);
    CHECK(ideal["projective_normality"]["m3"]["rank"] == 30);
    CHECK(ideal["quadric_count"] == 35);
    CHECK(ideal["quadrics_vanish_on_samples"] == true);
    CHECK(ideal["jacobian_probe"]["vertex_rank"] == 0);

    RunOptions narrow;
    narrow.m_min = -2;
    narrow.m_max = 2;
    const auto def = part(Subcommand::deform, narrow);
    CHECK(def["entries"].size() == 5);
    CHECK(def["m0"]["claimed"]["t0"] == 0);
    CHECK(def["m0"]["direct"].contains("t0"));
    CHECK(def["m0"]["report_only"] == true);
}

TEST_CASE("verify passes on the example and is deterministic") {
    const auto a = run(Subcommand::verify, example_spec(), "raw", {});
    const auto b = run(Subcommand::verify, example_spec(), "raw", {});
    CHECK(a.ok);
    CHECK(a.document.dump() == b.document.dump());
    CHECK(a.text == b.text);
    for (const auto& c : a.document["sections"]["verify"]["checks"]) CHECK(c["status"] != "fail");
}

TEST_CASE("reports on a bundle below the criteria") {
    CurveSpec low = example_spec();
    low.multidegree = {2, 2, 2};
    const auto r = run(Subcommand::verify, low, "raw", {});
    CHECK(r.ok);
    bool saw_report_only = false;
    for (const auto& c : r.document["sections"]["verify"]["checks"])
        saw_report_only = saw_report_only || (c["name"] == "embedding.very_ample" && c["status"] == "report-only");
    CHECK(saw_report_only);
    const auto amp = run(Subcommand::ample, low, "raw", {}).document["sections"]["ample"];
    CHECK(amp["very_ample"]["status"] == "failed");
}
