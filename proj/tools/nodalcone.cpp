// nodalcone: nodal curves, their line bundles, and graded deformations of the
// affine cone, all in exact arithmetic.
//
// Exit status: 0 success, 1 a verify check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nodal/report.hpp"

namespace {

constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

struct Flags {
    std::string spec_path;
    bool json = false;
    std::string range;
    std::size_t samples = 4;
    std::uint64_t seed = nodal::default_sample_seed;
    bool basis = false;
};

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("spec", flags.spec_path, "JSON curve specification")->required();
    cmd->add_flag("--json", flags.json, "Emit the machine-readable report");
    cmd->add_option("--samples", flags.samples, "Extra pseudo-random sample points per component");
    cmd->add_option("--seed", flags.seed, "Sampling seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on nodal curves, line bundles and cone deformations"};
    app.set_version_flag("--version", nodal::tool_version());
    app.require_subcommand(1);
    Flags flags;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"info", "Genus, dual graph, Betti number, Jacobian dimension"},
        {"sections", "h0, h1, Riemann-Roch and Serre duality checks"},
        {"ample", "Global generation and very ampleness verdicts"},
        {"embed", "Target projective space and sampled embedded points"},
        {"ideal", "Quadrics through the embedded curve and projective normality ranks"},
        {"deform", "Graded deformation table of the affine cone"},
        {"verify", "Run every consistency and property check"},
    };
    for (const auto& [name, help] : commands) {
        auto* cmd = app.add_subcommand(name, help);
        add_common(cmd, flags);
        if (name == "sections") cmd->add_flag("--basis", flags.basis, "Dump the section basis");
        if (name == "deform" || name == "verify")
            cmd->add_option("--range", flags.range, "Weight range a:b containing 0 (default -5:5)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    const auto sub = nodal::parse_subcommand(app.get_subcommands().front()->get_name());
    nodal::RunOptions options;
    options.samples = flags.samples;
    options.seed = flags.seed;
    options.basis = flags.basis;

    std::string raw;
    nodal::CurveSpec spec;
    try {
        if (!flags.range.empty()) std::tie(options.m_min, options.m_max) = nodal::parse_range(flags.range);
        std::ifstream in(flags.spec_path, std::ios::binary);
        if (!in) throw nodal::SpecError(nodal::SpecErrorCode::syntax, flags.spec_path, "cannot open file");
        std::ostringstream buf;
        buf << in.rdbuf();
        raw = buf.str();
        spec = nodal::parse_spec(raw);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        const auto result = nodal::run(*sub, spec, raw, options);
        if (flags.json)
            std::cout << result.document.dump(2) << "\n";
        else
            std::cout << result.text;
        return result.ok ? 0 : exit_check_failed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
