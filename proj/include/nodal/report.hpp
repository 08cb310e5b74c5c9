#ifndef NODAL_REPORT_HPP
#define NODAL_REPORT_HPP

// Subcommand dispatch and report rendering for the nodalcone tool.
//
// Every subcommand produces one ReportDocument: a JSON object with fixed key
// order holding only integers, booleans, strings and exact rationals written
// as "p/q" strings. The text rendering is derived from the same data.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nodal/cone.hpp"
#include "nodal/embedding.hpp"
#include "nodal/spec_io.hpp"

namespace nodal {

enum class Subcommand { info, sections, ample, embed, ideal, deform, verify };

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string to_string(Subcommand s);

struct RunOptions {
    long m_min = default_weight_min;
    long m_max = default_weight_max;
    std::size_t samples = 4;
    std::uint64_t seed = default_sample_seed;
    bool basis = false;
};

/// Parses "a:b" with a <= 0 <= b. Throws std::invalid_argument.
std::pair<long, long> parse_range(std::string_view text);

struct RunResult {
    nlohmann::ordered_json document;
    std::string text;
    /// False when a check failed (verify) so the tool exits with status 1.
    bool ok = true;
};

RunResult run(Subcommand sub, const CurveSpec& spec, std::string_view raw_input, const RunOptions& options);

/// "sha256:<hex>" of the raw input bytes.
std::string input_digest(std::string_view raw_input);

std::string tool_version();

}  // namespace nodal

#endif  // NODAL_REPORT_HPP
