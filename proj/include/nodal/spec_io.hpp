#ifndef NODAL_SPEC_IO_HPP
#define NODAL_SPEC_IO_HPP

// JSON curve specifications:
//
//   {
//     "components": [{"name": "C1", "points": ["0", "1"]}, ...],
//     "nodes":      [{"a": "C1.0", "b": "C3.0"}, ...],
//     "bundle":     {"multidegree": [4, 3, 3], "gluings": ["1", "1", "1"]}
//   }
//
// Coordinates and gluing scalars are strings holding exact rationals ("p",
// "p/q") or "inf". Branch references are "<component name>.<0-based point
// index>". "gluings" may be omitted, meaning all 1.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nodal/bundles.hpp"

namespace nodal {

enum class SpecErrorCode {
    syntax,        // not JSON, or wrong JSON types / missing keys
    reference,     // a branch reference does not resolve
    invariant,     // parsed fine but violates a curve or bundle invariant
};

std::string to_string(SpecErrorCode code);

class SpecError : public std::runtime_error {
public:
    SpecError(SpecErrorCode code, std::string where, const std::string& what);

    SpecErrorCode code() const { return code_; }
    /// "line N, column M" for syntax errors, a JSON field path otherwise.
    const std::string& where() const { return where_; }

private:
    SpecErrorCode code_;
    std::string where_;
};

struct CurveSpec {
    std::shared_ptr<const NodalCurve> curve;
    std::vector<long> multidegree;
    std::vector<Rational> gluings;

    LineBundle bundle() const { return LineBundle(curve, multidegree, gluings); }

    friend bool operator==(const CurveSpec& a, const CurveSpec& b) {
        return *a.curve == *b.curve && a.multidegree == b.multidegree && a.gluings == b.gluings;
    }
};

/// Parses and validates. Throws SpecError.
CurveSpec parse_spec(std::string_view text);
CurveSpec load_spec(const std::string& path);
/// Canonical JSON text (two-space indent, fixed key order, trailing newline).
std::string serialize_spec(const CurveSpec& spec);

}  // namespace nodal

#endif  // NODAL_SPEC_IO_HPP
