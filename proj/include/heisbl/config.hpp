#pragma once

// JSON configuration files and the small text syntaxes used on the command line.
//
// {
//   "n": 2, "m": 2,
//   "projections": [{"coords": [2]}, {"basis": [["1", "1"]]}],
//   "offsets": {"a": [[...], ...], "b": [[...], ...]},      // optional, 2m vectors each
//   "family": [{"coords": [1]}, "zero", "full", ...],     // optional
//   "test_exponents": [{"q": ["2/5", ...]}, {"p": ["5/2", "inf", ...]}],
//   "functions": [{"lo": [...], "hi": [...]}, {"zero": true}, ...]
// }
//
// Coordinate indices are 1-based. Rationals are integers or "p/q" strings.

#include <string>
#include <vector>

#include "heisbl/conditions.hpp"
#include "heisbl/geometry.hpp"
#include "heisbl/montecarlo.hpp"

namespace heisbl {

struct RunConfig {
  ProjectionConfig projections;
  Offsets offsets;
  std::vector<Subspace> family;
  std::vector<ReciprocalVector> test_exponents;
  std::vector<BoxFunction> functions;
};

/// Throws InvalidInput with "line L, column C: ..." for malformed JSON and
/// "/json/pointer: ..." for schema violations.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// "coords:1,2", "basis:1/2,1;0,1" (vectors separated by ';'), "zero" or "full".
Subspace parse_subspace_spec(std::size_t n, const std::string& spec);

/// A JSON array of subspaces in the config-file syntax.
std::vector<Subspace> parse_family_json(std::size_t n, const std::string& text);

/// Comma-separated reciprocals ("2/5,1/5,...") or, with `exponents`, values
/// of p ("5/2,inf,...").
ReciprocalVector parse_exponent_list(const std::string& text, bool exponents);

std::string read_text_file(const std::string& path);

}  // namespace heisbl
