#pragma once

// JSON and DOT formats for the command line tool.
//
// Semigroup:  {"elements": [...], "mul": [[name, ...], ...], "zero"?, "identity"?}
// Coverage:   {"covers": [{"of": name, "cover": [names]}], "close": bool}
//             or the string "tight"
//
// Output is canonical: object keys sorted, sets listed in element order,
// two-space indentation and a trailing newline, so export, parse and
// export again gives the same bytes.

#include <string>

#include <json.hpp>

#include "isg/coverage.hpp"
#include "isg/filters.hpp"
#include "isg/groupoid.hpp"
#include "isg/ideals.hpp"
#include "isg/semigroup.hpp"

namespace isg {

using Json = nlohmann::json;

// ParseError for malformed text, missing fields and unknown names (naming
// the offending cell); ValidationError wrapping the algebraic failure
// otherwise.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

SemigroupPtr semigroup_from_json(const Json& j, ValidateOptions opts = {});
Json semigroup_to_json(const FiniteInverseSemigroup& s);

// The builtin "tight" may be given as a bare string instead of a file.
Coverage coverage_from_json(const SemigroupPtr& s, const Json& j);
Json coverage_to_json(const Coverage& cov);

Json set_to_json(const FiniteInverseSemigroup& s, const ElementSet& a);
Json filters_to_json(const FiniteInverseSemigroup& s, const FilterFamily& f);

// {arrows, units, d, r, inv, mul: [[a, b, ab], ...], basis}; basis holds
// the least open neighbourhood of every arrow, which determines the topology.
Json groupoid_to_json(const FiniteGroupoid& g);
// Units as boxes, other arrows as edges source -> range labelled by name.
std::string groupoid_to_dot(const FiniteGroupoid& g);

// {ideals: [[names]], product: [[index into ideals]], pi: {name: ideal}}
Json pseudogroup_to_json(const UniversalPseudogroup& u);

std::string dump(const Json& j);

}  // namespace isg
