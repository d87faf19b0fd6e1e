#pragma once

#include <string>

#include <json.hpp>

#include "orbitopes/coorbitope.hpp"
#include "orbitopes/orbitope.hpp"
#include "orbitopes/pencil.hpp"

namespace orbitopes {

using json = nlohmann::ordered_json;

/// Matrix schema: {"rows", "cols", "field": "R"|"C"|"H", "entries":
/// nested arrays} with complex entries as [re, im] and quaternion
/// entries as [a, b, c, d].
DenseMatrix matrix_from_json(const json& j);
json matrix_to_json(const DenseMatrix& m);

/// Spec schema: {"family": tag, "field"?: letter, "m"?: int, "n": int,
/// "x": [rational-or-float, ...]} or {"x_matrix": matrix}. Rational
/// entries are integers or strings like "3/4"; a fully rational vector
/// switches the base point to exact arithmetic.
OrbitopeSpec spec_from_json(const json& j);
json spec_to_json(const OrbitopeSpec& spec);

OrbitopeSpec load_spec_file(const std::string& path);
DenseMatrix load_matrix_file(const std::string& path);

/// Full describe payload: root system, chamber, beta-values and which
/// were treated as zero, facet indices, polar data, biorbitope and
/// rationality verdicts, pencil block summaries.
json describe_json(const OrbitopeSpec& spec);

json pencil_metadata(const LinearPencil& pencil);

json membership_to_json(const MembershipResult& res);

std::string describe_text(const OrbitopeSpec& spec);

}  // namespace orbitopes
