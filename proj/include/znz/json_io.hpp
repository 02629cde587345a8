#pragma once

#include <json.hpp>

#include "znz/conjugacy.hpp"
#include "znz/group.hpp"
#include "znz/orbit.hpp"

namespace znz {

using nlohmann::json;

/// Integers cross JSON as numbers while they fit the 53-bit safe
/// range and as decimal strings beyond; parsing accepts both forms
/// everywhere.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json vector_to_json(const IntVector& v);
IntVector vector_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json element_to_json(const GroupElement& e);
GroupElement element_from_json(const json& j);

json outcome_to_json(const ConjugacyOutcome& o);
json orbit_outcome_to_json(const OrbitOutcome& o);
json trace_to_json(const OrbitCertificateTrace& t);

/// Loads {"n": ..., "phi": [[...]]} and validates the group.
AbcGroup load_group_file(const std::string& path);

/// Loads a bare [[...]] matrix or an object with a "phi" key.
IntMatrix load_matrix_file(const std::string& path);

}  // namespace znz
