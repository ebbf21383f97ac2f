#pragma once

// JSON schemas for tensors, invariant tuples and reports. Output is compact,
// key order is fixed, and floating-point numbers carry 17 significant digits
// so identical inputs give byte-identical documents.

#include <json.hpp>
#include <string>

#include "triso/canonical_form.hpp"
#include "triso/independence.hpp"
#include "triso/invariants.hpp"
#include "triso/orbit_oracle.hpp"
#include "triso/paper_repro.hpp"

namespace triso {

using Json = nlohmann::ordered_json;

/// Accepts {"D111": x, ..., "D223": x} (missing components are 0) or
/// {"full": [27 numbers, row-major]}. Throws ValidationError otherwise.
SymTraceless3 tensor_from_json(const nlohmann::json& j, double tol = kCompressTolerance);
SymTraceless3 tensor_from_file(const std::string& path, double tol = kCompressTolerance);

Json to_json(const SymTraceless3& s);
Json to_json(const InvariantTuple& t);
Json to_json(const CanonicalParams& c);
Json to_json(const Mat3& m);
Json to_json(const CanonicalResult& r);
Json to_json(const IndependenceReport& r);
Json to_json(const OrbitComparison& c);
Json to_json(const GapReport& r);

/// Compact serialization with %.17g numbers; non-finite numbers become null.
std::string dump(const Json& j);

}  // namespace triso
