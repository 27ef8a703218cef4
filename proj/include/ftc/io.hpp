#pragma once

// JSON encodings of fields, scalars, fusion data, algebras, Hopf algebras,
// modules and groups. Output uses ordered keys so that emitting, parsing and
// emitting again reproduces the same bytes.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ftc/fusion.hpp"
#include "ftc/hopf.hpp"
#include "ftc/rep.hpp"

namespace ftc {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, missing keys, wrong shapes, unparsable values.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "Q", "Fp:7", "ext:Q:x^2+x+1", "ext:Fp:2:x^2+x+1".
Field parse_field(const std::string& spec);

/// {"kind":"Q"} | {"kind":"Fp","p":7} | {"kind":"ext","base":{...},"min_poly":[...]};
/// a micro-syntax string is accepted on input as well.
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// Q as "a/b" strings, F_p as integers, extensions as coefficient arrays.
Json scalar_to_json(const Scalar& s);
/// Also accepts integers and decimal strings wherever they make sense.
Scalar scalar_from_json(const Field& f, const Json& j);

Json fusion_to_json(const FusionRing& f, const BlockPartition* blocks = nullptr);
/// Returns the ring and its block partition (singletons when "blocks" is absent).
std::pair<FusionRing, BlockPartition> fusion_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

Json hopf_to_json(const HopfAlgebra& h, const std::string& name = "");
HopfAlgebra hopf_from_json(const Json& j);

Json module_to_json(const RepModule& m);
RepModule module_from_json(const Field& f, const Json& j);

/// {"names":[...], "table":[[...],...]} with at most 24 elements.
FiniteGroup group_from_json(const Json& j);

/// Reads and parses a JSON file; SchemaError on I/O or syntax errors.
Json read_json_file(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace ftc
