#pragma once

// JSON documents (schema_version 1) for every user-facing object.
//
// Field elements are {"a": "p/q", "b": "r/s"} read against the document's
// {"field": {"D": D}}; a plain string such as "1/2+1/2√5" is also accepted on
// input.  Integers are JSON numbers when they fit in 64 bits and decimal
// strings otherwise.  Object keys are written in a fixed order.

#include <string>
#include <vector>

#include <json.hpp>

#include "qtk/construction.hpp"
#include "qtk/tiling.hpp"

namespace qtk::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Schema violation; the message starts with the JSON path ("$.polytope...").
class ParseError : public Error {
 public:
  using Error::Error;
};

Json parse_document(const std::string& text);
/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

Json to_json(const FieldElem& x);
FieldElem field_elem_from_json(const Json& j, unsigned long D, const std::string& path = "$");

Json to_json(const Quasilattice& q, const std::string& name);
Quasilattice quasilattice_from_json(const Json& j);

Json to_json(const Triple& t);
/// Missing certificates are recomputed; supplied ones are checked.
Triple triple_from_json(const Json& j);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json charts_to_json(const std::vector<Chart>& charts, unsigned long D);
std::vector<Chart> charts_from_json(const Json& j);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json to_json(const Patch& p);
Patch patch_from_json(const Json& j);

Json to_json(const Pairing& p, PairMode mode);

Json to_json(const CutPresentation& c);

Json refusal_to_json(const std::string& name, const Refusal& r);

/// Name of the document kind ("triple", "patch", ...).
std::string document_kind(const Json& j);

}  // namespace qtk::io
