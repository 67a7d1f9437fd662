#pragma once

#include "mms/hypergraph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace mms {

using Json = nlohmann::ordered_json;

// Hypergraph: {"n": int, "k": int, "edges": [[int,...],...]}
// Weighting:  {"values": ["p/q",...]}
// Output is canonical (edges sorted); parsing validates every invariant and
// reports the failing location in the ValidationError message.

Json to_json(const Hypergraph& h);
Json to_json(const Weighting& f);
Hypergraph hypergraph_from_json(const Json& doc);
Weighting weighting_from_json(const Json& doc);

std::string serialize(const Hypergraph& h);
std::string serialize(const Weighting& f);
Hypergraph parse_hypergraph(std::string_view text);
Weighting parse_weighting(std::string_view text);

/// Parses `text` as JSON, wrapping syntax errors as ValidationError.
Json parse_json_document(std::string_view text);

/// Reads a non-negative integer field, with the field path in any error.
std::uint64_t require_uint(const Json& doc, const char* key, const std::string& where = "");

} // namespace mms
