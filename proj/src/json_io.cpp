#include "mms/json_io.hpp"

#include "mms/errors.hpp"

namespace mms {

Json parse_json_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

std::uint64_t require_uint(const Json& doc, const char* key, const std::string& where) {
    const std::string path = where.empty() ? std::string(key) : where + "." + key;
    if (!doc.is_object() || !doc.contains(key)) throw ValidationError("missing field \"" + path + "\"");
    const Json& value = doc.at(key);
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw ValidationError("field \"" + path + "\" must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

Json to_json(const Hypergraph& h) {
    Json doc = Json::object();
    doc["n"] = h.vertex_count();
    doc["k"] = h.uniformity();
    Json edges = Json::array();
    for (const Edge& e : h.edges()) edges.push_back(e);
    doc["edges"] = std::move(edges);
    return doc;
}

Json to_json(const Weighting& f) {
    Json values = Json::array();
    for (const auto& x : f.values()) values.push_back(to_fraction_string(x));
    Json doc = Json::object();
    doc["values"] = std::move(values);
    return doc;
}

Hypergraph hypergraph_from_json(const Json& doc) {
    const auto n = require_uint(doc, "n");
    const auto k = require_uint(doc, "k");
    if (!doc.contains("edges") || !doc.at("edges").is_array()) {
        throw ValidationError("field \"edges\" must be an array");
    }
    std::vector<Edge> edges;
    const Json& list = doc.at("edges");
    edges.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Json& item = list[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!item.is_array()) throw ValidationError(where + " must be an array");
        Edge e;
        for (std::size_t j = 0; j < item.size(); ++j) {
            const Json& v = item[j];
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
                throw ValidationError(where + "[" + std::to_string(j) + "] must be a non-negative integer");
            }
            e.push_back(static_cast<Vertex>(v.get<std::uint64_t>()));
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, k, std::move(edges));
}

Weighting weighting_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("values") || !doc.at("values").is_array()) {
        throw ValidationError("field \"values\" must be an array");
    }
    std::vector<Rational> values;
    const Json& list = doc.at("values");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "values[" + std::to_string(i) + "]";
        if (!list[i].is_string()) throw ValidationError(where + " must be a \"p/q\" string");
        try {
            values.push_back(parse_rational(list[i].get<std::string>()));
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    return Weighting(std::move(values));
}

std::string serialize(const Hypergraph& h) { return to_json(h).dump(); }
std::string serialize(const Weighting& f) { return to_json(f).dump(); }

Hypergraph parse_hypergraph(std::string_view text) { return hypergraph_from_json(parse_json_document(text)); }
Weighting parse_weighting(std::string_view text) { return weighting_from_json(parse_json_document(text)); }

} // namespace mms
