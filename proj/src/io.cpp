#include "tlocus/io.hpp"

#include <cstdint>
#include <cstdio>

namespace tlocus {

Json rational_json(const Rational& value) {
    if (is_integer(value) && value.get_num().fits_slong_p())
        return Json(value.get_num().get_si());
    return Json(to_string(value));
}

Rational parse_rational_json(const Json& value) {
    if (value.is_number_integer())
        return value.is_number_unsigned() ? Rational(Integer(std::to_string(value.get<std::uint64_t>())))
                                          : Rational(Integer(std::to_string(value.get<std::int64_t>())));
    if (value.is_string()) {
        const std::string text = value.get<std::string>();
        const Rational r = parse_rational(text);
        if (to_string(r) != text && text.find('/') != std::string::npos)
            throw ParseError("rational not in lowest terms: '" + text + "'");
        return r;
    }
    throw ParseError("expected an integer or a \"p/q\" string, got " + value.dump());
}

Json rational_vector_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(rational_json(x));
    return out;
}

Json rational_strings(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

RationalVector parse_rational_vector(const Json& value) {
    if (!value.is_array())
        throw ParseError("expected an array of rationals, got " + value.dump());
    RationalVector out;
    out.reserve(value.size());
    for (const auto& x : value)
        out.push_back(parse_rational_json(x));
    return out;
}

Json graph_json(const EGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices())
        vertices.push_back(rational_vector_json(v));
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back(Json::array({e.source, e.target}));
    Json out;
    out["n"] = g.dim();
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

EGraph egraph_from_json(const Json& doc) {
    if (!doc.is_object())
        throw ParseError("graph document must be a JSON object");
    for (const char* key : {"n", "vertices", "edges"})
        if (!doc.contains(key))
            throw ParseError(std::string("graph document is missing \"") + key + "\"");
    if (!doc["n"].is_number_unsigned())
        throw ParseError("\"n\" must be a nonnegative integer");
    const std::size_t n = doc["n"].get<std::size_t>();
    if (!doc["vertices"].is_array() || !doc["edges"].is_array())
        throw ParseError("\"vertices\" and \"edges\" must be arrays");
    std::vector<RationalVector> vertices;
    for (const auto& v : doc["vertices"])
        vertices.push_back(parse_rational_vector(v));
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("edge must be a pair of vertex indices, got " + e.dump());
        const auto s = e[0].get<long long>();
        const auto t = e[1].get<long long>();
        if (s < 0 || t < 0)
            throw GraphError(GraphErrorKind::index_out_of_range, "negative vertex index in edge " + e.dump());
        edges.push_back({static_cast<std::size_t>(s), static_cast<std::size_t>(t)});
    }
    return EGraph(n, std::move(vertices), std::move(edges));
}

EGraph parse_egraph(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return egraph_from_json(doc);
}

std::string canonical_graph_text(const EGraph& g) { return graph_json(g).dump(); }

std::string graph_hash(const EGraph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : canonical_graph_text(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json edge_vector_json(const EGraph& g, const EdgeVector& w) {
    require_aligned(g, w, "edge_vector_json");
    Json out;
    out["graph_hash"] = graph_hash(g);
    out["values"] = rational_strings(w);
    return out;
}

EdgeVector parse_edge_vector(const Json& doc, const EGraph& g) {
    if (!doc.is_object() || !doc.contains("graph_hash") || !doc.contains("values") || !doc["graph_hash"].is_string())
        throw ParseError("edge vector document needs \"graph_hash\" and \"values\"");
    const std::string expected = graph_hash(g);
    const std::string got = doc["graph_hash"].get<std::string>();
    if (got != expected)
        throw HashMismatch("edge vector was written for graph " + got + ", not " + expected);
    EdgeVector w = parse_rational_vector(doc["values"]);
    require_aligned(g, w, "parse_edge_vector");
    return w;
}

Json cone_json(const ConeResult& cone) {
    Json out;
    out["status"] = to_string(cone.status);
    out["dim"] = cone.dim;
    out["tilde_dim"] = cone.tilde_dim;
    out["witness"] = cone.witness ? rational_strings(*cone.witness) : Json(nullptr);
    out["certificate"] = cone.certificate ? rational_strings(*cone.certificate) : Json(nullptr);
    return out;
}

Json steady_state_json(const SteadyState& s) {
    Json out;
    out["mode"] = to_string(s.mode);
    if (s.exact)
        out["x"] = rational_strings(*s.exact);
    else
        out["x"] = s.x;
    out["residual"] = s.residual ? Json(*s.residual) : Json(nullptr);
    return out;
}

Json bound_json(const BoundReport& r) {
    Json terms;
    terms["dim_jr"] = r.dim_jr;
    terms["dim_s"] = r.dim_s;
    terms["dim_d0"] = r.dim_d0;
    terms["dim_j0"] = r.dim_j0;
    Json out;
    out["applicable"] = r.applicable;
    out["terms"] = std::move(terms);
    out["raw_bound"] = r.raw;
    out["capped_bound"] = r.capped;
    out["edges_g"] = r.edges_g;
    out["edges_g1"] = r.edges_g1;
    out["formula"] = "dim_jr + dim_s + dim_d0 - dim_j0 = " + r.formula();
    out["witness"] = r.witness ? rational_strings(*r.witness) : Json(nullptr);
    out["certificate"] = r.certificate ? rational_strings(*r.certificate) : Json(nullptr);
    out["mask"] = r.mask ? Json(*r.mask) : Json(nullptr);
    return out;
}

Json bound_row_json(const BoundRow& row) {
    Json out;
    out["mask"] = row.mask;
    out["edges"] = row.edges;
    out["applicable"] = row.applicable;
    out["dim_jr"] = row.dim_jr;
    out["dim_s"] = row.dim_s;
    out["dim_j0"] = row.dim_j0;
    out["raw_bound"] = row.raw;
    out["capped_bound"] = row.capped;
    return out;
}

} // namespace tlocus
