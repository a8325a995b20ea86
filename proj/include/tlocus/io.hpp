#pragma once

#include "tlocus/cone.hpp"
#include "tlocus/egraph.hpp"
#include "tlocus/equiv.hpp"
#include "tlocus/locus.hpp"
#include "tlocus/toric.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace tlocus {

using Json = nlohmann::ordered_json;

/// An edge-vector file was written for a different graph.
class HashMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integers as JSON numbers, everything else as "p/q".
Json rational_json(const Rational& value);
/// Accepts a JSON integer or a "p"/"p/q" string.
Rational parse_rational_json(const Json& value);
Json rational_vector_json(const RationalVector& v);
RationalVector parse_rational_vector(const Json& value);
/// Vector values always as strings, as edge-vector files store them.
Json rational_strings(const RationalVector& v);

/// {"n", "vertices", "edges"} in that order.
Json graph_json(const EGraph& g);
/// Throws ParseError for bad JSON/shape and GraphError for invalid graphs.
EGraph parse_egraph(std::string_view text);
EGraph egraph_from_json(const Json& doc);
/// Compact canonical serialization; the input to graph_hash.
std::string canonical_graph_text(const EGraph& g);
/// FNV-1a 64 of the canonical text, 16 lowercase hex digits.
std::string graph_hash(const EGraph& g);

/// {"graph_hash", "values"}.
Json edge_vector_json(const EGraph& g, const EdgeVector& w);
/// Checks the hash (HashMismatch) and the length (DimensionMismatch).
EdgeVector parse_edge_vector(const Json& doc, const EGraph& g);

Json cone_json(const ConeResult& cone);
Json steady_state_json(const SteadyState& s);
Json bound_json(const BoundReport& r);
Json bound_row_json(const BoundRow& row);

} // namespace tlocus
