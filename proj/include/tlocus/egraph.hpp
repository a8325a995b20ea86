#pragma once

#include "tlocus/exactla.hpp"
#include "tlocus/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlocus {

struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Why a graph failed validation.
enum class GraphErrorKind {
    malformed,
    dimension_mismatch,
    duplicate_vertex,
    duplicate_edge,
    self_loop,
    isolated_vertex,
    index_out_of_range,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    GraphErrorKind kind() const { return kind_; }

private:
    GraphErrorKind kind_;
};

const char* to_string(GraphErrorKind kind);

/// An operation that needs a weakly reversible graph received another one.
class NotWeaklyReversible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Euclidean embedded graph: vertices are distinct points of Q^n and every
/// edge y_i -> y_j stands for the reaction vector y_j - y_i.
///
/// Values are immutable after construction. Edge order is whatever the
/// caller supplied; every edge-indexed vector aligns with it.
class EGraph {
public:
    /// Validates and builds. Throws GraphError naming the offending element.
    EGraph(std::size_t n, std::vector<RationalVector> vertices, std::vector<Edge> edges);

    std::size_t dim() const { return n_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const RationalVector& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }

    RationalVector reaction_vector(std::size_t e) const;
    /// Edge indices leaving / entering each vertex, in edge order.
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

    std::optional<std::size_t> find_vertex(const RationalVector& coords) const;
    std::optional<std::size_t> find_edge(std::size_t source, std::size_t target) const;

    bool has_integer_coordinates() const { return integer_coords_; }
    bool edges_in_canonical_order() const;

    /// Subgraph induced by the edges selected in `mask` (bit e = edge e).
    /// Its vertices are exactly the endpoints, kept in original order.
    EGraph subgraph(std::uint64_t mask) const;

    friend bool operator==(const EGraph& a, const EGraph& b) {
        return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::vector<RationalVector> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::map<RationalVector, std::size_t> index_;
    bool integer_coords_ = true;
};

/// Connected components of the underlying undirected graph, each sorted,
/// ordered by smallest member.
std::vector<std::vector<std::size_t>> linkage_classes(const EGraph& g);

/// Tarjan's algorithm; returns the SCC id of every vertex.
std::vector<std::size_t> strongly_connected_components(const EGraph& g);

/// Every connected component strongly connected, i.e. no edge crosses SCCs.
bool is_weakly_reversible(const EGraph& g);

/// All m(m-1) ordered pairs over the same vertices, in lexicographic order.
EGraph complete_graph(const EGraph& g);

/// Span of the reaction vectors.
Subspace stoichiometric_subspace(const EGraph& g);
std::size_t stoich_dim(const EGraph& g);

} // namespace tlocus
