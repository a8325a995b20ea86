#include "tlocus/egraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tlocus {

const char* to_string(GraphErrorKind kind) {
    switch (kind) {
    case GraphErrorKind::malformed: return "malformed";
    case GraphErrorKind::dimension_mismatch: return "dimension mismatch";
    case GraphErrorKind::duplicate_vertex: return "duplicate vertex";
    case GraphErrorKind::duplicate_edge: return "duplicate edge";
    case GraphErrorKind::self_loop: return "self-loop";
    case GraphErrorKind::isolated_vertex: return "isolated vertex";
    case GraphErrorKind::index_out_of_range: return "index out of range";
    }
    return "unknown";
}

namespace {

std::string describe(const RationalVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << to_string(v[i]);
    os << ')';
    return os.str();
}

} // namespace

EGraph::EGraph(std::size_t n, std::vector<RationalVector> vertices, std::vector<Edge> edges)
    : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (v.size() != n_)
            throw GraphError(GraphErrorKind::dimension_mismatch,
                             "dimension mismatch: vertex " + std::to_string(i) + " has " + std::to_string(v.size()) +
                                 " coordinates, expected " + std::to_string(n_));
        if (!index_.emplace(v, i).second)
            throw GraphError(GraphErrorKind::duplicate_vertex,
                             "duplicate vertex: " + std::to_string(i) + " " + describe(v) + " repeats vertex " +
                                 std::to_string(index_.at(v)));
        for (const auto& x : v)
            if (x.get_den() != 1)
                integer_coords_ = false;
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    std::set<Edge> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.source >= vertices_.size() || ed.target >= vertices_.size())
            throw GraphError(GraphErrorKind::index_out_of_range,
                             "index out of range: edge " + std::to_string(e) + " [" + std::to_string(ed.source) +
                                 "," + std::to_string(ed.target) + "]");
        if (ed.source == ed.target)
            throw GraphError(GraphErrorKind::self_loop, "self-loop: edge " + std::to_string(e) + " [" +
                                                            std::to_string(ed.source) + "," +
                                                            std::to_string(ed.target) + "]");
        if (!seen.insert(ed).second)
            throw GraphError(GraphErrorKind::duplicate_edge, "duplicate edge: edge " + std::to_string(e) + " [" +
                                                                 std::to_string(ed.source) + "," +
                                                                 std::to_string(ed.target) + "]");
        out_[ed.source].push_back(e);
        in_[ed.target].push_back(e);
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (out_[i].empty() && in_[i].empty())
            throw GraphError(GraphErrorKind::isolated_vertex,
                             "isolated vertex: " + std::to_string(i) + " " + describe(vertices_[i]));
}

RationalVector EGraph::reaction_vector(std::size_t e) const {
    return vertices_[edges_[e].target] - vertices_[edges_[e].source];
}

std::optional<std::size_t> EGraph::find_vertex(const RationalVector& coords) const {
    auto it = index_.find(coords);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> EGraph::find_edge(std::size_t source, std::size_t target) const {
    if (source >= out_.size())
        return std::nullopt;
    for (auto e : out_[source])
        if (edges_[e].target == target)
            return e;
    return std::nullopt;
}

bool EGraph::edges_in_canonical_order() const { return std::is_sorted(edges_.begin(), edges_.end()); }

EGraph EGraph::subgraph(std::uint64_t mask) const {
    std::vector<std::size_t> remap(vertices_.size(), SIZE_MAX);
    std::vector<bool> used(vertices_.size(), false);
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (mask >> e & 1U) {
            used[edges_[e].source] = true;
            used[edges_[e].target] = true;
        }
    std::vector<RationalVector> verts;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (used[v]) {
            remap[v] = verts.size();
            verts.push_back(vertices_[v]);
        }
    std::vector<Edge> es;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (mask >> e & 1U)
            es.push_back({remap[edges_[e].source], remap[edges_[e].target]});
    return EGraph(n_, std::move(verts), std::move(es));
}

std::vector<std::vector<std::size_t>> linkage_classes(const EGraph& g) {
    const std::size_t m = g.vertex_count();
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i)
        parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        const std::size_t a = find(e.source);
        const std::size_t b = find(e.target);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i)
        groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> strongly_connected_components(const EGraph& g) {
    // Iterative Tarjan.
    const std::size_t m = g.vertex_count();
    constexpr std::size_t unvisited = SIZE_MAX;
    std::vector<std::size_t> index(m, unvisited), low(m, 0), comp(m, unvisited);
    std::vector<bool> on_stack(m, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call; // (vertex, next out-edge position)
    std::size_t counter = 0;
    std::size_t components = 0;

    for (std::size_t root = 0; root < m; ++root) {
        if (index[root] != unvisited)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            const auto& outs = g.out_edges(v);
            if (pos < outs.size()) {
                const std::size_t w = g.edge(outs[pos++]).target;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
            const std::size_t finished = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[finished]);
        }
    }
    return comp;
}

bool is_weakly_reversible(const EGraph& g) {
    const auto comp = strongly_connected_components(g);
    for (const auto& e : g.edges())
        if (comp[e.source] != comp[e.target])
            return false;
    return true;
}

EGraph complete_graph(const EGraph& g) {
    std::vector<Edge> edges;
    const std::size_t m = g.vertex_count();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j)
                edges.push_back({i, j});
    return EGraph(g.dim(), g.vertices(), std::move(edges));
}

Subspace stoichiometric_subspace(const EGraph& g) {
    std::vector<RationalVector> vectors;
    vectors.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        vectors.push_back(g.reaction_vector(e));
    return Subspace::span_of(g.dim(), vectors);
}

std::size_t stoich_dim(const EGraph& g) {
    std::vector<RationalVector> vectors;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        vectors.push_back(g.reaction_vector(e));
    if (vectors.empty())
        return 0;
    return rank_of_vectors(vectors, g.dim());
}

} // namespace tlocus
