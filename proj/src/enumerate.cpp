#include "tlocus/enumerate.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tlocus {

namespace {

void check_limits(const EGraph& g, std::optional<std::size_t> cap) {
    const std::size_t e = g.edge_count();
    if (e > kMaskEdgeLimit)
        throw EnumerationLimitError("enumeration limit exceeded: " + std::to_string(e) + " edges (hard maximum " +
                                    std::to_string(kMaskEdgeLimit) + ")");
    if (!cap && e > kEnumerationEdgeLimit)
        throw EnumerationLimitError("enumeration limit exceeded: " + std::to_string(e) + " edges without a cap (limit " +
                                    std::to_string(kEnumerationEdgeLimit) + ")");
}

std::uint64_t mask_end(const EGraph& g) {
    return g.edge_count() == 64 ? 0 : (std::uint64_t{1} << g.edge_count());
}

} // namespace

SubsetChecker::SubsetChecker(const EGraph& g) : vertices_(g.vertex_count()) {
    if (g.vertex_count() > 64)
        throw EnumerationLimitError("enumeration supports at most 64 vertices");
    for (const auto& e : g.edges()) {
        source_.push_back(static_cast<std::uint8_t>(e.source));
        target_.push_back(static_cast<std::uint8_t>(e.target));
    }
}

bool SubsetChecker::weakly_reversible(std::uint64_t mask) const {
    // Every chosen edge u -> v must be closed by a path v ->* u.
    std::uint64_t adj[64] = {};
    std::uint64_t touched = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int e = __builtin_ctzll(m);
        adj[source_[e]] |= std::uint64_t{1} << target_[e];
        touched |= std::uint64_t{1} << source_[e];
    }
    std::uint64_t reach[64];
    for (std::uint64_t t = touched; t; t &= t - 1) {
        const int v = __builtin_ctzll(t);
        std::uint64_t seen = adj[v];
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= adj[__builtin_ctzll(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        reach[v] = seen;
    }
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int e = __builtin_ctzll(m);
        // target has an out-edge iff it is touched; otherwise it is a sink.
        if (!(touched >> target_[e] & 1U))
            return false;
        if (!(reach[target_[e]] >> source_[e] & 1U))
            return false;
    }
    return true;
}

std::vector<std::uint64_t> wr_subgraph_masks_serial(const EGraph& g, std::optional<std::size_t> cap) {
    check_limits(g, cap);
    const SubsetChecker checker(g);
    std::vector<std::uint64_t> out;
    const std::uint64_t end = mask_end(g);
    for (std::uint64_t mask = 1; mask != end; ++mask) {
        if (cap && out.size() >= *cap)
            break;
        if (checker.weakly_reversible(mask))
            out.push_back(mask);
    }
    return out;
}

std::vector<std::uint64_t> wr_subgraph_masks(const EGraph& g, std::optional<std::size_t> cap) {
    check_limits(g, cap);
    const SubsetChecker checker(g);
    const std::uint64_t end = mask_end(g);
    constexpr std::uint64_t chunk = std::uint64_t{1} << 14;
    const std::uint64_t chunks = (end - 1 + chunk - 1) / chunk;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    // Waves of chunks keep a capped scan from running far past the cap.
    const std::uint64_t wave = cap ? static_cast<std::uint64_t>(std::max(1, threads)) * 4 : chunks;

    std::vector<std::uint64_t> out;
    for (std::uint64_t first = 0; first < chunks; first += wave) {
        const std::uint64_t last = std::min(chunks, first + wave);
        std::vector<std::vector<std::uint64_t>> parts(last - first);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t c = static_cast<std::int64_t>(first); c < static_cast<std::int64_t>(last); ++c) {
            const std::uint64_t lo = 1 + static_cast<std::uint64_t>(c) * chunk;
            const std::uint64_t hi = std::min(end, lo + chunk);
            auto& part = parts[static_cast<std::size_t>(static_cast<std::uint64_t>(c) - first)];
            for (std::uint64_t mask = lo; mask < hi; ++mask)
                if (checker.weakly_reversible(mask))
                    part.push_back(mask);
        }
        for (const auto& part : parts)
            out.insert(out.end(), part.begin(), part.end());
        if (cap && out.size() >= *cap) {
            out.resize(*cap);
            break;
        }
    }
    return out;
}

void for_each_wr_subgraph(const EGraph& g, std::optional<std::size_t> cap,
                          const std::function<bool(std::uint64_t, const EGraph&)>& visit) {
    check_limits(g, cap);
    const SubsetChecker checker(g);
    const std::uint64_t end = mask_end(g);
    std::size_t produced = 0;
    for (std::uint64_t mask = 1; mask != end; ++mask) {
        if (cap && produced >= *cap)
            return;
        if (!checker.weakly_reversible(mask))
            continue;
        ++produced;
        if (!visit(mask, g.subgraph(mask)))
            return;
    }
}

std::vector<EGraph> enumerate_wr_subgraphs(const EGraph& g, std::optional<std::size_t> cap) {
    std::vector<EGraph> out;
    for_each_wr_subgraph(g, cap, [&](std::uint64_t, const EGraph& sub) {
        out.push_back(sub);
        return true;
    });
    return out;
}

} // namespace tlocus
