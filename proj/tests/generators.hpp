#pragma once

// Hand-rolled random generators for property tests. Every suite seeds its
// own engine, so failures reproduce exactly.

#include "tlocus/egraph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace gen {

using tlocus::EGraph;
using tlocus::Rational;
using tlocus::RationalVector;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational rational(Rng& rng, long lo, long hi, long max_den = 4) {
    Rational r(uniform(rng, lo * max_den, hi * max_den), uniform(rng, 1, max_den));
    r.canonicalize();
    return r;
}

inline Rational positive_rational(Rng& rng, long hi = 5, long max_den = 4) {
    Rational r(uniform(rng, 1, hi * max_den), uniform(rng, 1, max_den));
    r.canonicalize();
    return r;
}

inline RationalVector vector(Rng& rng, std::size_t n, long lo, long hi, long max_den = 4) {
    RationalVector v(n);
    for (auto& x : v)
        x = rational(rng, lo, hi, max_den);
    return v;
}

inline RationalVector positive_vector(Rng& rng, std::size_t n, long hi = 5, long max_den = 4) {
    RationalVector v(n);
    for (auto& x : v)
        x = positive_rational(rng, hi, max_den);
    return v;
}

/// m distinct integer points in [0, range]^n.
inline std::vector<RationalVector> points(Rng& rng, std::size_t m, std::size_t n, long range) {
    std::set<RationalVector> seen;
    std::vector<RationalVector> out;
    while (out.size() < m) {
        RationalVector p(n);
        for (auto& x : p)
            x = uniform(rng, 0, range);
        if (seen.insert(p).second)
            out.push_back(p);
    }
    return out;
}

/// Complete digraph on the given points.
inline EGraph complete_on(std::size_t n, const std::vector<RationalVector>& pts) {
    std::vector<tlocus::Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (i != j)
                edges.push_back({i, j});
    return EGraph(n, pts, edges);
}

/// Random nonempty edge subset of the complete digraph on m random points.
inline EGraph graph(Rng& rng, std::size_t m, std::size_t n, long range, double edge_prob = 0.4) {
    const EGraph full = complete_on(n, points(rng, m, n, range));
    std::bernoulli_distribution pick(edge_prob);
    std::uint64_t mask = 0;
    while (mask == 0)
        for (std::size_t e = 0; e < full.edge_count(); ++e)
            if (pick(rng))
                mask |= std::uint64_t{1} << e;
    return full.subgraph(mask);
}

/// Union of random directed cycles in `full`: weakly reversible by
/// construction.
inline std::uint64_t wr_mask(Rng& rng, const EGraph& full, int cycles = 2) {
    const std::size_t m = full.vertex_count();
    std::uint64_t mask = 0;
    for (int c = 0; c < cycles; ++c) {
        std::vector<std::size_t> order(m);
        for (std::size_t i = 0; i < m; ++i)
            order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t len = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(m)));
        for (std::size_t i = 0; i < len; ++i)
            mask |= std::uint64_t{1} << *full.find_edge(order[i], order[(i + 1) % len]);
    }
    return mask;
}

inline EGraph wr_graph(Rng& rng, std::size_t m, std::size_t n, long range, int cycles = 2) {
    const EGraph full = complete_on(n, points(rng, m, n, range));
    return full.subgraph(wr_mask(rng, full, cycles));
}

} // namespace gen
