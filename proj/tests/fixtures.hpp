#pragma once

#include "tlocus/egraph.hpp"

#include <vector>

namespace fixtures {

using tlocus::EGraph;
using tlocus::Rational;
using tlocus::RationalVector;

inline std::vector<RationalVector> square() {
    return {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
}

/// Bidirected 4-cycle on the unit square, lexicographic edge order.
inline EGraph g_cyc() {
    return EGraph(2, square(), {{0, 1}, {0, 3}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}});
}

/// Complete digraph on the unit square.
inline EGraph g_k4() {
    std::vector<tlocus::Edge> edges;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j)
                edges.push_back({i, j});
    return EGraph(2, square(), edges);
}

/// Each corner points at the centre (1/2, 1/2).
inline EGraph g_in() {
    std::vector<RationalVector> v = square();
    v.push_back({Rational(1, 2), Rational(1, 2)});
    return EGraph(2, v, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

/// The four D0(G_K4) vectors of the square's worked example, each built from
/// the dependency y_opposite - y_i = (y_left - y_i) + (y_right - y_i):
/// +1 on the two side edges leaving vertex i, -1 on its diagonal edge.
inline std::vector<RationalVector> example_d0_vectors() {
    const EGraph k4 = g_k4();
    auto make = [&](std::size_t i, std::size_t a, std::size_t b, std::size_t diag) {
        RationalVector v(k4.edge_count(), Rational(0));
        v[*k4.find_edge(i, a)] = 1;
        v[*k4.find_edge(i, b)] = 1;
        v[*k4.find_edge(i, diag)] = -1;
        return v;
    };
    return {make(0, 1, 3, 2), make(1, 0, 2, 3), make(2, 1, 3, 0), make(3, 0, 2, 1)};
}

inline RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

} // namespace fixtures
