#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlocus/equiv.hpp"
#include "tlocus/exactla.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace tlocus;

namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RationalVector> out;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        RationalVector v;
        for (long x : r)
            v.push_back(Rational(x));
        cols = v.size();
        out.push_back(v);
    }
    return RationalMatrix::from_rows(out, cols);
}

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::vector<RationalVector> rows_of(const RationalMatrix& m) {
    std::vector<RationalVector> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(m.row(r));
    return out;
}

} // namespace

TEST_CASE("rank examples") {
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
    const EGraph k4 = fixtures::g_k4();
    std::vector<RationalVector> reactions;
    for (std::size_t e = 0; e < k4.edge_count(); ++e)
        reactions.push_back(k4.reaction_vector(e));
    CHECK(rank(RationalMatrix::from_rows(reactions, 2)) == 2);
    CHECK(rank(RationalMatrix(0, 4)) == 0);
}

TEST_CASE("kernel examples") {
    const Subspace k = kernel_basis(mat({{1, 1}}));
    REQUIRE(k.dim() == 1);
    CHECK(k[0] == vec({1, -1}));
    CHECK(kernel_basis(mat({{2, 1}, {1, 1}})).dim() == 0);
    CHECK(kernel_basis(d0_constraints(fixtures::g_k4())).dim() == 4);
}

TEST_CASE("solve_particular examples") {
    CHECK(solve_particular(RationalMatrix::identity(2), vec({3, 4})) == vec({3, 4}));
    const auto x = solve_particular(mat({{1, 1}}), vec({2}));
    REQUIRE(x);
    CHECK(mat({{1, 1}}) * *x == vec({2}));
    CHECK_FALSE(solve_particular(mat({{1}, {0}}), vec({0, 1})));
}

TEST_CASE("orthogonalize examples") {
    const Subspace s = Subspace::from_independent(2, {vec({1, 1}), vec({1, 0})});
    const Subspace o = orthogonalize(s);
    CHECK(o[0] == vec({1, 1}));
    CHECK(o[1] == vec({Rational(1, 2), Rational(-1, 2)}));

    const Subspace already = Subspace::from_independent(3, {vec({1, 0, 0}), vec({0, 2, 1})});
    CHECK(orthogonalize(already) == already);

    const auto v = fixtures::example_d0_vectors();
    const Subspace triple = Subspace::from_independent(12, {v[0] + v[1], v[0] - v[2], v[0] + v[3]});
    const Subspace oj = orthogonalize(triple);
    CHECK(oj.dim() == 3);
    for (std::size_t i = 0; i < oj.dim(); ++i)
        for (std::size_t j = 0; j < oj.dim(); ++j)
            CHECK((dot(oj[i], oj[j]) == 0) == (i != j));
    CHECK(oj.same_span(triple));
    CHECK(oj.same_span(j0_basis(fixtures::g_k4())));
}

TEST_CASE("coords_in_basis examples") {
    CHECK(coords_in_basis(vec({2, 2}), Subspace::from_independent(2, {vec({1, 1})})) == vec({2}));
    CHECK(coords_in_basis(vec({1, -1}), Subspace::from_independent(2, {vec({1, 1})})) == vec({0}));
    const Subspace b = Subspace::from_independent(3, {vec({1, 1, 0}), vec({1, -1, 2})});
    const RationalVector v = Rational(3) * b[0] + Rational(5) * b[1];
    CHECK(coords_in_basis(v, b) == vec({3, 5}));
}

TEST_CASE("determinant") {
    CHECK(determinant(mat({{2, 1}, {1, 1}})) == 1);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(RationalMatrix(0, 0)) == 1);
}

TEST_CASE("property: rank-nullity and kernel vectors") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        const std::size_t c = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < r; ++i)
            rows.push_back(gen::vector(rng, c, -3, 3, 3));
        // Make some rows dependent so low ranks appear.
        if (r > 2 && trial % 2 == 0)
            rows[r - 1] = rows[0] + Rational(2) * rows[1];
        const RationalMatrix m = RationalMatrix::from_rows(rows, c);
        const std::size_t rk = rank(m);
        CHECK(rk == oracle::rank(rows));
        const Subspace k = kernel_basis(m);
        CHECK(rk + k.dim() == c);
        for (const auto& x : k.basis())
            CHECK(is_zero(m * x));
    }
}

TEST_CASE("property: solve_particular substitution and consistency") {
    gen::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
        const std::size_t c = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < r; ++i)
            rows.push_back(gen::vector(rng, c, -2, 2, 2));
        const RationalMatrix m = RationalMatrix::from_rows(rows, c);
        const RationalVector b = trial % 2 ? gen::vector(rng, r, -3, 3, 2) : m * gen::vector(rng, c, -3, 3, 2);
        std::vector<RationalVector> augmented = rows;
        for (std::size_t i = 0; i < r; ++i)
            augmented[i].push_back(b[i]);
        const bool consistent = oracle::rank(augmented) == oracle::rank(rows);
        const auto x = solve_particular(m, b);
        CHECK(x.has_value() == consistent);
        if (x)
            CHECK(m * *x == b);
    }
}

TEST_CASE("property: orthogonalize and projection residual") {
    gen::Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 6));
        const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<long>(n)));
        std::vector<RationalVector> vs;
        for (std::size_t i = 0; i < k; ++i)
            vs.push_back(gen::vector(rng, n, -3, 3, 2));
        const Subspace s = Subspace::span_of(n, vs);
        const Subspace o = orthogonalize(s);
        CHECK(o.same_span(s));
        std::vector<RationalVector> stacked = s.basis();
        for (const auto& b : o.basis())
            stacked.push_back(b);
        CHECK(oracle::rank(stacked) == s.dim());
        for (std::size_t i = 0; i < o.dim(); ++i) {
            CHECK(dot(o[i], o[i]) > 0);
            for (std::size_t j = i + 1; j < o.dim(); ++j)
                CHECK(dot(o[i], o[j]) == 0);
        }
        const RationalVector v = gen::vector(rng, n, -4, 4, 3);
        const RationalVector residual = v - combine(o, coords_in_basis(v, o));
        for (const auto& b : o.basis())
            CHECK(dot(residual, b) == 0);
    }
}

TEST_CASE("rationals: parsing and best approximation") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(best_rational_approximation(2.0 / 3.0, Integer(1000)) == Rational(2, 3));
    CHECK(best_rational_approximation(3.14159265358979, Integer(1000)) == Rational(355, 113));
    CHECK(from_double(0.5) == Rational(1, 2));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}
