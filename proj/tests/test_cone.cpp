#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "suites.hpp"

using namespace tlocus;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

/// Exact oracle for spans of at most two vectors u, w: the coefficient set
/// {(a,b) : a u_i + b w_i > 0 for all i} is an open wedge in the plane. If it
/// is nonempty, it contains a constraint normal, a boundary ray of some
/// constraint, or the sum of two such rays.
bool planar_positive(const RationalVector& u, const RationalVector& w) {
    std::vector<std::pair<Rational, Rational>> rays;
    for (std::size_t i = 0; i < u.size(); ++i) {
        rays.emplace_back(u[i], w[i]);
        rays.emplace_back(w[i], -u[i]);
        rays.emplace_back(-w[i], u[i]);
    }
    auto inside = [&](const Rational& a, const Rational& b) {
        for (std::size_t i = 0; i < u.size(); ++i)
            if (a * u[i] + b * w[i] <= 0)
                return false;
        return true;
    };
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i; j < rays.size(); ++j)
            if (inside(rays[i].first + (i == j ? Rational(0) : rays[j].first),
                       rays[i].second + (i == j ? Rational(0) : rays[j].second)))
                return true;
    return false;
}

} // namespace

TEST_CASE("worked pairs: cone dimensions") {
    const EGraph cyc = fixtures::g_cyc(), k4 = fixtures::g_k4(), in = fixtures::g_in();
    CHECK(jr_dimension(cyc, in).dim == 1);
    CHECK(jr_dimension(k4, in).dim == 5);
    CHECK(jr_dimension(k4, cyc).dim == 9);
    CHECK(jr_dimension(k4, k4).dim == 9);
    CHECK(hat_jr_dimension(cyc, in) == 1);
    CHECK(hat_jr_dimension(k4, in) == 5);
    CHECK(hat_jr_dimension(k4, cyc) == 9);
    CHECK(hat_jr_dimension(k4, k4) == 9);
    for (const auto& [g1, g] : suites::fixture_pairs()) {
        const ConeResult c = jr_dimension(g1, g);
        CHECK(c.status == ConeStatus::nonempty);
        CHECK(c.dim == c.tilde_dim);
        CHECK(c.tilde_basis.dim() == c.tilde_dim);
        REQUIRE(c.witness.has_value());
        CHECK(is_member_jr(g1, g, *c.witness));
    }
}

TEST_CASE("uniform flux on the cycle realizes on the inward graph") {
    const EdgeVector j = fixtures::ones(8);
    CHECK(is_member_jr(fixtures::g_cyc(), fixtures::g_in(), j));
    // Unbalanced flux fails, and so does a zero entry.
    EdgeVector bad = j;
    bad[0] = 2;
    CHECK_FALSE(is_member_jr(fixtures::g_cyc(), fixtures::g_in(), bad));
    bad[0] = 0;
    CHECK_THROWS_AS(is_member_jr(fixtures::g_cyc(), fixtures::g_in(), bad), DomainError);
}

TEST_CASE("positive points of small subspaces") {
    const PositivePoint diag = positive_point(Subspace::span_of(2, {rv({1, 1})}));
    REQUIRE(diag.feasible());
    CHECK(all_positive(*diag.witness));

    const Subspace anti = Subspace::span_of(2, {rv({1, -1})});
    const PositivePoint none = positive_point(anti);
    CHECK_FALSE(none.feasible());
    REQUIRE(none.certificate.has_value());
    CHECK(certifies_empty(anti, *none.certificate));
    // A certificate must be nonnegative, nonzero and orthogonal.
    CHECK_FALSE(certifies_empty(anti, rv({0, 0})));
    CHECK_FALSE(certifies_empty(anti, rv({1, 0})));
    CHECK_FALSE(certifies_empty(anti, rv({-1, -1})));

    const PositivePoint empty = positive_point(Subspace(3));
    CHECK_FALSE(empty.feasible());
    REQUIRE(empty.certificate.has_value());
    CHECK(certifies_empty(Subspace(3), *empty.certificate));
}

TEST_CASE("property: LP feasibility agrees with a planar oracle") {
    gen::Rng rng(16);
    int feasible = 0;
    for (int t = 0; t < 150; ++t) {
        const std::size_t ambient = static_cast<std::size_t>(gen::uniform(rng, 2, 5));
        const RationalVector u = gen::vector(rng, ambient, -2, 2, 1);
        const RationalVector w = t % 3 == 0 ? zeros(ambient) : gen::vector(rng, ambient, -2, 2, 1);
        const Subspace s = Subspace::span_of(ambient, {u, w});
        const PositivePoint p = positive_point(s);
        if (p.feasible()) {
            ++feasible;
            CHECK(all_positive(*p.witness));
            CHECK(s.contains(*p.witness));
        } else {
            REQUIRE(p.certificate.has_value());
            CHECK(certifies_empty(s, *p.certificate));
        }
        CHECK(planar_positive(u, w) == p.feasible());
    }
    CHECK(feasible > 0);
}

TEST_CASE("openness radius keeps both perturbations positive") {
    gen::Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        const RationalVector j = gen::positive_vector(rng, 6);
        const RationalVector dir = gen::vector(rng, 6, -4, 4);
        const Rational eps = openness_radius(j, dir);
        CHECK(eps > 0);
        RationalVector plus = j, minus = j;
        axpy(plus, eps, dir);
        axpy(minus, -eps, dir);
        CHECK(all_positive(plus));
        CHECK(all_positive(minus));
    }
}

TEST_CASE("membership is open: random hull directions stay inside") {
    gen::Rng rng(20);
    for (const auto& [g1, g] : suites::fixture_pairs()) {
        const ConeResult c = jr_dimension(g1, g);
        for (int t = 0; t < 20; ++t) {
            const RationalVector dir = suites::random_in(rng, c.tilde_basis);
            EdgeVector moved = *c.witness;
            axpy(moved, openness_radius(moved, dir), dir);
            CHECK(is_member_jr(g1, g, moved));
        }
    }
}

TEST_CASE("source graph must be weakly reversible") {
    CHECK_THROWS_AS(jr_subspace(fixtures::g_in(), fixtures::g_k4()), NotWeaklyReversible);
}

TEST_CASE("property: cone results carry verified witnesses or certificates") {
    const suites::Outcome o = suites::cone_certification(60, 77);
    INFO(o.first_failure);
    CHECK(o.passed());
    CHECK(o.positives > 0);
}

TEST_CASE("property: positive balanced flux exists exactly for weakly reversible graphs") {
    const suites::Outcome o = suites::balance_sweep();
    INFO(o.first_failure);
    CHECK(o.passed());
    CHECK(o.trials == 3796);
    CHECK(o.positives > 0);
}
