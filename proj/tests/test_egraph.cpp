#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlocus/egraph.hpp"
#include "tlocus/enumerate.hpp"
#include "tlocus/io.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace tlocus;

namespace {

GraphErrorKind parse_error_kind(const std::string& text) {
    try {
        parse_egraph(text);
    } catch (const GraphError& e) {
        return e.kind();
    }
    FAIL("expected a GraphError");
    return GraphErrorKind::malformed;
}

EGraph pair_graph() {
    return EGraph(1, {{Rational(0)}, {Rational(1)}}, {{0, 1}, {1, 0}});
}

} // namespace

TEST_CASE("parse: fixture round trip") {
    const EGraph in = fixtures::g_in();
    const EGraph parsed = parse_egraph(canonical_graph_text(in));
    CHECK(parsed == in);
    CHECK(parsed.vertex_count() == 5);
    CHECK(parsed.edge_count() == 4);
    CHECK(canonical_graph_text(in) ==
          R"({"n":2,"vertices":[[0,0],[1,0],[1,1],[0,1],["1/2","1/2"]],"edges":[[0,4],[1,4],[2,4],[3,4]]})");
}

TEST_CASE("parse: validation errors name the offence") {
    CHECK(parse_error_kind(R"({"n":1,"vertices":[[0],[1]],"edges":[[0,0],[0,1]]})") == GraphErrorKind::self_loop);
    CHECK(parse_error_kind(R"({"n":1,"vertices":[[0],[0]],"edges":[[0,1]]})") == GraphErrorKind::duplicate_vertex);
    CHECK(parse_error_kind(R"({"n":1,"vertices":[[0],[1]],"edges":[[0,1],[0,1]]})") ==
          GraphErrorKind::duplicate_edge);
    CHECK(parse_error_kind(R"({"n":1,"vertices":[[0],[1],[2]],"edges":[[0,1]]})") ==
          GraphErrorKind::isolated_vertex);
    CHECK(parse_error_kind(R"({"n":2,"vertices":[[0],[1]],"edges":[[0,1]]})") ==
          GraphErrorKind::dimension_mismatch);
    CHECK(parse_error_kind(R"({"n":1,"vertices":[[0],[1]],"edges":[[0,5]]})") ==
          GraphErrorKind::index_out_of_range);
    CHECK_THROWS_AS(parse_egraph("{\"n\":1,"), ParseError);
    CHECK_THROWS_AS(parse_egraph(R"({"n":1,"vertices":[["2/4"],[1]],"edges":[[0,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_egraph(R"({"n":1,"vertices":[[0.5],[1]],"edges":[[0,1]]})"), ParseError);
    try {
        parse_egraph(R"({"n":1,"vertices":[[0],[1]],"edges":[[0,1],[1,1]]})");
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("edge 1") != std::string::npos);
    }
}

TEST_CASE("linkage classes") {
    CHECK(linkage_classes(fixtures::g_k4()) == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
    CHECK(linkage_classes(fixtures::g_cyc()).size() == 1);
    const EGraph two(1, {{Rational(0)}, {Rational(1)}, {Rational(3)}, {Rational(4)}}, {{0, 1}, {2, 3}});
    CHECK(linkage_classes(two) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
}

TEST_CASE("weak reversibility examples") {
    CHECK(is_weakly_reversible(fixtures::g_cyc()));
    CHECK_FALSE(is_weakly_reversible(fixtures::g_in()));
    CHECK(is_weakly_reversible(fixtures::g_k4()));
}

TEST_CASE("complete graph") {
    CHECK(complete_graph(fixtures::g_cyc()) == fixtures::g_k4());
    CHECK(complete_graph(fixtures::g_k4()) == fixtures::g_k4());
    const EGraph single(1, {{Rational(0)}, {Rational(1)}}, {{0, 1}});
    CHECK(complete_graph(single) == pair_graph());
}

TEST_CASE("stoichiometric dimension") {
    CHECK(stoich_dim(fixtures::g_k4()) == 2);
    CHECK(stoich_dim(fixtures::g_cyc()) == 2);
    const EGraph diag(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}, {{0, 1}});
    CHECK(stoich_dim(diag) == 1);
}

TEST_CASE("enumeration examples") {
    CHECK(enumerate_wr_subgraphs(pair_graph()).size() == 1);
    // Independent count: networkx SCC filter over all 2^12 subsets.
    CHECK(wr_subgraph_masks(fixtures::g_k4()).size() == 1687);
    CHECK(enumerate_wr_subgraphs(fixtures::g_in()).empty());
    CHECK(wr_subgraph_masks(fixtures::g_k4(), 10).size() == 10);
}

TEST_CASE("enumeration limits") {
    std::vector<RationalVector> pts;
    for (long i = 0; i < 6; ++i)
        pts.push_back({Rational(i)});
    const EGraph k6 = gen::complete_on(1, pts); // 30 edges
    CHECK_THROWS_AS(wr_subgraph_masks(k6), EnumerationLimitError);
    CHECK(wr_subgraph_masks(k6, 5).size() == 5);
    CHECK(wr_subgraph_masks_serial(k6, 5) == wr_subgraph_masks(k6, 5));
}

TEST_CASE("property: weak reversibility matches all-pairs reachability") {
    gen::Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen::uniform(rng, 2, 6));
        const EGraph g = gen::graph(rng, m, 2, 3, trial % 3 == 0 ? 0.6 : 0.3);
        CHECK(is_weakly_reversible(g) == oracle::weakly_reversible(g));
    }
}

TEST_CASE("property: complete graph idempotent and a supergraph") {
    gen::Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const EGraph g = gen::graph(rng, static_cast<std::size_t>(gen::uniform(rng, 2, 5)), 2, 3);
        const EGraph c = complete_graph(g);
        CHECK(complete_graph(c) == c);
        for (const auto& e : g.edges())
            CHECK(c.find_edge(e.source, e.target).has_value());
        CHECK(stoich_dim(g) <= std::min(g.dim(), g.edge_count()));
    }
}

TEST_CASE("property: enumeration matches an independent subset filter") {
    gen::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const EGraph g = gen::graph(rng, 4, 2, 2, 0.8);
        if (g.edge_count() > 12)
            continue;
        std::vector<std::uint64_t> expected;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.edge_count()); ++mask)
            if (oracle::weakly_reversible(g.subgraph(mask)))
                expected.push_back(mask);
        CHECK(wr_subgraph_masks(g) == expected);
        CHECK(wr_subgraph_masks_serial(g) == expected);
        for (const auto& sub : enumerate_wr_subgraphs(g, 20))
            CHECK(is_weakly_reversible(sub));
    }
}

TEST_CASE("json round trip for graphs and vectors") {
    gen::Rng rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RationalVector> pts;
        for (const auto& p : gen::points(rng, 3, 2, 4))
            pts.push_back({p[0] / 2, p[1] / 3});
        const EGraph g(2, pts, {{0, 1}, {1, 2}, {2, 0}});
        CHECK(parse_egraph(canonical_graph_text(g)) == g);
        const EdgeVector w = gen::vector(rng, 3, -5, 5, 7);
        CHECK(parse_edge_vector(edge_vector_json(g, w), g) == w);
    }
    const Json doc = edge_vector_json(fixtures::g_k4(), fixtures::ones(12));
    CHECK_THROWS_AS(parse_edge_vector(doc, fixtures::g_cyc()), HashMismatch);
    Json short_doc = edge_vector_json(fixtures::g_cyc(), fixtures::ones(8));
    short_doc["values"].erase(0);
    CHECK_THROWS_AS(parse_edge_vector(short_doc, fixtures::g_cyc()), DimensionMismatch);
    CHECK(graph_hash(fixtures::g_k4()).size() == 16);
    CHECK(graph_hash(fixtures::g_k4()) != graph_hash(fixtures::g_cyc()));
}
