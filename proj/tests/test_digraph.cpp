#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "nbperc/digraph.hpp"
#include "nbperc/error.hpp"
#include "nbperc/generators.hpp"

using namespace nbperc;
using fixtures::c3;
using fixtures::chord;
using fixtures::k4sym;
using fixtures::p3sym;

namespace {

std::set<std::set<std::uint32_t>> scc_sets(const ComponentLabeling& c) {
    std::vector<std::set<std::uint32_t>> groups(c.count());
    for (std::uint32_t v = 0; v < c.component_of.size(); ++v) groups[c.component_of[v]].insert(v);
    return {groups.begin(), groups.end()};
}

bool strongly_connected_without(const DiGraph& g, ArcId skip) {
    std::vector<Arc> arcs;
    for (ArcId a = 0; a < g.arc_count(); ++a)
        if (a != skip) arcs.push_back(g.arc(a));
    return fixtures::strongly_connected_oracle(fixtures::dense_adjacency(DiGraph(g.vertex_count(), arcs)));
}

}  // namespace

TEST_CASE("parse directed edge list") {
    const DiGraph g = parse_edge_list("0 1\n1 2\n2 0");
    CHECK(g.vertex_count() == 3);
    const std::vector<Arc> expected{{0, 1}, {1, 2}, {2, 0}};
    CHECK(std::vector<Arc>(g.arcs().begin(), g.arcs().end()) == expected);
}

TEST_CASE("parse undirected edge list symmetrizes") {
    const DiGraph g = parse_edge_list("0 1\n1 2", true);
    const std::vector<Arc> expected{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
    CHECK(std::vector<Arc>(g.arcs().begin(), g.arcs().end()) == expected);
}

TEST_CASE("parse rejects self-loops with a line number") {
    try {
        parse_edge_list("0 1\n0 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parse rejects malformed lines and duplicates") {
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("#n 2\n0 5\n"), ParseError);
}

TEST_CASE("parse handles header, comments and blank lines") {
    const DiGraph g = parse_edge_list("#n 6\n# comment\n\n0 1\n  3 4  \n");
    CHECK(g.vertex_count() == 6);
    CHECK(g.arc_count() == 2);
    CHECK(g.has_arc(3, 4));
    CHECK(parse_edge_list("").vertex_count() == 0);
}

TEST_CASE("remapping sparse external ids") {
    std::istringstream in("100 7\n7 42\n");
    ParseOptions opts;
    opts.remap_ids = true;
    const ParsedGraph pg = parse_edge_list(in, opts);
    CHECK(pg.graph.vertex_count() == 3);
    CHECK(pg.external_ids.size() == 3);
    CHECK(pg.graph.arc_count() == 2);
}

TEST_CASE("missing file is a parse error") {
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("serialize and parse round-trip") {
    for (const DiGraph& g : {c3(), chord(), k4sym(), gen_erdos_renyi_digraph(25, 0.2, 3), DiGraph(5, {{4, 1}})}) {
        const DiGraph back = parse_edge_list(serialize_edge_list(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph construction validates arcs") {
    CHECK_THROWS_AS(DiGraph(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(DiGraph(2, {{0, 1}, {0, 1}}), GraphError);
    CHECK_THROWS_AS(DiGraph(2, {{0, 2}}), GraphError);
}

TEST_CASE("adjacency lists and arc lookup") {
    const DiGraph g = chord();
    CHECK(g.out_degree(0) == 2);
    CHECK(g.in_degree(2) == 2);
    CHECK(g.find_arc(0, 2) == ArcId{3});
    CHECK_FALSE(g.find_arc(1, 0).has_value());
    for (VertexId v = 0; v < 3; ++v) {
        for (ArcId a : g.out_arcs(v)) CHECK(g.arc(a).tail == v);
        for (ArcId a : g.in_arcs(v)) CHECK(g.arc(a).head == v);
    }
}

TEST_CASE("strongly connected components on fixtures") {
    CHECK(strongly_connected_components(c3()).sizes == std::vector<std::size_t>{3});
    const auto two = strongly_connected_components(DiGraph(4, {{0, 1}, {2, 3}}));
    CHECK(two.count() == 4);
    CHECK(strongly_connected_components(chord()).count() == 1);
    CHECK(is_strongly_connected(chord()));
    CHECK_FALSE(is_strongly_connected(DiGraph()));
}

TEST_CASE("SCC matches transitive-closure oracle on random digraphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const DiGraph g = gen_erdos_renyi_digraph(3 + seed % 15, 0.05 + 0.01 * static_cast<double>(seed % 20), seed);
        const auto labels = strongly_connected_components(g);
        CHECK(scc_sets(labels) == fixtures::scc_oracle(fixtures::dense_adjacency(g)));
        // sources first: every arc between components goes forward in the order
        std::vector<std::size_t> position(labels.count());
        for (std::size_t i = 0; i < labels.topological_order.size(); ++i) position[labels.topological_order[i]] = i;
        for (const Arc& a : g.arcs()) {
            const auto cu = labels.component_of[a.tail], cv = labels.component_of[a.head];
            if (cu != cv) CHECK(position[cu] < position[cv]);
        }
    }
}

TEST_CASE("induced subgraph") {
    const auto all = induced_subgraph(c3(), make_vertex_mask(3, std::vector<VertexId>{0, 1, 2}));
    CHECK(all.graph == c3());
    const auto part = induced_subgraph(c3(), make_vertex_mask(3, std::vector<VertexId>{0, 2}));
    CHECK(part.graph.vertex_count() == 2);
    REQUIRE(part.graph.arc_count() == 1);
    const Arc a = part.graph.arc(0);
    CHECK(part.original_id[a.tail] == 2);
    CHECK(part.original_id[a.head] == 0);
    const auto none = induced_subgraph(k4sym(), std::vector<std::uint8_t>(4, 0));
    CHECK(none.graph.vertex_count() == 0);
    CHECK(none.graph.arc_count() == 0);
}

TEST_CASE("symmetric arc pairs") {
    CHECK(symmetric_arc_pairs(c3()).empty());
    CHECK(symmetric_arc_pairs(p3sym()).size() == 2);
    const auto pairs = symmetric_arc_pairs(chord());
    REQUIRE(pairs.size() == 1);
    const Arc a = chord().arc(pairs[0].first), b = chord().arc(pairs[0].second);
    CHECK(a.tail == b.head);
    CHECK(a.head == b.tail);
    CHECK(std::set<VertexId>{a.tail, a.head} == std::set<VertexId>{0, 2});
    CHECK(symmetric_arc_pairs(k4sym()).size() == 6);
}

TEST_CASE("robust strong connectivity on fixtures") {
    CHECK(is_robustly_strongly_connected(k4sym()));
    CHECK_FALSE(is_robustly_strongly_connected(chord()));
    CHECK(is_robustly_strongly_connected(c3()));
    CHECK_FALSE(is_robustly_strongly_connected(p3sym()));
    CHECK_FALSE(is_robustly_strongly_connected(DiGraph(4, {{0, 1}, {1, 0}})));
}

TEST_CASE("strong bridges match brute-force deletion") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 40 && seed < 2000; ++seed) {
        const std::size_t n = 3 + seed % 10;
        const DiGraph g = gen_erdos_renyi_digraph(n, 0.25 + 0.05 * static_cast<double>(seed % 6), seed);
        if (!is_strongly_connected(g)) continue;
        ++checked;
        std::set<ArcId> expected;
        for (ArcId a = 0; a < g.arc_count(); ++a)
            if (!strongly_connected_without(g, a)) expected.insert(a);
        const auto found = strong_bridges(g);
        CHECK(std::set<ArcId>(found.begin(), found.end()) == expected);

        bool robust = true;
        for (ArcId a : expected)
            if (g.has_arc(g.arc(a).head, g.arc(a).tail)) robust = false;
        CHECK(is_robustly_strongly_connected(g) == robust);
    }
    CHECK(checked == 40);
}
