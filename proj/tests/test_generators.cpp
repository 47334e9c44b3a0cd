#include <doctest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "nbperc/error.hpp"
#include "nbperc/generators.hpp"

using namespace nbperc;

namespace {

bool symmetric(const DiGraph& g) {
    for (const Arc& a : g.arcs())
        if (!g.has_arc(a.head, a.tail)) return false;
    return true;
}

std::set<std::pair<VertexId, VertexId>> arc_set(const DiGraph& g) {
    std::set<std::pair<VertexId, VertexId>> s;
    for (const Arc& a : g.arcs()) s.insert({a.tail, a.head});
    return s;
}

}  // namespace

TEST_CASE("deterministic families") {
    CHECK(gen_cycle(3) == fixtures::c3());
    CHECK(gen_complete_sym(4).arc_count() == 12);
    CHECK(gen_complete_sym(4) == fixtures::k4sym());
    const DiGraph star = gen_star_sym(3);
    CHECK(star.arc_count() == 6);
    CHECK(star.out_degree(0) == 3);
    CHECK(gen_path_sym(3) == fixtures::p3sym());
    CHECK_THROWS_AS(gen_cycle(2), DomainError);
    CHECK_THROWS_AS(gen_complete_sym(1), DomainError);
    CHECK_THROWS_AS(gen_star_sym(0), DomainError);
}

TEST_CASE("random regular graphs") {
    const DiGraph two = gen_random_regular_sym(6, 2, 3);
    CHECK(two.arc_count() == 12);
    CHECK(symmetric(two));
    for (VertexId v = 0; v < 6; ++v) CHECK(two.out_degree(v) == 2);

    const DiGraph g = gen_random_regular_sym(10000, 3, 7);
    CHECK(g.arc_count() == 30000);
    CHECK(symmetric(g));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(g.out_degree(v) == 3);
        CHECK(g.in_degree(v) == 3);
    }
    CHECK(gen_random_regular_sym(200, 4, 1) == gen_random_regular_sym(200, 4, 1));
    CHECK_FALSE(gen_random_regular_sym(200, 4, 1) == gen_random_regular_sym(200, 4, 2));
    CHECK_THROWS_AS(gen_random_regular_sym(5, 3, 1), DomainError);
    CHECK_THROWS_AS(gen_random_regular_sym(4, 4, 1), DomainError);
    CHECK(arc_set(gen_random_regular_sym(4, 3, 1)) == arc_set(fixtures::k4sym()));
}

TEST_CASE("Erdos-Renyi digraphs") {
    CHECK(gen_erdos_renyi_digraph(10, 0.0, 1).arc_count() == 0);
    CHECK(gen_erdos_renyi_digraph(6, 1.0, 1) == gen_complete_sym(6));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const double m = static_cast<double>(gen_erdos_renyi_digraph(30, 0.1, seed).arc_count());
        CHECK(std::abs(m - 87.0) <= 4.0 * std::sqrt(870 * 0.1 * 0.9));
    }
    CHECK(gen_erdos_renyi_digraph(30, 0.1, 5) == gen_erdos_renyi_digraph(30, 0.1, 5));
    CHECK_THROWS_AS(gen_erdos_renyi_digraph(5, 1.5, 1), DomainError);
}

TEST_CASE("random trees") {
    CHECK(gen_random_tree_sym(1, 1).arc_count() == 0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DiGraph t3 = gen_random_tree_sym(3, seed);
        CHECK(t3.arc_count() == 4);
        bool path_shape = false;
        for (VertexId v = 0; v < 3; ++v) path_shape |= t3.out_degree(v) == 2;
        CHECK(path_shape);

        const std::size_t n = 10 + 50 * seed;
        const DiGraph t = gen_random_tree_sym(n, seed);
        CHECK(t.arc_count() == 2 * (n - 1));
        CHECK(symmetric(t));
        CHECK(is_strongly_connected(t));
    }
    CHECK(gen_random_tree_sym(100, 9) == gen_random_tree_sym(100, 9));
}
