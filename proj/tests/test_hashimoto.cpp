#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "nbperc/error.hpp"
#include "nbperc/generators.hpp"
#include "nbperc/hashimoto.hpp"

using namespace nbperc;
using fixtures::c3;
using fixtures::chord;
using fixtures::k4sym;
using fixtures::p3sym;

namespace {

ArcId arc_id(const DiGraph& g, VertexId t, VertexId h) { return *g.find_arc(t, h); }

std::set<ArcId> successor_set(const HashimotoOperator& h, ArcId u) {
    return {h.successors(u).begin(), h.successors(u).end()};
}

}  // namespace

TEST_CASE("C3 operator is a 3-cycle permutation") {
    const DiGraph g = c3();
    const HashimotoOperator h(g);
    CHECK(h.dimension() == 3);
    for (ArcId u = 0; u < 3; ++u) {
        REQUIRE(h.successors(u).size() == 1);
        CHECK(g.arc(h.successors(u)[0]).tail == g.arc(u).head);
    }
}

TEST_CASE("P3sym successor lists") {
    const DiGraph g = p3sym();
    const HashimotoOperator h(g);
    CHECK(successor_set(h, arc_id(g, 0, 1)) == std::set<ArcId>{arc_id(g, 1, 2)});
    CHECK(successor_set(h, arc_id(g, 2, 1)) == std::set<ArcId>{arc_id(g, 1, 0)});
    CHECK(h.successors(arc_id(g, 1, 0)).empty());
    CHECK(h.successors(arc_id(g, 1, 2)).empty());
}

TEST_CASE("CHORD arc (0,2) is isolated in the operator") {
    const DiGraph g = chord();
    const HashimotoOperator h(g);
    const ArcId a = arc_id(g, 0, 2);
    CHECK(h.successors(a).empty());
    CHECK(h.predecessors(a).empty());
}

TEST_CASE("operator matches the dense definition") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const DiGraph g = gen_erdos_renyi_digraph(2 + seed % 9, 0.35, seed);
        const HashimotoOperator h(g);
        const auto dense = fixtures::dense_hashimoto(g);
        std::size_t total = 0;
        for (ArcId u = 0; u < h.dimension(); ++u) {
            std::set<ArcId> expected;
            for (ArcId v = 0; v < h.dimension(); ++v)
                if (dense[u][v]) expected.insert(v);
            CHECK(successor_set(h, u) == expected);
            for (ArcId v : h.predecessors(u)) CHECK(dense[v][u] == 1);
            total += expected.size();

            const Arc a = g.arc(u);
            const std::size_t back = g.has_arc(a.head, a.tail) ? 1 : 0;
            CHECK(h.successors(u).size() == g.out_degree(a.head) - back);
            CHECK(h.predecessors(u).size() == g.in_degree(a.tail) - (g.has_arc(a.head, a.tail) ? 1 : 0));
        }
        CHECK(h.stored_pairs() == total);
    }
}

TEST_CASE("oriented line graph") {
    const DiGraph olg3 = build_olg(c3());
    CHECK(olg3.vertex_count() == 3);
    CHECK(olg3.arc_count() == 3);
    CHECK(is_strongly_connected(olg3));

    const DiGraph olg = build_olg(k4sym());
    CHECK(olg.vertex_count() == 12);
    for (VertexId v = 0; v < 12; ++v) CHECK(olg.out_degree(v) == 2);
    CHECK(is_strongly_connected(olg));

    CHECK_FALSE(is_strongly_connected(build_olg(chord())));
}

TEST_CASE("matrix-free application") {
    const DiGraph g = c3();
    const HashimotoOperator h(g);
    std::vector<double> e(3, 0.0);
    e[arc_id(g, 0, 1)] = 1.0;
    const auto y = nbperc::apply(h, e);
    std::vector<double> expected(3, 0.0);
    expected[arc_id(g, 1, 2)] = 1.0;
    CHECK(y == expected);

    const DiGraph p = p3sym();
    const HashimotoOperator hp(p);
    const auto yp = nbperc::apply(hp, std::vector<double>(4, 1.0));
    CHECK(yp[arc_id(p, 1, 2)] == 1.0);
    CHECK(yp[arc_id(p, 1, 0)] == 1.0);
    CHECK(yp[arc_id(p, 0, 1)] == 0.0);
    CHECK(yp[arc_id(p, 2, 1)] == 0.0);

    const HashimotoOperator hk(k4sym());
    CHECK(nbperc::apply(hk, std::vector<double>(12, 0.0)) == std::vector<double>(12, 0.0));
    CHECK_THROWS_AS(nbperc::apply(hk, std::vector<double>(5, 0.0)), DimensionError);
    CHECK_THROWS_AS(apply_transpose(hk, std::vector<double>(5, 0.0)), DimensionError);
}

TEST_CASE("apply and apply_transpose are adjoint") {
    const DiGraph g = gen_erdos_renyi_digraph(12, 0.3, 5);
    const HashimotoOperator h(g);
    std::vector<double> x(h.dimension()), y(h.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = static_cast<double>(i % 7) - 3.0;
        y[i] = static_cast<double>((i * 5) % 11);
    }
    const auto xh = nbperc::apply(h, x);
    const auto hy = apply_transpose(h, y);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        lhs += xh[i] * y[i];
        rhs += x[i] * hy[i];
    }
    CHECK(lhs == doctest::Approx(rhs));
}

TEST_CASE("trace powers on fixtures") {
    const HashimotoOperator h3(c3());
    CHECK(trace_power(h3, 3) == 3);
    CHECK(trace_power(h3, 1) == 0);
    CHECK(trace_power(h3, 2) == 0);
    const HashimotoOperator hk(k4sym());
    CHECK(trace_power(hk, 3) == 24);
    CHECK(trace_power(hk, 2) == 0);
    CHECK_THROWS_AS(trace_power(hk, 0), DomainError);
}

TEST_CASE("traces match dense matrix powers and brute-force walks") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const DiGraph g = gen_erdos_renyi_digraph(3 + seed % 5, 0.45, 100 + seed);
        const HashimotoOperator h(g);
        const auto traces = trace_powers(h, 8);
        const auto dense = fixtures::dense_traces(g, 8);
        CHECK(traces == dense);
        for (std::size_t s = 1; s <= 8; ++s) CHECK(traces[s - 1] == fixtures::closed_nb_walks(g, s));
        CHECK(traces[1] == 0);
    }
}

TEST_CASE("trace cap and overflow") {
    const DiGraph g = k4sym();
    const HashimotoOperator h(g);
    TraceOptions small;
    small.arc_cap = 4;
    CHECK_THROWS_AS(trace_power(h, 3, small), CapExceededError);

    // K6sym has rho(H) = 4, so Tr H^s ~ 4^s outgrows 128 bits before s = 70
    const DiGraph k6 = gen_complete_sym(6);
    const HashimotoOperator h6(k6);
    try {
        trace_powers(h6, 70);
        FAIL("expected overflow");
    } catch (const OverflowError& e) {
        CHECK(e.power() > 60);
        CHECK(e.power() <= 70);
    }
}

TEST_CASE("trace computation is independent of thread count") {
    const DiGraph g = gen_erdos_renyi_digraph(20, 0.2, 9);
    const HashimotoOperator h(g);
    TraceOptions one, many;
    one.threads = 1;
    many.threads = 4;
    CHECK(trace_powers(h, 12, one) == trace_powers(h, 12, many));
}

TEST_CASE("128-bit counts format as decimal") {
    CHECK(to_string(TraceCount{0}) == "0");
    CHECK(to_string(TraceCount{24}) == "24");
    const TraceCount big = TraceCount{1} << 100;
    CHECK(to_string(big) == "1267650600228229401496703205376");
}
