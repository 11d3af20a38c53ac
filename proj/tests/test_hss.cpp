#include <doctest.h>

#include "fixtures.hpp"
#include "lpa/error.hpp"
#include "lpa/hss.hpp"
#include "lpa/sweep.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

AdmissiblePair pair_of(const Graph& g, std::vector<std::string> h, std::vector<std::string> s) {
    return {g.to_set(h), g.to_set(s)};
}

}  // namespace

TEST_CASE("hereditary and saturated predicates") {
    const Graph l = fx::line();
    CHECK(is_hereditary(l, l.to_set({"v"})));
    CHECK_FALSE(is_hereditary(l, l.to_set({"u"})));
    CHECK_FALSE(is_saturated(l, l.to_set({"v"})));
    CHECK(is_hereditary_saturated(l, {}));
    CHECK(is_hereditary_saturated(l, l.all()));
}

TEST_CASE("closure of small sets") {
    const Graph l = fx::line();
    CHECK(closure(l, l.to_set({"v"})) == l.all());
    CHECK(closure(l, {}) == VertexSet{});
    const Graph b = fx::breaking();
    CHECK(closure(b, b.to_set({"h"})) == b.to_set({"h"}));
    CHECK_THROWS_AS(closure(l, VertexSet::single(5)), InvalidArgument);
}

TEST_CASE("hereditary saturated sets of the worked examples") {
    const Graph loop = fx::loop();
    CHECK(enumerate_hss(loop) == std::vector<VertexSet>{{}, loop.all()});
    const Graph b = fx::breaking();
    CHECK(enumerate_hss(b) == std::vector<VertexSet>{{}, b.to_set({"h"}), b.all()});
    CHECK_THROWS_AS(enumerate_hss(b, 2), CapExceeded);
    CHECK_THROWS_AS(enumerate_hss(b, 0), InvalidArgument);
}

TEST_CASE("breaking vertices") {
    const Graph b = fx::breaking();
    CHECK(breaking_vertices(b, b.to_set({"h"})) == b.to_set({"w"}));
    CHECK(breaking_vertices(b, {}).empty());
    CHECK_THROWS_AS(breaking_vertices(fx::line(), fx::line().to_set({"v"})), InvalidArgument);
}

TEST_CASE("admissible pairs of the worked examples") {
    const Graph loop = fx::loop();
    CHECK(enumerate_admissible_pairs(loop) == std::vector<AdmissiblePair>{{{}, {}}, {loop.all(), {}}});
    const Graph b = fx::breaking();
    const std::vector<AdmissiblePair> want{
        pair_of(b, {}, {}), pair_of(b, {"h"}, {}), pair_of(b, {"h"}, {"w"}), pair_of(b, {"h", "w"}, {})};
    CHECK(enumerate_admissible_pairs(b) == want);
    CHECK_THROWS_AS(enumerate_admissible_pairs(b, 3), CapExceeded);
}

TEST_CASE("admissibility errors name the violated condition") {
    const Graph l = fx::line();
    CHECK_THROWS_WITH_AS(check_admissible(l, pair_of(l, {"u"}, {})), "H is not hereditary", InvalidArgument);
    CHECK_THROWS_WITH_AS(check_admissible(l, pair_of(l, {"v"}, {})), "H is not saturated", InvalidArgument);
    const Graph b = fx::breaking();
    CHECK_THROWS_WITH_AS(check_admissible(b, pair_of(b, {}, {"w"})), "S is not contained in the breaking vertices of H",
                         InvalidArgument);
    CHECK(is_admissible(b, pair_of(b, {"h"}, {"w"})));
}

TEST_CASE("quotient graphs") {
    const Graph b = fx::breaking();
    SUBCASE("breaking vertex outside S gets a primed copy") {
        const auto q = quotient(b, pair_of(b, {"h"}, {}));
        REQUIRE(q);
        CHECK(q->graph.names() == std::vector<std::string>{"w", "w'"});
        const auto w = q->graph.index("w"), wp = q->graph.index("w'");
        CHECK(q->graph.mult(w, w) == fx::m(1));
        CHECK(q->graph.mult(w, wp) == fx::m(1));
        CHECK(q->graph.kind(wp) == VertexKind::sink);
        CHECK(q->origin[wp] == QuotientVertexOrigin::primed);
        CHECK(q->source_vertex[wp] == b.index("w"));
        CHECK(q->original_index(b.index("w")) == w);
        CHECK_FALSE(q->original_index(b.index("h")));
    }
    SUBCASE("S = B_H leaves a lone loop") {
        const auto q = quotient(b, pair_of(b, {"h"}, {"w"}));
        REQUIRE(q);
        CHECK(q->graph == fx::loop_named("w"));
    }
    SUBCASE("the improper pair has no quotient") { CHECK_FALSE(quotient(b, pair_of(b, {"h", "w"}, {}))); }
    SUBCASE("primed names avoid clashes") {
        const Graph g({"w", "w'", "h"}, {{"w", "h", fx::inf()}, {"w", "w", fx::m(1)}, {"w", "w'", fx::m(1)}});
        const auto q = quotient(g, pair_of(g, {"h"}, {}));
        REQUIRE(q);
        CHECK(q->graph.find("w''"));
    }
}

TEST_CASE("pair lattice join and meet") {
    const Graph b = fx::breaking();
    const PairLattice lat(b);
    const auto h0 = pair_of(b, {"h"}, {}), hw = pair_of(b, {"h"}, {"w"});
    CHECK(lat.meet(hw, h0) == h0);
    CHECK(lat.join(hw, h0) == hw);
    CHECK(lat.covers().size() == 3);
    CHECK(lat.index_of(hw) == 2);
    CHECK_THROWS_AS(lat.index_of(pair_of(b, {}, {"w"})), InvalidArgument);
    CHECK_THROWS_AS(PairLattice::from_pairs({}).join(h0, hw), InvalidArgument);
}

TEST_CASE("hereditary saturated sets, breaking vertices and lattice laws agree with brute force") {
    const std::vector<Multiplicity> mults{fx::m(0), fx::m(1), fx::m(2), fx::inf()};
    for_each_graph(3, mults, [&](const Graph& g) {
        const auto m = oracle::matrix_of(g);
        const auto expect = oracle::hss(m);
        const auto got = enumerate_hss(g);
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            const auto& e = *std::find_if(expect.begin(), expect.end(), [&](const auto& s) {
                VertexSet v;
                for (auto x : s) v.insert(static_cast<VertexId>(x));
                return v == got[i];
            });
            std::set<std::size_t> br;
            breaking_vertices(g, got[i]).for_each([&](VertexId v) { br.insert(v); });
            REQUIRE(br == oracle::breaking(m, e));
        }
        // closure laws on every subset
        for_each_subset(g.all(), [&](VertexSet x) {
            const VertexSet c = closure(g, x);
            REQUIRE(x.subset_of(c));
            REQUIRE(closure(g, c) == c);
            REQUIRE(is_hereditary_saturated(g, c));
            g.all().for_each([&](VertexId v) { REQUIRE(c.subset_of(closure(g, x | VertexSet::single(v)))); });
        });
        // HSS closed under intersection; pair_leq is a partial order
        for (auto a : got) {
            for (auto b : got) REQUIRE(is_hereditary_saturated(g, a & b));
        }
        const auto pairs = enumerate_admissible_pairs(g);
        for (const auto& a : pairs) {
            REQUIRE(pair_leq(a, a));
            for (const auto& b : pairs) {
                if (pair_leq(a, b) && pair_leq(b, a)) REQUIRE(a == b);
            }
        }
        // exit-free cycles by the direct out-degree formula match the quotient graph
        for (const auto& p : pairs) {
            const auto q = quotient(g, p);
            if (!q) continue;
            std::size_t exit_free = 0;
            for (const auto& c : simple_cycles(q->graph)) exit_free += c.has_exit ? 0 : 1;
            REQUIRE(exit_free == exit_free_cycles(g, p).size());
        }
    });
}
