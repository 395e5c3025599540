#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "hyperphase/components.hpp"
#include "hyperphase/errors.hpp"

using namespace hyperphase;

namespace {

Hypergraph make(const Params& p, std::vector<Edge> edges) {
    return Hypergraph::from_edges(p, std::move(edges));
}

std::vector<JSetRank> ranks_of(const Params& p, const std::vector<JSet>& sets) {
    std::vector<JSetRank> out;
    for (const auto& s : sets) out.push_back(rank_jset(s, p));
    std::sort(out.begin(), out.end());
    return out;
}

struct ScopedEnv {
    ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
    ~ScopedEnv() { unsetenv(name_); }
    const char* name_;
};

}  // namespace

TEST_CASE("DisjointSets construction") {
    CHECK(DisjointSets(Params{3, 2, 4}).num_sets_remaining() == 6);
    CHECK(DisjointSets(Params{3, 1, 10}).num_sets_remaining() == 10);
    DisjointSets d(Params{4, 3, 10});
    CHECK(d.num_jsets() == 120);
    CHECK(d.num_sets_remaining() == 120);
    CHECK(d.untouched_count() == 120);
    CHECK(d.edges_applied() == 0);
}

TEST_CASE("memory guardrail names the cap") {
    ScopedEnv env("HYPERPHASE_MAX_JSETS", "100");
    CHECK(max_jsets() == 100);
    try {
        DisjointSets d(Params{4, 3, 10});
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("100") != std::string::npos);
    }
    CHECK_NOTHROW(DisjointSets(Params{3, 2, 14}));  // C(14,2) = 91
}

TEST_CASE("default guardrail refuses oversized instances") {
    CHECK(max_jsets() == kDefaultMaxJSets);
    CHECK_THROWS_AS(DisjointSets(Params{4, 3, 2000}), ResourceError);  // C(2000,3) ~ 1.33e9
}

TEST_CASE("apply_edge merges, marks and is idempotent") {
    const Params p{3, 2, 4};
    DisjointSets d(p);
    CHECK(d.apply_edge(Edge{1, 2, 3}) == 2);
    CHECK(d.num_sets_remaining() == 4);
    CHECK(d.apply_edge(Edge{1, 2, 3}) == 0);
    CHECK(d.num_sets_remaining() == 4);
    CHECK(d.apply_edge(Edge{2, 3, 4}) == 2);
    CHECK(d.num_sets_remaining() == 2);
    // Walk closure by hand: {1,2,3} and {2,3,4} share {2,3}.
    const JSetRank r12 = rank_jset(JSet{1, 2}, p);
    for (const JSet& s : {JSet{1, 3}, JSet{2, 3}, JSet{2, 4}, JSet{3, 4}}) {
        CHECK(d.find(rank_jset(s, p)) == d.find(r12));
        CHECK(d.touched(rank_jset(s, p)));
    }
    CHECK(d.component_size(r12) == 5);
    CHECK_FALSE(d.touched(rank_jset(JSet{1, 4}, p)));
    CHECK(d.untouched_count() == 1);
    CHECK_THROWS_AS(d.apply_edge(Edge{1, 2}), ValidationError);
    CHECK_THROWS_AS(d.apply_edge(Edge{1, 2, 5}), ValidationError);
}

TEST_CASE("component_summary examples") {
    SUBCASE("single edge on n = k") {
        const auto s = component_summary(make(Params{3, 2, 3}, {{1, 2, 3}}));
        CHECK(s.largest == 3);
        CHECK(s.second == 0);
        CHECK(s.isolated_count == 0);
        CHECK(s.num_nontrivial == 1);
        CHECK(s.is_j_connected);
    }
    SUBCASE("two disjoint triples") {
        const auto h = make(Params{3, 2, 6}, {{1, 2, 3}, {4, 5, 6}});
        const auto s = component_summary(h);
        CHECK(s.largest == 3);
        CHECK(s.second == 3);
        CHECK(s.isolated_count == 9);
        CHECK(s.num_nontrivial == 2);
        CHECK_FALSE(s.is_j_connected);
        CHECK(bfs_components(h) == dsu_components(h));
        // Equal sizes: L1 is the component holding rank 0 ({1,2}).
        CHECK(s.largest_min_rank == 0);
    }
    SUBCASE("edges meeting in one vertex stay apart for j = 2") {
        const auto h = make(Params{3, 2, 5}, {{1, 2, 3}, {3, 4, 5}});
        const auto s = component_summary(h);
        CHECK(s.largest == 3);
        CHECK(s.second == 3);
        CHECK(s.num_nontrivial == 2);
        const auto oracle = bfs_components(h);
        REQUIRE(oracle.size() == 2);
        CHECK(oracle[0].size() == 3);
        CHECK(oracle[1].size() == 3);
        CHECK(oracle == dsu_components(h));
    }
    SUBCASE("same edges merge for j = 1") {
        const auto s = component_summary(make(Params{3, 1, 5}, {{1, 2, 3}, {3, 4, 5}}));
        CHECK(s.largest == 5);
        CHECK(s.is_j_connected);
    }
    SUBCASE("no edges") {
        const auto s = component_summary(make(Params{3, 2, 7}, {}));
        CHECK(s.largest == 0);
        CHECK(s.num_nontrivial == 0);
        CHECK(s.isolated_count == 21);
        CHECK_FALSE(s.is_j_connected);
    }
}

TEST_CASE("bfs_components on the two-edge example and trivial instances") {
    const Params p{3, 2, 4};
    const auto h = make(p, {{1, 2, 3}, {2, 3, 4}});
    const auto comps = bfs_components(h);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == ranks_of(p, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(comps == dsu_components(h));

    CHECK(bfs_components(make(Params{4, 2, 8}, {})).empty());

    for (const Params q : {Params{3, 1, 7}, Params{3, 2, 7}, Params{4, 2, 8}, Params{4, 3, 8}}) {
        const Hypergraph full = sample_binomial(q, 1.0, 0);
        const auto c = bfs_components(full);
        REQUIRE(c.size() == 1);
        CHECK(c[0].size() == q.num_jsets());
        CHECK(component_summary(full).is_j_connected);
    }
    CHECK_THROWS_AS(bfs_components(make(Params{3, 2, 200}, {})), ResourceError);
}

TEST_CASE("bfs_explore examples") {
    const Params p{3, 2, 4};
    const auto h = make(p, {{1, 2, 3}, {2, 3, 4}});
    SUBCASE("full exploration") {
        const auto rec = bfs_explore(h, JSet{1, 2}, 10);
        REQUIRE(rec.generations.size() == 3);
        CHECK(rec.generations[0] == std::vector<JSet>{{1, 2}});
        CHECK(rec.generations[1] == std::vector<JSet>{{1, 3}, {2, 3}});
        CHECK(rec.generations[2] == std::vector<JSet>{{2, 4}, {3, 4}});
        CHECK(rec.boundary() == rec.generations[2]);
        CHECK(rec.exhausted);
    }
    SUBCASE("isolated start") {
        const auto rec = bfs_explore(h, JSet{1, 4}, 10);
        CHECK(rec.generations == std::vector<std::vector<JSet>>{{{1, 4}}});
        CHECK(rec.boundary() == std::vector<JSet>{{1, 4}});
        CHECK(rec.exhausted);
    }
    SUBCASE("zero generations") {
        const auto rec = bfs_explore(h, JSet{1, 2}, 0);
        CHECK(rec.generations.size() == 1);
        CHECK_FALSE(rec.exhausted);
        CHECK(bfs_explore(h, JSet{1, 4}, 0).exhausted);
    }
    SUBCASE("truncated after one generation") {
        const auto rec = bfs_explore(h, JSet{1, 2}, 1);
        CHECK(rec.generations.size() == 2);
        CHECK_FALSE(rec.exhausted);
    }
    CHECK_THROWS_AS(bfs_explore(h, JSet{2, 1}, 3), ValidationError);
}

TEST_CASE("DSU partition equals the BFS oracle on 200+ random instances") {
    std::mt19937_64 gen(2024);
    int instances = 0;
    for (int round = 0; round < 45; ++round) {
        for (int k : {3, 4}) {
            for (int j = 1; j < k; ++j) {
                const auto n = static_cast<std::uint32_t>(k + 1 + gen() % (12 - k));
                const double p = std::uniform_real_distribution<double>(0.0, 0.25)(gen);
                const Params params{k, j, n};
                const Hypergraph h = sample_binomial(params, p, gen());
                const auto dsu = dsu_components(h);
                REQUIRE(dsu == bfs_components(h));
                ++instances;
            }
        }
    }
    CHECK(instances >= 200);
}

TEST_CASE("census invariants on random instances") {
    std::mt19937_64 gen(99);
    for (int t = 0; t < 120; ++t) {
        const int k = 3 + static_cast<int>(gen() % 2);
        const int j = 1 + static_cast<int>(gen() % static_cast<unsigned>(k - 1));
        const auto n = static_cast<std::uint32_t>(k + gen() % 9);
        const Params params{k, j, n};
        const double p = std::uniform_real_distribution<double>(0.0, 0.3)(gen);
        const Hypergraph h = sample_binomial(params, p, gen());
        const ComponentSummary s = component_summary(h);
        const auto comps = dsu_components(h);
        std::uint64_t covered = 0;
        for (const auto& c : comps) covered += c.size();
        CHECK(s.isolated_count + covered == params.num_jsets());
        CHECK(s.num_nontrivial == comps.size());
        CHECK(s.largest >= s.second);
        CHECK(s.largest + s.second <= params.num_jsets());
        CHECK(s.is_j_connected == (s.largest == params.num_jsets()));

        DisjointSets dsu(params);
        for (const auto& e : h.edges) dsu.apply_edge(e);
        CHECK(s.is_j_connected == (dsu.num_sets_remaining() == 1));
        CHECK(dsu.untouched_count() == s.isolated_count);

        // Permutation invariance.
        Hypergraph shuffled = h;
        std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), gen);
        CHECK(dsu_components(shuffled) == comps);

        // Unbounded exploration reproduces the component of its start.
        if (!comps.empty()) {
            const auto& c = comps[gen() % comps.size()];
            const JSet start = unrank_jset(c[gen() % c.size()], params);
            const auto rec = bfs_explore(h, start, std::numeric_limits<std::uint64_t>::max());
            CHECK(rec.exhausted);
            std::vector<JSetRank> found;
            for (std::size_t g = 0; g < rec.generations.size(); ++g) {
                for (const auto& js : rec.generations[g]) found.push_back(rank_jset(js, params));
            }
            std::vector<JSetRank> sorted = found;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
            CHECK(sorted == c);
        }
    }
}

TEST_CASE("exploration generations are linked by edges") {
    const Params params{4, 2, 10};
    const Hypergraph h = sample_binomial(params, 0.04, 17);
    REQUIRE(h.m() > 0);
    const JSet start = sub_jsets(h.edges.front(), 2).front();
    const auto rec = bfs_explore(h, start, 100);
    for (std::size_t g = 1; g < rec.generations.size(); ++g) {
        for (const auto& s : rec.generations[g]) {
            bool linked = false;
            for (const auto& prev : rec.generations[g - 1]) {
                for (const auto& e : h.edges) {
                    const bool has_s = std::includes(e.begin(), e.end(), s.begin(), s.end());
                    const bool has_prev = std::includes(e.begin(), e.end(), prev.begin(), prev.end());
                    linked = linked || (has_s && has_prev);
                }
            }
            CHECK(linked);
        }
    }
}

TEST_CASE("monotonicity along the process") {
    const Params params{3, 2, 12};
    EdgeStream stream(params, 5);
    DisjointSets dsu(params);
    std::uint64_t prev_sets = dsu.num_sets_remaining();
    std::uint64_t prev_largest = dsu.largest_set_size();
    while (auto e = stream.next()) {
        const std::uint64_t delta = dsu.apply_edge(*e);
        CHECK(dsu.num_sets_remaining() == prev_sets - delta);
        CHECK(dsu.largest_set_size() >= prev_largest);
        prev_sets = dsu.num_sets_remaining();
        prev_largest = dsu.largest_set_size();
    }
    CHECK(dsu.num_sets_remaining() == 1);
    CHECK(dsu.largest_set_size() == params.num_jsets());
}

TEST_CASE("largest_component extracts L1") {
    const Params p{3, 2, 7};
    const auto h = make(p, {{1, 2, 3}, {2, 3, 4}, {5, 6, 7}});
    DisjointSets dsu(p);
    for (const auto& e : h.edges) dsu.apply_edge(e);
    CHECK(largest_component(dsu) == ranks_of(p, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
    DisjointSets empty(p);
    CHECK(largest_component(empty).empty());
}
