#include "doctest.h"

#include <algorithm>
#include <vector>

#include "hyperphase/combinatorics.hpp"
#include "hyperphase/errors.hpp"

using namespace hyperphase;

namespace {

// Pascal's triangle built by addition only; independent of the
// multiplicative formula under test.
std::vector<std::vector<std::uint64_t>> pascal_oracle(std::size_t rows) {
    std::vector<std::vector<std::uint64_t>> t(rows);
    for (std::size_t n = 0; n < rows; ++n) {
        t[n].assign(n + 1, 1);
        for (std::size_t r = 1; r < n; ++r) t[n][r] = t[n - 1][r - 1] + t[n - 1][r];
    }
    return t;
}

// All r-subsets of [n] (1-based) sorted in colex order: compare from the
// largest element down.
std::vector<JSet> colex_enumeration(std::uint32_t n, int r) {
    std::vector<JSet> all;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        JSet s;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (mask & (1u << v)) s.push_back(v + 1);
        }
        all.push_back(s);
    }
    std::sort(all.begin(), all.end(), [](const JSet& a, const JSet& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return all;
}

}  // namespace

TEST_CASE("binomial small cases") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial(30, 3) matches the Pascal oracle") {
    const auto t = pascal_oracle(31);
    CHECK(t[30][3] == 4060);
    CHECK(binomial(30, 3) == t[30][3]);
}

TEST_CASE("binomial agrees with Pascal's rule up to 60 and beyond the memo table") {
    const auto t = pascal_oracle(61);
    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t r = 1; r <= n; ++r) {
            REQUIRE(binomial(n, r) == binomial(n - 1, r) + binomial(n - 1, r - 1));
            REQUIRE(binomial(n, r) == t[n][r]);
        }
    }
    // Past the memo table: the multiplicative path.
    for (std::uint64_t n = 66; n <= 90; ++n) {
        for (std::uint64_t r = 1; r <= 6; ++r) {
            REQUIRE(binomial(n, r) == binomial(n - 1, r) + binomial(n - 1, r - 1));
        }
    }
    CHECK(binomial(100, 3) == 161700);
    CHECK(binomial(1000, 500 - 497) == 166167000);
}

TEST_CASE("binomial overflow is loud") {
    CHECK_NOTHROW(binomial(67, 33));  // 1.42e19 < 2^64
    CHECK_THROWS_AS(binomial(68, 34), ArithmeticOverflow);
    CHECK_THROWS_AS(binomial(1'000'000, 10), ArithmeticOverflow);
}

TEST_CASE("rank_jset examples") {
    CHECK(rank_jset(JSet{1, 2}, Params{3, 2, 4}) == 0);
    CHECK(rank_jset(JSet{1, 2, 3}, Params{4, 3, 10}) == 0);
    const auto oracle = colex_enumeration(4, 2);
    const auto pos = std::find(oracle.begin(), oracle.end(), JSet{3, 4}) - oracle.begin();
    CHECK(pos == 5);
    CHECK(rank_jset(JSet{3, 4}, Params{3, 2, 4}) == 5);
}

TEST_CASE("unrank_jset examples") {
    CHECK(unrank_jset(0, Params{3, 2, 4}) == JSet{1, 2});
    CHECK(unrank_jset(5, Params{3, 2, 4}) == JSet{3, 4});
    CHECK_THROWS_AS(unrank_jset(6, Params{3, 2, 4}), ValidationError);
}

TEST_CASE("rank rejects malformed sets") {
    const Params p{3, 2, 4};
    CHECK_THROWS_AS(rank_jset(JSet{1}, p), ValidationError);
    CHECK_THROWS_AS(rank_jset(JSet{2, 2}, p), ValidationError);
    CHECK_THROWS_AS(rank_jset(JSet{3, 1}, p), ValidationError);
    CHECK_THROWS_AS(rank_jset(JSet{0, 1}, p), ValidationError);
    CHECK_THROWS_AS(rank_jset(JSet{1, 5}, p), ValidationError);
}

TEST_CASE("rank follows colex enumeration order for all 3-subsets of [8]") {
    const Params p{4, 3, 8};
    const auto oracle = colex_enumeration(8, 3);
    REQUIRE(oracle.size() == 56);
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        CHECK(rank_jset(oracle[i], p) == i);
        CHECK(unrank_jset(i, p) == oracle[i]);
    }
}

TEST_CASE("rank/unrank bijection for every (n, j) with C(n, j) <= 1e5") {
    for (std::uint32_t n = 2; n <= 40; ++n) {
        for (int j = 1; j < static_cast<int>(n) && j <= 6; ++j) {
            const std::uint64_t total = binomial(n, static_cast<std::uint64_t>(j));
            if (total > 100'000) continue;
            const Params p{j + 1, j, n};
            const ColexRanker ranker(n, j);
            JSet prev;
            for (JSetRank r = 0; r < total; ++r) {
                const JSet s = ranker.unrank(r);
                REQUIRE_NOTHROW(validate_vertex_set(s, static_cast<std::size_t>(j), n));
                REQUIRE(ranker.rank(s) == r);
                if (r > 0) {
                    // Strictly colex-increasing implies all distinct.
                    REQUIRE(std::lexicographical_compare(prev.rbegin(), prev.rend(), s.rbegin(),
                                                         s.rend()));
                }
                prev = s;
            }
            // The free functions agree with the table-backed ranker.
            REQUIRE(unrank_jset(total - 1, p) == ranker.unrank(total - 1));
            REQUIRE(rank_jset(ranker.unrank(total / 2), p) == total / 2);
        }
    }
}

TEST_CASE("colex ranks do not depend on n") {
    CHECK(rank_jset(JSet{2, 5, 7}, Params{4, 3, 7}) == rank_jset(JSet{2, 5, 7}, Params{4, 3, 100}));
}

TEST_CASE("sub_jsets") {
    CHECK(sub_jsets(Edge{1, 2, 3}, 2) == std::vector<JSet>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(sub_jsets(Edge{1, 2, 3, 4}, 1) == std::vector<JSet>{{1}, {2}, {3}, {4}});

    const Edge e{2, 4, 5, 7};
    const auto got = sub_jsets(e, 3);
    // Brute-force subset filter over [7].
    std::vector<JSet> expected;
    for (const auto& s : colex_enumeration(7, 3)) {
        if (std::includes(e.begin(), e.end(), s.begin(), s.end())) expected.push_back(s);
    }
    CHECK(got.size() == 4);
    CHECK(got == expected);
}

TEST_CASE("sub_jsets returns C(k, j) distinct subsets in colex order") {
    const Edge e{3, 5, 8, 9, 12, 20};
    for (int j = 1; j < 6; ++j) {
        const auto subs = sub_jsets(e, j);
        CHECK(subs.size() == binomial(6, static_cast<std::uint64_t>(j)));
        const Params p{6, j, 20};
        for (std::size_t i = 0; i < subs.size(); ++i) {
            CHECK(std::includes(e.begin(), e.end(), subs[i].begin(), subs[i].end()));
            if (i > 0) CHECK(rank_jset(subs[i - 1], p) < rank_jset(subs[i], p));
        }
    }
    CHECK_THROWS_AS(sub_jsets(Edge{1, 2, 3}, 3), ValidationError);
}

TEST_CASE("Params validation") {
    CHECK_NOTHROW((Params{2, 1, 2}.validate()));
    CHECK_THROWS_AS((Params{1, 1, 5}.validate()), ValidationError);
    CHECK_THROWS_AS((Params{3, 3, 10}.validate()), ValidationError);
    CHECK_THROWS_AS((Params{3, 0, 10}.validate()), ValidationError);
    CHECK_THROWS_AS((Params{4, 2, 3}.validate()), ValidationError);
}
