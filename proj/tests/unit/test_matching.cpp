#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "kms/enumerator.hpp"
#include "kms/error.hpp"
#include "kms/matching.hpp"
#include "oracles.hpp"

using namespace kms;

namespace {

ErrorCode error_of(const Graph& g, const PropertyQuery& q) {
    try {
        decide_property(g, q);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error");
    return ErrorCode::io_error;
}

// max over S of the barrier expression from union-find component counts
int oracle_deficiency(const Graph& g, int k) {
    const auto a = oracle::adjacency(g);
    const int n = g.order();
    int best = -1 << 30;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const auto c = oracle::components_without(a, s);
        const int size = std::popcount(s);
        const int value = (k % 2 ? c.odd : 0) + k * c.isolated - k * size;
        best = std::max(best, value);
    }
    return best;
}

Graph pendant_clique(int n) { return join(complete_graph(1), disjoint_union(complete_graph(n - 2), complete_graph(1))); }

}  // namespace

TEST_CASE("deficiency examples") {
    const auto k4 = deficiency(complete_graph(4), 3);
    CHECK(k4.value == 0);
    CHECK(k4.barriers.front() == VertexSet{});
    const auto star = deficiency(complete_bipartite(1, 3), 3);
    CHECK(star.value == 6);
    CHECK(star.barriers == std::vector<VertexSet>{VertexSet{0}});
    CHECK(star.barrier_stats[0].isolated == 3);
    // S_{n,n/2-1} with S = clique: k(n/2+1) - k(n/2-1) = 2k
    for (int n = 6; n <= 12; n += 2)
        for (int k : {1, 3, 5}) {
            const Graph g = split_star(n, n / 2 - 1);
            CHECK(deficiency(g, k).value >= 2);
            std::uint64_t clique = (std::uint64_t{1} << (n / 2 - 1)) - 1;
            SubsetProfile profile(g);
            CHECK(barrier_value(profile[clique], k) == 2 * k);
        }
}

TEST_CASE("barriers") {
    const auto k4 = k_barriers(complete_graph(4), 3);
    CHECK(std::find(k4.begin(), k4.end(), VertexSet{}) != k4.end());
    for (int n : {5, 7}) {
        const auto b = k_barriers(pendant_clique(n), 3);
        CHECK(std::find(b.begin(), b.end(), VertexSet{0}) != b.end());
        SubsetProfile profile(pendant_clique(n));
        CHECK(barrier_value(profile[1], 3) == 1);
    }
    // barriers come out sorted by size then lexicographically
    const auto c = k_barriers(cycle_graph(6), 2);
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(set_order_less(c[i - 1], c[i]));
}

TEST_CASE("deficiency agrees with a union-find recount") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n))
            for (int k = 1; k <= 5; ++k) CHECK(deficiency(g, k).value == oracle_deficiency(g, k));
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const Graph g = oracle::to_graph(oracle::random_graph(rng, 12, 0.2));
        for (int k : {1, 2, 3}) CHECK(deficiency(g, k).value == oracle_deficiency(g, k));
    }
}

TEST_CASE("property examples") {
    for (int n = 4; n <= 12; n += 2)
        for (int k : {1, 3, 5}) CHECK(decide_property(cycle_graph(n), {Property::perfect_k_matching, k, 0}).holds);
    for (int n = 6; n <= 12; n += 2)
        for (int k : {1, 3, 5}) {
            const auto v = decide_property(split_star(n, n / 2 - 1), {Property::perfect_k_matching, k, 0});
            CHECK_FALSE(v.holds);
            CHECK(v.witness == VertexSet::range(n / 2 - 1));
        }
    for (int n = 3; n <= 9; ++n)
        for (int k : {3, 5})
            for (int d = 1; d < k; ++d)
                if ((n - d) % 2 == 0) CHECK(decide_property(complete_graph(n), {Property::kd_critical, k, d}).holds);
    CHECK(error_of(complete_graph(5), {Property::kd_critical, 3, 3}) == ErrorCode::invalid_query);
    for (int n : {5, 7, 9}) {
        CHECK(decide_property(complete_graph(n), {Property::gfc, 3, 0}).holds);
        const auto v = decide_property(pendant_clique(n), {Property::gfc, 3, 0});
        CHECK_FALSE(v.holds);
        CHECK(v.witness == VertexSet{0});
    }
}

TEST_CASE("query validation") {
    CHECK(error_of(complete_graph(3), {Property::perfect_k_matching, 3, 0}) == ErrorCode::parity_mismatch);
    CHECK(error_of(complete_graph(4), {Property::gfc, 3, 0}) == ErrorCode::parity_mismatch);
    CHECK(error_of(complete_graph(5), {Property::gbc, 3, 0}) == ErrorCode::parity_mismatch);
    CHECK(error_of(complete_graph(5), {Property::gfc, 1, 0}) == ErrorCode::invalid_query);
    CHECK(error_of(complete_graph(5), {Property::kd_critical, 4, 1}) == ErrorCode::invalid_query);
    CHECK(error_of(complete_graph(5), {Property::kd_critical, 3, 2}) == ErrorCode::parity_mismatch);
    CHECK(error_of(empty_graph(5), {Property::gfc, 3, 0}) == ErrorCode::disconnected_input);
    CHECK(error_of(complete_graph(21), {Property::perfect_k_matching, 2, 0}) == ErrorCode::order_exceeds_cap);
    // perfect k-matching with even k is defined for every order
    CHECK(decide_property(complete_graph(3), {Property::perfect_k_matching, 2, 0}).holds);
    CHECK(property_from_string("kd-critical") == Property::kd_critical);
    CHECK_THROWS_AS(property_from_string("factor"), Error);
}

TEST_CASE("direct search examples") {
    const auto c4 = direct_search(cycle_graph(4), {3, 3, 3, 3}, 3);
    REQUIRE(c4);
    CHECK(c4->is_valid(cycle_graph(4), 3));
    CHECK(c4->weighted_degrees(4) == std::vector<int>{3, 3, 3, 3});
    CHECK_FALSE(direct_search(cycle_graph(5), {3, 3, 3, 3, 3}, 3));
    CHECK_FALSE(direct_search(complete_bipartite(1, 3), {1, 1, 1, 1}, 1));
    CHECK_THROWS_AS(direct_search(cycle_graph(4), {4, 3, 3, 3}, 3), Error);
    SearchOptions tight;
    tight.max_edges = 5;
    CHECK_THROWS_AS(direct_search(complete_graph(4), {1, 1, 1, 1}, 1, tight), Error);
}

TEST_CASE("direct search agrees with exhaustive weightings") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (g.size() > 7) continue;
            const auto a = oracle::adjacency(g);
            for (int k = 1; k <= 3; ++k) {
                std::vector<int> targets(n, k);
                CHECK(direct_search(g, targets, k).has_value() == oracle::brute_k_matching(a, targets, k));
                targets[0] = k - 1;
                CHECK(direct_search(g, targets, k).has_value() == oracle::brute_k_matching(a, targets, k));
            }
        }
}

TEST_CASE("constructive oracle agrees with the deficiency decider") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 1; k <= 5; ++k) {
                if (k % 2 == 1 && n % 2 == 1) continue;
                const PropertyQuery q{Property::perfect_k_matching, k, 0};
                CHECK(decide_property(g, q).holds == direct_property_oracle(g, q));
            }
    for (int n : {3, 5})
        for (const Graph& g : connected_graphs(n)) {
            const PropertyQuery gfc{Property::gfc, 3, 0};
            CHECK(decide_property(g, gfc).holds == direct_property_oracle(g, gfc));
            for (int d : {1})
                CHECK(decide_property(g, {Property::kd_critical, 3, d}).holds ==
                      direct_property_oracle(g, {Property::kd_critical, 3, d}));
        }
    for (int n : {4, 6})
        for (const Graph& g : connected_graphs(n))
            CHECK(decide_property(g, {Property::kd_critical, 5, 2}).holds ==
                  direct_property_oracle(g, {Property::kd_critical, 5, 2}));
}

TEST_CASE("the two barrier readings coincide") {
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 2; k <= 5; ++k) CHECK(empty_set_is_unique_barrier(g, k) == no_nonempty_barrier(g, k));
}
