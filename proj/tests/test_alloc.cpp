#include <doctest.h>

#include <random>

#include "fairdiv/allocation.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

TEST_CASE("allocation vector round trip") {
    SUBCASE("single agent") {
        Allocation x = alloc({{1, 2, 3}});
        CHECK(allocation_vector(x).owners == std::vector<int>{0, 0, 0});
    }
    SUBCASE("direct readoff") {
        Allocation x = alloc({{1, 3}, {2}});
        CHECK(allocation_vector(x).owners == std::vector<int>{0, 1, 0});
        CHECK(allocation_from_vector(allocation_vector(x), 2) == x);
    }
    SUBCASE("random round trips") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            Allocation x = random_allocation(rng, 3, 8);
            CHECK(allocation_from_vector(allocation_vector(x), 3) == x);
        }
    }
}

TEST_CASE("rounds_of partitions the rounds") {
    AllocationVector a{{0, 1, 0}};
    auto [mine, others] = rounds_of(a, 0);
    CHECK(mine == std::vector<int>{0, 2});
    CHECK(others == std::vector<int>{1});

    auto [none, all] = rounds_of(a, 2);
    CHECK(none.empty());
    CHECK(all == std::vector<int>{0, 1, 2});
}

TEST_CASE("pick_by_list") {
    SUBCASE("single agent takes everything") {
        AllocationVector a{{0, 0}};
        Allocation x = pick_by_list(a, {additive({1, 2})});
        CHECK(x.bundles == std::vector<ItemSet>{items({1, 2})});
    }
    SUBCASE("three-round hand simulation") {
        AllocationVector a{{0, 1, 0}};
        Allocation x = pick_by_list(a, {additive({5, 3, 1}), additive({2, 9, 4})});
        CHECK(x == alloc({{1, 3}, {2}}));
    }
    SUBCASE("on ordered valuations the picking sequence is the identity") {
        std::mt19937_64 rng(19);
        for (int trial = 0; trial < 100; ++trial) {
            Instance inst = random_additive(rng, 3, 7, Kind::Goods);
            for (auto& v : inst.valuations) v = ordered_valuation(v).valuation;
            Allocation x_prime = random_allocation(rng, 3, 7);
            CHECK(pick_by_list(allocation_vector(x_prime), inst.valuations) == x_prime);
        }
    }
}

TEST_CASE("picking-sequence dominance guarantees") {
    // For X = pick_by_list(vector(X'), V): every agent's bundle dominates her
    // stage-1 bundle, complements anti-dominate, and cardinalities are
    // preserved. X' lives in the relabeling where the agent's singleton values
    // are non-increasing, so slot r is mapped to her r-th favorite item before
    // comparing. Holds for arbitrary valuations, including negative mixes.
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int m = 3 + static_cast<int>(rng() % 6);
        Instance inst = random_additive(rng, n, m, Kind::Goods, -15, 15);
        Allocation x_prime = random_allocation(rng, n, m);
        AllocationVector a = allocation_vector(x_prime);
        a.owners.resize(m, 0);
        Allocation x = pick_by_list(a, inst.valuations);

        for (int i = 0; i < n; ++i) {
            const Valuation& v = inst.valuation(i);
            OrderingPermutation perm = ordered_valuation(v).perm;
            CHECK(set_size(x.bundle(i)) == set_size(x_prime.bundle(i)));
            CHECK(dominates(v, x.bundle(i), perm.apply(x_prime.bundle(i))));
            CHECK(dominates(v, perm.apply(x_prime.complement(i, m)), x.complement(i, m)));
        }
    }
}
