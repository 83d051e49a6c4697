#include <doctest.h>

#include <random>
#include <set>

#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/oracle.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

TEST_CASE("for_each_allocation enumerates n^m assignments once") {
    std::set<std::vector<ItemSet>> seen;
    long count = 0;
    for_each_allocation(3, 4, {}, [&](const Allocation& x) {
        ++count;
        CHECK(seen.insert(x.bundles).second);
        return true;
    });
    CHECK(count == 81);

    count = 0;
    for_each_allocation(2, 0, {}, [&](const Allocation& x) {
        ++count;
        CHECK(x.bundles == std::vector<ItemSet>{0, 0});
        return true;
    });
    CHECK(count == 1);
}

TEST_CASE("for_each_allocation respects the budget and early stop") {
    SearchBudget tight;
    tight.max_states = 80;
    CHECK_THROWS_AS(for_each_allocation(3, 4, tight, [](const Allocation&) { return true; }),
                    BudgetError);

    long count = 0;
    for_each_allocation(2, 5, {}, [&](const Allocation&) { return ++count < 7; });
    CHECK(count == 7);

    SearchBudget wide;
    CHECK_THROWS_AS(for_each_allocation(9, 2, wide, [](const Allocation&) { return true; }),
                    BudgetError);
    CHECK_THROWS_AS(for_each_allocation(2, 17, wide, [](const Allocation&) { return true; }),
                    BudgetError);
}

TEST_CASE("epistemic EFX search") {
    SUBCASE("motivating example: X and even Y are EEFX") {
        Instance inst = example_instance();
        CHECK(is_eefx_bruteforce(inst, example_x()));
        // every agent of Y has an epistemic witness (agent 3's is X)
        for (int i = 0; i < 3; ++i) {
            auto res = is_eefx_satisfied_bruteforce(inst, example_y(), i);
            CHECK(res.satisfied);
            REQUIRE(res.witness.has_value());
            CHECK(res.witness->bundle(i) == example_y().bundle(i));
            CHECK(is_efx_satisfied(inst, *res.witness, i));
        }
    }
    SUBCASE("MMS counterexample is not EEFX") {
        Instance inst = goods_instance({{0, 1}, {0, 1}});
        auto res = is_eefx_satisfied_bruteforce(inst, alloc({{}, {1, 2}}), 0);
        CHECK(!res.satisfied);
        CHECK(!res.witness.has_value());
        CHECK(!is_eefx_bruteforce(inst, alloc({{}, {1, 2}})));
    }
    SUBCASE("partition search agrees with a labeled scan on tiny instances") {
        std::mt19937_64 rng(109);
        for (int trial = 0; trial < 30; ++trial) {
            int n = 2 + static_cast<int>(rng() % 2);
            int m = 2 + static_cast<int>(rng() % 4);
            Kind kind = trial % 2 ? Kind::Chores : Kind::Goods;
            Instance inst = random_additive(rng, n, m, kind);
            Allocation x = random_allocation(rng, n, m);
            for (int i = 0; i < n; ++i) {
                bool labeled = false;
                for_each_allocation(n, m, {}, [&](const Allocation& y) {
                    if (y.bundle(i) == x.bundle(i) && is_efx_satisfied(inst, y, i)) {
                        labeled = true;
                        return false;
                    }
                    return true;
                });
                CHECK(labeled == is_eefx_satisfied_bruteforce(inst, x, i).satisfied);
            }
        }
    }
}

TEST_CASE("epistemic EF1 search") {
    SUBCASE("with two agents it coincides with EF1") {
        std::mt19937_64 rng(113);
        for (int trial = 0; trial < 60; ++trial) {
            int m = 2 + static_cast<int>(rng() % 5);
            Instance inst = random_additive(rng, 2, m, Kind::Goods);
            Allocation x = random_allocation(rng, 2, m);
            CHECK(is_eef1_bruteforce(inst, x) == is_ef1(inst, x));
        }
    }
    SUBCASE("PROPx example is not EEF1 for agent 1") {
        Instance inst = goods_instance({{1, 1, 1, 2, 2, 2}, {1, 1, 1, 2, 2, 2}});
        Allocation x = alloc({{1, 2, 3}, {4, 5, 6}});
        CHECK(!is_eef1_satisfied_bruteforce(inst, x, 0).satisfied);
        CHECK(!is_eef1_bruteforce(inst, x));
    }
    SUBCASE("EEFX-satisfied implies EEF1-satisfied") {
        std::mt19937_64 rng(127);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 2 + static_cast<int>(rng() % 2);
            int m = 3 + static_cast<int>(rng() % 4);
            Instance inst = random_additive(rng, n, m, Kind::Goods);
            Allocation x = random_allocation(rng, n, m);
            for (int i = 0; i < n; ++i)
                if (is_eefx_satisfied_bruteforce(inst, x, i).satisfied)
                    CHECK(is_eef1_satisfied_bruteforce(inst, x, i).satisfied);
        }
    }
}

TEST_CASE("find_efx_allocation") {
    Instance inst = goods_instance({{2, 1}, {1, 2}});
    auto found = find_efx_allocation(inst);
    REQUIRE(found.has_value());
    CHECK(is_efx(inst, *found));

    // EFX allocations found by the oracle are PROPm
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        int m = 3 + static_cast<int>(rng() % 3);
        Instance g = random_additive(rng, n, m, Kind::Goods);
        auto x = find_efx_allocation(g);
        if (x) CHECK(is_propm(g, *x));
    }
}
