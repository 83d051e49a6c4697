#ifndef FAIRDIV_TESTS_HELPERS_HPP
#define FAIRDIV_TESTS_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv::testing {

inline Valuation additive(std::initializer_list<long> values) {
    std::vector<Value> v;
    for (long x : values) v.emplace_back(x);
    return Valuation(AdditiveValuation(std::move(v)));
}

inline Instance goods_instance(std::initializer_list<std::initializer_list<long>> rows) {
    Instance inst;
    inst.kind = Kind::Goods;
    for (auto row : rows) inst.valuations.push_back(additive(row));
    inst.agents = static_cast<int>(inst.valuations.size());
    inst.items = inst.valuations.empty() ? 0 : inst.valuations[0].item_count();
    return inst;
}

inline Instance chores_instance(std::initializer_list<std::initializer_list<long>> disutilities) {
    Instance inst;
    inst.kind = Kind::Chores;
    for (auto row : disutilities) {
        std::vector<Value> v;
        for (long x : row) v.emplace_back(-x);
        inst.valuations.emplace_back(AdditiveValuation(std::move(v)));
    }
    inst.agents = static_cast<int>(inst.valuations.size());
    inst.items = inst.valuations.empty() ? 0 : inst.valuations[0].item_count();
    return inst;
}

inline ItemSet items(std::initializer_list<int> one_based) {
    ItemSet s = 0;
    for (int g : one_based) s |= single(g - 1);
    return s;
}

inline Allocation alloc(std::initializer_list<std::initializer_list<int>> bundles) {
    Allocation x;
    for (auto b : bundles) x.bundles.push_back(items(b));
    return x;
}

// The instance from the motivating example: 9 goods, 3 agents, with the
// envy-free allocation X and the post-exchange allocation Y.
inline Instance example_instance() {
    return goods_instance({{50, 50, 1, 1, 10, 10, 1, 1, 1},
                           {1, 1, 10, 10, 1, 1, 50, 50, 1},
                           {10, 10, 1, 1, 10, 10, 1, 1, 25}});
}
inline Allocation example_x() { return alloc({{1, 2, 3, 4}, {5, 6, 7, 8}, {9}}); }
inline Allocation example_y() { return alloc({{1, 2, 5, 6}, {3, 4, 7, 8}, {9}}); }

// Seeded random additive instance with integer magnitudes in [lo, hi].
inline Instance random_additive(std::mt19937_64& rng, int agents, int items, Kind kind,
                                long lo = 0, long hi = 20) {
    Instance inst;
    inst.agents = agents;
    inst.items = items;
    inst.kind = kind;
    for (int i = 0; i < agents; ++i) {
        std::vector<Value> v(items);
        for (int g = 0; g < items; ++g) {
            long mag = lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
            v[g] = kind == Kind::Goods ? Value(mag) : Value(-mag);
        }
        inst.valuations.emplace_back(AdditiveValuation(std::move(v)));
    }
    return inst;
}

inline Allocation random_allocation(std::mt19937_64& rng, int agents, int items) {
    AllocationVector a;
    a.owners.resize(items);
    for (int j = 0; j < items; ++j)
        a.owners[j] = static_cast<int>(rng() % static_cast<unsigned>(agents));
    return allocation_from_vector(a, agents);
}

inline ItemSet random_subset(std::mt19937_64& rng, ItemSet pool, int size) {
    std::vector<int> candidates = items_of(pool);
    ItemSet out = 0;
    for (int k = 0; k < size; ++k) {
        std::size_t pick = rng() % candidates.size();
        out |= single(candidates[pick]);
        candidates.erase(candidates.begin() + static_cast<long>(pick));
    }
    return out;
}

} // namespace fairdiv::testing

#endif
