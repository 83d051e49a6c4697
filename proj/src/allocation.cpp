#include "fairdiv/allocation.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

bool Allocation::is_valid(int m) const {
    ItemSet seen = 0;
    for (ItemSet b : bundles) {
        if (b & seen) return false;
        seen |= b;
    }
    return seen == full_set(m);
}

void Allocation::validate(int m) const {
    if (!is_valid(m))
        throw ValidationError("allocation: bundles must partition the item set [" +
                              std::to_string(m) + "]");
}

AllocationVector allocation_vector(const Allocation& x) {
    int m = 0;
    for (ItemSet b : x.bundles)
        for (int g : items_of(b)) m = std::max(m, g + 1);
    AllocationVector a;
    a.owners.assign(m, -1);
    for (int i = 0; i < x.agents(); ++i)
        for (int g : items_of(x.bundles[i])) a.owners[g] = i;
    return a;
}

Allocation allocation_from_vector(const AllocationVector& a, int agents) {
    Allocation x;
    x.bundles.assign(agents, kEmptySet);
    for (int j = 0; j < a.items(); ++j) {
        if (a.owners[j] < 0 || a.owners[j] >= agents)
            throw ValidationError("allocation vector: owner out of range at item " +
                                  std::to_string(j + 1));
        x.bundles[a.owners[j]] |= single(j);
    }
    return x;
}

Allocation pick_by_list(const AllocationVector& a, const std::vector<Valuation>& vals) {
    int m = a.items();
    int n = static_cast<int>(vals.size());
    Allocation x;
    x.bundles.assign(n, kEmptySet);
    ItemSet remaining = full_set(m);
    for (int t = 0; t < m; ++t) {
        int agent = a.owners[t];
        if (agent < 0 || agent >= n)
            throw ValidationError("pick_by_list: owner out of range at round " +
                                  std::to_string(t + 1));
        const Valuation& v = vals[agent];
        int best = -1;
        for (int g : items_of(remaining))
            if (best == -1 || v.singleton(g) > v.singleton(best)) best = g;
        x.bundles[agent] |= single(best);
        remaining &= ~single(best);
    }
    return x;
}

std::pair<std::vector<int>, std::vector<int>> rounds_of(const AllocationVector& a, int agent) {
    std::vector<int> mine, others;
    for (int t = 0; t < a.items(); ++t)
        (a.owners[t] == agent ? mine : others).push_back(t);
    return {std::move(mine), std::move(others)};
}

} // namespace fairdiv
