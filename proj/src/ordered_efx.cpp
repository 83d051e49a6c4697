#include "fairdiv/ordered_efx.hpp"

#include <algorithm>
#include <cstdio>

#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"

namespace fairdiv {

namespace {

// Cancelability scans are 4^m; past this many items the screen is skipped.
constexpr int kCancelabilityScanLimit = 8;

void validate_ordered_input(const Instance& inst, Kind expected) {
    inst.validate();
    if (inst.kind != expected)
        throw ValidationError(std::string("expected a ") + kind_name(expected) + " instance");
    for (int i = 0; i < inst.agents; ++i) {
        const Valuation& v = inst.valuation(i);
        for (int g = 0; g + 1 < inst.items; ++g)
            if (v.singleton(g) < v.singleton(g + 1))
                throw ValidationError("instance is not ordered: agent " + std::to_string(i + 1) +
                                      " values item " + std::to_string(g + 2) +
                                      " above item " + std::to_string(g + 1));
        if (!v.is_additive()) {
            if (v.item_count() <= kCancelabilityScanLimit) {
                auto res = is_cancelable(v.table());
                if (!res.cancelable)
                    throw PreconditionError("agent " + std::to_string(i + 1) +
                                            "'s table valuation is not cancelable");
            } else {
                std::fprintf(stderr,
                             "warning: skipping cancelability check for agent %d (%d items)\n",
                             i + 1, v.item_count());
            }
        }
    }
}

std::vector<Value> bundle_values(const Instance& inst, const std::vector<ItemSet>& bundles,
                                 int agent) {
    std::vector<Value> out(bundles.size());
    for (std::size_t j = 0; j < bundles.size(); ++j)
        out[j] = inst.valuation(agent).value(bundles[j]);
    return out;
}

// Extract the cycle that the walk sequence closes on, oriented along the walk.
std::vector<int> close_cycle(const std::vector<int>& walk) {
    int last = walk.back();
    auto first = std::find(walk.begin(), walk.end() - 1, last);
    return std::vector<int>(first, walk.end() - 1);
}

} // namespace

Allocation efx_ordered_goods(const Instance& inst) {
    validate_ordered_input(inst, Kind::Goods);
    int n = inst.agents;
    std::vector<ItemSet> bundles(n, kEmptySet);

    for (int g = 0; g < inst.items; ++g) {
        // Envy edge i->j: v_i(X_i) < v_i(X_j). Rotations strictly increase the
        // utility of every cycle member, so this loop terminates.
        long safety = 0;
        for (;;) {
            if (++safety > 100000 + 64L * n * n)
                throw InternalError("efx_ordered_goods: cycle resolution did not converge");

            std::vector<std::vector<Value>> vals(n);
            for (int i = 0; i < n; ++i) vals[i] = bundle_values(inst, bundles, i);

            auto envies = [&](int i, int j) { return i != j && vals[i][i] < vals[i][j]; };

            int source = -1;
            for (int j = 0; j < n && source == -1; ++j) {
                bool envied = false;
                for (int i = 0; i < n && !envied; ++i) envied = envies(i, j);
                if (!envied) source = j;
            }
            if (source != -1) {
                bundles[source] |= single(g);
                break;
            }

            // Every agent is envied; walk predecessors (smallest envier first)
            // until a node repeats, then rotate bundles along the envy cycle.
            std::vector<int> walk{0};
            std::vector<char> seen(n, 0);
            seen[0] = 1;
            for (;;) {
                int cur = walk.back();
                int pred = -1;
                for (int i = 0; i < n && pred == -1; ++i)
                    if (envies(i, cur)) pred = i;
                walk.push_back(pred);
                if (seen[pred]) break;
                seen[pred] = 1;
            }
            std::vector<int> back_cycle = close_cycle(walk); // c_t envied by c_{t+1}
            std::vector<ItemSet> rotated = bundles;
            for (std::size_t t = 0; t < back_cycle.size(); ++t) {
                int envier = back_cycle[(t + 1) % back_cycle.size()];
                rotated[envier] = bundles[back_cycle[t]];
            }
            bundles = std::move(rotated);
        }
    }

    Allocation x{std::move(bundles)};
    if (!is_efx(inst, x))
        throw InternalError("efx_ordered_goods: output failed the EFX self-check");
    return x;
}

Allocation efx_ordered_chores(const Instance& inst) {
    validate_ordered_input(inst, Kind::Chores);
    int n = inst.agents;
    std::vector<ItemSet> bundles(n, kEmptySet);

    // Ordered chores have non-increasing v, i.e. non-decreasing disutility, so
    // non-increasing disutility order means processing items m..1.
    for (int g = inst.items - 1; g >= 0; --g) {
        long safety = 0;
        for (;;) {
            if (++safety > 100000 + 64L * n * n)
                throw InternalError("efx_ordered_chores: cycle resolution did not converge");

            std::vector<std::vector<Value>> vals(n);
            for (int i = 0; i < n; ++i) vals[i] = bundle_values(inst, bundles, i);

            // Sink: envies nobody, i.e. holds a weakly most-preferred bundle.
            int sink = -1;
            for (int i = 0; i < n && sink == -1; ++i) {
                bool envious = false;
                for (int j = 0; j < n && !envious; ++j) envious = vals[i][i] < vals[i][j];
                if (!envious) sink = i;
            }
            if (sink != -1) {
                bundles[sink] |= single(g);
                break;
            }

            // Top-trading edge i -> argmax_j v_i(X_j) (smallest j on ties);
            // with no sink, every agent has one, so a cycle exists.
            std::vector<int> top(n);
            for (int i = 0; i < n; ++i) {
                int best = 0;
                for (int j = 1; j < n; ++j)
                    if (vals[i][j] > vals[i][best]) best = j;
                top[i] = best;
            }
            std::vector<int> walk{0};
            std::vector<char> seen(n, 0);
            seen[0] = 1;
            for (;;) {
                int nxt = top[walk.back()];
                walk.push_back(nxt);
                if (seen[nxt]) break;
                seen[nxt] = 1;
            }
            std::vector<int> cycle = close_cycle(walk); // c_t points at c_{t+1}
            std::vector<ItemSet> rotated = bundles;
            for (std::size_t t = 0; t < cycle.size(); ++t)
                rotated[cycle[t]] = bundles[cycle[(t + 1) % cycle.size()]];
            bundles = std::move(rotated);
        }
    }

    Allocation x{std::move(bundles)};
    if (!is_efx(inst, x))
        throw InternalError("efx_ordered_chores: output failed the chores EFX self-check");
    return x;
}

} // namespace fairdiv
