#include "fairdiv/oracle.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/partitions.hpp"

namespace fairdiv {

void for_each_allocation(int agents, int items, const SearchBudget& budget,
                         const std::function<bool(const Allocation&)>& fn) {
    if (agents > budget.max_agents || items > budget.max_items)
        throw BudgetError("allocation enumeration refused: instance exceeds the size budget");
    unsigned long long states = 1;
    for (int j = 0; j < items; ++j) {
        states *= static_cast<unsigned long long>(agents);
        if (states > budget.max_states)
            throw BudgetError("allocation enumeration refused: " + std::to_string(agents) +
                              "^" + std::to_string(items) + " states exceed the budget");
    }

    AllocationVector a;
    a.owners.assign(items, 0);
    for (;;) {
        if (!fn(allocation_from_vector(a, agents))) return;
        int j = items - 1;
        while (j >= 0 && a.owners[j] == agents - 1) a.owners[j--] = 0;
        if (j < 0) return;
        ++a.owners[j];
    }
}

namespace {

enum class Notion { Efx, Ef1 };

// Agent's condition against one rival bundle.
bool satisfied_against(const Instance& inst, int agent, ItemSet own, ItemSet rival,
                       Notion notion, const Value& alpha) {
    const Valuation& v = inst.valuation(agent);
    if (notion == Notion::Efx) {
        if (inst.kind == Kind::Goods) return v.value(own) >= alpha * one_less(v, rival);
        Valuation d = v.negated();
        return one_less(d, own) <= alpha * d.value(rival);
    }
    // EF1, goods form: some removal from a nonempty rival kills envy.
    if (rival == kEmptySet) return true;
    for (int g : items_of(rival))
        if (v.value(own) >= v.value(rival & ~single(g))) return true;
    return false;
}

EpistemicResult epistemic_search(const Instance& inst, const Allocation& x, int agent,
                                 const SearchBudget& budget, Notion notion,
                                 const Value& alpha) {
    x.validate(inst.items);
    if (inst.agents > budget.max_agents || inst.items > budget.max_items)
        throw BudgetError("epistemic search refused: instance exceeds the size budget");

    ItemSet own = x.bundle(agent);
    std::vector<int> rest = items_of(x.complement(agent, inst.items));
    int q = static_cast<int>(rest.size());
    int rivals = inst.agents - 1;

    EpistemicResult result;
    unsigned long long visited = 0;
    bool exhausted = for_each_set_partition(q, rivals, [&](const std::vector<ItemSet>& blocks) {
        if (++visited > budget.max_states)
            throw BudgetError("epistemic search refused: partition count exceeds the budget");

        std::vector<ItemSet> rival_bundles;
        rival_bundles.reserve(static_cast<std::size_t>(rivals));
        for (ItemSet b : blocks) {
            ItemSet bundle = kEmptySet;
            for (int pos : items_of(b)) bundle |= single(rest[pos]);
            rival_bundles.push_back(bundle);
        }
        rival_bundles.resize(static_cast<std::size_t>(rivals), kEmptySet);

        for (ItemSet rb : rival_bundles)
            if (!satisfied_against(inst, agent, own, rb, notion, alpha)) return true;

        // Found a witness; assign rival bundles to rival agents in index order.
        Allocation y;
        y.bundles.assign(inst.agents, kEmptySet);
        y.bundles[agent] = own;
        std::size_t next = 0;
        for (int j = 0; j < inst.agents; ++j)
            if (j != agent) y.bundles[j] = rival_bundles[next++];
        result.satisfied = true;
        result.witness = std::move(y);
        return false;
    });
    (void)exhausted;
    return result;
}

} // namespace

EpistemicResult is_eefx_satisfied_bruteforce(const Instance& inst, const Allocation& x,
                                             int agent, const SearchBudget& budget,
                                             const Value& alpha) {
    return epistemic_search(inst, x, agent, budget, Notion::Efx, alpha);
}

bool is_eefx_bruteforce(const Instance& inst, const Allocation& x, const SearchBudget& budget) {
    for (int i = 0; i < inst.agents; ++i)
        if (!is_eefx_satisfied_bruteforce(inst, x, i, budget).satisfied) return false;
    return true;
}

EpistemicResult is_eef1_satisfied_bruteforce(const Instance& inst, const Allocation& x,
                                             int agent, const SearchBudget& budget) {
    if (inst.kind != Kind::Goods)
        throw ValidationError("the EF1 oracle handles goods instances only");
    return epistemic_search(inst, x, agent, budget, Notion::Ef1, Value(1));
}

bool is_eef1_bruteforce(const Instance& inst, const Allocation& x, const SearchBudget& budget) {
    for (int i = 0; i < inst.agents; ++i)
        if (!is_eef1_satisfied_bruteforce(inst, x, i, budget).satisfied) return false;
    return true;
}

std::optional<Allocation> find_efx_allocation(const Instance& inst, const SearchBudget& budget) {
    std::optional<Allocation> found;
    for_each_allocation(inst.agents, inst.items, budget, [&](const Allocation& x) {
        if (is_efx(inst, x)) {
            found = x;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace fairdiv
