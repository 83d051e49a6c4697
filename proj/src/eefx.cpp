#include "fairdiv/eefx.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/ordered_efx.hpp"

namespace fairdiv {

namespace {

// Shared witness construction. x_prime lives in slot space: slot r is the
// r-th best item under each agent's own ordering, so its complement sorted by
// the agent's valuation descending is simply ascending slot order. The real
// complement of x is matched to those slots positionally.
Certificate make_certificate(const Instance& inst, const Allocation& x,
                             const Allocation& x_prime, int agent) {
    const Valuation& v = inst.valuation(agent);
    std::vector<int> slots = items_of(x_prime.complement(agent, inst.items));

    std::vector<int> goods = items_of(x.complement(agent, inst.items));
    // descending singleton value, equal values by smaller item index; for
    // chores this is ascending disutility, as the construction requires
    std::stable_sort(goods.begin(), goods.end(),
                     [&](int a, int b) { return v.singleton(a) > v.singleton(b); });

    if (slots.size() != goods.size())
        throw ValidationError("certificate: allocations disagree on the agent's bundle size");

    Allocation y;
    y.bundles.assign(inst.agents, kEmptySet);
    y.bundles[agent] = x.bundle(agent);
    for (std::size_t k = 0; k < slots.size(); ++k) {
        for (int j = 0; j < inst.agents; ++j) {
            if (j != agent && contains(x_prime.bundle(j), slots[k])) {
                y.bundles[j] |= single(goods[k]);
                break;
            }
        }
    }

    if (!verify_certificate(inst, x, y, agent))
        throw InternalError("certificate construction for agent " + std::to_string(agent + 1) +
                            " failed its EFX check");
    return Certificate{agent, std::move(y), x_prime};
}

} // namespace

Certificate eefx_certificate_goods(const Instance& inst, const Allocation& x,
                                   const Allocation& x_prime, int agent) {
    if (inst.kind != Kind::Goods) throw ValidationError("expected a goods instance");
    return make_certificate(inst, x, x_prime, agent);
}

Certificate eefx_certificate_chores(const Instance& inst, const Allocation& x,
                                    const Allocation& x_prime, int agent) {
    if (inst.kind != Kind::Chores) throw ValidationError("expected a chores instance");
    return make_certificate(inst, x, x_prime, agent);
}

bool verify_certificate(const Instance& inst, const Allocation& x,
                        const Allocation& witness, int agent) {
    if (!witness.is_valid(inst.items)) return false;
    if (witness.agents() != x.agents()) return false;
    if (witness.bundle(agent) != x.bundle(agent)) return false;
    return is_efx_satisfied(inst, witness, agent);
}

SolveResult solve_eefx(const Instance& inst, bool with_certificates) {
    inst.validate();

    Instance ordered_inst{inst.agents, inst.items, inst.kind, {}};
    ordered_inst.valuations.reserve(inst.valuations.size());
    for (const Valuation& v : inst.valuations)
        ordered_inst.valuations.push_back(ordered_valuation(v).valuation);

    SolveResult res;
    res.stage1 = inst.kind == Kind::Goods ? efx_ordered_goods(ordered_inst)
                                          : efx_ordered_chores(ordered_inst);
    res.vector = allocation_vector(res.stage1);
    res.vector.owners.resize(inst.items, 0); // keep m rounds even with trailing empties
    res.allocation = pick_by_list(res.vector, inst.valuations);

    if (with_certificates) {
        res.certificates.reserve(inst.agents);
        for (int i = 0; i < inst.agents; ++i)
            res.certificates.push_back(make_certificate(inst, res.allocation, res.stage1, i));
    }
    return res;
}

} // namespace fairdiv
