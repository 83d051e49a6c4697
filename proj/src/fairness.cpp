#include "fairdiv/fairness.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"
#include "fairdiv/partitions.hpp"

namespace fairdiv {

namespace {

// EFX condition of `agent` against one rival bundle, scaled by alpha.
bool efx_against(const Instance& inst, int agent, ItemSet own, ItemSet rival,
                 const Value& alpha) {
    const Valuation& v = inst.valuation(agent);
    if (inst.kind == Kind::Goods)
        return v.value(own) >= alpha * one_less(v, rival);
    Valuation d = v.negated();
    return one_less(d, own) <= alpha * d.value(rival);
}

} // namespace

bool is_alpha_efx_satisfied(const Instance& inst, const Allocation& x, int agent,
                            const Value& alpha) {
    for (int j = 0; j < inst.agents; ++j)
        if (j != agent && !efx_against(inst, agent, x.bundle(agent), x.bundle(j), alpha))
            return false;
    return true;
}

bool is_efx_satisfied(const Instance& inst, const Allocation& x, int agent) {
    return is_alpha_efx_satisfied(inst, x, agent, Value(1));
}

bool is_efx(const Instance& inst, const Allocation& x) {
    for (int i = 0; i < inst.agents; ++i)
        if (!is_efx_satisfied(inst, x, i)) return false;
    return true;
}

bool is_alpha_efx(const Instance& inst, const Allocation& x, const Value& alpha) {
    for (int i = 0; i < inst.agents; ++i)
        if (!is_alpha_efx_satisfied(inst, x, i, alpha)) return false;
    return true;
}

bool is_ef1_satisfied(const Instance& inst, const Allocation& x, int agent) {
    const Valuation& v = inst.valuation(agent);
    if (inst.kind == Kind::Goods) {
        for (int j = 0; j < inst.agents; ++j) {
            if (j == agent || x.bundle(j) == kEmptySet) continue;
            bool ok = false;
            for (int g : items_of(x.bundle(j)))
                if (v.value(x.bundle(agent)) >= v.value(x.bundle(j) & ~single(g))) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    }
    // Chores analog: dropping the best own chore must kill envy.
    Valuation d = v.negated();
    ItemSet own = x.bundle(agent);
    for (int j = 0; j < inst.agents; ++j) {
        if (j == agent) continue;
        if (own == kEmptySet) {
            if (!(Value(0) <= d.value(x.bundle(j)))) return false;
            continue;
        }
        bool ok = false;
        for (int c : items_of(own))
            if (d.value(own & ~single(c)) <= d.value(x.bundle(j))) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

bool is_ef1(const Instance& inst, const Allocation& x) {
    for (int i = 0; i < inst.agents; ++i)
        if (!is_ef1_satisfied(inst, x, i)) return false;
    return true;
}

namespace {

const AdditiveValuation& require_goods_additive(const Instance& inst, int agent,
                                                const char* notion) {
    if (inst.kind != Kind::Goods)
        throw ValidationError(std::string(notion) + " is defined for goods instances only");
    if (!inst.valuation(agent).is_additive())
        throw ValidationError(std::string(notion) + " requires additive valuations");
    return inst.valuation(agent).additive();
}

bool all_agents(const Instance& inst, const Allocation& x,
                bool (*pred)(const Instance&, const Allocation&, int)) {
    for (int i = 0; i < inst.agents; ++i)
        if (!pred(inst, x, i)) return false;
    return true;
}

} // namespace

bool is_prop1_satisfied(const Instance& inst, const Allocation& x, int agent) {
    const AdditiveValuation& v = require_goods_additive(inst, agent, "PROP1");
    ItemSet outside = x.complement(agent, inst.items);
    Value relief = 0;
    for (int g : items_of(outside)) relief = std::max(relief, v.singleton(g));
    return v.value(x.bundle(agent)) >= v.value(full_set(inst.items)) / inst.agents - relief;
}

bool is_propx_satisfied(const Instance& inst, const Allocation& x, int agent) {
    const AdditiveValuation& v = require_goods_additive(inst, agent, "PROPx");
    ItemSet outside = x.complement(agent, inst.items);
    Value relief = 0;
    bool first = true;
    for (int g : items_of(outside)) {
        if (first || v.singleton(g) < relief) relief = v.singleton(g);
        first = false;
    }
    return v.value(x.bundle(agent)) >= v.value(full_set(inst.items)) / inst.agents - relief;
}

bool is_propm_satisfied(const Instance& inst, const Allocation& x, int agent) {
    const AdditiveValuation& v = require_goods_additive(inst, agent, "PROPm");
    Value relief = 0; // empty rival bundles impose no relief term
    for (int j = 0; j < inst.agents; ++j) {
        if (j == agent || x.bundle(j) == kEmptySet) continue;
        Value inner_min;
        bool first = true;
        for (int g : items_of(x.bundle(j))) {
            if (first || v.singleton(g) < inner_min) inner_min = v.singleton(g);
            first = false;
        }
        relief = std::max(relief, inner_min);
    }
    return v.value(x.bundle(agent)) >= v.value(full_set(inst.items)) / inst.agents - relief;
}

bool is_prop1(const Instance& inst, const Allocation& x) {
    return all_agents(inst, x, &is_prop1_satisfied);
}
bool is_propx(const Instance& inst, const Allocation& x) {
    return all_agents(inst, x, &is_propx_satisfied);
}
bool is_propm(const Instance& inst, const Allocation& x) {
    return all_agents(inst, x, &is_propm_satisfied);
}

MmsResult mms_value(const Instance& inst, int agent, const MmsGuard& guard) {
    if (inst.items > guard.max_items || inst.agents > guard.max_agents)
        throw BudgetError("maximin-share enumeration limited to " +
                          std::to_string(guard.max_items) + " items and " +
                          std::to_string(guard.max_agents) + " agents");
    const Valuation& v = inst.valuation(agent);
    int n = inst.agents;

    MmsResult best;
    bool have_best = false;
    for_each_set_partition(inst.items, n, [&](const std::vector<ItemSet>& blocks) {
        Value worst = 0; // parts beyond blocks.size() are empty, worth v(0)=0
        bool first = static_cast<int>(blocks.size()) >= n;
        for (ItemSet b : blocks) {
            Value val = v.value(b);
            if (first || val < worst) worst = std::move(val);
            first = false;
        }
        if (!have_best || worst > best.value) {
            best.value = worst;
            best.witness.bundles.assign(blocks.begin(), blocks.end());
            best.witness.bundles.resize(n, kEmptySet);
            have_best = true;
        }
        return true;
    });
    if (!have_best) throw InternalError("mms_value: no partition enumerated");
    return best;
}

bool is_alpha_mms(const Instance& inst, const Allocation& x, const Value& alpha,
                  const MmsGuard& guard) {
    for (int i = 0; i < inst.agents; ++i)
        if (inst.valuation(i).value(x.bundle(i)) < alpha * mms_value(inst, i, guard).value)
            return false;
    return true;
}

PhiPotential phi_potential(const Instance& inst, const Allocation& x, int agent) {
    const Valuation& v = inst.valuation(agent);
    PhiPotential phi;
    phi.max_rival_one_less = 0;
    Value own = v.value(x.bundle(agent));
    bool first = true;
    for (int j = 0; j < inst.agents; ++j) {
        if (j == agent) continue;
        if (v.value(x.bundle(j)) <= own) ++phi.poorer_rivals;
        Value w = one_less(v, x.bundle(j));
        if (first || w > phi.max_rival_one_less) {
            phi.max_rival_one_less = w;
            phi.attaining = 1;
        } else if (w == phi.max_rival_one_less) {
            ++phi.attaining;
        }
        first = false;
    }
    return phi;
}

int top_item(const Valuation& v, ItemSet s) {
    int best = -1;
    Value best_rem;
    for (int g : items_of(s)) {
        Value rem = v.value(s & ~single(g));
        if (best == -1 || rem > best_rem) {
            best = g;
            best_rem = std::move(rem);
        }
    }
    if (best == -1) throw ValidationError("top_item: empty set");
    return best;
}

bool is_strongly_monotone(const Valuation& v) {
    if (v.is_additive()) {
        for (int g = 0; g < v.item_count(); ++g)
            if (!(v.singleton(g) > 0)) return false;
        return true;
    }
    return v.table().is_strongly_monotone();
}

Certificate mms_to_eefx_certificate(const Instance& inst, const Allocation& x, int agent,
                                    const MmsGuard& guard) {
    if (inst.kind != Kind::Goods)
        throw PreconditionError("maximin-to-certificate conversion handles goods only");
    x.validate(inst.items);
    const Valuation& v = inst.valuation(agent);
    if (!is_strongly_monotone(v))
        throw PreconditionError("agent " + std::to_string(agent + 1) +
                                "'s valuation is not strongly monotone; a zero-value good "
                                "can make the maximin guarantee vacuous");
    Value own = v.value(x.bundle(agent));
    MmsResult mms = mms_value(inst, agent, guard);
    if (own < mms.value)
        throw PreconditionError("agent " + std::to_string(agent + 1) +
                                "'s bundle is below her maximin share (" +
                                value_to_string(own) + " < " + value_to_string(mms.value) + ")");

    Allocation y = x;
    PhiPotential phi = phi_potential(inst, y, agent);
    long iterations = 0;
    while (phi.max_rival_one_less > own) {
        if (++iterations > 1000000)
            throw InternalError("mms_to_eefx_certificate: iteration bound exceeded");

        // Donor: richest rival in one-less value; recipient: a weakly poorer
        // rival. The latter must exist whenever the loop condition holds, or
        // the maximin precondition would be contradicted.
        int donor = -1, recipient = -1;
        for (int j = 0; j < inst.agents; ++j) {
            if (j == agent) continue;
            if (donor == -1 && one_less(v, y.bundle(j)) == phi.max_rival_one_less) donor = j;
            if (recipient == -1 && v.value(y.bundle(j)) <= own) recipient = j;
        }
        if (recipient == -1)
            throw InternalError("mms_to_eefx_certificate: every rival is strictly richer, "
                                "contradicting the verified maximin precondition");
        if (donor == recipient)
            throw InternalError("mms_to_eefx_certificate: donor and recipient coincide");

        int moved = top_item(v, y.bundle(donor));
        y.bundles[donor] &= ~single(moved);
        y.bundles[recipient] |= single(moved);

        PhiPotential next = phi_potential(inst, y, agent);
        if (!(next < phi))
            throw InternalError("mms_to_eefx_certificate: potential failed to decrease");
        phi = std::move(next);
    }

    if (!is_efx_satisfied(inst, y, agent))
        throw InternalError("mms_to_eefx_certificate: output does not EFX-satisfy the agent");
    return Certificate{agent, std::move(y), x};
}

FairnessReport fairness_report(const Instance& inst, const Allocation& x,
                               const MmsGuard& guard) {
    FairnessReport rep;
    rep.per_agent.resize(inst.agents);
    rep.efx = true;
    rep.ef1 = true;

    bool prop_applicable = inst.kind == Kind::Goods && !inst.valuations.empty() &&
                           inst.valuations[0].is_additive();
    bool mms_in_guard = inst.items <= guard.max_items && inst.agents <= guard.max_agents;

    for (int i = 0; i < inst.agents; ++i) {
        AgentReport& a = rep.per_agent[i];
        a.efx = is_efx_satisfied(inst, x, i);
        a.ef1 = is_ef1_satisfied(inst, x, i);
        rep.efx = rep.efx && a.efx;
        rep.ef1 = rep.ef1 && a.ef1;
        if (prop_applicable) {
            a.prop1 = is_prop1_satisfied(inst, x, i);
            a.propm = is_propm_satisfied(inst, x, i);
            a.propx = is_propx_satisfied(inst, x, i);
        }
        if (mms_in_guard) {
            a.mms = mms_value(inst, i, guard).value;
            a.bundle_value = inst.valuation(i).value(x.bundle(i));
            if (*a.mms > 0) a.mms_ratio = *a.bundle_value / *a.mms;
        }
    }

    if (inst.items <= kDefaultTableLimit && inst.agents >= 2) {
        std::vector<Valuation> nonneg;
        nonneg.reserve(inst.valuations.size());
        for (const Valuation& v : inst.valuations)
            nonneg.push_back(inst.kind == Kind::Goods ? v : v.negated());
        rep.alpha_correlation = max_correlation(nonneg).alpha;
    }
    return rep;
}

} // namespace fairdiv
