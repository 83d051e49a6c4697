#ifndef FAIRDIV_FAIRNESS_HPP
#define FAIRDIV_FAIRNESS_HPP

#include <compare>
#include <optional>

#include "fairdiv/eefx.hpp"

namespace fairdiv {

// Goods: v_i(X_i) >= max removal value of every rival bundle.
// Chores: max removal disutility of the own bundle <= every rival's disutility.
bool is_efx_satisfied(const Instance& inst, const Allocation& x, int agent);
bool is_efx(const Instance& inst, const Allocation& x);

// Scaled variant; alpha <= 1 relaxes goods, alpha >= 1 relaxes chores.
bool is_alpha_efx_satisfied(const Instance& inst, const Allocation& x, int agent,
                            const Value& alpha);
bool is_alpha_efx(const Instance& inst, const Allocation& x, const Value& alpha);

// Goods only: some removal from each nonempty rival bundle kills envy.
bool is_ef1_satisfied(const Instance& inst, const Allocation& x, int agent);
bool is_ef1(const Instance& inst, const Allocation& x);

// Proportionality relaxations; goods instances with additive valuations.
bool is_prop1_satisfied(const Instance& inst, const Allocation& x, int agent);
bool is_prop1(const Instance& inst, const Allocation& x);
bool is_propx_satisfied(const Instance& inst, const Allocation& x, int agent);
bool is_propx(const Instance& inst, const Allocation& x);
// Empty rival bundles impose no relief term (their inner min is +infinity).
bool is_propm_satisfied(const Instance& inst, const Allocation& x, int agent);
bool is_propm(const Instance& inst, const Allocation& x);

// Exhaustive maximin-share computation is exponential; refuse larger inputs.
struct MmsGuard {
    int max_items = 12;
    int max_agents = 4;
};

struct MmsResult {
    Value value;
    Allocation witness; // an n-part partition attaining the maximin value
};

// Exact max over all n-part partitions (empty parts allowed) of the minimum
// part value under agent i's valuation. Throws BudgetError beyond the guard.
MmsResult mms_value(const Instance& inst, int agent, const MmsGuard& guard = {});

// v_i(X_i) >= alpha * MMS_i for every agent.
bool is_alpha_mms(const Instance& inst, const Allocation& x, const Value& alpha,
                  const MmsGuard& guard = {});

// Lexicographic potential of the maximin-to-certificate conversion: the count
// of weakly poorer rivals, the largest rival one-less value, and how many
// rivals attain it. Strictly decreases every iteration.
struct PhiPotential {
    long poorer_rivals = 0;
    Value max_rival_one_less;
    long attaining = 0;

    friend bool operator<(const PhiPotential& a, const PhiPotential& b) {
        if (a.poorer_rivals != b.poorer_rivals) return a.poorer_rivals < b.poorer_rivals;
        if (a.max_rival_one_less != b.max_rival_one_less)
            return a.max_rival_one_less < b.max_rival_one_less;
        return a.attaining < b.attaining;
    }
};

PhiPotential phi_potential(const Instance& inst, const Allocation& x, int agent);

// The item whose removal leaves the most valuable remainder, smallest index
// on ties. s must be nonempty.
int top_item(const Valuation& v, ItemSet s);

// Converts a maximin-share-satisfying bundle into an EFX witness for the given
// agent by repeatedly moving the top item of the richest rival bundle to a
// weakly poorer rival. Requires a goods instance, a strongly monotone
// valuation for the agent, and v_k(X_k) >= MMS_k (all verified; violations
// throw PreconditionError). The potential is asserted to strictly decrease.
Certificate mms_to_eefx_certificate(const Instance& inst, const Allocation& x, int agent,
                                    const MmsGuard& guard = {});

// All singleton values strictly positive (additive) or every strict subset
// strictly less valuable (table).
bool is_strongly_monotone(const Valuation& v);

struct AgentReport {
    bool efx = false;
    bool ef1 = false;
    std::optional<bool> prop1, propm, propx;     // goods + additive only
    std::optional<Value> mms, bundle_value, mms_ratio; // within the guard only
};

struct FairnessReport {
    std::vector<AgentReport> per_agent;
    bool efx = false; // conjunctions of the per-agent flags
    bool ef1 = false;
    std::optional<Value> alpha_correlation; // within the table limit only
};

FairnessReport fairness_report(const Instance& inst, const Allocation& x,
                               const MmsGuard& guard = {});

} // namespace fairdiv

#endif
