#ifndef FAIRDIV_ORACLE_HPP
#define FAIRDIV_ORACLE_HPP

#include <functional>
#include <optional>

#include "fairdiv/allocation.hpp"

namespace fairdiv {

// Exhaustive engines refuse instances beyond these limits instead of running
// unbounded. max_states caps both labeled-assignment scans (n^m) and the
// number of rival-bundle partitions visited per epistemic query.
struct SearchBudget {
    int max_agents = 8;
    int max_items = 16;
    unsigned long long max_states = 10'000'000;
};

// Yields all n^m ordered assignments exactly once; fn returns false to stop.
// Throws BudgetError if n^m exceeds the budget.
void for_each_allocation(int agents, int items, const SearchBudget& budget,
                         const std::function<bool(const Allocation&)>& fn);

struct EpistemicResult {
    bool satisfied = false;
    std::optional<Allocation> witness;
};

// Fixes the agent's bundle and searches all set partitions of the remaining
// items into at most n-1 unlabeled rival bundles (labels are irrelevant to a
// single agent's check). alpha scales the EFX condition.
EpistemicResult is_eefx_satisfied_bruteforce(const Instance& inst, const Allocation& x,
                                             int agent, const SearchBudget& budget = {},
                                             const Value& alpha = Value(1));
bool is_eefx_bruteforce(const Instance& inst, const Allocation& x,
                        const SearchBudget& budget = {});

// EF1 analog of the epistemic search.
EpistemicResult is_eef1_satisfied_bruteforce(const Instance& inst, const Allocation& x,
                                             int agent, const SearchBudget& budget = {});
bool is_eef1_bruteforce(const Instance& inst, const Allocation& x,
                        const SearchBudget& budget = {});

// First enumerated allocation passing the EFX check, if any.
std::optional<Allocation> find_efx_allocation(const Instance& inst,
                                              const SearchBudget& budget = {});

} // namespace fairdiv

#endif
