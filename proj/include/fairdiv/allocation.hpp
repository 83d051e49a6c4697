#ifndef FAIRDIV_ALLOCATION_HPP
#define FAIRDIV_ALLOCATION_HPP

#include <utility>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Ordered partition of the item set into one bundle per agent; empty bundles
// are allowed.
struct Allocation {
    std::vector<ItemSet> bundles;

    int agents() const { return static_cast<int>(bundles.size()); }
    ItemSet bundle(int agent) const { return bundles[agent]; }
    ItemSet complement(int agent, int m) const { return full_set(m) & ~bundles[agent]; }

    bool operator==(const Allocation&) const = default;

    // Bundles pairwise disjoint and covering exactly [m].
    bool is_valid(int m) const;
    void validate(int m) const; // throws ValidationError
};

// Per-item owner list: owners[j] is the (0-based) agent holding item j.
struct AllocationVector {
    std::vector<int> owners;

    int items() const { return static_cast<int>(owners.size()); }
    bool operator==(const AllocationVector&) const = default;
};

AllocationVector allocation_vector(const Allocation& x);
Allocation allocation_from_vector(const AllocationVector& a, int agents);

// m rounds; in round t, agent a_t takes her maximum-singleton-value unallocated
// item, ties broken by smallest item index.
Allocation pick_by_list(const AllocationVector& a, const std::vector<Valuation>& vals);

// Rounds in which agent i picks (A[=i]) and the remaining rounds (A[!=i]),
// both strictly increasing, 0-based.
std::pair<std::vector<int>, std::vector<int>> rounds_of(const AllocationVector& a, int agent);

} // namespace fairdiv

#endif
