#ifndef FAIRDIV_INSTANCE_HPP
#define FAIRDIV_INSTANCE_HPP

#include <string>
#include <vector>

#include "fairdiv/valuation.hpp"

namespace fairdiv {

enum class Kind { Goods, Chores };

inline const char* kind_name(Kind k) { return k == Kind::Goods ? "goods" : "chores"; }

struct Instance {
    int agents = 0;
    int items = 0;
    Kind kind = Kind::Goods;
    std::vector<Valuation> valuations; // one per agent, all additive or all table

    const Valuation& valuation(int agent) const { return valuations[agent]; }

    // Disutility of a bundle for a chores agent: d_i(S) = -v_i(S).
    Value disutility(int agent, ItemSet s) const { return -valuations[agent].value(s); }

    // Throws ValidationError on shape or sign inconsistencies:
    // goods instances must be non-negative on every subset, chores non-positive.
    void validate() const;
};

// All agents' valuations are their own ordered valuations.
bool is_ordered_instance(const Instance& inst);

} // namespace fairdiv

#endif
