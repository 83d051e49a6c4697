#ifndef FAIRDIV_ORDERED_EFX_HPP
#define FAIRDIV_ORDERED_EFX_HPP

#include "fairdiv/allocation.hpp"

namespace fairdiv {

// Envy-cycle elimination for ordered goods instances. Requires every valuation
// non-negative and ordered (singleton values non-increasing in the item index);
// table valuations within the table limit are additionally screened for
// cancelability. The returned allocation is self-checked to be EFX.
Allocation efx_ordered_goods(const Instance& inst);

// Top-trading envy-cycle elimination for ordered chores instances; chores are
// handed out in non-increasing order of disutility. Self-checked to satisfy
// the chores EFX condition.
Allocation efx_ordered_chores(const Instance& inst);

} // namespace fairdiv

#endif
