#ifndef FAIRDIV_EEFX_HPP
#define FAIRDIV_EEFX_HPP

#include "fairdiv/allocation.hpp"

namespace fairdiv {

// Witness allocation Y with Y_agent equal to the certified agent's bundle in
// the allocation being certified; the agent is EFX-satisfied by the witness.
struct Certificate {
    int agent = 0;        // 0-based
    Allocation witness;   // Y
    Allocation basis;     // the allocation the witness was derived from
};

struct SolveResult {
    Allocation allocation;  // X, the final EEFX allocation
    Allocation stage1;      // X', EFX for the ordered valuations (slot space)
    AllocationVector vector; // allocation vector A of X'
    std::vector<Certificate> certificates; // one per agent when requested
};

// Two-stage solver: an EFX allocation X' for the ordered valuations, then
// pick_by_list over X''s allocation vector with the original valuations.
// Every certificate is verified before being returned.
SolveResult solve_eefx(const Instance& inst, bool with_certificates = true);

// Per-agent certificate construction from the final allocation and the
// stage-1 allocation (in ordered-valuation slot space). The returned witness
// is checked to EFX-satisfy the agent; failure throws InternalError.
Certificate eefx_certificate_goods(const Instance& inst, const Allocation& x,
                                   const Allocation& x_prime, int agent);
Certificate eefx_certificate_chores(const Instance& inst, const Allocation& x,
                                    const Allocation& x_prime, int agent);

// True iff the witness keeps the agent's bundle from x and EFX-satisfies the
// agent (goods or chores condition per the instance kind).
bool verify_certificate(const Instance& inst, const Allocation& x,
                        const Allocation& witness, int agent);

} // namespace fairdiv

#endif
