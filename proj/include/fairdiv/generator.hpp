#ifndef FAIRDIV_GENERATOR_HPP
#define FAIRDIV_GENERATOR_HPP

#include <cstdint>
#include <optional>

#include "fairdiv/instance.hpp"

namespace fairdiv {

struct GenOptions {
    int agents = 2;
    int items = 4;
    Kind kind = Kind::Goods;
    long max_value = 20;           // singleton magnitudes drawn from [0, max_value]
    std::uint64_t seed = 0;
    bool ordered = false;          // post-sort each agent's values
    std::optional<Value> alpha;    // target correlation; actual value recomputed
};

struct GeneratedInstance {
    Instance instance;
    std::optional<Value> achieved_alpha; // set iff alpha was requested
};

// Deterministic under a fixed seed (mt19937_64 with modulo draws; no
// platform-dependent distributions). Additive valuations only. With a target
// alpha, agents share a strictly positive base valuation plus bounded noise;
// the achieved correlation is recomputed exactly and may differ from the
// request.
GeneratedInstance generate_instance(const GenOptions& opts);

} // namespace fairdiv

#endif
