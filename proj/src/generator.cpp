#include "fairdiv/generator.hpp"

#include <algorithm>
#include <random>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

GeneratedInstance generate_instance(const GenOptions& opts) {
    if (opts.agents < 1 || opts.items < 0 || opts.max_value < 1)
        throw ValidationError("generator: sizes and max value must be positive");

    std::mt19937_64 rng(opts.seed);
    GeneratedInstance out;
    out.instance.agents = opts.agents;
    out.instance.items = opts.items;
    out.instance.kind = opts.kind;

    std::vector<std::vector<long>> magnitudes(opts.agents, std::vector<long>(opts.items));
    if (opts.alpha) {
        if (opts.items > kDefaultTableLimit)
            throw ValidationError("generator: correlated instances need the item count "
                                  "within the table limit to recompute the correlation");
        if (*opts.alpha < 0 || *opts.alpha > 1)
            throw ValidationError("generator: target correlation must lie in [0, 1]");
        // Strictly positive base plus noise shrinking as the target approaches 1.
        Value spread = (Value(1) - *opts.alpha) * opts.max_value / 2;
        long noise = static_cast<long>(numerator(spread) / denominator(spread));
        std::vector<long> base(opts.items);
        for (long& b : base) b = draw(rng, 1, opts.max_value);
        for (auto& row : magnitudes)
            for (int g = 0; g < opts.items; ++g)
                row[g] = std::max(1L, base[g] + draw(rng, -noise, noise));
    } else {
        for (auto& row : magnitudes)
            for (long& x : row) x = draw(rng, 0, opts.max_value);
    }

    for (auto& row : magnitudes) {
        // ordered = singleton values non-increasing; for chores the values are
        // negated magnitudes, so the lightest chore comes first
        if (opts.ordered && opts.kind == Kind::Goods)
            std::sort(row.begin(), row.end(), std::greater<>());
        else if (opts.ordered)
            std::sort(row.begin(), row.end());
        std::vector<Value> vals(row.size());
        for (std::size_t g = 0; g < row.size(); ++g)
            vals[g] = opts.kind == Kind::Goods ? Value(row[g]) : Value(-row[g]);
        out.instance.valuations.emplace_back(AdditiveValuation(std::move(vals)));
    }

    if (opts.alpha) {
        std::vector<Valuation> nonneg;
        for (const Valuation& v : out.instance.valuations)
            nonneg.push_back(opts.kind == Kind::Goods ? v : v.negated());
        out.achieved_alpha = max_correlation(nonneg).alpha;
    }
    out.instance.validate();
    return out;
}

} // namespace fairdiv
