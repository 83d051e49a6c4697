#ifndef FAIRDIV_PARTITIONS_HPP
#define FAIRDIV_PARTITIONS_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "fairdiv/itemset.hpp"

namespace fairdiv {

// Enumerates every set partition of positions [0, q) into at most max_blocks
// unlabeled blocks, exactly once, via restricted-growth strings (position 0
// always lands in block 0, and a position may open at most one new block).
// Blocks are reported as masks over positions; fn returns false to stop early.
// Returns false iff the enumeration was stopped.
inline bool for_each_set_partition(int q, int max_blocks,
                                   const std::function<bool(const std::vector<ItemSet>&)>& fn) {
    if (q == 0) {
        return fn(std::vector<ItemSet>{});
    }
    if (max_blocks <= 0) return true; // nothing to partition into

    std::vector<int> label(q, 0);
    std::vector<ItemSet> blocks;
    std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
        if (pos == q) {
            blocks.assign(used, kEmptySet);
            for (int p = 0; p < q; ++p) blocks[label[p]] |= single(p);
            return fn(blocks);
        }
        int limit = std::min(used, max_blocks - 1);
        for (int b = 0; b <= limit; ++b) {
            label[pos] = b;
            if (!rec(pos + 1, std::max(used, b + 1))) return false;
        }
        return true;
    };
    return rec(0, 0);
}

} // namespace fairdiv

#endif
