#ifndef FAIRDIV_ITEMSET_HPP
#define FAIRDIV_ITEMSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace fairdiv {

// A set of items as a bitmask. Items are 0-based internally; bit j stands for
// item j+1 in all external (1-indexed) interfaces.
using ItemSet = std::uint64_t;

inline constexpr ItemSet kEmptySet = 0;

inline ItemSet full_set(int m) {
    return m == 64 ? ~ItemSet{0} : (ItemSet{1} << m) - 1;
}

inline ItemSet single(int item) { return ItemSet{1} << item; }

inline bool contains(ItemSet s, int item) { return (s >> item) & 1; }

inline int set_size(ItemSet s) { return std::popcount(s); }

inline std::vector<int> items_of(ItemSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

} // namespace fairdiv

#endif
