#include "fairdiv/instance.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

void Instance::validate() const {
    if (agents < 1) throw ValidationError("instance: need at least one agent");
    if (items < 0) throw ValidationError("instance: negative item count");
    if (static_cast<int>(valuations.size()) != agents)
        throw ValidationError("instance: expected one valuation per agent");

    for (int i = 0; i < agents; ++i) {
        const Valuation& v = valuations[i];
        if (v.item_count() != items)
            throw ValidationError("instance: agent " + std::to_string(i + 1) +
                                  "'s valuation covers " + std::to_string(v.item_count()) +
                                  " items, expected " + std::to_string(items));
        if (v.is_additive() != valuations[0].is_additive())
            throw ValidationError("instance: valuations must be all additive or all table");

        auto check_sign = [&](const Value& x, const std::string& where) {
            if (kind == Kind::Goods && x < 0)
                throw ValidationError("goods instance: agent " + std::to_string(i + 1) +
                                      " has a negative value " + where);
            if (kind == Kind::Chores && x > 0)
                throw ValidationError("chores instance: agent " + std::to_string(i + 1) +
                                      " has a positive value " + where);
        };
        if (v.is_additive()) {
            for (int g = 0; g < items; ++g)
                check_sign(v.singleton(g), "on item " + std::to_string(g + 1));
        } else {
            const auto& table = v.table().table();
            for (ItemSet s = 1; s < table.size(); ++s)
                check_sign(table[s], "on a subset");
        }
    }
}

bool is_ordered_instance(const Instance& inst) {
    for (const Valuation& v : inst.valuations)
        if (!is_ordered(v)) return false;
    return true;
}

} // namespace fairdiv
