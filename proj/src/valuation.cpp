#include "fairdiv/valuation.hpp"

#include <algorithm>
#include <numeric>

#include "fairdiv/errors.hpp"

namespace fairdiv {

AdditiveValuation::AdditiveValuation(std::vector<Value> item_values)
    : values_(std::move(item_values)) {
    if (values_.size() > 63)
        throw ValidationError("additive valuation: more than 63 items are not representable");
}

Value AdditiveValuation::value(ItemSet s) const {
    Value total = 0;
    for (int g : items_of(s)) total += values_[g];
    return total;
}

TableValuation::TableValuation(int m, std::vector<Value> table, int table_limit)
    : m_(m), table_(std::move(table)) {
    if (m < 0 || m > table_limit)
        throw ValidationError("table valuation: item count " + std::to_string(m) +
                              " exceeds the table limit " + std::to_string(table_limit));
    if (table_.size() != (std::size_t{1} << m))
        throw ValidationError("table valuation: expected 2^m entries");
    if (table_[0] != 0)
        throw ValidationError("table valuation: v(empty set) must be 0");
}

bool TableValuation::is_strongly_monotone() const {
    // v(Z \ {g}) < v(Z) for all Z, g in Z; chains give every proper subset.
    for (ItemSet z = 1; z < table_.size(); ++z)
        for (int g : items_of(z))
            if (!(table_[z & ~single(g)] < table_[z])) return false;
    return true;
}

bool TableValuation::is_monotone() const {
    for (ItemSet z = 1; z < table_.size(); ++z)
        for (int g : items_of(z))
            if (table_[z & ~single(g)] > table_[z]) return false;
    return true;
}

int Valuation::item_count() const {
    return std::visit([](const auto& v) { return v.item_count(); }, impl_);
}

Value Valuation::value(ItemSet s) const {
    return std::visit([&](const auto& v) -> Value { return v.value(s); }, impl_);
}

Value Valuation::singleton(int item) const {
    return std::visit([&](const auto& v) -> Value { return v.singleton(item); }, impl_);
}

Valuation Valuation::negated() const {
    if (is_additive()) {
        std::vector<Value> vals = additive().item_values();
        for (auto& x : vals) x = -x;
        return Valuation(AdditiveValuation(std::move(vals)));
    }
    std::vector<Value> t = table().table();
    for (auto& x : t) x = -x;
    return Valuation(TableValuation(table().item_count(), std::move(t)));
}

TableValuation Valuation::to_table(int table_limit) const {
    if (!is_additive()) return table();
    int m = item_count();
    if (m > table_limit)
        throw ValidationError("cannot expand additive valuation on " + std::to_string(m) +
                              " items to a table (limit " + std::to_string(table_limit) + ")");
    std::vector<Value> t(std::size_t{1} << m);
    for (ItemSet s = 1; s < t.size(); ++s) {
        int g = std::countr_zero(s);
        t[s] = t[s & (s - 1)] + additive().singleton(g);
    }
    return TableValuation(m, std::move(t), table_limit);
}

bool OrderingPermutation::is_identity() const {
    for (std::size_t r = 0; r < rank_to_item.size(); ++r)
        if (rank_to_item[r] != static_cast<int>(r)) return false;
    return true;
}

ItemSet OrderingPermutation::apply(ItemSet ranks) const {
    ItemSet out = 0;
    for (int r : items_of(ranks)) out |= single(rank_to_item[r]);
    return out;
}

OrderingPermutation ordering_permutation(const Valuation& v) {
    int m = v.item_count();
    std::vector<Value> singles(m);
    for (int g = 0; g < m; ++g) singles[g] = v.singleton(g);

    OrderingPermutation perm;
    perm.rank_to_item.resize(m);
    std::iota(perm.rank_to_item.begin(), perm.rank_to_item.end(), 0);
    std::sort(perm.rank_to_item.begin(), perm.rank_to_item.end(), [&](int a, int b) {
        if (singles[a] != singles[b]) return singles[a] > singles[b];
        return a < b; // equal values: smaller item first
    });
    perm.item_to_rank.resize(m);
    for (int r = 0; r < m; ++r) perm.item_to_rank[perm.rank_to_item[r]] = r;
    return perm;
}

OrderedValuation ordered_valuation(const Valuation& v) {
    OrderingPermutation perm = ordering_permutation(v);
    if (v.is_additive()) {
        int m = v.item_count();
        std::vector<Value> sorted(m);
        for (int r = 0; r < m; ++r) sorted[r] = v.singleton(perm.rank_to_item[r]);
        return {Valuation(AdditiveValuation(std::move(sorted))), std::move(perm)};
    }
    const TableValuation& t = v.table();
    std::vector<Value> remapped(t.table().size());
    for (ItemSet s = 0; s < remapped.size(); ++s)
        remapped[s] = t.value(perm.apply(s));
    return {Valuation(TableValuation(t.item_count(), std::move(remapped))), std::move(perm)};
}

bool is_ordered(const Valuation& v) {
    int m = v.item_count();
    for (int g = 0; g + 1 < m; ++g)
        if (v.singleton(g) < v.singleton(g + 1)) return false;
    return true;
}

Value one_less(const Valuation& v, ItemSet s) {
    if (s == kEmptySet) return Value(0);
    bool first = true;
    Value best = 0;
    for (int g : items_of(s)) {
        Value w = v.value(s & ~single(g));
        if (first || w > best) {
            best = std::move(w);
            first = false;
        }
    }
    return best;
}

CancelabilityResult is_cancelable(const TableValuation& v) {
    int m = v.item_count();
    ItemSet all = full_set(m);
    for (ItemSet s = 0; s <= all; ++s) {
        for (ItemSet t = 0; t <= all; ++t) {
            ItemSet free = all & ~(s | t);
            for (int g : items_of(free)) {
                if (v.value(s | single(g)) > v.value(t | single(g)) &&
                    !(v.value(s) > v.value(t)))
                    return {false, CancelabilityWitness{s, t, g}};
            }
        }
        if (m == 0) break; // all == 0; avoid wraparound
    }
    return {true, std::nullopt};
}

CancelabilityResult is_cancelable(const Valuation& v) {
    if (v.is_additive()) return {true, std::nullopt};
    return is_cancelable(v.table());
}

namespace {

// Singleton values of s, sorted descending, ties by smaller item index.
std::vector<Value> sorted_singletons(const Valuation& v, ItemSet s) {
    std::vector<int> items = items_of(s);
    std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
        return v.singleton(a) > v.singleton(b);
    });
    std::vector<Value> out;
    out.reserve(items.size());
    for (int g : items) out.push_back(v.singleton(g));
    return out;
}

} // namespace

bool dominates(const Valuation& v, ItemSet b, ItemSet c, const Value& alpha) {
    if (set_size(b) != set_size(c))
        throw ValidationError("dominates: sets must have equal size");
    std::vector<Value> bv = sorted_singletons(v, b);
    std::vector<Value> cv = sorted_singletons(v, c);
    for (std::size_t j = 0; j < bv.size(); ++j)
        if (bv[j] < alpha * cv[j]) return false;
    return true;
}

CorrelationResult max_correlation(const std::vector<Valuation>& vals, int table_limit) {
    int n = static_cast<int>(vals.size());
    if (n == 0) return {Value(1), std::nullopt};
    int m = vals[0].item_count();
    std::vector<TableValuation> tables;
    tables.reserve(vals.size());
    for (const auto& v : vals) {
        if (v.item_count() != m)
            throw ValidationError("max_correlation: valuations disagree on the item count");
        tables.push_back(v.to_table(table_limit));
        for (const Value& x : tables.back().table())
            if (x < 0)
                throw ValidationError("max_correlation requires non-negative valuations");
    }

    Value alpha(1);
    ItemSet all = full_set(m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (ItemSet s = 0;; ++s) {
                for (ItemSet t = 0;; ++t) {
                    // only pairs with v_j(T) > 0 bind: alpha*0 = 0 <= v_j(S)
                    if (tables[j].value(t) > 0 && tables[i].value(s) >= tables[i].value(t)) {
                        if (tables[j].value(s) == 0)
                            return {Value(0), CorrelationViolation{i, j, s, t}};
                        Value ratio = tables[j].value(s) / tables[j].value(t);
                        if (ratio < alpha) alpha = ratio;
                    }
                    if (t == all) break;
                }
                if (s == all) break;
            }
        }
    }
    return {alpha, std::nullopt};
}

} // namespace fairdiv
