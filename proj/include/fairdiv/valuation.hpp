#ifndef FAIRDIV_VALUATION_HPP
#define FAIRDIV_VALUATION_HPP

#include <optional>
#include <variant>
#include <vector>

#include "fairdiv/itemset.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv {

// Explicit subset tables are exponential in the item count; anything larger
// than this must be rejected (or passed an explicit higher limit).
inline constexpr int kDefaultTableLimit = 16;

// v(S) = sum of per-item values over S.
class AdditiveValuation {
public:
    explicit AdditiveValuation(std::vector<Value> item_values);

    int item_count() const { return static_cast<int>(values_.size()); }
    const Value& singleton(int item) const { return values_[item]; }
    Value value(ItemSet s) const;
    const std::vector<Value>& item_values() const { return values_; }

private:
    std::vector<Value> values_;
};

// v given by a table of all 2^m subset values, indexed by bitmask.
class TableValuation {
public:
    // table must have exactly 2^m entries with table[0] == 0.
    TableValuation(int m, std::vector<Value> table, int table_limit = kDefaultTableLimit);

    int item_count() const { return m_; }
    const Value& singleton(int item) const { return table_[single(item)]; }
    const Value& value(ItemSet s) const { return table_[s]; }
    const std::vector<Value>& table() const { return table_; }

    // S strictly inside T implies v(S) < v(T), for every pair.
    bool is_strongly_monotone() const;
    bool is_monotone() const;

private:
    int m_;
    std::vector<Value> table_;
};

// Immutable valuation function; either additive or an explicit subset table.
class Valuation {
public:
    Valuation(AdditiveValuation v) : impl_(std::move(v)) {}
    Valuation(TableValuation v) : impl_(std::move(v)) {}

    bool is_additive() const { return std::holds_alternative<AdditiveValuation>(impl_); }
    const AdditiveValuation& additive() const { return std::get<AdditiveValuation>(impl_); }
    const TableValuation& table() const { return std::get<TableValuation>(impl_); }

    int item_count() const;
    Value value(ItemSet s) const;
    Value singleton(int item) const;

    // Pointwise negation: the disutility view of a chores valuation.
    Valuation negated() const;

    // Expand to an explicit table (identity for tables). Throws ValidationError
    // if the item count exceeds the limit.
    TableValuation to_table(int table_limit = kDefaultTableLimit) const;

private:
    std::variant<AdditiveValuation, TableValuation> impl_;
};

// pi maps rank (position in the sorted order) to item, 0-based both ways.
struct OrderingPermutation {
    std::vector<int> rank_to_item;
    std::vector<int> item_to_rank;

    bool is_identity() const;
    // {rank_to_item[r] : r in S}
    ItemSet apply(ItemSet ranks) const;
};

struct OrderedValuation {
    Valuation valuation; // v'(S) = v({pi_r : r in S}); singleton values non-increasing
    OrderingPermutation perm;
};

// Sort items by singleton value descending, equal values by smaller item index.
// The same comparator is reused by every other sort in the toolkit.
OrderingPermutation ordering_permutation(const Valuation& v);
OrderedValuation ordered_valuation(const Valuation& v);

// True iff singleton values are non-increasing in the item index,
// i.e. ordered_valuation(v) has the identity permutation.
bool is_ordered(const Valuation& v);

// max over g in S of v(S \ {g}); 0 for the empty set.
Value one_less(const Valuation& v, ItemSet s);

// Witness of a cancelability violation: v(S+g) > v(T+g) but v(S) <= v(T).
struct CancelabilityWitness {
    ItemSet s;
    ItemSet t;
    int item;
};

struct CancelabilityResult {
    bool cancelable;
    std::optional<CancelabilityWitness> witness;
};

// Exhaustive scan over all (S, T, g) triples with g outside S and T.
// Exponential in the item count; intended for table-sized m only.
CancelabilityResult is_cancelable(const TableValuation& v);
// Additive valuations are cancelable by construction; tables are scanned.
CancelabilityResult is_cancelable(const Valuation& v);

// B dominates alpha*C under v: after sorting both sets by singleton value
// descending, the j-th value of B is >= alpha times the j-th value of C.
// Requires |B| == |C| (throws ValidationError otherwise).
bool dominates(const Valuation& v, ItemSet b, ItemSet c, const Value& alpha = Value(1));

struct CorrelationViolation {
    int holder;   // agent i of the binding implication (0-based)
    int follower; // agent j with v_j(S) = 0 < v_j(T)
    ItemSet s;
    ItemSet t;
};

struct CorrelationResult {
    Value alpha; // largest alpha in [0,1] making all valuations alpha-correlated
    std::optional<CorrelationViolation> violation; // set iff alpha == 0 was forced
};

// Largest alpha such that v_i(S) >= v_i(T) implies v_j(S) >= alpha*v_j(T)
// for every ordered pair i != j and all subsets S, T. All valuations must be
// non-negative; additive valuations are expanded on demand (subject to the
// table limit).
CorrelationResult max_correlation(const std::vector<Valuation>& vals,
                                  int table_limit = kDefaultTableLimit);

} // namespace fairdiv

#endif
