// Shared helpers for the two miners: internal-id record handling, the
// (conj, disj) support-pair key and final result assembly.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bondmine/miner.hpp"
#include "bondmine/transaction_db.hpp"

namespace bondmine::detail {

// Equal bond between a subset/superset pair is equivalent to an equal
// (conj, disj) pair, so bond-equality tests reduce to key equality.
using SupportKey = std::pair<std::int64_t, std::int64_t>;

inline SupportKey key_of(const PatternRecord& r) { return {r.conj, r.disj}; }

// conj/disj >= minbond without rational construction.
inline bool correlated(std::int64_t conj, std::int64_t disj, const Rational& minbond) {
    return disj > 0 && conj * minbond.den >= minbond.num * disj;
}

inline PatternRecord to_original(const TransactionDb& db, const PatternRecord& rec) {
    Itemset original;
    original.reserve(rec.itemset.size());
    for (ItemId i : rec.itemset)
        original.push_back(static_cast<ItemId>(db.item_name(i)));
    std::sort(original.begin(), original.end());
    return PatternRecord(std::move(original), rec.conj, rec.disj);
}

inline std::vector<PatternRecord> to_original(const TransactionDb& db,
                                              std::vector<PatternRecord> recs) {
    for (auto& r : recs) r = to_original(db, r);
    canonical_sort(recs);
    return recs;
}

// Direct-neighbour filters by support-pair key over a pattern collection
// (internal ids). Complete for globally filtering local minimals/closeds and
// for post-processing a full scenario set: an equal-bond direct neighbour of
// a member is itself a member.
std::vector<PatternRecord> filter_no_equal_key_direct_subset(
    const std::vector<PatternRecord>& patterns);
std::vector<PatternRecord> filter_no_equal_key_direct_superset(
    const std::vector<PatternRecord>& patterns);

CondensedRepresentation assemble_representation(
    const TransactionDb& db, RepKind kind, std::vector<PatternRecord> minimal_internal,
    std::vector<PatternRecord> closed_internal, const MiningThresholds& thresholds);

}  // namespace bondmine::detail
