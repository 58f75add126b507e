// pattern.hpp -- itemsets and mined pattern records.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bondmine/rational.hpp"

namespace bondmine {

using ItemId = std::uint32_t;

/// Strictly sorted vector of item ids.
using Itemset = std::vector<ItemId>;

inline bool is_strictly_sorted(const Itemset& s) {
    return std::adjacent_find(s.begin(), s.end(),
                              [](ItemId a, ItemId b) { return a >= b; }) == s.end();
}

/// a subset-of b; both strictly sorted.
inline bool is_subset(const Itemset& a, const Itemset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_proper_subset(const Itemset& a, const Itemset& b) {
    return a.size() < b.size() && is_subset(a, b);
}

inline Itemset set_union(const Itemset& a, const Itemset& b) {
    Itemset r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline Itemset set_difference(const Itemset& a, const Itemset& b) {
    Itemset r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

/// Canonical output order: shorter first, then lexicographic on ids.
inline bool canonical_less(const Itemset& a, const Itemset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/// An itemset with its conjunctive support, disjunctive support and bond.
struct PatternRecord {
    Itemset itemset;
    std::int64_t conj = 0;
    std::int64_t disj = 0;

    PatternRecord() = default;
    PatternRecord(Itemset items, std::int64_t c, std::int64_t d)
        : itemset(std::move(items)), conj(c), disj(d) {}

    Rational bond() const { return Rational(conj, disj); }

    friend bool operator==(const PatternRecord& a, const PatternRecord& b) {
        return a.itemset == b.itemset && a.conj == b.conj && a.disj == b.disj;
    }
    friend bool operator<(const PatternRecord& a, const PatternRecord& b) {
        return canonical_less(a.itemset, b.itemset);
    }
};

inline void canonical_sort(std::vector<PatternRecord>& v) {
    std::sort(v.begin(), v.end());
}

std::string itemset_to_string(const Itemset& s);

}  // namespace bondmine
